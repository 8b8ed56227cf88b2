#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nscale {

/// Sum by a fixed-shape pairwise tree. The result depends only on the
/// input order, never on how the work is scheduled.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

/// Least-squares slope of log(error) against log(step). For errors that
/// behave like C * step^p this returns p.
double fit_order(std::span<const double> steps, std::span<const double> errors);

/// log2(e_k / e_{k+1}) for consecutive entries of a halving sweep.
std::vector<double> halving_orders(std::span<const double> errors);

/// |a - b| / max(|a|, |b|, floor).
double relative_error(std::complex<double> a, std::complex<double> b, double floor = 0.0);

}  // namespace nscale
