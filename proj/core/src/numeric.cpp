#include "nscale/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "nscale/error.hpp"

namespace nscale {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise(values); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise(values);
}

double fit_order(std::span<const double> steps, std::span<const double> errors) {
  if (steps.size() != errors.size() || steps.size() < 2) {
    throw UsageError("fit_order needs at least two (step, error) pairs of equal length");
  }
  const double n = static_cast<double>(steps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i] > 0.0) || !(errors[i] > 0.0)) {
      throw DomainError("fit_order needs strictly positive steps and errors");
    }
    const double x = std::log(steps[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_order needs at least two distinct steps");
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> halving_orders(std::span<const double> errors) {
  std::vector<double> out;
  for (std::size_t i = 1; i < errors.size(); ++i) out.push_back(std::log2(errors[i - 1] / errors[i]));
  return out;
}

double relative_error(std::complex<double> a, std::complex<double> b, double floor) {
  const double diff = std::abs(a - b);
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return scale == 0.0 ? 0.0 : diff / scale;
}

}  // namespace nscale
