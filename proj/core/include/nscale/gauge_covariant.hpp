#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nscale/gauge_field.hpp"
#include "nscale/grid.hpp"

namespace nscale {

/// Real vector field sampled at the sites of a grid.
class LatticeVectorField {
 public:
  LatticeVectorField() = default;
  explicit LatticeVectorField(const Grid& grid);
  static LatticeVectorField sample(const Grid& grid, const GaugeFieldSpec& spec);

  const Grid& grid() const { return grid_; }
  double operator()(std::size_t site, int axis) const {
    return data_[site * static_cast<std::size_t>(kMaxDim) + static_cast<std::size_t>(axis)];
  }
  double& operator()(std::size_t site, int axis) {
    return data_[site * static_cast<std::size_t>(kMaxDim) + static_cast<std::size_t>(axis)];
  }
  bool is_zero() const;

  friend bool operator==(const LatticeVectorField&, const LatticeVectorField&) = default;

 private:
  Grid grid_ = Grid::cube(1, 0.0, 1.0, 4);
  std::vector<double> data_;
};

/// Matter field with an n-component complex vector (n = 1 or 2) at every
/// site of a 1D or 2D grid.
class InternalField {
 public:
  InternalField(Grid grid, int components, std::vector<std::complex<double>> values);
  static InternalField from_packet(const WavePacket& psi);

  const Grid& grid() const { return grid_; }
  int components() const { return n_; }
  std::complex<double> operator()(std::size_t site, int c) const {
    return values_[site * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c)];
  }
  Eigen::VectorXcd at(std::size_t site) const;
  const std::vector<std::complex<double>>& values() const { return values_; }

  friend bool operator==(const InternalField&, const InternalField&) = default;

 private:
  Grid grid_;
  int n_;
  std::vector<std::complex<double>> values_;
};

/// Real scaling field A (with its coupling g_r), the U(1) potential Xi with
/// coupling g1 and, for two-component fields, three SU(2) potentials
/// Omega^j with coupling g2 and generators tau_j = sigma_j / 2.
struct GaugePotentials {
  GaugeFieldSpec scaling = GaugeFieldSpec::zero(1);
  double g1 = 0.0;
  double g2 = 0.0;
  LatticeVectorField xi;
  std::array<LatticeVectorField, 3> omega;
  int components = 1;

  static GaugePotentials make(const Grid& grid, int components, const GaugeFieldSpec& scaling,
                              double g1, const GaugeFieldSpec& xi_spec, double g2 = 0.0,
                              const std::array<GaugeFieldSpec, 3>* omega_specs = nullptr);
};

/// Local U(1) transformation Lambda(x) = exp(i phi(x)) with
/// phi(x) = offset + shape(x).
struct U1Transform {
  ScalarPotential shape;
  double offset = 0.0;

  double phi(const Point& x) const { return offset + shape.value(x); }
  static U1Transform identity(int dim);
  static U1Transform constant(int dim, double c);
  static U1Transform linear(const Point& k);
  /// phi = amp * sum_i sin(k x_i).
  static U1Transform sine(int dim, double amp, double k);
};

enum class DerivativeForm {
  exact_link,  // (r V psi(x + h e) - psi(x)) / h
  first_order  // d'psi + g_r A psi + i (g1 Xi + g2 Omega^j tau_j) psi
};

/// exp(i g1 Xi_mu dx) exp(i g2 Omega^j_mu tau_j dx) at a site.
Eigen::MatrixXcd v_link(const GaugePotentials& pot, std::size_t site, int axis, double dx);

InternalField covariant_derivative(const InternalField& field, const GaugePotentials& pot, int axis,
                                   DerivativeForm form = DerivativeForm::exact_link);

/// field' = exp(i phi) field, Xi' = Xi - d'phi / g1 with the forward
/// difference d'phi(x) = (phi(x + h e_mu) - phi(x)) / h taken at the
/// geometric neighbour. A and Omega are unchanged. Throws UsageError for g1 = 0.
std::pair<InternalField, GaugePotentials> u1_transform(const InternalField& field,
                                                       const GaugePotentials& pot,
                                                       const U1Transform& t);

/// max over sites and components of |D'_mu(Lambda psi) - Lambda D_mu psi|.
/// Exact-link form is invariant up to rounding whenever exp(i phi) is
/// periodic on the grid; the first-order form converges like O(h).
double gauge_invariance_residual(const InternalField& field, const GaugePotentials& pot,
                                 const U1Transform& t, int axis,
                                 DerivativeForm form = DerivativeForm::first_order);

/// ||V^dagger V - I|| (max entry) over every site and axis.
double max_unitarity_defect(const GaugePotentials& pot);

}  // namespace nscale
