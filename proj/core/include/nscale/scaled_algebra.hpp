#pragma once

#include <complex>
#include <span>

namespace nscale {

/// A number value of the distinguished base structure. Real values are the
/// subset with a zero imaginary part.
using BaseValue = std::complex<double>;

class ScaledValue;

/// A complex number structure whose values, operations and constants are
/// represented on the base structure with scale factor r. Multiplication
/// becomes (a*b)/r, division becomes r*(a/b), the additive identity stays 0
/// and the multiplicative identity is represented by r itself.
class ScaledStructure {
 public:
  /// The base structure (r = 1).
  ScaledStructure() = default;

  // Throws DomainError for r <= 0 or non-finite r.
  static ScaledStructure make(double r);
  static ScaledStructure base() { return ScaledStructure(); }

  double scale() const { return r_; }
  bool is_base() const { return r_ == 1.0; }

  ScaledValue zero() const;
  ScaledValue one() const;

  /// The value of this structure that is the *same* number as `v` is in the
  /// base structure; its representation is r*v.
  ScaledValue same_value(BaseValue v) const;

  friend bool operator==(const ScaledStructure&, const ScaledStructure&) = default;

 private:
  explicit ScaledStructure(double r) : r_(r) {}
  double r_ = 1.0;
};

/// A value of a ScaledStructure, stored by its representation on the base
/// structure. Equality is exact on (r, representation); use approx_equal for
/// tolerance-based comparison.
class ScaledValue {
 public:
  ScaledValue(ScaledStructure s, BaseValue rep);

  const ScaledStructure& structure() const { return s_; }
  BaseValue rep() const { return rep_; }

  /// The base value that names the same number as this value (rep / r).
  BaseValue same_in_base() const { return rep_ / s_.scale(); }

  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;

 private:
  ScaledStructure s_;
  BaseValue rep_;
};

ScaledStructure make_structure(double r);

ScaledValue add(const ScaledValue& a, const ScaledValue& b);
ScaledValue sub(const ScaledValue& a, const ScaledValue& b);
ScaledValue negate(const ScaledValue& a);
ScaledValue mul_scaled(const ScaledValue& a, const ScaledValue& b);
// Throws DivisionByZero when rep(b) == 0.
ScaledValue div_scaled(const ScaledValue& a, const ScaledValue& b);

/// Correspondence map onto the base structure. Because values are stored in
/// base representation this is the stored representation.
BaseValue to_base(const ScaledValue& a);
ScaledValue from_base(BaseValue v, const ScaledStructure& s);

/// Transport of a number value to another point as the *same* value.
/// Representation identity.
BaseValue parallel_transport_value(BaseValue v);

/// a^n / b^m evaluated with the structure's own operations. The base image
/// is r * a_base^n / b_base^m.
ScaledValue power_ratio_scaled(const ScaledValue& a, unsigned n, const ScaledValue& b, unsigned m);

/// Polynomial sum_k coeffs[k] * a^k evaluated by Horner's rule inside the
/// structure. coeffs[0] is the constant term. An empty list is the zero
/// polynomial.
ScaledValue eval_analytic_scaled(std::span<const ScaledValue> coeffs, const ScaledValue& a);

bool approx_equal(const ScaledValue& a, const ScaledValue& b, double rel_tol, double abs_tol = 0.0);

}  // namespace nscale
