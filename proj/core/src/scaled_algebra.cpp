#include "nscale/scaled_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nscale/error.hpp"

namespace nscale {

namespace {

void require_finite(BaseValue v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(what) + ": non-finite component");
  }
}

void require_same_structure(const ScaledValue& a, const ScaledValue& b, const char* what) {
  if (!(a.structure() == b.structure())) {
    throw UsageError(std::string(what) + ": operands belong to different structures (r=" +
                     std::to_string(a.structure().scale()) + " vs r=" +
                     std::to_string(b.structure().scale()) + ")");
  }
}

}  // namespace

ScaledStructure ScaledStructure::make(double r) {
  if (!std::isfinite(r) || !(r > 0.0)) {
    throw DomainError("scale factor must be finite and positive, got " + std::to_string(r));
  }
  return ScaledStructure(r);
}

ScaledValue ScaledStructure::zero() const { return ScaledValue(*this, BaseValue(0.0, 0.0)); }

ScaledValue ScaledStructure::one() const { return ScaledValue(*this, BaseValue(r_, 0.0)); }

ScaledValue ScaledStructure::same_value(BaseValue v) const { return ScaledValue(*this, r_ * v); }

ScaledValue::ScaledValue(ScaledStructure s, BaseValue rep) : s_(s), rep_(rep) {
  require_finite(rep, "scaled value");
}

ScaledStructure make_structure(double r) { return ScaledStructure::make(r); }

ScaledValue add(const ScaledValue& a, const ScaledValue& b) {
  require_same_structure(a, b, "add");
  return ScaledValue(a.structure(), a.rep() + b.rep());
}

ScaledValue sub(const ScaledValue& a, const ScaledValue& b) {
  require_same_structure(a, b, "sub");
  return ScaledValue(a.structure(), a.rep() - b.rep());
}

ScaledValue negate(const ScaledValue& a) { return ScaledValue(a.structure(), -a.rep()); }

ScaledValue mul_scaled(const ScaledValue& a, const ScaledValue& b) {
  require_same_structure(a, b, "mul_scaled");
  return ScaledValue(a.structure(), a.rep() * b.rep() / a.structure().scale());
}

ScaledValue div_scaled(const ScaledValue& a, const ScaledValue& b) {
  require_same_structure(a, b, "div_scaled");
  if (b.rep() == BaseValue(0.0, 0.0)) throw DivisionByZero("div_scaled: zero divisor");
  return ScaledValue(a.structure(), a.structure().scale() * (a.rep() / b.rep()));
}

BaseValue to_base(const ScaledValue& a) { return a.rep(); }

ScaledValue from_base(BaseValue v, const ScaledStructure& s) { return ScaledValue(s, v); }

BaseValue parallel_transport_value(BaseValue v) { return v; }

ScaledValue power_ratio_scaled(const ScaledValue& a, unsigned n, const ScaledValue& b, unsigned m) {
  require_same_structure(a, b, "power_ratio_scaled");
  const ScaledStructure& s = a.structure();
  ScaledValue num = s.one();
  for (unsigned k = 0; k < n; ++k) num = mul_scaled(num, a);
  ScaledValue den = s.one();
  for (unsigned k = 0; k < m; ++k) den = mul_scaled(den, b);
  return div_scaled(num, den);
}

ScaledValue eval_analytic_scaled(std::span<const ScaledValue> coeffs, const ScaledValue& a) {
  if (coeffs.empty()) return a.structure().zero();
  ScaledValue acc = coeffs.back();
  require_same_structure(acc, a, "eval_analytic_scaled");
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    acc = add(mul_scaled(acc, a), *it);
  }
  return acc;
}

bool approx_equal(const ScaledValue& a, const ScaledValue& b, double rel_tol, double abs_tol) {
  if (!(a.structure() == b.structure())) return false;
  const double diff = std::abs(a.rep() - b.rep());
  const double scale = std::max(std::abs(a.rep()), std::abs(b.rep()));
  return diff <= std::max(abs_tol, rel_tol * scale);
}

}  // namespace nscale
