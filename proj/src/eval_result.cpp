#include "zetakit/eval_result.hpp"

#include <algorithm>
#include <cmath>

#include "zetakit/errors.hpp"

namespace zetakit {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed";
    case Method::Series: return "series";
    case Method::Quadrature: return "quadrature";
    case Method::Symbolic: return "symbolic";
  }
  return "unknown";
}

EvalResult::EvalResult(HPReal v, HPReal err, Method m, bool is_rigorous)
    : value(std::move(v)), error_bound(std::move(err)), method(m), rigorous(is_rigorous) {
  if (error_bound.sign() < 0) throw PreconditionError("error bound must be nonnegative");
}

EvalResult EvalResult::exact(HPReal v, Method m) {
  HPReal err = rounding_allowance(v);
  return EvalResult(std::move(v), std::move(err), m, true);
}

Precision EvalResult::reported_precision() const {
  int digits = static_cast<int>(std::floor(static_cast<double>(value.bits() - 4) / 3.321928094887362)) -
               Precision::kGuardDigits;
  return Precision(std::max(digits, Precision::kMinDigits));
}

HPReal bound_from_double(double bound) {
  HPReal r = HPReal::with_bits(kBoundBits);
  mpfr_set_d(r.get(), bound, MPFR_RNDU);
  if (r.sign() < 0) throw PreconditionError("error bound must be nonnegative");
  return r;
}

HPReal bound_add(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::with_bits(kBoundBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

HPReal bound_mul(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::with_bits(kBoundBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_abs(r.get(), r.get(), MPFR_RNDU);
  return r;
}

HPReal rounding_allowance(const HPReal& x, long operations) {
  HPReal r = HPReal::with_bits(kBoundBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(x.bits()) + 1, MPFR_RNDU);
  mpfr_mul_si(r.get(), r.get(), std::max(operations, 1L), MPFR_RNDU);
  return r;
}

HPReal abs_difference(const HPReal& a, const HPReal& b) { return abs(a - b); }

bool agree(const EvalResult& a, const EvalResult& b, double slack) {
  HPReal tol = bound_add(bound_add(a.error_bound, b.error_bound), bound_from_double(slack));
  return abs_difference(a.value, b.value) <= tol;
}

EvalResult operator+(const EvalResult& a, const EvalResult& b) {
  HPReal v = a.value + b.value;
  HPReal err = bound_add(bound_add(a.error_bound, b.error_bound), rounding_allowance(v));
  return EvalResult(std::move(v), std::move(err), a.method, a.rigorous && b.rigorous);
}

EvalResult operator-(const EvalResult& a) {
  return EvalResult(-a.value, a.error_bound, a.method, a.rigorous);
}

EvalResult operator-(const EvalResult& a, const EvalResult& b) { return a + (-b); }

EvalResult operator*(const EvalResult& a, const EvalResult& b) {
  HPReal v = a.value * b.value;
  HPReal err = bound_mul(abs(a.value), b.error_bound);
  err = bound_add(err, bound_mul(abs(b.value), a.error_bound));
  err = bound_add(err, bound_mul(a.error_bound, b.error_bound));
  err = bound_add(err, rounding_allowance(v));
  return EvalResult(std::move(v), std::move(err), a.method, a.rigorous && b.rigorous);
}

EvalResult scale(const EvalResult& a, const HPReal& factor) {
  HPReal v = a.value * factor;
  HPReal err = bound_add(bound_mul(a.error_bound, abs(factor)), rounding_allowance(v));
  return EvalResult(std::move(v), std::move(err), a.method, a.rigorous);
}

EvalResult scale(const EvalResult& a, const mpq_class& factor) {
  HPReal f = HPReal::with_bits(a.value.bits());
  mpfr_set_q(f.get(), factor.get_mpq_t(), MPFR_RNDN);
  return scale(a, f);
}

EvalResult add_exact(const EvalResult& a, const HPReal& term) {
  HPReal v = a.value + term;
  HPReal err = bound_add(a.error_bound, rounding_allowance(v));
  return EvalResult(std::move(v), std::move(err), a.method, a.rigorous);
}

}  // namespace zetakit
