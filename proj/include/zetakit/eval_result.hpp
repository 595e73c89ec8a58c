#pragma once

#include <string>
#include <string_view>

#include "zetakit/hp_real.hpp"

namespace zetakit {

enum class Method { ClosedForm, Series, Quadrature, Symbolic };

std::string_view method_name(Method m);

// A value together with an absolute error bound. `rigorous` is true when the
// bound is proven, false when it comes from a heuristic error model.
struct EvalResult {
  HPReal value;
  HPReal error_bound;
  Method method = Method::ClosedForm;
  bool rigorous = true;
  bool conjectural = false;

  EvalResult(HPReal v, HPReal err, Method m, bool is_rigorous = true);

  // Exact value at this precision: only the rounding allowance of the
  // working precision goes into the bound.
  static EvalResult exact(HPReal v, Method m = Method::ClosedForm);

  Precision reported_precision() const;
};

struct QuadratureResult : EvalResult {
  int levels_used = 0;
  QuadratureResult(EvalResult r, int levels) : EvalResult(std::move(r)), levels_used(levels) {}
};

// Error bounds are carried at this many bits and combined with upward rounding.
inline constexpr mpfr_prec_t kBoundBits = 64;

HPReal bound_from_double(double bound);
HPReal bound_add(const HPReal& a, const HPReal& b);
HPReal bound_mul(const HPReal& a, const HPReal& b);
// Unit roundoff of `x`'s precision scaled by |x|.
HPReal rounding_allowance(const HPReal& x, long operations = 1);

// |a - b|, computed at the wider precision.
HPReal abs_difference(const HPReal& a, const HPReal& b);

// |a.value - b.value| <= a.error_bound + b.error_bound + slack.
bool agree(const EvalResult& a, const EvalResult& b, double slack = 0.0);

// Arithmetic on results propagates first-order error bounds plus one rounding
// allowance per operation. The method tag of the left operand is kept.
EvalResult operator+(const EvalResult& a, const EvalResult& b);
EvalResult operator-(const EvalResult& a, const EvalResult& b);
EvalResult operator*(const EvalResult& a, const EvalResult& b);
EvalResult operator-(const EvalResult& a);
EvalResult scale(const EvalResult& a, const HPReal& factor);
EvalResult scale(const EvalResult& a, const mpq_class& factor);
EvalResult add_exact(const EvalResult& a, const HPReal& term);

}  // namespace zetakit
