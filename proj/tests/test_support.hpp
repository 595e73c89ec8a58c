#pragma once

#include <string>

#include <mpfr.h>

#include "doctest.h"
#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"

namespace zetakit::testing {

inline HPReal dec(const std::string& s, Precision p = Precision()) { return HPReal::from_string(s, p); }

// |a - b| <= tol, reported with both values on failure.
inline void check_close(const HPReal& a, const HPReal& b, double tol) {
  HPReal diff = abs(a - b);
  INFO("lhs  = " << a.to_scientific(40));
  INFO("rhs  = " << b.to_scientific(40));
  INFO("diff = " << diff.to_scientific(5) << " tol = " << tol);
  CHECK(diff <= tol);
}

inline void check_within_bounds(const EvalResult& a, const EvalResult& b, double slack = 0.0) {
  INFO("lhs  = " << a.value.to_scientific(40) << " +- " << a.error_bound.to_scientific(3));
  INFO("rhs  = " << b.value.to_scientific(40) << " +- " << b.error_bound.to_scientific(3));
  INFO("diff = " << abs(a.value - b.value).to_scientific(5));
  CHECK(agree(a, b, slack));
}

// MPFR's own zeta, used as an independent oracle.
inline HPReal mpfr_zeta(unsigned long s, Precision p = Precision()) {
  HPReal r(p);
  mpfr_zeta_ui(r.get(), s, MPFR_RNDN);
  return r;
}

}  // namespace zetakit::testing
