#pragma once

#include <vector>

#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

// I(N) = int_0^1 arcsin^N(z)/z dz through Dirichlet eta values (eta(1) = log 2).
EvalResult i_closed(int n, Precision prec = Precision());

// t(3, {2}^N), N >= 1. The eta-sum form and the integral form
// (pi/2 I(2N+1) - I(2N+2)) / (2N+1)! are both computed and must agree.
EvalResult t_closed(int n, Precision prec = Precision());
EvalResult t_closed_integral_form(int n, Precision prec = Precision());

// zeta(3, {2}^N), N >= 0, with the integral form
// 2^(2N+4)/(2N+2)! (I(2N+2)/2 - I(2N+3)/pi).
EvalResult z_closed(int n, Precision prec = Precision());
EvalResult z_closed_integral_form(int n, Precision prec = Precision());

// mu(2, {1}^(N-1)) = (2^(N+1) - 1) zeta(N+1) / 2^(2N)
EvalResult mu_closed(int n, Precision prec = Precision());

// O(q,q) = (t(2q) + t(q)^2)/2 and B(q,q) = (t(2q) + beta(q)^2)/2, t(m) = (1-2^-m) zeta(m).
EvalResult o_diag(int q, Precision prec = Precision());
EvalResult b_diag(int q, Precision prec = Precision());

// From a value of O(p,q) (resp. B(p,q)) return O(q,p) (resp. B(q,p)):
// O(p,q) + O(q,p) = t(p) t(q) + t(p+q),  B(p,q) + B(q,p) = beta(p) beta(q) + t(p+q).
EvalResult o_reflect(int p, int q, const EvalResult& known, Precision prec = Precision());
EvalResult b_reflect(int p, int q, const EvalResult& known, Precision prec = Precision());

// c * pi^pi_power * prod zeta(z) over `zetas`
struct ClosedTerm {
  Rational coefficient;
  int pi_power = 0;
  std::vector<int> zetas;
};

struct OTableEntry {
  int p;
  int q;
  std::vector<ClosedTerm> terms;
};

// The five evaluated odd Euler sums O(2,3), O(3,4), ..., O(6,7).
const std::vector<OTableEntry>& o_table_primary();

// O(p,q) for a primary pair, or for a reflected pair (3,2), ..., (7,6), which
// is derived from its primary partner by o_reflect. Throws NotInTableError
// for anything else.
EvalResult o_table(int p, int q, Precision prec = Precision());

// Evaluates a list of terms.
EvalResult eval_terms(const std::vector<ClosedTerm>& terms, Precision prec = Precision());

// B(2,3) = 31/64 zeta(5) - 9 pi^2/256 zeta(3) + G pi^3 / 32
EvalResult b23_closed(Precision prec = Precision());

// Conjectured t({2}^N, 1) = I(2N)/(2N)!. Flagged conjectural.
EvalResult t2s1_conjecture(int n, Precision prec = Precision());

enum class HoffmanKind { T21, T221, T2221 };
// Hoffman's relations for t(2,1), t(2,2,1), t(2,2,2,1) in terms of t(k) and log 2.
// t(2,2,1) uses the coefficient -3/14 on t(2) t(3).
EvalResult hoffman_t(HoffmanKind kind, Precision prec = Precision());
// The t(2,2,1) relation with -1/14 on t(2) t(3), kept for comparison.
EvalResult hoffman_t221_with_coefficient(const Rational& t2t3_coefficient, Precision prec = Precision());

// zeta(3,1,1) = 2 zeta(5) - zeta(2) zeta(3)
EvalResult zeta311(Precision prec = Precision());

// pi^k with its rounding allowance.
EvalResult pi_power(int k, Precision prec = Precision());

}  // namespace zetakit
