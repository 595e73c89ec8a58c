#pragma once

#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

// Scalar constants used throughout. Each result is memoized per
// (constant, argument, precision); the cache is safe under concurrent use and
// returns values bit-identical to a fresh computation.

// Riemann zeta at an integer s >= 2: direct sum followed by an
// Euler-Maclaurin tail whose remainder bound is rigorous.
EvalResult zeta_single(int s, Precision prec = Precision());

// Dirichlet eta: log 2 at m = 1, (1 - 2^(1-m)) zeta(m) otherwise.
EvalResult eta(int m, Precision prec = Precision());

// Dirichlet beta, sum_{k>=1} (-1)^(k-1) / (2k-1)^m, via Cohen-Rodriguez
// Villegas-Zagier acceleration. beta(2) is Catalan's constant.
EvalResult beta_fn(int m, Precision prec = Precision());

// Odd-denominator zeta (1 - 2^-i) zeta(i).
EvalResult t_single(int i, Precision prec = Precision());

// Tetragamma derivative at 1/4: psi'''(1/4) = 6 sum_{n>=0} (n + 1/4)^-4.
EvalResult psi3_quarter(Precision prec = Precision());

// sum_{n>=0} (n + a)^-s for integer s >= 2 and rational a > 0.
EvalResult hurwitz_zeta(int s, const Rational& a, Precision prec = Precision());

// pi and log 2 as results carrying their rounding allowance.
EvalResult pi_constant(Precision prec = Precision());
EvalResult log2_constant(Precision prec = Precision());

// Drops every memoized constant. Intended for tests that compare cached and
// uncached evaluation.
void clear_constant_cache();

}  // namespace zetakit
