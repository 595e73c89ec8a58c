#pragma once

#include <string>

#include <gmpxx.h>

namespace zetakit {

using Rational = mpq_class;

mpz_class factorial(unsigned n);

// n!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(int n);

// Bernoulli number B_n (B_1 = -1/2), exact. Memoized; safe to call from
// several threads.
Rational bernoulli(unsigned n);

// Euler (secant) number E_n: E_0 = 1, E_2 = -1, E_4 = 5, ... ; zero for odd n.
Rational euler_number(unsigned n);

// zeta(2k) = coefficient * pi^(2k).
Rational even_zeta_pi_coefficient(unsigned k);

// beta(2k+1) = coefficient * pi^(2k+1).
Rational odd_beta_pi_coefficient(unsigned k);

// 1 - 2^(-m)
Rational one_minus_pow2(int m);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace zetakit
