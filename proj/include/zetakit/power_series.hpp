#pragma once

#include <utility>
#include <vector>

#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

inline constexpr int kDefaultSeriesOrder = 80;

// c_0 + c_1 z + ... + c_M z^M
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<HPReal> coefficients);
  TruncatedSeries(const std::vector<Rational>& coefficients, Precision prec);

  const std::vector<HPReal>& coefficients() const { return coefficients_; }
  int order() const { return static_cast<int>(coefficients_.size()) - 1; }

  // Polynomial value at z plus the remainder estimate |c|·r^(M+1)/(1-r),
  // r = |z| < 1, c the last nonzero coefficient. Heuristic.
  EvalResult evaluate(const HPReal& z) const;
  // The polynomial alone, no remainder.
  HPReal polynomial(const HPReal& z) const;

 private:
  std::vector<HPReal> coefficients_;
};

// G_N(k) = sum_{k > n_1 > ... > n_N >= 0} prod 1/(2 n_j + 1)^2, G_0 = 1.
Rational g_coeff(int n, int k);

// H_1(k) = 1/4, H_{N+1}(k) = sum_{n=1}^{k-1} H_N(n) / (2n)^2.
Rational h_coeff(int n, int k);

// Coefficient of z^m in arctanh^N(z)/N!: chains m = n_N > ... > n_1 >= 1 with
// n_j = j mod 2, weighted by prod 1/n_j.
Rational arctanh_coeff(int n, int m);

// Exact coefficients c_0..c_M of arcsin^N(z)/N!.
std::vector<Rational> arcsin_coefficients(int n, int order = kDefaultSeriesOrder);
std::vector<Rational> arctanh_coefficients(int n, int order = kDefaultSeriesOrder);

TruncatedSeries arcsin_power_series(int n, int order = kDefaultSeriesOrder, Precision prec = Precision());
TruncatedSeries arctanh_power_series(int n, int order = kDefaultSeriesOrder, Precision prec = Precision());

// int_0^1 x^n / sqrt(1 - x^2) dx = wallis_ratio(n), times pi/2 when n is even.
Rational wallis_ratio(int n);

// Rational part of W on each coefficient: a_n -> a_n (n-1)!!/n!!. The even
// coefficients of the true image carry an extra factor pi/2.
std::vector<Rational> w_apply_exact(const std::vector<Rational>& coefficients);

// Wf(z) = int_0^1 f(xz)/sqrt(1-x^2) dx, coefficientwise.
TruncatedSeries w_apply(const TruncatedSeries& f);

// Both sides of W(int_0^alpha f(z)/z dz) = int_0^1 f(alpha x) arccos(x)/x dx
// for a polynomial f with f(0) = 0: left by W on the termwise integral, right
// by quadrature.
std::pair<EvalResult, EvalResult> wallis_identity_check(const TruncatedSeries& f, const HPReal& alpha,
                                                        Precision prec = Precision());

}  // namespace zetakit
