#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

inline constexpr long kDefaultCutoff = 1000000;

// Exponents of a nested sum, outermost (largest summation variable) first.
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int depth() const { return static_cast<int>(entries_.size()); }
  int weight() const;
  // Outermost exponent >= 2, the convergence condition.
  bool admissible() const { return entries_.front() >= 2; }

  std::string to_string() const;

  // (head, {2}^n) and ({2}^n, tail) shapes used by the families below.
  static MultiIndex with_twos(int head, int twos);
  static MultiIndex twos_then(int twos, int tail);
  // (2, {1}^ones)
  static MultiIndex two_then_ones(int ones);

 private:
  std::vector<int> entries_;
};

// H_n^(p) = sum_{k<=n} k^-p, exact. n = 0 gives the empty sum 0.
Rational harmonic(long n, int p);

// Generic nested sum over n_1 > n_2 > ... > n_k >= 1 (display order), each
// variable contributing d(n_j)^-e_j. A link may be made non-strict
// (n_j >= n_{j+1}) and a variable may be restricted to one parity.
enum class Denominator { Plain, Odd };  // n or 2n - 1

struct NestedLevel {
  int exponent;
  // Relation to the next inner level: n_j > n_{j+1} when true, >= otherwise.
  bool strict_below = true;
  // -1: no restriction, otherwise n_j % 2 must equal this.
  int parity = -1;
};

// The tail bound is a proven majorant (logarithmic growth of exponent-1 inner
// levels included). Outermost exponent must be >= 2.
EvalResult nested_sum(const std::vector<NestedLevel>& levels, Denominator den, long cutoff,
                      Precision prec = Precision());

// zeta(i_1, ..., i_k) truncated at n_1 <= cutoff.
EvalResult mzv_series(const MultiIndex& idx, long cutoff = kDefaultCutoff, Precision prec = Precision());

// t(i_1, ..., i_k): the same nest over odd integers only.
EvalResult mtv_series(const MultiIndex& idx, long cutoff = kDefaultCutoff, Precision prec = Precision());

// mu(i_k, ..., i_1) given in display order (outermost first). The variable
// carrying the j-th exponent counted from the innermost has parity j mod 2, so
// mu(2, 1) = sum over even n_2 > odd n_1 of 1/(n_2^2 n_1).
EvalResult mu_series(const MultiIndex& idx, long cutoff = kDefaultCutoff, Precision prec = Precision());

// T(idx) = 2^depth mu(idx).
EvalResult big_t_series(const MultiIndex& idx, long cutoff = kDefaultCutoff, Precision prec = Precision());

// sum_{n<=cutoff} prod_j H_n^(p_j) / n^q. Flagged non-rigorous when some p_j = 1.
EvalResult euler_H_series(const std::vector<int>& ps, int q, long cutoff = kDefaultCutoff,
                          Precision prec = Precision());

// O(p,q) = sum_n O_n(p) / (2n-1)^q with O_n(p) = sum_{k<=n} (2k-1)^-p.
EvalResult odd_O_series(int p, int q, long cutoff = kDefaultCutoff, Precision prec = Precision());

// B(p,q) = sum_n (-1)^n B_n(p) / (2n-1)^q with B_n(p) = sum_{k<=n} (-1)^k (2k-1)^-p.
// The two signs cancel against the (-1)^(k-1), (-1)^(n-1) convention, so
// B(p,q) -> beta-type values.
EvalResult odd_B_series(int p, int q, long cutoff = kDefaultCutoff, Precision prec = Precision());

enum class CentralBinomialKind {
  InverseSquare,   // sum 1/(n^2 C(2n,n)) = zeta(2)/3
  AltInverseCube,  // sum (-1)^(n-1)/(n^3 C(2n,n)) = 2 zeta(3)/5
  InverseFourth,   // sum 1/(n^4 C(2n,n)) = 17 zeta(4)/36
};
EvalResult central_binomial_sum(CentralBinomialKind kind, long cutoff = 200, Precision prec = Precision());

enum class ValeanKind {
  H2nOverN4,   // sum (-1)^(n-1) H_2n / n^4
  H2n2OverN3,  // sum (-1)^(n-1) H_2n^(2) / n^3
};
// Error estimate is ten times the first omitted term: heuristic.
EvalResult valean_alt_sum(ValeanKind kind, long cutoff = 100000, Precision prec = Precision());

}  // namespace zetakit
