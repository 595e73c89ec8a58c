#include "zetakit/rational.hpp"

#include <mutex>
#include <vector>

namespace zetakit {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class double_factorial(int n) {
  if (n <= 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

// Grows on demand; entries are never modified once written.
class NumberTable {
 public:
  template <typename Fill>
  Rational get(unsigned n, Fill&& fill) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (n >= values_.size()) fill(values_, n);
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

NumberTable& bernoulli_table() {
  static NumberTable table;
  return table;
}

NumberTable& euler_table() {
  static NumberTable table;
  return table;
}

// B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
void extend_bernoulli(std::vector<Rational>& b, unsigned n) {
  if (b.empty()) b.emplace_back(1);
  for (unsigned m = static_cast<unsigned>(b.size()); m <= n; ++m) {
    Rational sum = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (unsigned k = 0; k < m; ++k) {
      // odd Bernoulli numbers beyond B_1 vanish
      if (k <= 1 || k % 2 == 0) sum += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    Rational bm = -sum / (m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
}

// E_{2m} = -sum_{k<m} C(2m, 2k) E_{2k}
void extend_euler(std::vector<Rational>& e, unsigned n) {
  if (e.empty()) e.emplace_back(1);
  for (unsigned m = static_cast<unsigned>(e.size()); m <= n; ++m) {
    if (m % 2 == 1) {
      e.emplace_back(0);
      continue;
    }
    Rational sum = 0;
    for (unsigned k = 0; k < m; k += 2) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m, k);
      sum += binom * e[k];
    }
    e.push_back(-sum);
  }
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_table().get(n, extend_bernoulli); }

Rational euler_number(unsigned n) { return euler_table().get(n, extend_euler); }

Rational even_zeta_pi_coefficient(unsigned k) {
  // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
  Rational b = bernoulli(2 * k);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
  Rational r = b * two_pow / (2 * Rational(factorial(2 * k)));
  if (k % 2 == 0) r = -r;
  r.canonicalize();
  return r;
}

Rational odd_beta_pi_coefficient(unsigned k) {
  // beta(2k+1) = (-1)^k E_2k pi^(2k+1) / (4^(k+1) (2k)!)
  Rational e = euler_number(2 * k);
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, k + 1);
  Rational r = e / (Rational(four_pow) * Rational(factorial(2 * k)));
  if (k % 2 == 1) r = -r;
  r.canonicalize();
  return r;
}

Rational one_minus_pow2(int m) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(m));
  Rational r(p - 1, p);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

}  // namespace zetakit
