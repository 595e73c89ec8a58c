#include "zetakit/nested_series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"

namespace zetakit {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw PreconditionError("multi-index must be nonempty");
  for (int e : entries_)
    if (e < 1) throw PreconditionError("multi-index entries must be positive");
}

int MultiIndex::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

MultiIndex MultiIndex::with_twos(int head, int twos) {
  std::vector<int> e{head};
  e.insert(e.end(), twos, 2);
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::twos_then(int twos, int tail) {
  std::vector<int> e(twos, 2);
  e.push_back(tail);
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::two_then_ones(int ones) {
  std::vector<int> e{2};
  e.insert(e.end(), ones, 1);
  return MultiIndex(std::move(e));
}

Rational harmonic(long n, int p) {
  if (n < 0) throw PreconditionError("harmonic: n must be nonnegative");
  if (p < 1) throw PreconditionError("harmonic: p must be positive");
  Rational sum = 0;
  for (long k = 1; k <= n; ++k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(p));
    sum += Rational(1, d);
  }
  sum.canonicalize();
  return sum;
}

namespace {

// Upper bound for sum_{n > c} (a + ln n)^m d(n)^-s, s >= 2, with d(n) = n or
// 2n - 1. Since d(n) >= n, each term is at most g(d(n)) with
// g(x) = (a + ln x)^m x^-s, which decreases once a + ln x > m/s. Early terms
// are added one by one, the rest is g(x0) plus (1 or 1/2 times) the integral
//   int_X^inf g = X^-sig sum_j m!/(m-j)! V^(m-j) / sig^(j+1),
// sig = s - 1, V = a + ln X.
double log_power_tail(long c, Denominator den, int s, int m, double a) {
  const double sigma = s - 1.0;
  auto d = [&](long n) { return den == Denominator::Plain ? static_cast<double>(n) : 2.0 * n - 1.0; };
  auto g = [&](double x) { return std::pow(a + std::log(x), m) * std::pow(x, -s); };
  auto integral = [&](double x) {
    double v = a + std::log(x);
    double total = 0.0, falling = 1.0;
    for (int j = 0; j <= m; ++j) {
      total += falling * std::pow(v, m - j) / std::pow(sigma, j + 1);
      falling *= (m - j);
    }
    return std::pow(x, -sigma) * total;
  };
  const double x_star = std::exp(static_cast<double>(m) / s - a);
  long n = std::max(c, 0L) + 1;
  double sum = 0.0;
  for (; d(n) < x_star; ++n) sum += g(d(n));
  const double x0 = d(n);
  sum += g(x0) + (den == Denominator::Plain ? 1.0 : 0.5) * integral(x0);
  return sum * (1.0 + 1e-12);
}

// sum over all n >= 1 of d(n)^-r, from above
double single_bound(int r, Denominator den) {
  double z = 0.0;
  for (int n = 1; n <= 50; ++n) z += std::pow(den == Denominator::Plain ? n : 2.0 * n - 1.0, -r);
  double x = den == Denominator::Plain ? 50.0 : 99.0;
  return (z + std::pow(x, 1.0 - r) / (r - 1.0)) * (1.0 + 1e-12);
}

double nested_tail_bound(const std::vector<NestedLevel>& levels, Denominator den, long cutoff) {
  const int s = levels.front().exponent;
  bool all_strict = true;
  for (std::size_t j = 1; j + 1 < levels.size(); ++j) all_strict = all_strict && levels[j].strict_below;
  std::map<int, int> groups;
  for (std::size_t j = 1; j < levels.size(); ++j) ++groups[levels[j].exponent];

  // Inner nest <= prod_r S_r^{m_r} / m_r!  (strict chains), or the plain
  // product when a link allows repeated indices. S_1(n) <= 1 + ln n.
  double constant = 1.0;
  int log_count = 0;
  for (auto [r, count] : groups) {
    if (r == 1) {
      log_count = count;
      if (all_strict) constant /= std::tgamma(count + 1.0);
      continue;
    }
    double sr = single_bound(r, den);
    constant *= std::pow(sr, count);
    if (all_strict) constant /= std::tgamma(count + 1.0);
  }
  return constant * log_power_tail(cutoff, den, s, log_count, 1.0);
}

}  // namespace

EvalResult nested_sum(const std::vector<NestedLevel>& levels, Denominator den, long cutoff, Precision prec) {
  if (levels.empty()) throw PreconditionError("nested sum needs at least one level");
  for (const auto& l : levels)
    if (l.exponent < 1) throw PreconditionError("nested sum exponents must be positive");
  if (levels.front().exponent < 2) throw DomainError("divergent nested sum: outermost exponent must be >= 2");
  if (cutoff < 0) throw PreconditionError("cutoff must be nonnegative");

  const std::size_t k = levels.size();
  const mpfr_prec_t bits = prec.working_bits();
  int max_exp = 0;
  for (const auto& l : levels) max_exp = std::max(max_exp, l.exponent);

  std::vector<HPReal> acc, v, pw;
  for (std::size_t j = 0; j < k; ++j) {
    acc.push_back(HPReal::with_bits(bits));
    v.push_back(HPReal::with_bits(bits));
  }
  for (int e = 0; e <= max_exp; ++e) pw.push_back(HPReal::with_bits(bits));
  HPReal inner = HPReal::with_bits(bits);
  std::vector<char> live(k, 0);

  for (long n = 1; n <= cutoff; ++n) {
    unsigned long d = den == Denominator::Plain ? n : 2 * n - 1;
    mpfr_set_ui(pw[1].get(), 1, MPFR_RNDN);
    mpfr_div_ui(pw[1].get(), pw[1].get(), d, MPFR_RNDN);
    for (int e = 2; e <= max_exp; ++e) mpfr_mul(pw[e].get(), pw[e - 1].get(), pw[1].get(), MPFR_RNDN);

    for (std::size_t jj = k; jj-- > 0;) {
      const NestedLevel& l = levels[jj];
      live[jj] = 0;
      if (l.parity >= 0 && n % 2 != l.parity) continue;
      if (jj == k - 1) {
        mpfr_set(v[jj].get(), pw[l.exponent].get(), MPFR_RNDN);
      } else {
        mpfr_set(inner.get(), acc[jj + 1].get(), MPFR_RNDN);
        if (!l.strict_below && live[jj + 1]) mpfr_add(inner.get(), inner.get(), v[jj + 1].get(), MPFR_RNDN);
        if (inner.is_zero()) continue;
        mpfr_mul(v[jj].get(), pw[l.exponent].get(), inner.get(), MPFR_RNDN);
      }
      live[jj] = 1;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (live[j]) mpfr_add(acc[j].get(), acc[j].get(), v[j].get(), MPFR_RNDN);
  }

  HPReal total = std::move(acc[0]);
  HPReal err = bound_add(bound_from_double(nested_tail_bound(levels, den, cutoff)),
                         rounding_allowance(total, static_cast<long>(k) * (cutoff + max_exp + 2)));
  return EvalResult(std::move(total), std::move(err), Method::Series, true);
}

namespace {

std::vector<NestedLevel> plain_levels(const MultiIndex& idx) {
  std::vector<NestedLevel> levels;
  for (int e : idx.entries()) levels.push_back({e, true, -1});
  return levels;
}

void require_admissible(const MultiIndex& idx, const char* what) {
  if (!idx.admissible())
    throw DomainError(std::string("divergent ") + what + idx.to_string() + ": first exponent must be >= 2");
}

}  // namespace

EvalResult mzv_series(const MultiIndex& idx, long cutoff, Precision prec) {
  require_admissible(idx, "zeta");
  return nested_sum(plain_levels(idx), Denominator::Plain, cutoff, prec);
}

EvalResult mtv_series(const MultiIndex& idx, long cutoff, Precision prec) {
  require_admissible(idx, "t");
  return nested_sum(plain_levels(idx), Denominator::Odd, cutoff, prec);
}

EvalResult mu_series(const MultiIndex& idx, long cutoff, Precision prec) {
  require_admissible(idx, "mu");
  std::vector<NestedLevel> levels = plain_levels(idx);
  const int k = idx.depth();
  // display position i carries the variable n_{k-i}
  for (int i = 0; i < k; ++i) levels[i].parity = (k - i) % 2;
  return nested_sum(levels, Denominator::Plain, cutoff, prec);
}

EvalResult big_t_series(const MultiIndex& idx, long cutoff, Precision prec) {
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(idx.depth()));
  return scale(mu_series(idx, cutoff, prec), Rational(two_k));
}

EvalResult euler_H_series(const std::vector<int>& ps, int q, long cutoff, Precision prec) {
  if (q < 2) throw DomainError("divergent Euler sum: q must be >= 2");
  if (ps.empty()) throw PreconditionError("Euler sum needs at least one harmonic factor");
  for (int p : ps)
    if (p < 1) throw PreconditionError("Euler sum exponents must be positive");
  if (cutoff < 0) throw PreconditionError("cutoff must be nonnegative");

  const mpfr_prec_t bits = prec.working_bits();
  int max_exp = q;
  for (int p : ps) max_exp = std::max(max_exp, p);
  std::vector<HPReal> pw, h;
  for (int e = 0; e <= max_exp; ++e) pw.push_back(HPReal::with_bits(bits));
  for (std::size_t j = 0; j < ps.size(); ++j) h.push_back(HPReal::with_bits(bits));
  HPReal term = HPReal::with_bits(bits);
  HPReal total = HPReal::with_bits(bits);

  for (long n = 1; n <= cutoff; ++n) {
    mpfr_set_ui(pw[1].get(), 1, MPFR_RNDN);
    mpfr_div_ui(pw[1].get(), pw[1].get(), static_cast<unsigned long>(n), MPFR_RNDN);
    for (int e = 2; e <= max_exp; ++e) mpfr_mul(pw[e].get(), pw[e - 1].get(), pw[1].get(), MPFR_RNDN);
    mpfr_set(term.get(), pw[q].get(), MPFR_RNDN);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      mpfr_add(h[j].get(), h[j].get(), pw[ps[j]].get(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), h[j].get(), MPFR_RNDN);
    }
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }

  // H_n^(p) <= zeta(p) for p >= 2 and H_n <= 1 + ln n
  double constant = 1.0;
  int log_count = 0;
  for (int p : ps) {
    if (p == 1) ++log_count;
    else constant *= single_bound(p, Denominator::Plain);
  }
  double tail = constant * log_power_tail(cutoff, Denominator::Plain, q, log_count, 1.0);
  HPReal err = bound_add(bound_from_double(tail),
                         rounding_allowance(total, static_cast<long>(ps.size() + 2) * (cutoff + max_exp)));
  return EvalResult(std::move(total), std::move(err), Method::Series, log_count == 0);
}

EvalResult odd_O_series(int p, int q, long cutoff, Precision prec) {
  if (q < 2) throw DomainError("divergent odd Euler sum: q must be >= 2");
  if (p < 1) throw PreconditionError("odd Euler sum: p must be positive");
  return nested_sum({{q, false, -1}, {p, true, -1}}, Denominator::Odd, cutoff, prec);
}

EvalResult odd_B_series(int p, int q, long cutoff, Precision prec) {
  if (q < 2) throw DomainError("odd alternating Euler sum: q must be >= 2");
  if (p < 1) throw PreconditionError("odd alternating Euler sum: p must be positive");
  if (cutoff < 1) throw PreconditionError("cutoff must be positive");

  const mpfr_prec_t bits = prec.working_bits();
  HPReal inv = HPReal::with_bits(bits), ip = HPReal::with_bits(bits), iq = HPReal::with_bits(bits);
  HPReal b = HPReal::with_bits(bits), term = HPReal::with_bits(bits), total = HPReal::with_bits(bits);
  for (long n = 1; n <= cutoff; ++n) {
    mpfr_set_ui(inv.get(), 1, MPFR_RNDN);
    mpfr_div_ui(inv.get(), inv.get(), static_cast<unsigned long>(2 * n - 1), MPFR_RNDN);
    mpfr_pow_ui(ip.get(), inv.get(), static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_pow_ui(iq.get(), inv.get(), static_cast<unsigned long>(q), MPFR_RNDN);
    // (-1)^n on both the inner and the outer term
    if (n % 2 == 0) mpfr_add(b.get(), b.get(), ip.get(), MPFR_RNDN);
    else mpfr_sub(b.get(), b.get(), ip.get(), MPFR_RNDN);
    mpfr_mul(term.get(), b.get(), iq.get(), MPFR_RNDN);
    if (n % 2 == 0) mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
    else mpfr_sub(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  // B_n(p) = -beta(p) + r_n with |r_n| <= (2n+1)^-p and beta(p) <= 1:
  // the -beta part is an alternating tail, the r_n part is absolutely summable.
  const double c = static_cast<double>(cutoff);
  double tail = std::pow(2 * c + 1, -q) + std::pow(2 * c - 1, 1.0 - p - q) / (2.0 * (p + q - 1));
  HPReal err = bound_add(bound_from_double(tail * (1.0 + 1e-12)), rounding_allowance(total, 6 * cutoff));
  return EvalResult(std::move(total), std::move(err), Method::Series, true);
}

EvalResult central_binomial_sum(CentralBinomialKind kind, long cutoff, Precision prec) {
  if (cutoff < 1) throw PreconditionError("central binomial sum: cutoff must be >= 1");
  const int s = kind == CentralBinomialKind::InverseSquare ? 2 : kind == CentralBinomialKind::AltInverseCube ? 3 : 4;
  const bool alternating = kind == CentralBinomialKind::AltInverseCube;
  const mpfr_prec_t bits = prec.working_bits();

  HPReal inv_binom = HPReal::with_bits(bits);
  mpfr_set_d(inv_binom.get(), 0.5, MPFR_RNDN);  // 1/C(2,1)
  HPReal term = HPReal::with_bits(bits), total = HPReal::with_bits(bits);
  for (long n = 1; n <= cutoff; ++n) {
    mpfr_set(term.get(), inv_binom.get(), MPFR_RNDN);
    for (int e = 0; e < s; ++e) mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    if (alternating && n % 2 == 0) mpfr_sub(total.get(), total.get(), term.get(), MPFR_RNDN);
    else mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
    // C(2n+2, n+1) = C(2n, n) * 2(2n+1)/(n+1)
    mpfr_mul_ui(inv_binom.get(), inv_binom.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
    mpfr_div_ui(inv_binom.get(), inv_binom.get(), static_cast<unsigned long>(2 * (2 * n + 1)), MPFR_RNDN);
  }
  // successive terms shrink by at least 1/3, so the tail is below term_c / 2
  HPReal last = abs(term);
  HPReal err = bound_add(bound_mul(last, bound_from_double(0.5)), rounding_allowance(total, (s + 4) * cutoff));
  return EvalResult(std::move(total), std::move(err), Method::Series, true);
}

EvalResult valean_alt_sum(ValeanKind kind, long cutoff, Precision prec) {
  if (cutoff < 2) throw PreconditionError("alternating harmonic sum: cutoff must be >= 2");
  const int r = kind == ValeanKind::H2nOverN4 ? 1 : 2;  // harmonic order
  const int s = kind == ValeanKind::H2nOverN4 ? 4 : 3;  // outer power
  const mpfr_prec_t bits = prec.working_bits();

  HPReal h = HPReal::with_bits(bits), x = HPReal::with_bits(bits);
  HPReal term = HPReal::with_bits(bits), total = HPReal::with_bits(bits);
  auto add_harmonic = [&](long k) {
    mpfr_set_ui(x.get(), 1, MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_pow_ui(x.get(), x.get(), static_cast<unsigned long>(r), MPFR_RNDN);
    mpfr_add(h.get(), h.get(), x.get(), MPFR_RNDN);
  };
  auto make_term = [&](long n) {
    mpfr_set(term.get(), h.get(), MPFR_RNDN);
    for (int e = 0; e < s; ++e) mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  };
  for (long n = 1; n <= cutoff; ++n) {
    add_harmonic(2 * n - 1);
    add_harmonic(2 * n);
    make_term(n);
    if (n % 2 == 1) mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
    else mpfr_sub(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  add_harmonic(2 * cutoff + 1);
  add_harmonic(2 * cutoff + 2);
  make_term(cutoff + 1);
  HPReal err = bound_add(bound_mul(abs(term), bound_from_double(10.0)), rounding_allowance(total, 8 * cutoff));
  return EvalResult(std::move(total), std::move(err), Method::Series, false);
}

}  // namespace zetakit
