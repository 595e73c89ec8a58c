#include <functional>
#include <random>

#include "test_support.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"
#include "zetakit/nested_series.hpp"

using namespace zetakit;
using zetakit::testing::check_close;
using zetakit::testing::check_within_bounds;
using zetakit::testing::dec;

namespace {

HPReal pi_pow(int k) { return pow(HPReal::pi(Precision()), k); }

EvalResult exact_value(const HPReal& v) { return EvalResult::exact(v); }

// Brute force over all chains, exact rationals.
Rational brute_nested(const std::vector<NestedLevel>& levels, bool odd, long cutoff) {
  Rational total = 0;
  std::function<void(std::size_t, long, Rational)> rec = [&](std::size_t j, long upper, Rational acc) {
    if (j == levels.size()) {
      total += acc;
      return;
    }
    long hi = j == 0 ? cutoff : (levels[j - 1].strict_below ? upper - 1 : upper);
    for (long n = 1; n <= hi; ++n) {
      if (levels[j].parity >= 0 && n % 2 != levels[j].parity) continue;
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), odd ? 2 * n - 1 : n, levels[j].exponent);
      rec(j + 1, n, acc / d);
    }
  };
  rec(0, cutoff, Rational(1));
  return total;
}

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1, 5) == 1);
  CHECK(harmonic(2, 1) == Rational(3, 2));
  CHECK(harmonic(3, 2) == Rational(49, 36));
  CHECK(harmonic(0, 3) == 0);
  CHECK_THROWS_AS(harmonic(3, 0), PreconditionError);
  for (long n = 1; n < 30; ++n) CHECK(harmonic(n + 1, 2) > harmonic(n, 2));
}

TEST_CASE("MultiIndex") {
  MultiIndex a{3, 2, 2};
  CHECK(a.depth() == 3);
  CHECK(a.weight() == 7);
  CHECK(a.admissible());
  CHECK_FALSE(MultiIndex{1, 2}.admissible());
  CHECK(MultiIndex::with_twos(3, 2).entries() == std::vector<int>{3, 2, 2});
  CHECK(MultiIndex::twos_then(2, 1).entries() == std::vector<int>{2, 2, 1});
  CHECK(MultiIndex::two_then_ones(3).entries() == std::vector<int>{2, 1, 1, 1});
  CHECK_THROWS_AS(MultiIndex({}), PreconditionError);
  CHECK_THROWS_AS(MultiIndex({2, 0}), PreconditionError);
  CHECK_THROWS_AS(mzv_series(MultiIndex{1, 2}, 100), DomainError);
  CHECK_THROWS_AS(mu_series(MultiIndex{1, 1}, 100), DomainError);
}

TEST_CASE("nested_sum matches brute force on random shapes") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> depth_d(1, 3), exp_d(1, 3), coin(0, 1), par(-1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<NestedLevel> levels;
    int depth = depth_d(rng);
    for (int j = 0; j < depth; ++j) levels.push_back({exp_d(rng), coin(rng) == 1, par(rng)});
    levels[0].exponent = std::max(levels[0].exponent, 2);
    bool odd = coin(rng) == 1;
    long cutoff = 25;
    Rational expect = brute_nested(levels, odd, cutoff);
    EvalResult got = nested_sum(levels, odd ? Denominator::Odd : Denominator::Plain, cutoff);
    CAPTURE(trial);
    check_close(got.value, HPReal(expect, Precision()), 1e-55);
  }
}

TEST_CASE("tail bound covers the remainder, small cutoffs included") {
  for (const MultiIndex& idx : {MultiIndex{2, 1}, MultiIndex{3, 1, 1}, MultiIndex{2, 2, 1}, MultiIndex{4, 1}}) {
    EvalResult big = mzv_series(idx, 200000);
    for (long c : {0L, 1L, 2L, 5L, 50L, 1000L}) {
      EvalResult small = mzv_series(idx, c);
      CAPTURE(idx.to_string());
      CAPTURE(c);
      CHECK(small.value <= big.value);
      CHECK(big.value - small.value <= small.error_bound);
    }
  }
  for (int ones = 1; ones <= 3; ++ones) {
    MultiIndex idx = MultiIndex::two_then_ones(ones);
    EvalResult big = mu_series(idx, 200000);
    for (long c : {1L, 3L, 100L}) {
      EvalResult small = mu_series(idx, c);
      CHECK(big.value - small.value <= small.error_bound);
    }
  }
}

TEST_CASE("depth one reduces to zeta and t") {
  Precision p;
  check_within_bounds(mzv_series(MultiIndex{3}, 100000), zeta_single(3));
  check_within_bounds(mtv_series(MultiIndex{2}, 100000), exact_value(pi_pow(2) / 8));
  CHECK(mzv_series(MultiIndex{3}, 100000).rigorous);
}

TEST_CASE("printed decimals and classical relations at cutoff 10^6") {
  EvalResult z32 = mzv_series(MultiIndex{3, 2});
  check_close(z32.value, dec("0.22881039"), 1e-8);
  check_within_bounds(mzv_series(MultiIndex{2, 1}), zeta_single(3));
  EvalResult t322 = mtv_series(MultiIndex{3, 2, 2});
  check_close(t322.value, dec("0.002109185"), 1e-9);
  EvalResult t3222 = mtv_series(MultiIndex{3, 2, 2, 2});
  check_close(t3222.value, dec("0.00005499616"), 1e-11);
}

TEST_CASE("mu values") {
  check_within_bounds(mu_series(MultiIndex{2, 1}), scale(zeta_single(3), Rational(7, 16)));
  check_within_bounds(mu_series(MultiIndex{2, 1, 1}), exact_value(pi_pow(4) / 384));
  check_within_bounds(mu_series(MultiIndex{2, 1, 1, 1}), scale(zeta_single(5), Rational(31, 256)));
  // display order: mu(2) is the odd-square sum
  check_within_bounds(mu_series(MultiIndex{2}, 100000), exact_value(pi_pow(2) / 8));
}

TEST_CASE("T duality") {
  check_within_bounds(big_t_series(MultiIndex{2, 1}), scale(zeta_single(3), Rational(7, 4)));
  for (int n = 3; n <= 4; ++n) {
    EvalResult t = big_t_series(MultiIndex::two_then_ones(n - 1));
    EvalResult target = scale(zeta_single(n + 1), 2 * one_minus_pow2(n + 1));
    CAPTURE(n);
    check_within_bounds(t, target);
  }
}

TEST_CASE("Euler sums") {
  EvalResult h23 = euler_H_series({2}, 3);
  EvalResult h32 = euler_H_series({3}, 2);
  check_within_bounds(h23 + h32, zeta_single(2) * zeta_single(3) + zeta_single(5));
  check_within_bounds(euler_H_series({2}, 2), scale(zeta_single(4), Rational(7, 4)));
  EvalResult h12 = euler_H_series({1}, 2);
  CHECK_FALSE(h12.rigorous);
  check_within_bounds(h12, scale(zeta_single(3), Rational(2)));
  CHECK_THROWS_AS(euler_H_series({2}, 1), DomainError);
}

TEST_CASE("classical reflection for 2 <= p,q <= 5") {
  for (int p = 2; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) {
      EvalResult lhs = euler_H_series({p}, q, 100000) + euler_H_series({q}, p, 100000);
      CAPTURE(p);
      CAPTURE(q);
      check_within_bounds(lhs, zeta_single(p) * zeta_single(q) + zeta_single(p + q));
    }
}

TEST_CASE("odd Euler sums") {
  check_within_bounds(odd_O_series(2, 2), exact_value(pi_pow(4) * 5 / 384));
  EvalResult o23 = scale(zeta_single(5), Rational(31, 64)) +
                   scale(zeta_single(3) * zeta_single(2), Rational(9, 32));
  check_within_bounds(odd_O_series(2, 3), o23);
  CHECK_THROWS_AS(odd_O_series(2, 1), DomainError);
  CHECK_THROWS_AS(odd_B_series(2, 1), DomainError);
}

TEST_CASE("B sign convention: (-1)^k (-1)^n equals (-1)^(k-1) (-1)^(n-1)") {
  const long c = 40;
  for (int p = 1; p <= 3; ++p)
    for (int q = 2; q <= 3; ++q) {
      Rational paper = 0, shifted = 0, inner_a = 0, inner_b = 0;
      for (long n = 1; n <= c; ++n) {
        mpz_class dp, dq;
        mpz_ui_pow_ui(dp.get_mpz_t(), 2 * n - 1, p);
        mpz_ui_pow_ui(dq.get_mpz_t(), 2 * n - 1, q);
        int s = n % 2 == 0 ? 1 : -1;
        inner_a += Rational(s, dp);
        inner_b += Rational(-s, dp);
        paper += s * inner_a / dq;
        shifted += -s * inner_b / dq;
      }
      CHECK(paper == shifted);
      check_close(odd_B_series(p, q, c).value, HPReal(paper, Precision()), 1e-55);
    }
}

TEST_CASE("odd reflection identities on a small grid") {
  const long c = 100000;
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 4; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      EvalResult lhs = odd_O_series(p, q, c) + odd_O_series(q, p, c);
      check_within_bounds(lhs, t_single(p) * t_single(q) + t_single(p + q));
      EvalResult blhs = odd_B_series(p, q, c) + odd_B_series(q, p, c);
      check_within_bounds(blhs, beta_fn(p) * beta_fn(q) + t_single(p + q));
    }
}

TEST_CASE("central binomial sums") {
  Precision p;
  EvalResult a = central_binomial_sum(CentralBinomialKind::InverseSquare);
  check_close(a.value, zeta_single(2).value / 3, 1e-50);
  EvalResult b = central_binomial_sum(CentralBinomialKind::AltInverseCube);
  check_close(b.value, zeta_single(3).value * 2 / 5, 1e-50);
  EvalResult c = central_binomial_sum(CentralBinomialKind::InverseFourth);
  check_close(c.value, zeta_single(4).value * 17 / 36, 1e-50);
  CHECK(a.error_bound <= 1e-50);
  // short truncation: the bound still covers the gap
  EvalResult s = central_binomial_sum(CentralBinomialKind::InverseFourth, 5);
  CHECK(abs(s.value - c.value) <= s.error_bound);
  CHECK_THROWS_AS(central_binomial_sum(CentralBinomialKind::InverseSquare, 0), PreconditionError);
}

TEST_CASE("alternating harmonic sums") {
  HPReal pi = HPReal::pi(Precision());
  HPReal z3 = zeta_single(3).value, z5 = zeta_single(5).value, psi = psi3_quarter().value;
  HPReal r2 = pow(pi, 2) * z3 * 61 / 192 + z5 * 1973 / 128 + pow(pi, 5) / 16 - pi * psi / 128;
  HPReal r1 = -(pow(pi, 2) * z3 / 3) - z5 * 437 / 64 - pow(pi, 5) / 24 + pi * psi / 192;
  EvalResult s2 = valean_alt_sum(ValeanKind::H2n2OverN3);
  EvalResult s1 = valean_alt_sum(ValeanKind::H2nOverN4);
  CHECK_FALSE(s1.rigorous);
  check_close(s2.value, r2, 1e-12);
  check_close(s1.value, r1, 1e-12);
  EvalResult a = valean_alt_sum(ValeanKind::H2nOverN4, 10);
  EvalResult b = valean_alt_sum(ValeanKind::H2nOverN4, 20);
  CHECK(abs(a.value - b.value) <= a.error_bound);
  CHECK(abs(a.value - r1) <= a.error_bound);
}
