#include <random>

#include "test_support.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/power_series.hpp"

using namespace zetakit;
using zetakit::testing::check_close;
using zetakit::testing::dec;

namespace {

HPReal pi() { return HPReal::pi(Precision()); }

mpz_class fact(int n) { return factorial(static_cast<unsigned>(n)); }

}  // namespace

TEST_CASE("G and H coefficients") {
  for (int k = 0; k < 10; ++k) CHECK(g_coeff(0, k) == 1);
  CHECK(g_coeff(1, 2) == Rational(10, 9));
  CHECK(g_coeff(2, 2) == Rational(1, 9));
  CHECK(g_coeff(2, 1) == 0);
  for (int k = 1; k < 10; ++k) CHECK(h_coeff(1, k) == Rational(1, 4));
  CHECK(h_coeff(1, 5) == Rational(1, 4));
  CHECK(h_coeff(2, 2) == Rational(1, 16));
  CHECK(h_coeff(2, 3) == Rational(5, 64));
  CHECK_THROWS_AS(h_coeff(0, 1), PreconditionError);
}

TEST_CASE("G/H recurrences hold exactly for N <= 5, k <= 100") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 100; ++k) {
      Rational g = 0;
      for (int m = 0; m < k; ++m) g += g_coeff(n - 1, m) / (mpz_class(2 * m + 1) * (2 * m + 1));
      CHECK(g_coeff(n, k) == g);
      if (k >= 1 && n >= 2) {
        Rational h = 0;
        for (int m = 1; m < k; ++m) h += h_coeff(n - 1, m) / (mpz_class(4) * m * m);
        CHECK(h_coeff(n, k) == h);
      }
      if (k >= 1) CHECK(h_coeff(n, k) >= 0);
      CHECK(g_coeff(n, k) >= 0);
    }
}

TEST_CASE("arcsin series") {
  auto c = arcsin_coefficients(1, 7);
  CHECK(c[0] == 0);
  CHECK(c[1] == 1);
  CHECK(c[2] == 0);
  CHECK(c[3] == Rational(1, 6));
  CHECK(c[5] == Rational(3, 40));
  CHECK(c[7] == Rational(5, 112));
  Precision p;
  check_close(arcsin_power_series(2).evaluate(dec("0.3")).value, pow(asin(dec("0.3")), 2) / 2, 1e-40);
  check_close(arcsin_power_series(3).evaluate(dec("0.5")).value, pow(pi() / 6, 3) / 6, 1e-24);
}

TEST_CASE("series against functions, N <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const char* zs : {"0.1", "0.3", "0.5"}) {
      HPReal z = dec(zs);
      CAPTURE(n);
      CAPTURE(zs);
      EvalResult a = arcsin_power_series(n).evaluate(z);
      HPReal fa = pow(asin(z), n) / HPReal(Rational(fact(n)), Precision());
      CHECK(abs(a.value - fa) <= a.error_bound);
      EvalResult t = arctanh_power_series(n).evaluate(z);
      HPReal ft = pow(atanh(z), n) / HPReal(Rational(fact(n)), Precision());
      CHECK(abs(t.value - ft) <= t.error_bound);
    }
}

TEST_CASE("arctanh coefficients") {
  auto c = arctanh_coefficients(1, 5);
  CHECK(c[1] == 1);
  CHECK(c[2] == 0);
  CHECK(c[3] == Rational(1, 3));
  CHECK(c[5] == Rational(1, 5));
  CHECK(arctanh_coeff(3, 3) == Rational(1, 6));
  check_close(arctanh_power_series(2).evaluate(dec("0.5")).value, pow(atanh(dec("0.5")), 2) / 2, 1e-22);
}

TEST_CASE("W on monomials") {
  std::vector<Rational> z1{0, 1}, one{1}, z2{0, 0, 1};
  CHECK(w_apply_exact(z1)[1] == 1);
  check_close(w_apply(TruncatedSeries(one, Precision())).coefficients()[0], pi() / 2, 1e-55);
  check_close(w_apply(TruncatedSeries(z2, Precision())).coefficients()[2], pi() / 4, 1e-55);
  CHECK(wallis_ratio(0) == 1);
  CHECK(wallis_ratio(3) == Rational(2, 3));
}

TEST_CASE("W is linear, exactly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> f, g;
    for (int i = 0; i < 25; ++i) {
      f.emplace_back(num(rng), den(rng));
      g.emplace_back(num(rng), den(rng));
      f.back().canonicalize();
      g.back().canonicalize();
    }
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    std::vector<Rational> mix;
    for (int i = 0; i < 25; ++i) mix.push_back(a * f[i] + b * g[i]);
    auto wm = w_apply_exact(mix), wf = w_apply_exact(f), wg = w_apply_exact(g);
    for (int i = 0; i < 25; ++i) CHECK(wm[i] == a * wf[i] + b * wg[i]);
  }
}

TEST_CASE("odd coefficient roundtrip with random C") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> cs, f(42, Rational(0));
    for (int k = 0; 2 * k + 1 < 42; ++k) {
      Rational ck(num(rng), den(rng));
      ck.canonicalize();
      cs.push_back(ck);
      f[2 * k + 1] = Rational(double_factorial(2 * k - 1), double_factorial(2 * k)) * ck;
    }
    auto w = w_apply_exact(f);
    for (int k = 0; 2 * k + 1 < 42; ++k) CHECK(w[2 * k + 1] == cs[k] / (2 * k + 1));
  }
}

TEST_CASE("even coefficients carry pi/2") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-100, 100);
  std::vector<Rational> f(20, Rational(0));
  for (int k = 0; 2 * k < 20; ++k) f[2 * k] = num(rng);
  TruncatedSeries wf = w_apply(TruncatedSeries(f, Precision()));
  auto exact = w_apply_exact(f);
  for (int k = 0; 2 * k < 20; ++k)
    check_close(wf.coefficients()[2 * k], HPReal(exact[2 * k], Precision()) * pi() / 2, 1e-50);
}

TEST_CASE("Wallis identity on three integrands") {
  Precision p;
  HPReal one(1, p);
  auto [l1, r1] = wallis_identity_check(TruncatedSeries(std::vector<Rational>{0, 1}, p), one);
  check_close(l1.value, one, 1e-45);
  check_close(r1.value, one, 1e-45);
  auto [l2, r2] = wallis_identity_check(TruncatedSeries(std::vector<Rational>{0, 0, 1}, p), one);
  check_close(l2.value, pi() / 8, 1e-45);
  check_close(r2.value, pi() / 8, 1e-45);
  auto [l3, r3] = wallis_identity_check(arcsin_power_series(3, 60), one);
  check_close(l3.value, r3.value, 1e-20);
  auto [l4, r4] = wallis_identity_check(arctanh_power_series(2, 40), dec("0.7"));
  check_close(l4.value, r4.value, 1e-40);
  CHECK_THROWS_AS(wallis_identity_check(TruncatedSeries(std::vector<Rational>{1, 1}, p), one), PreconditionError);
}
