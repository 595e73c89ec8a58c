#include "test_support.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"
#include "zetakit/nested_series.hpp"
#include "zetakit/quadrature.hpp"

using namespace zetakit;
using zetakit::testing::check_close;
using zetakit::testing::check_within_bounds;
using zetakit::testing::dec;

namespace {

HPReal pi() { return HPReal::pi(Precision()); }
HPReal z(int s) { return zeta_single(s).value; }

HPReal mpfr_dilog(const HPReal& x) {
  HPReal r(Precision{});
  mpfr_li2(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("integrate01 basics") {
  Precision p;
  QuadratureResult one = integrate01({[&](const HPReal&, const HPReal&) { return HPReal(1, p); }});
  check_close(one.value, HPReal(1, p), 1e-50);
  CHECK_FALSE(one.rigorous);
  CHECK(one.method == Method::Quadrature);
  QuadratureResult lg = integrate01({[](const HPReal& x, const HPReal&) { return -log(x); },
                                     EndpointBehavior::Logarithmic});
  check_close(lg.value, HPReal(1, p), 1e-50);
  QuadratureResult alg = integrate01({[](const HPReal& x, const HPReal& c) { return HPReal(1, Precision()) / sqrt(c * (x + 1)); },
                                      EndpointBehavior::Regular, EndpointBehavior::Algebraic, 0.0, -0.5});
  check_close(alg.value, pi() / 2, 1e-50);
  CHECK(alg.levels_used <= kMaxQuadratureLevel);
  CHECK(abs(alg.value - pi() / 2) <= alg.error_bound);
}

TEST_CASE("integrate01 reports non-convergence") {
  // 1/x is not integrable; the level sums keep growing
  Integrand bad{[](const HPReal& x, const HPReal&) { return HPReal(1, Precision(20)) / x; }};
  CHECK_THROWS_AS(integrate01(bad, Precision(20)), ConvergenceError);
}

TEST_CASE("polylog") {
  Precision p;
  HPReal one(1, p), half(Rational(1, 2), p);
  check_close(polylog(2, one).value, pow(pi(), 2) / 6, 1e-50);
  CHECK(polylog(3, HPReal(0, p)).value.is_zero());
  HPReal l2 = HPReal::log2(p);
  check_close(polylog(2, half).value, pow(pi(), 2) / 12 - l2 * l2 / 2, 1e-50);
  // seam: both branches at x = 1/2
  for (int q = 2; q <= 6; ++q) {
    PolylogEvaluator li(q, p);
    check_close(li.from_log(-l2), li(half), 1e-50);
  }
  // against MPFR's dilogarithm across the range
  for (const char* s : {"0.1", "0.49", "0.51", "0.75", "0.999", "-0.3", "-0.6", "-0.99", "-1"}) {
    HPReal x = dec(s);
    CAPTURE(s);
    check_close(polylog(2, x).value, mpfr_dilog(x), 1e-50);
  }
  // Li_3(-1) = -(3/4) zeta(3)
  check_close(polylog(3, HPReal(-1, p)).value, -(z(3) * 3 / 4), 1e-50);
  CHECK_THROWS_AS(polylog(2, HPReal(2, p)), DomainError);
  CHECK_THROWS_AS(polylog(1, half), DomainError);
}

TEST_CASE("I(N) by quadrature") {
  HPReal l2 = HPReal::log2(Precision());
  check_close(I_quad(1).value, pi() / 2 * l2, 1e-45);
  check_close(I_quad(2).value, pow(pi(), 2) / 4 * l2 - z(3) * 7 / 8, 1e-45);
  HPReal i6 = pow(pi(), 6) / 64 * l2 - pow(pi(), 4) * z(3) * 45 / 128 + pow(pi(), 2) * z(5) * 675 / 128 -
              z(7) * 5715 / 256;
  check_close(I_quad(6).value, i6, 1e-45);
}

TEST_CASE("J(n) pi^(n+1) = I(n)") {
  for (int n = 1; n <= 8; ++n) {
    QuadratureResult j = j_cot(n);
    QuadratureResult i = I_quad(n);
    CAPTURE(n);
    EvalResult lhs = scale(j, pow(pi(), n + 1));
    check_within_bounds(lhs, i, 1e-45);
  }
  check_close(j_cot(1).value, HPReal::log2(Precision()) / (pi() * 2), 1e-45);
}

TEST_CASE("K(N) formula") {
  for (int n = 1; n <= 6; ++n) {
    EvalResult expect = scale(zeta_single(n + 1),
                              Rational(factorial(n) * ((mpz_class(1) << (n + 1)) - 1), mpz_class(1) << (2 * n)));
    CAPTURE(n);
    check_within_bounds(k_arctanh(n), expect, 1e-45);
  }
}

TEST_CASE("t kernel") {
  check_close(t_kernel_quad(2).value, dec("0.002109185"), 1e-9);
  check_close(t_kernel_quad(3).value, dec("0.00005499616"), 1e-11);
  check_within_bounds(t_kernel_quad(1), mtv_series(MultiIndex{3, 2}, 100000));
}

TEST_CASE("log-polylog kernels") {
  HPReal r1 = -(pow(pi(), 4) * z(3) * 3 / 64) + pow(pi(), 2) * z(5) * 5 / 16 - z(7) * 489 / 128;
  check_close(logpolylog_kernel(3, 4, 1, -1).value, r1, 1e-45);
  HPReal r4 = -(pow(pi(), 4) * z(5) * 7 / 192) - pow(pi(), 2) * z(7) * 35 / 64 - z(9) * 477 / 32;
  check_close(logpolylog_kernel(4, 5, -1, -1).value, r4, 1e-45);
  HPReal g = beta_fn(2).value;
  HPReal r5 = g * pow(pi(), 3) / 16 - pow(pi(), 2) * z(3) * 3 / 32 + z(5) * 331 / 256;
  check_close(logpolylog_kernel(2, 3, 1, 1).value, r5, 1e-45);
  CHECK_THROWS_AS(logpolylog_kernel(2, 1, 1, -1), DomainError);
  CHECK_THROWS_AS(logpolylog_kernel(1, 3, 1, -1), DomainError);
}

TEST_CASE("log-sine route") {
  check_close(logsine_check(1).value, pi() / 2 * HPReal::log2(Precision()), 1e-45);
  for (int n : {2, 4}) {
    CAPTURE(n);
    check_within_bounds(logsine_check(n), I_quad(n), 1e-45);
  }
}

TEST_CASE("quadrature at 30 digits") {
  Precision p(30);
  QuadratureResult a = I_quad(3, p);
  QuadratureResult b = I_quad(3);
  CHECK(abs(a.value - b.value) <= a.error_bound);
}
