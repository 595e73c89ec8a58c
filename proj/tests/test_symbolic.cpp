#include <random>

#include "test_support.hpp"
#include "zetakit/closed_forms.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"
#include "zetakit/symbolic.hpp"

using namespace zetakit;
using zetakit::testing::check_close;
using zetakit::testing::check_within_bounds;

namespace {

Monomial mono(std::initializer_list<std::pair<const BasisConstant, int>> l) { return Monomial(l); }
const BasisConstant kPi = BasisConstant::pi();
BasisConstant z(int m) { return BasisConstant::zeta_odd(m); }

}  // namespace

TEST_CASE("zeta(3,2) and t(3,2,2)") {
  SymbolicExpr z1 = build({FormulaName::Z322, {1}});
  CHECK(z1.to_text() == "1/2*pi^2*zeta3 - 11/2*zeta5");
  CHECK(z1.coefficient(mono({{kPi, 2}, {z(3), 1}})) == Rational(1, 2));
  CHECK(z1.coefficient(mono({{z(5), 1}})) == Rational(-11, 2));

  SymbolicExpr t2 = build({FormulaName::T322, {2}});
  CHECK(t2.to_text() == "1/1024*pi^4*zeta3 - 15/512*pi^2*zeta5 + 381/2048*zeta7");

  // N = 3: the last coefficient follows the theorem's (-1)^N sign
  SymbolicExpr t3 = build({FormulaName::T322, {3}});
  CHECK(t3.coefficient(mono({{z(9), 1}})) == Rational(-511, 8192));
  CHECK(t3.coefficient(mono({{kPi, 6}, {z(3), 1}})) == Rational(1, 122880));

  SymbolicExpr z3 = build({FormulaName::Z322, {3}});
  CHECK(z3.to_text() == "1/1680*pi^6*zeta3 - 1/16*pi^4*zeta5 + 63/32*pi^2*zeta7 - 223/16*zeta9");
}

TEST_CASE("E211 and small identities") {
  CHECK(build({FormulaName::E211, {3}}).to_text() == "1/384*pi^4");
  CHECK(build({FormulaName::E211, {1}}).to_text() == "1/8*pi^2");
  CHECK(build({FormulaName::Zeta311, {}}).to_text() == "-1/6*pi^2*zeta3 + 2*zeta5");
  CHECK(build({FormulaName::I_closed, {1}}).to_text() == "1/2*pi*log2");
  CHECK(build({FormulaName::ODiag, {2}}).to_text() == "5/384*pi^4");  // (pi^4/96 + pi^4/64)/2
  CHECK(build({FormulaName::BDiag, {3}}).to_text() == "31/30720*pi^6");
  CHECK(sym_beta(1).to_text() == "1/4*pi");
  CHECK(sym_eta(2).to_text() == "1/12*pi^2");
}

TEST_CASE("reflected table entries") {
  CHECK(build({FormulaName::OTable, {4, 3}}).coefficient(mono({{kPi, 4}, {z(3), 1}})) == Rational(1, 768));
  CHECK(build({FormulaName::OTable, {5, 4}}).to_text() == "13/1536*pi^4*zeta5 - 35/1024*pi^2*zeta7 + 511/1024*zeta9");
  CHECK(build({FormulaName::OTable, {7, 6}}).to_text() ==
        "1/1024*pi^6*zeta7 - 7/4096*pi^4*zeta9 - 231/8192*pi^2*zeta11 + 8191/16384*zeta13");
  CHECK(build({FormulaName::OReflect, {3, 4}}) == build({FormulaName::OTable, {4, 3}}));
  // B(3,2) from B(2,3)
  SymbolicExpr b32 = build({FormulaName::BReflect, {2, 3}});
  CHECK(b32 + build({FormulaName::B23, {}}) == sym_beta(2) * sym_beta(3) + sym_t(5));
  CHECK_THROWS_AS(build({FormulaName::OTable, {2, 5}}), NotInTableError);
  CHECK_THROWS_AS(build({FormulaName::BReflect, {2, 5}}), NotInTableError);
  CHECK_THROWS_AS(build({FormulaName::E211, {1, 2}}), PreconditionError);
}

TEST_CASE("weights are homogeneous") {
  std::vector<FormulaId> ids;
  for (int n = 1; n <= 6; ++n) {
    ids.push_back({FormulaName::I_closed, {n}});
    ids.push_back({FormulaName::T322, {n}});
    ids.push_back({FormulaName::Z322, {n}});
    ids.push_back({FormulaName::E211, {n}});
    ids.push_back({FormulaName::T2s1Conjecture, {n}});
  }
  for (int q = 2; q <= 7; ++q) ids.push_back({FormulaName::ODiag, {q}}), ids.push_back({FormulaName::BDiag, {q}});
  for (const auto& e : o_table_primary()) {
    ids.push_back({FormulaName::OTable, {e.p, e.q}});
    ids.push_back({FormulaName::OTable, {e.q, e.p}});
  }
  for (int k = 1; k <= 3; ++k) ids.push_back({FormulaName::HoffmanT, {k}});
  ids.push_back({FormulaName::B23, {}});
  ids.push_back({FormulaName::BReflect, {2, 3}});
  ids.push_back({FormulaName::Zeta311, {}});
  for (const auto& id : ids) {
    CAPTURE(formula_label(id));
    SymbolicExpr e = build(id);
    CHECK(!e.is_zero());
    CHECK(weight_check(e, expected_weight(id)));
    CHECK_FALSE(weight_check(e, expected_weight(id) + 1));
  }
  CHECK_FALSE((sym_zeta(3) + sym_zeta(5)).homogeneous());
  CHECK(weight_check(SymbolicExpr(), 17));
  CHECK(sym_psi3_quarter().weight() == 4);
}

TEST_CASE("normalization") {
  SymbolicExpr a = sym_zeta(3) * sym_pi(2) + scale(sym_zeta(5), Rational(3, 4));
  SymbolicExpr cancelled = a - a;
  CHECK(cancelled.is_zero());
  CHECK(cancelled.to_text() == "0");
  CHECK(a.normalized() == a);
  CHECK(a.normalized().normalized() == a.normalized());
  CHECK((sym_pi(2) * sym_pi(-2)).to_text() == "1");
  CHECK(scale(a, Rational(0)).is_zero());
  // coefficients come out canonical even from uncanonical input
  CHECK(SymbolicExpr::constant(Rational(2, 4)).to_text() == "1/2");

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), pick(0, 3);
  const std::vector<SymbolicExpr> atoms = {sym_pi(), sym_zeta(3), sym_log2(), sym_beta(2)};
  for (int trial = 0; trial < 50; ++trial) {
    SymbolicExpr x, y;
    for (int i = 0; i < 4; ++i) {
      x += scale(atoms[pick(rng)] * atoms[pick(rng)], Rational(coef(rng), 1 + pick(rng)));
      y += scale(atoms[pick(rng)], Rational(coef(rng), 1 + pick(rng)));
    }
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) - y == x);
    CHECK(x * (y + x) == x * y + x * x);
    SymbolicExpr xy = x * y;
    for (const auto& [m, c] : xy.terms()) CHECK(c != 0);
  }
}

TEST_CASE("eval agrees with the numeric closed forms") {
  Precision p(60);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    check_within_bounds(eval_symbolic(build({FormulaName::I_closed, {n}}), p), i_closed(n, p));
    check_within_bounds(eval_symbolic(build({FormulaName::T322, {n}}), p), t_closed(n, p));
    check_within_bounds(eval_symbolic(build({FormulaName::Z322, {n}}), p), z_closed(n, p));
    check_within_bounds(eval_symbolic(build({FormulaName::E211, {n}}), p), mu_closed(n, p));
    check_within_bounds(eval_symbolic(build({FormulaName::T2s1Conjecture, {n}}), p), t2s1_conjecture(n, p));
  }
  for (int q = 2; q <= 7; ++q) {
    check_within_bounds(eval_symbolic(build({FormulaName::ODiag, {q}}), p), o_diag(q, p));
    check_within_bounds(eval_symbolic(build({FormulaName::BDiag, {q}}), p), b_diag(q, p));
  }
  for (const auto& e : o_table_primary()) {
    check_within_bounds(eval_symbolic(build({FormulaName::OTable, {e.p, e.q}}), p), o_table(e.p, e.q, p));
    check_within_bounds(eval_symbolic(build({FormulaName::OTable, {e.q, e.p}}), p), o_table(e.q, e.p, p));
  }
  check_within_bounds(eval_symbolic(build({FormulaName::B23, {}}), p), b23_closed(p));
  check_within_bounds(eval_symbolic(build({FormulaName::HoffmanT, {2}}), p), hoffman_t(HoffmanKind::T221, p));
  check_within_bounds(eval_symbolic(build({FormulaName::Zeta311, {}}), p), zeta311(p));
  check_within_bounds(eval_symbolic(sym_psi3_quarter(), p), psi3_quarter(p));
  check_within_bounds(eval_symbolic(sym_beta(5), p), beta_fn(5, p));
  check_within_bounds(eval_symbolic(sym_zeta(10), p), zeta_single(10, p));

  EvalResult r = eval_symbolic(build({FormulaName::Z322, {2}}), p);
  CHECK(r.method == Method::Symbolic);
  CHECK(r.rigorous);
  check_close(r.value, zetakit::testing::dec("0.02912562", p), 1e-8);
}

TEST_CASE("json export") {
  nlohmann::json j = build({FormulaName::Z322, {1}}).to_json();
  CHECK(j["weight"] == 5);
  CHECK(j["text"] == "1/2*pi^2*zeta3 - 11/2*zeta5");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coefficient"] == "1/2");
  CHECK(j["terms"][0]["monomial"]["pi"] == 2);
  CHECK(j["terms"][1]["coefficient"] == "-11/2");
  CHECK((sym_zeta(3) + sym_zeta(5)).to_json()["weight"].is_null());
}
