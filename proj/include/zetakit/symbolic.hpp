#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetakit/eval_result.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

enum class BasisKind { Pi, Log2, ZetaOdd, BetaEven, Psi3Quarter };

// One generator of the graded constant ring. ZetaOdd carries an odd argument
// >= 3, BetaEven an even argument >= 2 (beta(2) is Catalan's constant).
struct BasisConstant {
  BasisKind kind;
  int arg = 0;

  static BasisConstant pi() { return {BasisKind::Pi, 0}; }
  static BasisConstant log2() { return {BasisKind::Log2, 0}; }
  static BasisConstant zeta_odd(int m);
  static BasisConstant beta_even(int m);
  static BasisConstant psi3_quarter() { return {BasisKind::Psi3Quarter, 0}; }

  int weight() const;
  std::string name() const;

  auto operator<=>(const BasisConstant&) const = default;
};

using Monomial = std::map<BasisConstant, int>;

int monomial_weight(const Monomial& m);

// Finite sum of rational multiples of monomials, kept normalized: no zero
// coefficients, no repeated monomials.
class SymbolicExpr {
 public:
  SymbolicExpr() = default;

  static SymbolicExpr constant(const Rational& c);
  static SymbolicExpr basis(BasisConstant b, int power = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  // Common weight of all monomials; nullopt for mixed weights or for zero.
  std::optional<int> weight() const;
  bool homogeneous() const;

  // e.g. "1/2*pi^2*zeta3 - 11/2*zeta5"
  std::string to_text() const;
  // [{"coefficient": "1/2", "monomial": {"pi": 2, "zeta3": 1}, "weight": 5}, ...]
  nlohmann::json to_json() const;

  SymbolicExpr& operator+=(const SymbolicExpr& o);
  friend SymbolicExpr operator+(SymbolicExpr a, const SymbolicExpr& b) { return a += b; }
  friend SymbolicExpr operator-(SymbolicExpr a, const SymbolicExpr& b) { return a += scale(b, Rational(-1)); }
  friend SymbolicExpr operator*(const SymbolicExpr& a, const SymbolicExpr& b) { return multiply(a, b); }
  friend bool operator==(const SymbolicExpr& a, const SymbolicExpr& b) { return a.terms_ == b.terms_; }

  friend SymbolicExpr add(const SymbolicExpr& a, const SymbolicExpr& b) { return a + b; }
  friend SymbolicExpr scale(const SymbolicExpr& a, const Rational& c);
  friend SymbolicExpr multiply(const SymbolicExpr& a, const SymbolicExpr& b);

  // Re-normalizes; a no-op on any expression built through this interface.
  SymbolicExpr normalized() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Building blocks. Even zeta values become rational multiples of pi^2k, odd
// beta values rational multiples of pi^(2k+1), eta(1) is log 2.
SymbolicExpr sym_pi(int power = 1);
SymbolicExpr sym_log2();
SymbolicExpr sym_zeta(int s);
SymbolicExpr sym_eta(int m);
SymbolicExpr sym_t(int m);  // (1 - 2^-m) zeta(m)
SymbolicExpr sym_beta(int m);
SymbolicExpr sym_psi3_quarter();

enum class FormulaName {
  I_closed,
  T322,
  Z322,
  E211,
  ODiag,
  BDiag,
  OReflect,
  BReflect,
  OTable,
  B23,
  T2s1Conjecture,
  HoffmanT,
  Zeta311,
};

struct FormulaId {
  FormulaName name;
  std::vector<int> params;
};

std::string formula_label(const FormulaId& f);

// Exact expression of a closed form. Parameters:
//   I_closed(N), T322(N), Z322(N), E211(N), T2s1Conjecture(N), ODiag(q), BDiag(q),
//   OTable(p,q), OReflect(p,q) -> O(q,p) from the table entry O(p,q),
//   BReflect(p,q) -> B(q,p) from B(p,q) with p = q or (p,q) = (2,3),
//   HoffmanT(k) for t(2,1), t(2,2,1), t(2,2,2,1) with k = 1, 2, 3,
//   B23(), Zeta311().
SymbolicExpr build(const FormulaId& f);

// The weight the corresponding theorem predicts.
int expected_weight(const FormulaId& f);

EvalResult eval_symbolic(const SymbolicExpr& e, Precision prec = Precision());

// homogeneous of exactly this weight (the zero expression qualifies)
bool weight_check(const SymbolicExpr& e, int expected);

}  // namespace zetakit
