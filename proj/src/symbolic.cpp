#include "zetakit/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetakit/closed_forms.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"

namespace zetakit {

BasisConstant BasisConstant::zeta_odd(int m) {
  if (m < 3 || m % 2 == 0) throw PreconditionError("zeta basis element needs an odd argument >= 3");
  return {BasisKind::ZetaOdd, m};
}

BasisConstant BasisConstant::beta_even(int m) {
  if (m < 2 || m % 2 == 1) throw PreconditionError("beta basis element needs an even argument >= 2");
  return {BasisKind::BetaEven, m};
}

int BasisConstant::weight() const {
  switch (kind) {
    case BasisKind::Pi:
    case BasisKind::Log2:
      return 1;
    case BasisKind::ZetaOdd:
    case BasisKind::BetaEven:
      return arg;
    case BasisKind::Psi3Quarter:
      return 4;
  }
  return 0;
}

std::string BasisConstant::name() const {
  switch (kind) {
    case BasisKind::Pi:
      return "pi";
    case BasisKind::Log2:
      return "log2";
    case BasisKind::ZetaOdd:
      return "zeta" + std::to_string(arg);
    case BasisKind::BetaEven:
      return "beta" + std::to_string(arg);
    case BasisKind::Psi3Quarter:
      return "psi3_quarter";
  }
  return "?";
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& [b, e] : m) w += b.weight() * e;
  return w;
}

void SymbolicExpr::add_term(const Monomial& m, const Rational& c) {
  Monomial key;
  for (const auto& [b, e] : m)
    if (e != 0) key.emplace(b, e);
  Rational v = c;
  v.canonicalize();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (v != 0) terms_.emplace(std::move(key), v);
    return;
  }
  it->second += v;
  if (it->second == 0) terms_.erase(it);
}

SymbolicExpr SymbolicExpr::constant(const Rational& c) {
  SymbolicExpr e;
  e.add_term({}, c);
  return e;
}

SymbolicExpr SymbolicExpr::basis(BasisConstant b, int power) {
  SymbolicExpr e;
  e.add_term({{b, power}}, Rational(1));
  return e;
}

Rational SymbolicExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SymbolicExpr::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = monomial_weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_weight(m) != w) return std::nullopt;
  return w;
}

bool SymbolicExpr::homogeneous() const { return terms_.empty() || weight().has_value(); }

SymbolicExpr& SymbolicExpr::operator+=(const SymbolicExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymbolicExpr scale(const SymbolicExpr& a, const Rational& c) {
  SymbolicExpr r;
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms_) r.add_term(m, v * c);
  return r;
}

SymbolicExpr multiply(const SymbolicExpr& a, const SymbolicExpr& b) {
  SymbolicExpr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [base, e] : mb) m[base] += e;
      r.add_term(m, ca * cb);
    }
  return r;
}

SymbolicExpr SymbolicExpr::normalized() const {
  SymbolicExpr r;
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

namespace {

int pi_exponent(const Monomial& m) {
  auto it = m.find(BasisConstant::pi());
  return it == m.end() ? 0 : it->second;
}

// display order: descending power of pi, then the canonical order
std::vector<std::pair<Monomial, Rational>> display_order(const std::map<Monomial, Rational>& terms) {
  std::vector<std::pair<Monomial, Rational>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return pi_exponent(a.first) > pi_exponent(b.first); });
  return v;
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& [b, e] : m) {
    if (!s.empty()) s += "*";
    s += b.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string SymbolicExpr::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(terms_)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

nlohmann::json SymbolicExpr::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : display_order(terms_)) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [b, e] : m) mono[b.name()] = e;
    terms.push_back({{"coefficient", to_string(c)}, {"monomial", mono}, {"weight", monomial_weight(m)}});
  }
  nlohmann::json j = {{"text", to_text()}, {"terms", terms}};
  auto w = weight();
  j["weight"] = w ? nlohmann::json(*w) : nlohmann::json(nullptr);
  return j;
}

SymbolicExpr sym_pi(int power) { return SymbolicExpr::basis(BasisConstant::pi(), power); }

SymbolicExpr sym_log2() { return SymbolicExpr::basis(BasisConstant::log2()); }

SymbolicExpr sym_zeta(int s) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  if (s % 2 == 0) return scale(sym_pi(s), even_zeta_pi_coefficient(static_cast<unsigned>(s / 2)));
  return SymbolicExpr::basis(BasisConstant::zeta_odd(s));
}

SymbolicExpr sym_eta(int m) {
  if (m < 1) throw DomainError("eta(m) needs m >= 1");
  if (m == 1) return sym_log2();
  return scale(sym_zeta(m), one_minus_pow2(m - 1));
}

SymbolicExpr sym_t(int m) {
  if (m < 2) throw DomainError("t(m) needs m >= 2");
  return scale(sym_zeta(m), one_minus_pow2(m));
}

SymbolicExpr sym_beta(int m) {
  if (m < 1) throw DomainError("beta(m) needs m >= 1");
  if (m % 2 == 1) return scale(sym_pi(m), odd_beta_pi_coefficient(static_cast<unsigned>((m - 1) / 2)));
  return SymbolicExpr::basis(BasisConstant::beta_even(m));
}

SymbolicExpr sym_psi3_quarter() { return SymbolicExpr::basis(BasisConstant::psi3_quarter()); }

namespace {

Rational pow2(int k) {
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return Rational(r);
}

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

Rational sgn(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

void need(const FormulaId& f, std::size_t n) {
  if (f.params.size() != n)
    throw PreconditionError(formula_label(f) + " expects " + std::to_string(n) + " parameter(s)");
}

SymbolicExpr sym_i(int n) {
  if (n < 1) throw DomainError("I(N) needs N >= 1");
  SymbolicExpr acc;
  const int m = n / 2;
  const int last = n % 2 == 1 ? m : m - 1;
  for (int j = 0; j <= last; ++j) acc += scale(sym_pi(n - 2 * j) * sym_eta(2 * j + 1), sgn(j) / fact(n - 2 * j));
  if (n % 2 == 0) acc += scale(sym_zeta(n + 1), sgn(m) * 2 * one_minus_pow2(n + 1));
  return scale(acc, fact(n) / pow2(n));
}

void require_log2_free(const SymbolicExpr& e, const std::string& what) {
  for (const auto& [m, c] : e.terms())
    if (m.count(BasisConstant::log2()))
      throw std::logic_error(what + ": log 2 failed to cancel (" + e.to_text() + ")");
}

SymbolicExpr o_primary(int p, int q) {
  for (const auto& e : o_table_primary()) {
    if (e.p != p || e.q != q) continue;
    SymbolicExpr acc;
    for (const auto& t : e.terms) {
      SymbolicExpr m = sym_pi(t.pi_power);
      for (int z : t.zetas) m = m * sym_zeta(z);
      acc += scale(m, t.coefficient);
    }
    return acc;
  }
  throw NotInTableError("O(" + std::to_string(p) + "," + std::to_string(q) + ") is not in the table");
}

SymbolicExpr b23() {
  return scale(sym_zeta(5), Rational(31, 64)) - scale(sym_pi(2) * sym_zeta(3), Rational(9, 256)) +
         scale(sym_beta(2) * sym_pi(3), Rational(1, 32));
}

SymbolicExpr b_known(int p, int q) {
  if (p == q) return build({FormulaName::BDiag, {q}});
  if (p == 2 && q == 3) return b23();
  throw NotInTableError("B(" + std::to_string(p) + "," + std::to_string(q) + ") has no closed form here");
}

}  // namespace

std::string formula_label(const FormulaId& f) {
  static const char* names[] = {"I_closed", "T322",     "Z322",      "E211",           "ODiag",
                                "BDiag",    "OReflect", "BReflect",  "OTable",         "B23",
                                "T2s1Conjecture",       "HoffmanT",  "Zeta311"};
  std::string s = names[static_cast<int>(f.name)];
  s += "(";
  for (std::size_t i = 0; i < f.params.size(); ++i) s += (i ? "," : "") + std::to_string(f.params[i]);
  return s + ")";
}

SymbolicExpr build(const FormulaId& f) {
  switch (f.name) {
    case FormulaName::I_closed:
      need(f, 1);
      return sym_i(f.params[0]);
    case FormulaName::T322: {
      need(f, 1);
      const int n = f.params[0];
      if (n < 1) throw DomainError("t(3,{2}^N) needs N >= 1");
      // (pi/2 I(2N+1) - I(2N+2)) / (2N+1)!
      SymbolicExpr r = scale(scale(sym_pi() * sym_i(2 * n + 1), Rational(1, 2)) - sym_i(2 * n + 2),
                             Rational(1) / fact(2 * n + 1));
      require_log2_free(r, "t(3,{2}^N)");
      return r;
    }
    case FormulaName::Z322: {
      need(f, 1);
      const int n = f.params[0];
      if (n < 0) throw DomainError("zeta(3,{2}^N) needs N >= 0");
      // 2^(2N+4)/(2N+2)! (I(2N+2)/2 - I(2N+3)/pi)
      SymbolicExpr r = scale(scale(sym_i(2 * n + 2), Rational(1, 2)) - sym_pi(-1) * sym_i(2 * n + 3),
                             pow2(2 * n + 4) / fact(2 * n + 2));
      require_log2_free(r, "zeta(3,{2}^N)");
      return r;
    }
    case FormulaName::E211: {
      need(f, 1);
      const int n = f.params[0];
      if (n < 1) throw DomainError("mu(2,{1}^(N-1)) needs N >= 1");
      return scale(sym_zeta(n + 1), (pow2(n + 1) - 1) / pow2(2 * n));
    }
    case FormulaName::ODiag: {
      need(f, 1);
      const int q = f.params[0];
      if (q < 2) throw DomainError("divergent odd Euler sum: q must be >= 2");
      return scale(sym_t(2 * q) + sym_t(q) * sym_t(q), Rational(1, 2));
    }
    case FormulaName::BDiag: {
      need(f, 1);
      const int q = f.params[0];
      if (q < 2) throw DomainError("divergent odd Euler sum: q must be >= 2");
      return scale(sym_t(2 * q) + sym_beta(q) * sym_beta(q), Rational(1, 2));
    }
    case FormulaName::OTable: {
      need(f, 2);
      const int p = f.params[0], q = f.params[1];
      for (const auto& e : o_table_primary()) {
        if (e.p == p && e.q == q) return o_primary(p, q);
        if (e.p == q && e.q == p) return sym_t(p) * sym_t(q) + sym_t(p + q) - o_primary(q, p);
      }
      throw NotInTableError("O(" + std::to_string(p) + "," + std::to_string(q) + ") is not in the table");
    }
    case FormulaName::OReflect: {
      need(f, 2);
      const int p = f.params[0], q = f.params[1];
      return sym_t(p) * sym_t(q) + sym_t(p + q) - o_primary(p, q);
    }
    case FormulaName::BReflect: {
      need(f, 2);
      const int p = f.params[0], q = f.params[1];
      return sym_beta(p) * sym_beta(q) + sym_t(p + q) - b_known(p, q);
    }
    case FormulaName::B23:
      need(f, 0);
      return b23();
    case FormulaName::T2s1Conjecture: {
      need(f, 1);
      const int n = f.params[0];
      if (n < 1) throw DomainError("t({2}^N,1) needs N >= 1");
      return scale(sym_i(2 * n), Rational(1) / fact(2 * n));
    }
    case FormulaName::HoffmanT: {
      need(f, 1);
      switch (f.params[0]) {
        case 1:
          return sym_t(2) * sym_log2() - scale(sym_t(3), Rational(1, 2));
        case 2:
          return scale(sym_t(5), Rational(1, 8)) + scale(sym_t(2) * sym_t(3), Rational(-3, 14)) +
                 scale(sym_t(4) * sym_log2(), Rational(1, 4));
        case 3:
          return scale(sym_t(7), Rational(-1, 32)) + scale(sym_t(3) * sym_t(4), Rational(-3, 56)) +
                 scale(sym_t(2) * sym_t(5), Rational(15, 248)) + scale(sym_t(6) * sym_log2(), Rational(1, 48));
      }
      throw PreconditionError("HoffmanT(k) needs k in {1, 2, 3}");
    }
    case FormulaName::Zeta311:
      need(f, 0);
      return scale(sym_zeta(5), Rational(2)) - sym_zeta(2) * sym_zeta(3);
  }
  throw PreconditionError("unknown formula");
}

int expected_weight(const FormulaId& f) {
  auto arg = [&](std::size_t i) {
    if (i >= f.params.size()) throw PreconditionError(formula_label(f) + ": missing parameter");
    return f.params[i];
  };
  switch (f.name) {
    case FormulaName::I_closed:
    case FormulaName::E211:
      return arg(0) + 1;
    case FormulaName::T322:
    case FormulaName::Z322:
      return 2 * arg(0) + 3;
    case FormulaName::ODiag:
    case FormulaName::BDiag:
      return 2 * arg(0);
    case FormulaName::OReflect:
    case FormulaName::BReflect:
    case FormulaName::OTable:
      return arg(0) + arg(1);
    case FormulaName::B23:
    case FormulaName::Zeta311:
      return 5;
    case FormulaName::T2s1Conjecture:
      return 2 * arg(0) + 1;
    case FormulaName::HoffmanT:
      return 2 * arg(0) + 1;
  }
  throw PreconditionError("unknown formula");
}

namespace {

EvalResult eval_basis(const BasisConstant& b, int power, Precision prec) {
  if (b.kind == BasisKind::Pi) {
    EvalResult r = pi_power(power, prec);
    if (power < 0) r.error_bound = rounding_allowance(r.value, -power + 2);
    return r;
  }
  if (power < 1) throw PreconditionError("negative powers are only supported for pi");
  EvalResult base = [&] {
    switch (b.kind) {
      case BasisKind::Log2:
        return log2_constant(prec);
      case BasisKind::ZetaOdd:
        return zeta_single(b.arg, prec);
      case BasisKind::BetaEven:
        return beta_fn(b.arg, prec);
      case BasisKind::Psi3Quarter:
        return psi3_quarter(prec);
      default:
        throw PreconditionError("unknown basis constant");
    }
  }();
  EvalResult r = base;
  for (int i = 1; i < power; ++i) r = r * base;
  return r;
}

}  // namespace

EvalResult eval_symbolic(const SymbolicExpr& e, Precision prec) {
  EvalResult acc(HPReal(prec), HPReal::with_bits(kBoundBits), Method::Symbolic, true);
  for (const auto& [m, c] : e.terms()) {
    EvalResult term = EvalResult::exact(HPReal(1, prec));
    for (const auto& [b, power] : m) term = term * eval_basis(b, power, prec);
    acc = acc + scale(term, c);
  }
  acc.method = Method::Symbolic;
  return acc;
}

bool weight_check(const SymbolicExpr& e, int expected) {
  if (e.is_zero()) return true;
  auto w = e.weight();
  return w && *w == expected;
}

}  // namespace zetakit
