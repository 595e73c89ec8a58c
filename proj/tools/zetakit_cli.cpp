#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetakit/closed_forms.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"
#include "zetakit/nested_series.hpp"
#include "zetakit/power_series.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/symbolic.hpp"
#include "zetakit/verify.hpp"

using namespace zetakit;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct Options {
  int prec = 50;
  long cutoff = 1000000;
  std::string method = "all";
  bool json = false;
  bool symbolic = false;
  bool strict = false;
  std::string report;
};

// One way of computing the requested quantity.
struct Route {
  std::string method;
  std::function<EvalResult()> eval;
  std::optional<SymbolicExpr> symbolic;
  bool conjectural = false;
};

struct Request {
  std::string quantity;
  std::vector<int> params;
  std::vector<Route> routes;
};

Rational pow2(int k) {
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return Rational(r);
}

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

bool all_equal(const std::vector<int>& v, std::size_t from, std::size_t to, int x) {
  for (std::size_t i = from; i < to; ++i)
    if (v[i] != x) return false;
  return true;
}

// (3, {2}^N)
std::optional<int> three_twos(const std::vector<int>& v) {
  if (v.size() >= 2 && v[0] == 3 && all_equal(v, 1, v.size(), 2)) return static_cast<int>(v.size()) - 1;
  return std::nullopt;
}

// (2, {1}^(n-1)), n >= 2
std::optional<int> two_ones(const std::vector<int>& v) {
  if (v.size() >= 2 && v[0] == 2 && all_equal(v, 1, v.size(), 1)) return static_cast<int>(v.size());
  return std::nullopt;
}

// ({2}^N, 1)
std::optional<int> twos_one(const std::vector<int>& v) {
  if (v.size() >= 2 && v.back() == 1 && all_equal(v, 0, v.size() - 1, 2)) return static_cast<int>(v.size()) - 1;
  return std::nullopt;
}

Route symbolic_route(SymbolicExpr e, Precision p, bool conjectural = false) {
  return {"symbolic", [e, p, conjectural] {
            EvalResult r = eval_symbolic(e, p);
            r.conjectural = conjectural;
            return r;
          },
          e, conjectural};
}

void need_params(const std::vector<int>& v, std::size_t n, const std::string& what) {
  if (v.size() != n) throw PreconditionError(what + " takes " + std::to_string(n) + " integer parameter(s)");
}

void need_admissible(const std::vector<int>& v) {
  if (v.empty()) throw PreconditionError("give at least one index");
  for (int i : v)
    if (i < 1) throw PreconditionError("indices must be positive");
}

Request zeta_request(const std::vector<int>& v, const Options& o) {
  need_admissible(v);
  const Precision p(o.prec);
  const MultiIndex idx(v);
  Request r{"zeta", v, {}};
  if (v.size() == 1) {
    r.routes.push_back({"closed", [=] { return zeta_single(v[0], p); }});
    r.routes.push_back(symbolic_route(sym_zeta(v[0]), p));
  } else if (auto n = three_twos(v)) {
    const int N = *n;
    r.routes.push_back({"closed", [=] { return z_closed(N, p); }});
    r.routes.push_back({"quadrature", [=] {
                          EvalResult half = scale(I_quad(2 * N + 2, p), Rational(1, 2));
                          EvalResult third = scale(I_quad(2 * N + 3, p), HPReal(1, p) / HPReal::pi(p));
                          EvalResult out = scale(half - third, pow2(2 * N + 4) / fact(2 * N + 2));
                          out.method = Method::Quadrature;
                          return out;
                        }});
    r.routes.push_back(symbolic_route(build({FormulaName::Z322, {N}}), p));
  } else if (auto n = two_ones(v)) {
    const int N = *n;
    r.routes.push_back({"closed", [=] { return zeta_single(N + 1, p); }});
    r.routes.push_back(symbolic_route(sym_zeta(N + 1), p));
  } else if (v == std::vector<int>{3, 1, 1}) {
    r.routes.push_back({"closed", [=] { return zeta311(p); }});
    r.routes.push_back(symbolic_route(build({FormulaName::Zeta311, {}}), p));
  }
  r.routes.push_back({"series", [=, c = o.cutoff] { return mzv_series(idx, c, p); }});
  return r;
}

Request tvalue_request(const std::vector<int>& v, const Options& o) {
  need_admissible(v);
  const Precision p(o.prec);
  const MultiIndex idx(v);
  Request r{"tvalue", v, {}};
  if (v.size() == 1) {
    r.routes.push_back({"closed", [=] { return t_single(v[0], p); }});
    r.routes.push_back(symbolic_route(sym_t(v[0]), p));
  } else if (auto n = three_twos(v)) {
    const int N = *n;
    r.routes.push_back({"closed", [=] { return t_closed(N, p); }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(t_kernel_quad(N, p)); }});
    r.routes.push_back(symbolic_route(build({FormulaName::T322, {N}}), p));
  } else if (auto n = twos_one(v)) {
    const int N = *n;
    if (N <= 3) {
      const HoffmanKind kinds[] = {HoffmanKind::T21, HoffmanKind::T221, HoffmanKind::T2221};
      r.routes.push_back({"closed", [=] { return hoffman_t(kinds[N - 1], p); }});
      r.routes.push_back(symbolic_route(build({FormulaName::HoffmanT, {N}}), p));
    } else {
      r.routes.push_back({"closed", [=] { return t2s1_conjecture(N, p); }, std::nullopt, true});
      r.routes.push_back(symbolic_route(build({FormulaName::T2s1Conjecture, {N}}), p, true));
    }
    r.routes.push_back({"quadrature",
                        [=] {
                          EvalResult q = scale(I_quad(2 * N, p), Rational(1) / fact(2 * N));
                          q.conjectural = true;
                          return q;
                        },
                        std::nullopt, true});
  }
  r.routes.push_back({"series", [=, c = o.cutoff] { return mtv_series(idx, c, p); }});
  return r;
}

// mu and T share their shapes; T = 2^depth mu
Request mixed_request(const std::string& name, const std::vector<int>& v, const Options& o) {
  need_admissible(v);
  const Precision p(o.prec);
  const MultiIndex idx(v);
  const bool big = name == "bigT";
  const Rational f = big ? pow2(static_cast<int>(v.size())) : Rational(1);
  Request r{name, v, {}};
  std::optional<int> n = v == std::vector<int>{2} ? std::optional<int>(1) : two_ones(v);
  if (n) {
    const int N = *n;
    r.routes.push_back({"closed", [=] { return scale(mu_closed(N, p), f); }});
    r.routes.push_back({"quadrature", [=] {
                          EvalResult q = scale(k_arctanh(N, p), f / fact(N));
                          q.method = Method::Quadrature;
                          return q;
                        }});
    r.routes.push_back(symbolic_route(scale(build({FormulaName::E211, {N}}), f), p));
  }
  if (big)
    r.routes.push_back({"series", [=, c = o.cutoff] { return big_t_series(idx, c, p); }});
  else
    r.routes.push_back({"series", [=, c = o.cutoff] { return mu_series(idx, c, p); }});
  return r;
}

EvalResult kernel_value(int a, int b, int den, Precision p) {
  Rational c = Rational(b % 2 == 0 ? 1 : -1, 2) / fact(b - 1);
  EvalResult r = scale(logpolylog_kernel(a, b, -1, den, p) - logpolylog_kernel(a, b, 1, den, p), c);
  r.method = Method::Quadrature;
  return r;
}

Request oddsum_request(const std::string& kind, const std::vector<int>& v, const Options& o) {
  need_params(v, 2, "oddsum");
  const int a = v[0], b = v[1];
  if (a < 1 || b < 2) throw DomainError("odd Euler sums need p >= 1 and q >= 2");
  const Precision p(o.prec);
  Request r{"oddsum " + kind, v, {}};
  if (kind == "O") {
    if (a == b) {
      r.routes.push_back({"closed", [=] { return o_diag(b, p); }});
      r.routes.push_back(symbolic_route(build({FormulaName::ODiag, {b}}), p));
    } else {
      for (const auto& e : o_table_primary())
        if ((e.p == a && e.q == b) || (e.p == b && e.q == a)) {
          r.routes.push_back({"closed", [=] { return o_table(a, b, p); }});
          r.routes.push_back(symbolic_route(build({FormulaName::OTable, {a, b}}), p));
        }
    }
    if (a >= 2) r.routes.push_back({"quadrature", [=] { return kernel_value(a, b, -1, p); }});
    r.routes.push_back({"series", [=, c = o.cutoff] { return odd_O_series(a, b, c, p); }});
  } else if (kind == "B") {
    if (a == b) {
      r.routes.push_back({"closed", [=] { return b_diag(b, p); }});
      r.routes.push_back(symbolic_route(build({FormulaName::BDiag, {b}}), p));
    } else if (a == 2 && b == 3) {
      r.routes.push_back({"closed", [=] { return b23_closed(p); }});
      r.routes.push_back(symbolic_route(build({FormulaName::B23, {}}), p));
    } else if (a == 3 && b == 2) {
      r.routes.push_back({"closed", [=] { return b_reflect(2, 3, b23_closed(p), p); }});
      r.routes.push_back(symbolic_route(build({FormulaName::BReflect, {2, 3}}), p));
    }
    if (a >= 2) r.routes.push_back({"quadrature", [=] { return kernel_value(a, b, 1, p); }});
    r.routes.push_back({"series", [=, c = o.cutoff] { return odd_B_series(a, b, c, p); }});
  } else {
    throw PreconditionError("oddsum --kind must be O or B");
  }
  return r;
}

Request eulersum_request(const std::vector<int>& v, const Options& o) {
  if (v.size() < 2) throw PreconditionError("eulersum takes p_1 ... p_k q");
  const Precision p(o.prec);
  std::vector<int> ps(v.begin(), v.end() - 1);
  const int q = v.back();
  if (q < 2) throw DomainError("Euler sums need q >= 2");
  Request r{"eulersum", v, {}};
  std::optional<SymbolicExpr> closed;
  if (ps.size() == 1 && ps[0] == 1) {
    // Euler: sum H_n/n^q = (1 + q/2) zeta(q+1) - 1/2 sum_{j=1}^{q-2} zeta(j+1) zeta(q-j)
    SymbolicExpr e = scale(sym_zeta(q + 1), Rational(q + 2, 2));
    for (int j = 1; j <= q - 2; ++j) e = e - scale(sym_zeta(j + 1) * sym_zeta(q - j), Rational(1, 2));
    closed = e;
  } else if (ps.size() == 1 && ps[0] == q) {
    closed = scale(sym_zeta(q) * sym_zeta(q) + sym_zeta(2 * q), Rational(1, 2));
  }
  if (closed) {
    SymbolicExpr e = *closed;
    r.routes.push_back({"closed", [=] {
                          EvalResult x = eval_symbolic(e, p);
                          x.method = Method::ClosedForm;
                          return x;
                        }});
    r.routes.push_back(symbolic_route(e, p));
  }
  r.routes.push_back({"series", [=, c = o.cutoff] { return euler_H_series(ps, q, c, p); }});
  return r;
}

Request integral_request(const std::string& name, const std::vector<int>& v, const Options& o) {
  const Precision p(o.prec);
  Request r{"integral " + name, v, {}};
  if (name == "kernel") {
    need_params(v, 4, "integral kernel (p q sign_arg sign_den)");
    r.routes.push_back({"quadrature", [=] {
                          return static_cast<EvalResult>(logpolylog_kernel(v[0], v[1], v[2], v[3], p));
                        }});
    return r;
  }
  need_params(v, 1, "integral " + name);
  const int n = v[0];
  if (name == "I") {
    r.routes.push_back({"closed", [=] { return i_closed(n, p); }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(I_quad(n, p)); }});
    r.routes.push_back(symbolic_route(build({FormulaName::I_closed, {n}}), p));
  } else if (name == "J") {
    r.routes.push_back({"closed", [=] {
                          return scale(i_closed(n, p), HPReal(1, p) / pow(HPReal::pi(p), n + 1));
                        }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(j_cot(n, p)); }});
    r.routes.push_back(symbolic_route(build({FormulaName::I_closed, {n}}) * sym_pi(-(n + 1)), p));
  } else if (name == "K") {
    if (n < 1) throw DomainError("K(N) needs N >= 1");
    SymbolicExpr e = scale(build({FormulaName::E211, {n}}), fact(n));
    r.routes.push_back({"closed", [=] { return scale(mu_closed(n, p), fact(n)); }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(k_arctanh(n, p)); }});
    r.routes.push_back(symbolic_route(e, p));
  } else if (name == "logsine") {
    r.routes.push_back({"closed", [=] { return i_closed(n, p); }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(logsine_check(n, p)); }});
  } else if (name == "tkernel") {
    r.routes.push_back({"closed", [=] { return t_closed(n, p); }});
    r.routes.push_back({"quadrature", [=] { return static_cast<EvalResult>(t_kernel_quad(n, p)); }});
  } else {
    throw PreconditionError("unknown integral '" + name + "' (I, J, K, logsine, tkernel, kernel)");
  }
  return r;
}

Request cbsum_request(const std::vector<int>& v, const Options& o) {
  need_params(v, 1, "cbsum");
  const Precision p(o.prec);
  const int k = v[0];
  CentralBinomialKind kind;
  SymbolicExpr closed;
  if (k == 2) {
    kind = CentralBinomialKind::InverseSquare;
    closed = scale(sym_zeta(2), Rational(1, 3));
  } else if (k == 3) {
    kind = CentralBinomialKind::AltInverseCube;
    closed = scale(sym_zeta(3), Rational(2, 5));
  } else if (k == 4) {
    kind = CentralBinomialKind::InverseFourth;
    closed = scale(sym_zeta(4), Rational(17, 36));
  } else {
    throw PreconditionError("cbsum takes 2, 3 or 4");
  }
  // terms shrink like 4^-n; a few more than the digits need is plenty
  const long terms = std::min(o.cutoff, static_cast<long>(p.working_digits() * 1.67) + 20);
  Request r{"cbsum", v, {}};
  r.routes.push_back({"closed", [=] {
                        EvalResult x = eval_symbolic(closed, p);
                        x.method = Method::ClosedForm;
                        return x;
                      }});
  r.routes.push_back({"series", [=] { return central_binomial_sum(kind, terms, p); }});
  r.routes.push_back(symbolic_route(closed, p));
  return r;
}

json result_json(const Request& rq, const Route& rt, const EvalResult& r, const Options& o) {
  json j = {{"quantity", rq.quantity},
            {"params", rq.params},
            {"method", rt.method},
            {"precision_digits", o.prec},
            {"value", r.value.to_decimal(o.prec)},
            {"error_bound", r.error_bound.to_scientific(3)},
            {"rigorous", r.rigorous},
            {"conjectural", r.conjectural || rt.conjectural}};
  if (o.symbolic && rt.symbolic) j["symbolic"] = rt.symbolic->to_json();
  return j;
}

std::string params_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int emit(const json& j, const std::string& text, const Options& o) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) {
      std::cerr << "cannot write report to " << o.report << "\n";
      return kUsage;
    }
    f << j.dump(2) << "\n";
  }
  return 0;
}

int run(Request rq, const Options& o) {
  std::vector<Route> chosen;
  for (auto& rt : rq.routes) {
    if (o.method != "all" && rt.method != o.method) continue;
    if (o.strict && rt.conjectural) continue;
    chosen.push_back(std::move(rt));
  }
  if (chosen.empty()) {
    std::cerr << "no '" << o.method << "' route for " << rq.quantity << "(" << params_text(rq.params) << ")"
              << (o.strict ? " outside conjectures" : "") << "\n";
    return kUsage;
  }
  if (o.method == "all" && chosen.size() < 2) {
    std::cerr << rq.quantity << "(" << params_text(rq.params) << ") has only the '" << chosen.front().method
              << "' route; pass --method " << chosen.front().method << "\n";
    return kUsage;
  }

  std::vector<EvalResult> results;
  for (const auto& rt : chosen) results.push_back(rt.eval());

  json j;
  std::ostringstream text;
  text << rq.quantity << "(" << params_text(rq.params) << ")  precision " << o.prec << " digits\n";
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const EvalResult& r = results[i];
    json one = result_json(rq, chosen[i], r, o);
    if (chosen.size() == 1)
      j = one;
    else
      j.push_back(one);
    text << "  " << chosen[i].method << std::string(12 - std::min<std::size_t>(chosen[i].method.size(), 11), ' ')
         << r.value.to_decimal(o.prec) << "  +- " << r.error_bound.to_scientific(3) << "  "
         << (r.rigorous ? "rigorous" : "heuristic") << ((r.conjectural || chosen[i].conjectural) ? ", conjectural" : "")
         << "\n";
    if (o.symbolic && chosen[i].symbolic) text << "  " << std::string(12, ' ') << "= " << chosen[i].symbolic->to_text() << "\n";
  }
  if (results.size() > 1) {
    bool agree_all = true;
    for (std::size_t i = 1; i < results.size(); ++i)
      agree_all = agree_all && agree(results[0], results[i], Precision(o.prec).tolerance());
    text << "  routes agree within their bounds: " << (agree_all ? "yes" : "NO") << "\n";
  }
  return emit(j, text.str(), o);
}

int run_constants(const Options& o) {
  const Precision p(o.prec);
  const std::vector<std::pair<std::string, EvalResult>> items = {
      {"pi", pi_constant(p)},           {"log2", log2_constant(p)},     {"catalan", beta_fn(2, p)},
      {"zeta3", zeta_single(3, p)},     {"zeta5", zeta_single(5, p)},   {"zeta7", zeta_single(7, p)},
      {"beta4", beta_fn(4, p)},         {"psi3_quarter", psi3_quarter(p)},
  };
  json j = json::array();
  std::ostringstream text;
  for (const auto& [name, r] : items) {
    j.push_back({{"quantity", name},
                 {"params", json::array()},
                 {"method", "closed"},
                 {"precision_digits", o.prec},
                 {"value", r.value.to_decimal(o.prec)},
                 {"error_bound", r.error_bound.to_scientific(3)},
                 {"rigorous", r.rigorous},
                 {"conjectural", false}});
    text << name << std::string(14 - name.size(), ' ') << r.value.to_decimal(o.prec) << "\n";
  }
  return emit(j, text.str(), o);
}

int run_series_coeff(const std::string& kind, const std::vector<int>& v, const Options& o) {
  need_params(v, 2, "series-coeff " + kind + " (N k)");
  const int n = v[0], k = v[1];
  Rational c;
  if (kind == "G")
    c = g_coeff(n, k);
  else if (kind == "H")
    c = h_coeff(n, k);
  else if (kind == "arcsin")
    c = arcsin_coefficients(n, k)[k];
  else if (kind == "arctanh")
    c = arctanh_coeff(n, k);
  else
    throw PreconditionError("series-coeff kind must be G, H, arcsin or arctanh");
  json j = {{"quantity", "series-coeff " + kind},
            {"params", v},
            {"method", "exact"},
            {"precision_digits", o.prec},
            {"value", HPReal(c, Precision(o.prec)).to_decimal(o.prec)},
            {"exact", to_string(c)},
            {"error_bound", "0"},
            {"rigorous", true},
            {"conjectural", false}};
  return emit(j, to_string(c) + "\n", o);
}

int run_verify_cmd(const std::string& suite, const std::vector<int>& criteria, unsigned threads, const Options& o) {
  VerifyOptions vo;
  if (suite == "paper")
    vo.suite = Suite::Paper;
  else if (suite == "conjectures")
    vo.suite = Suite::Conjectures;
  else if (suite == "properties")
    vo.suite = Suite::Properties;
  else if (suite == "all")
    vo.suite = Suite::All;
  else
    throw PreconditionError("suite must be paper, conjectures, properties or all");
  vo.prec = Precision(o.prec);
  vo.cutoff = o.cutoff;
  vo.criteria = criteria;
  vo.threads = threads;
  VerifyReport rep = run_verify(vo);
  json j = report_json(rep);
  j["suite"] = suite;
  j["precision_digits"] = o.prec;
  j["cutoff"] = o.cutoff;
  int rc = emit(j, report_table(rep), o);
  if (rc) return rc;
  return rep.ok(o.strict) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetakit: multiple zeta values, odd Euler sums and arcsine integrals to high precision"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prec", o.prec, "significant decimal digits (>= 16)")->default_val(50);
  app.add_option("--cutoff", o.cutoff, "truncation point for nested series")->default_val(1000000);
  app.add_option("--method", o.method, "closed, series, quadrature, symbolic or all")
      ->check(CLI::IsMember({"closed", "series", "quadrature", "symbolic", "all"}))
      ->default_val("all");
  app.add_flag("--json", o.json, "JSON on standard output");
  app.add_flag("--symbolic", o.symbolic, "also print the exact symbolic form where one exists");
  app.add_flag("--strict-conjectures", o.strict, "refuse conjectural routes; conjecture failures fail verify");
  app.add_option("--report", o.report, "also write the JSON output to this file");

  std::vector<int> params;
  std::string word;
  std::string kind = "O";
  std::string suite = "all";
  std::vector<int> criteria;
  unsigned threads = 0;

  auto* constants = app.add_subcommand("constants", "pi, log 2, Catalan, zeta(3), ... at the requested precision");
  auto* zeta = app.add_subcommand("zeta", "multiple zeta value zeta(i1,...,ik)");
  auto* tvalue = app.add_subcommand("tvalue", "multiple t-value t(i1,...,ik)");
  auto* mu = app.add_subcommand("mu", "multiple mixed value mu(i1,...,ik)");
  auto* bigT = app.add_subcommand("bigT", "T-value T(i1,...,ik) = 2^k mu");
  auto* oddsum = app.add_subcommand("oddsum", "odd Euler sum O(p,q) or B(p,q)");
  auto* eulersum = app.add_subcommand("eulersum", "Euler sum sum_n prod H_n^(p_j) / n^q, given as p_1 ... p_k q");
  auto* integral = app.add_subcommand("integral", "I n | J n | K n | logsine n | tkernel n | kernel p q sa sd");
  auto* coeff = app.add_subcommand("series-coeff", "exact coefficient: G N k | H N k | arcsin N k | arctanh N k");
  auto* cbsum = app.add_subcommand("cbsum", "central binomial sum, 2 | 3 | 4");
  auto* verify = app.add_subcommand("verify", "run the verification suite");

  for (auto* sc : {zeta, tvalue, mu, bigT, oddsum, eulersum, cbsum})
    sc->add_option("indices", params, "integer parameters")->required();
  oddsum->add_option("--kind", kind, "O (plain) or B (alternating)")->check(CLI::IsMember({"O", "B"}));
  integral->add_option("name", word, "I, J, K, logsine, tkernel or kernel")->required();
  integral->add_option("indices", params, "integer parameters")->required();
  coeff->add_option("kind", word, "G, H, arcsin or arctanh")->required();
  coeff->add_option("indices", params, "N k")->required();
  verify->add_option("--suite", suite, "paper, conjectures, properties or all")
      ->check(CLI::IsMember({"paper", "conjectures", "properties", "all"}));
  verify->add_option("--criteria", criteria, "only these acceptance criteria (1-11)")->delimiter(',');
  verify->add_option("--threads", threads, "worker threads, 0 for one per core");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    Precision check(o.prec);
    (void)check;
    if (o.cutoff < 1) throw PreconditionError("--cutoff must be positive");
    if (constants->parsed()) return run_constants(o);
    if (zeta->parsed()) return run(zeta_request(params, o), o);
    if (tvalue->parsed()) return run(tvalue_request(params, o), o);
    if (mu->parsed()) return run(mixed_request("mu", params, o), o);
    if (bigT->parsed()) return run(mixed_request("bigT", params, o), o);
    if (oddsum->parsed()) return run(oddsum_request(kind, params, o), o);
    if (eulersum->parsed()) return run(eulersum_request(params, o), o);
    if (integral->parsed()) return run(integral_request(word, params, o), o);
    if (coeff->parsed()) return run_series_coeff(word, params, o);
    if (cbsum->parsed()) return run(cbsum_request(params, o), o);
    if (verify->parsed()) return run_verify_cmd(suite, criteria, threads, o);
  } catch (const ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n  best estimate " << e.best_estimate()
              << "\n  last difference " << e.last_difference() << "\n";
    return kNumeric;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const NotInTableError& e) {
    std::cerr << "no closed form: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
