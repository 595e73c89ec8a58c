#include "zetakit/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"

namespace zetakit {

namespace {

EvalResult zero(Precision prec) {
  return EvalResult(HPReal(prec), HPReal::with_bits(kBoundBits), Method::ClosedForm, true);
}

Rational pow2(int k) {
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return Rational(r);
}

Rational inv_fact(int n) { return Rational(1) / Rational(factorial(static_cast<unsigned>(n))); }

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

// t(m) = (1 - 2^-m) zeta(m)
EvalResult t_of(int m, Precision prec) { return t_single(m, prec); }

void require_same(const EvalResult& a, const EvalResult& b, Precision prec, const std::string& what) {
  if (!agree(a, b, prec.tolerance()))
    throw std::logic_error(what + ": the two closed forms disagree (" + a.value.to_scientific(30) + " vs " +
                           b.value.to_scientific(30) + ")");
}

}  // namespace

EvalResult pi_power(int k, Precision prec) {
  HPReal v = pow(HPReal::pi(prec), k);
  HPReal err = rounding_allowance(v, k + 2);
  return EvalResult(std::move(v), std::move(err), Method::ClosedForm, true);
}

EvalResult i_closed(int n, Precision prec) {
  if (n < 1) throw DomainError("I(N) needs N >= 1");
  EvalResult acc = zero(prec);
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    for (int j = 0; j <= m; ++j)
      acc = acc + scale(pi_power(n - 2 * j, prec) * eta(2 * j + 1, prec), sign(j) * inv_fact(n - 2 * j));
  } else {
    const int m = n / 2;
    for (int j = 0; j <= m - 1; ++j)
      acc = acc + scale(pi_power(n - 2 * j, prec) * eta(2 * j + 1, prec), sign(j) * inv_fact(n - 2 * j));
    acc = acc + scale(zeta_single(n + 1, prec), sign(m) * 2 * one_minus_pow2(n + 1));
  }
  return scale(acc, Rational(factorial(static_cast<unsigned>(n))) / pow2(n));
}

EvalResult t_closed(int n, Precision prec) {
  if (n < 1) throw DomainError("t(3,{2}^N) closed form needs N >= 1");
  EvalResult acc = zero(prec);
  for (int j = 1; j <= n; ++j)
    acc = acc + scale(pi_power(2 * n + 2 - 2 * j, prec) * eta(2 * j + 1, prec),
                      sign(j + 1) * (2 * j) * inv_fact(2 * n + 2 - 2 * j));
  acc = acc + scale(zeta_single(2 * n + 3, prec), sign(n) * 2 * (2 * n + 2) * one_minus_pow2(2 * n + 3));
  EvalResult r = scale(acc, Rational(1) / pow2(2 * n + 2));
  require_same(r, t_closed_integral_form(n, prec), prec, "t(3,{2}^N)");
  return r;
}

EvalResult t_closed_integral_form(int n, Precision prec) {
  if (n < 1) throw DomainError("t(3,{2}^N) closed form needs N >= 1");
  EvalResult half_pi = scale(pi_power(1, prec), Rational(1, 2));
  EvalResult diff = half_pi * i_closed(2 * n + 1, prec) - i_closed(2 * n + 2, prec);
  return scale(diff, inv_fact(2 * n + 1));
}

EvalResult z_closed(int n, Precision prec) {
  if (n < 0) throw DomainError("zeta(3,{2}^N) closed form needs N >= 0");
  EvalResult acc = zero(prec);
  for (int j = 1; j <= n; ++j)
    acc = acc + scale(pi_power(2 * n + 2 - 2 * j, prec) * eta(2 * j + 1, prec),
                      sign(j + 1) * (2 * j) * inv_fact(2 * n + 3 - 2 * j));
  Rational c = Rational(1) - one_minus_pow2(2 * n + 2) * (2 * n + 2);
  acc = acc + scale(zeta_single(2 * n + 3, prec), -sign(n) * c);
  EvalResult r = scale(acc, Rational(2));
  require_same(r, z_closed_integral_form(n, prec), prec, "zeta(3,{2}^N)");
  return r;
}

EvalResult z_closed_integral_form(int n, Precision prec) {
  if (n < 0) throw DomainError("zeta(3,{2}^N) closed form needs N >= 0");
  EvalResult a = scale(i_closed(2 * n + 2, prec), Rational(1, 2));
  EvalResult b = i_closed(2 * n + 3, prec);
  b = scale(b, HPReal(1, prec) / HPReal::pi(prec));
  return scale(a - b, pow2(2 * n + 4) * inv_fact(2 * n + 2));
}

EvalResult mu_closed(int n, Precision prec) {
  if (n < 1) throw DomainError("mu(2,{1}^(N-1)) needs N >= 1");
  return scale(zeta_single(n + 1, prec), (pow2(n + 1) - 1) / pow2(2 * n));
}

EvalResult o_diag(int q, Precision prec) {
  if (q < 2) throw DomainError("divergent odd Euler sum: q must be >= 2");
  EvalResult t = t_of(q, prec);
  return scale(t_of(2 * q, prec) + t * t, Rational(1, 2));
}

EvalResult b_diag(int q, Precision prec) {
  if (q < 2) throw DomainError("divergent odd Euler sum: q must be >= 2");
  EvalResult b = beta_fn(q, prec);
  return scale(t_of(2 * q, prec) + b * b, Rational(1, 2));
}

EvalResult o_reflect(int p, int q, const EvalResult& known, Precision prec) {
  if (p < 2 || q < 2) throw DomainError("reflection needs p, q >= 2");
  EvalResult r = t_of(p, prec) * t_of(q, prec) + t_of(p + q, prec) - known;
  r.method = Method::ClosedForm;
  return r;
}

EvalResult b_reflect(int p, int q, const EvalResult& known, Precision prec) {
  if (p < 2 || q < 2) throw DomainError("reflection needs p, q >= 2");
  EvalResult r = beta_fn(p, prec) * beta_fn(q, prec) + t_of(p + q, prec) - known;
  r.method = Method::ClosedForm;
  return r;
}

const std::vector<OTableEntry>& o_table_primary() {
  static const std::vector<OTableEntry> table = {
      {2, 3, {{Rational(31, 64), 0, {5}}, {Rational(9, 32), 0, {3, 2}}}},
      {3, 4, {{Rational(1, 128), 4, {3}}, {Rational(-5, 128), 2, {5}}, {Rational(127, 256), 0, {7}}}},
      {4, 5, {{Rational(5, 3072), 4, {5}}, {Rational(105, 3072), 2, {7}}, {Rational(511, 1024), 0, {9}}}},
      {5, 6,
       {{Rational(1, 1024), 6, {5}},
        {Rational(-7, 4096), 4, {7}},
        {Rational(-63, 2048), 2, {9}},
        {Rational(2047, 4096), 0, {11}}}},
      {6, 7,
       {{Rational(7, 122880), 6, {7}},
        {Rational(7, 4096), 4, {9}},
        {Rational(231, 8192), 2, {11}},
        {Rational(8191, 16384), 0, {13}}}},
  };
  return table;
}

EvalResult eval_terms(const std::vector<ClosedTerm>& terms, Precision prec) {
  EvalResult acc = zero(prec);
  for (const auto& t : terms) {
    EvalResult m = pi_power(t.pi_power, prec);
    for (int z : t.zetas) m = m * zeta_single(z, prec);
    acc = acc + scale(m, t.coefficient);
  }
  return acc;
}

EvalResult o_table(int p, int q, Precision prec) {
  for (const auto& e : o_table_primary()) {
    if (e.p == p && e.q == q) return eval_terms(e.terms, prec);
    if (e.p == q && e.q == p) return o_reflect(q, p, eval_terms(e.terms, prec), prec);
  }
  throw NotInTableError("O(" + std::to_string(p) + "," + std::to_string(q) + ") is not in the table");
}

EvalResult b23_closed(Precision prec) {
  EvalResult r = scale(zeta_single(5, prec), Rational(31, 64));
  r = r - scale(pi_power(2, prec) * zeta_single(3, prec), Rational(9, 256));
  r = r + scale(beta_fn(2, prec) * pi_power(3, prec), Rational(1, 32));
  r.method = Method::ClosedForm;
  return r;
}

EvalResult t2s1_conjecture(int n, Precision prec) {
  if (n < 1) throw DomainError("t({2}^N,1) needs N >= 1");
  EvalResult r = scale(i_closed(2 * n, prec), inv_fact(2 * n));
  r.conjectural = true;
  return r;
}

EvalResult hoffman_t221_with_coefficient(const Rational& t2t3_coefficient, Precision prec) {
  EvalResult log2 = eta(1, prec);
  EvalResult r = scale(t_of(5, prec), Rational(1, 8));
  r = r + scale(t_of(2, prec) * t_of(3, prec), t2t3_coefficient);
  r = r + scale(t_of(4, prec) * log2, Rational(1, 4));
  return r;
}

EvalResult hoffman_t(HoffmanKind kind, Precision prec) {
  EvalResult log2 = eta(1, prec);
  switch (kind) {
    case HoffmanKind::T21:
      return t_of(2, prec) * log2 - scale(t_of(3, prec), Rational(1, 2));
    case HoffmanKind::T221:
      return hoffman_t221_with_coefficient(Rational(-3, 14), prec);
    case HoffmanKind::T2221: {
      EvalResult r = scale(t_of(7, prec), Rational(-1, 32));
      r = r + scale(t_of(3, prec) * t_of(4, prec), Rational(-3, 56));
      r = r + scale(t_of(2, prec) * t_of(5, prec), Rational(15, 248));
      r = r + scale(t_of(6, prec) * log2, Rational(1, 48));
      return r;
    }
  }
  throw PreconditionError("unknown Hoffman relation");
}

EvalResult zeta311(Precision prec) {
  return scale(zeta_single(5, prec), Rational(2)) - zeta_single(2, prec) * zeta_single(3, prec);
}

}  // namespace zetakit
