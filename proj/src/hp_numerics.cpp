#include "zetakit/hp_numerics.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "zetakit/errors.hpp"

namespace zetakit {

namespace {

enum class ConstantKind { Zeta, Eta, Beta, TSingle, Psi3Quarter, Hurwitz };

struct CacheKey {
  ConstantKind kind;
  int arg;
  Rational shift;
  int digits;

  bool operator<(const CacheKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (arg != o.arg) return arg < o.arg;
    if (digits != o.digits) return digits < o.digits;
    return shift < o.shift;
  }
};

class ConstantCache {
 public:
  EvalResult get(const CacheKey& key, const std::function<EvalResult()>& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate computation yields the
    // same bits, so whichever insert wins is fine.
    EvalResult r = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.emplace(key, std::move(r));
    return it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<CacheKey, EvalResult> values_;
};

ConstantCache& cache() {
  static ConstantCache c;
  return c;
}

HPReal rational_at(const Rational& q, mpfr_prec_t bits) {
  HPReal r = HPReal::with_bits(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// sum_{n>=0} (n+a)^-s by N direct terms and an Euler-Maclaurin tail at N + a.
// The Bernoulli series is cut once a term drops below the working tolerance;
// for x^-s the remainder is bounded by the first omitted term.
EvalResult euler_maclaurin_hurwitz(int s, const Rational& a, Precision prec) {
  const mpfr_prec_t bits = prec.working_bits();
  const int n_direct = 2 * prec.working_digits();
  const HPReal tiny = pow(HPReal(10, prec), -(prec.working_digits() + 2));

  HPReal sum(prec);
  HPReal shift = rational_at(a, bits);
  for (int n = 0; n < n_direct; ++n) {
    HPReal x = shift + n;
    sum += pow(std::move(x), -s);
  }

  HPReal x0 = shift + n_direct;
  HPReal x0_pow = pow(x0, 1 - s);  // x0^(1-s)
  sum += x0_pow / (s - 1);
  x0_pow /= x0;  // x0^-s
  sum += x0_pow / 2;

  HPReal inv_x0_sq = pow(x0, -2);
  HPReal power = x0_pow / x0;  // x0^(-s-1)
  mpz_class rising = s;        // s (s+1) ... (s + 2k - 2)
  HPReal omitted(prec);
  constexpr int kMaxTerms = 400;
  int k = 1;
  for (; k <= kMaxTerms; ++k) {
    Rational coef = bernoulli(2 * k) * Rational(rising) / Rational(factorial(2 * k));
    HPReal term = rational_at(coef, bits) * power;
    if (abs(term) < tiny) {
      omitted = abs(term);
      break;
    }
    sum += term;
    rising *= (s + 2 * k - 1);
    rising *= (s + 2 * k);
    power *= inv_x0_sq;
  }
  if (k > kMaxTerms) {
    throw ConvergenceError("Euler-Maclaurin tail did not converge", sum.to_scientific(20), omitted.to_double());
  }
  HPReal err = bound_add(bound_mul(omitted, bound_from_double(2.0)), rounding_allowance(sum, n_direct + 2 * k));
  return EvalResult(std::move(sum), std::move(err), Method::Series, true);
}

// Cohen-Rodriguez Villegas-Zagier: sum_{k>=0} (-1)^k a_k with a_k = 1/(2k+1)^m,
// a moment sequence of a positive measure of mass a_0 = 1, so the error after
// n terms is at most 2 / (3 + sqrt 8)^n.
EvalResult alternating_odd_power_sum(int m, Precision prec) {
  const double rate = std::log(3.0 + std::sqrt(8.0));
  const int n = static_cast<int>(std::ceil((prec.working_digits() + 2) * std::log(10.0) / rate)) + 1;

  HPReal d = pow(sqrt(HPReal(8, prec)) + 3, n);
  d = (d + HPReal(1, prec) / d) / 2;
  HPReal b(-1, prec);
  HPReal c = -d;
  HPReal s(prec);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    HPReal a_k = pow(HPReal(2 * k + 1, prec), -m);
    s += c * a_k;
    // b *= (k+n)(k-n) / ((k+1/2)(k+1))
    b *= 2L * (k + n);
    b *= (k - n);
    b /= (2 * k + 1);
    b /= (k + 1);
  }
  s /= d;
  double trunc = 2.0 * std::exp(-rate * n);
  HPReal err = bound_add(bound_from_double(trunc), rounding_allowance(s, 8 * n));
  return EvalResult(std::move(s), std::move(err), Method::Series, true);
}

}  // namespace

EvalResult hurwitz_zeta(int s, const Rational& a, Precision prec) {
  if (s < 2) throw DomainError("zeta pole/divergence: Hurwitz zeta needs s >= 2");
  if (a <= 0) throw DomainError("Hurwitz zeta shift must be positive");
  return cache().get({ConstantKind::Hurwitz, s, a, prec.digits()},
                     [&] { return euler_maclaurin_hurwitz(s, a, prec); });
}

EvalResult zeta_single(int s, Precision prec) {
  if (s < 2) throw DomainError("zeta pole/divergence: zeta(s) needs s >= 2");
  return cache().get({ConstantKind::Zeta, s, 0, prec.digits()}, [&] {
    EvalResult r = euler_maclaurin_hurwitz(s, 1, prec);
    r.method = Method::ClosedForm;
    return r;
  });
}

EvalResult eta(int m, Precision prec) {
  if (m < 1) throw DomainError("eta(m) needs m >= 1");
  return cache().get({ConstantKind::Eta, m, 0, prec.digits()}, [&] {
    if (m == 1) return log2_constant(prec);
    return scale(zeta_single(m, prec), one_minus_pow2(m - 1));
  });
}

EvalResult beta_fn(int m, Precision prec) {
  if (m < 1) throw DomainError("beta(m) needs m >= 1");
  return cache().get({ConstantKind::Beta, m, 0, prec.digits()}, [&] {
    EvalResult r = alternating_odd_power_sum(m, prec);
    r.method = Method::ClosedForm;
    return r;
  });
}

EvalResult t_single(int i, Precision prec) {
  if (i < 2) throw DomainError("t(i) diverges for i < 2");
  return cache().get({ConstantKind::TSingle, i, 0, prec.digits()},
                     [&] { return scale(zeta_single(i, prec), one_minus_pow2(i)); });
}

EvalResult psi3_quarter(Precision prec) {
  return cache().get({ConstantKind::Psi3Quarter, 3, 0, prec.digits()}, [&] {
    EvalResult r = scale(hurwitz_zeta(4, Rational(1, 4), prec), Rational(6));
    r.method = Method::ClosedForm;
    return r;
  });
}

EvalResult pi_constant(Precision prec) { return EvalResult::exact(HPReal::pi(prec)); }

EvalResult log2_constant(Precision prec) { return EvalResult::exact(HPReal::log2(prec)); }

void clear_constant_cache() { cache().clear(); }

}  // namespace zetakit
