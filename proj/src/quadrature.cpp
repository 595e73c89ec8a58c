#include "zetakit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "zetakit/errors.hpp"
#include "zetakit/hp_numerics.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

namespace {

// Abscissa x, its complement 1 - x, and the transformed weight (without h).
struct Node {
  HPReal x;
  HPReal c;
  HPReal w;
};

using NodeList = std::vector<Node>;

class NodeCache {
 public:
  std::shared_ptr<const NodeList> get(int level, Precision prec) {
    std::pair<int, int> key{level, prec.digits()};
    {
      std::shared_lock lock(mutex_);
      auto it = lists_.find(key);
      if (it != lists_.end()) return it->second;
    }
    auto list = std::make_shared<const NodeList>(build(level, prec));
    std::unique_lock lock(mutex_);
    return lists_.emplace(key, std::move(list)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    lists_.clear();
  }

 private:
  // Level 0 holds every integer t = k; level L >= 1 the odd multiples of 2^-L.
  // x = E/(1+E), 1-x = 1/(1+E), E = exp(pi sinh t), weight pi cosh t E/(1+E)^2,
  // mirrored for negative t. Nodes stop once E exceeds 10^(2 digits + 20).
  static NodeList build(int level, Precision prec) {
    const double u_max = (2.0 * prec.working_digits() + 20.0) * std::log(10.0) / 2.0;
    const double h = std::ldexp(1.0, -level);
    const HPReal pi = HPReal::pi(prec);
    NodeList nodes;
    auto push = [&](long k) {
      double t_d = k * h;
      if (M_PI / 2.0 * std::sinh(t_d) > u_max) return false;
      HPReal t = ldexp(HPReal(k, prec), -level);
      HPReal e = exp(pi * sinh(t));
      HPReal one_plus = e + 1;
      HPReal c = HPReal(1, prec) / one_plus;
      HPReal x = e / one_plus;
      HPReal w = pi * cosh(t) * e / (one_plus * one_plus);
      if (k == 0) {
        nodes.push_back({x, c, w});
      } else {
        nodes.push_back({x, c, w});
        nodes.push_back({c, x, w});
      }
      return true;
    };
    if (level == 0) {
      for (long k = 0; push(k); ++k) {
      }
    } else {
      for (long k = 1; push(k); k += 2) {
      }
    }
    return nodes;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::shared_ptr<const NodeList>> lists_;
};

NodeCache& node_cache() {
  static NodeCache c;
  return c;
}

}  // namespace

void clear_quadrature_cache() { node_cache().clear(); }

QuadratureResult integrate01(const Integrand& f, Precision prec) {
  const mpfr_prec_t bits = prec.working_bits();
  const HPReal target = pow(HPReal(10, prec), -(prec.digits() + 3));
  constexpr int kMinLevel = 3;

  HPReal raw = HPReal::with_bits(bits);       // sum of w f over all nodes so far
  HPReal magnitude = HPReal::with_bits(bits);  // sum of |w f|, for the rounding allowance
  HPReal previous = HPReal::with_bits(bits);
  HPReal diff = HPReal::with_bits(bits);
  long evaluations = 0;

  for (int level = 0; level <= kMaxQuadratureLevel; ++level) {
    auto nodes = node_cache().get(level, prec);
    for (const Node& n : *nodes) {
      HPReal fx = f.evaluate(n.x, n.c);
      ++evaluations;
      if (!fx.is_finite()) continue;  // only reachable at the outermost nodes of a singular endpoint
      HPReal contrib = n.w * fx;
      raw += contrib;
      magnitude += abs(contrib);
    }
    HPReal estimate = ldexp(raw, -level);
    if (level > 0) {
      diff = abs(estimate - previous);
      if (level >= kMinLevel && diff < target) {
        HPReal err = bound_add(bound_mul(diff, bound_from_double(10.0)),
                               rounding_allowance(ldexp(magnitude, -level), 4 * evaluations));
        return QuadratureResult(EvalResult(std::move(estimate), std::move(err), Method::Quadrature, false), level);
      }
    }
    previous = std::move(estimate);
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge by level " + std::to_string(kMaxQuadratureLevel),
                         previous.to_scientific(prec.digits()), diff.to_double());
}

// ---------------------------------------------------------------- polylog

struct PolylogEvaluator::Impl {
  int p;
  Precision prec;
  HPReal tiny;
  // coefficients of the expansion about 1: zeta(p - j) / j!, j != p - 1
  std::vector<HPReal> coef;
  HPReal harmonic_p1;     // H_{p-1}
  HPReal inv_fact_p1;     // 1/(p-1)!
  HPReal ln2;
  HPReal bound;

  Impl(int p_, Precision prec_) : p(p_), prec(prec_), tiny(prec_), harmonic_p1(prec_), inv_fact_p1(prec_), ln2(prec_), bound(prec_) {
    tiny = pow(HPReal(10, prec), -(prec.working_digits() + 2));
    ln2 = HPReal::log2(prec);
    // |zeta(p-j)| |L|^j / j! <= 2.2 (ln 2)^j / (2 pi)^(j-p+1) for j >= p; cut
    // when this drops below the tolerance (the remaining terms form a
    // geometric series of ratio below 1/80).
    const double log10_tiny = -(prec.working_digits() + 2.0);
    int jmax = p;
    while (std::log10(2.3) + jmax * std::log10(std::log(2.0)) - (jmax - p + 1) * std::log10(2 * M_PI) > log10_tiny)
      ++jmax;
    HPReal zeta_err = HPReal::with_bits(kBoundBits);
    Rational inv_fact = 1;
    for (int j = 0; j <= jmax; ++j) {
      if (j > 0) inv_fact /= j;
      int s = p - j;
      HPReal z(prec);
      if (s >= 2) {
        EvalResult zr = zeta_single(s, prec);
        z = zr.value;
        zeta_err = bound_add(zeta_err, zr.error_bound);
      } else if (s == 1) {
        z = HPReal(prec);
      } else if (s == 0) {
        z = HPReal(Rational(-1, 2), prec);
      } else {
        // zeta(-n) = (-1)^n B_{n+1} / (n+1)
        int n = -s;
        Rational v = bernoulli(static_cast<unsigned>(n + 1)) / (n + 1);
        if (n % 2 == 1) v = -v;
        z = HPReal(v, prec);
      }
      coef.push_back(z * HPReal(inv_fact, prec));
    }
    Rational h = 0, f = 1;
    for (int k = 1; k <= p - 1; ++k) {
      h += Rational(1, k);
      f *= k;
    }
    harmonic_p1 = HPReal(h, prec);
    inv_fact_p1 = HPReal(Rational(1) / f, prec);
    // truncation (each scheme stops below tiny, tail at most 2 tiny) plus the
    // propagated zeta errors (sum |L|^j/j! <= 2) and rounding
    bound = bound_add(bound_mul(tiny, bound_from_double(8.0)), bound_mul(zeta_err, bound_from_double(2.0)));
    bound = bound_add(bound, rounding_allowance(HPReal(1, prec), 4L * (jmax + 2 * prec.working_digits() * 4)));
  }

  // |x| <= 1/2
  HPReal series(const HPReal& x) const {
    HPReal sum(prec);
    HPReal power = x;
    HPReal half_tiny = tiny / 2;
    for (long k = 1;; ++k) {
      sum += power / pow(HPReal(k, prec), p);
      power *= x;
      if (abs(power) < half_tiny) break;
    }
    return sum;
  }

  // x in (1/2, 1], L = log x in (-ln 2, 0]
  HPReal about_one(const HPReal& l) const {
    if (l.is_zero()) return coef[0];
    HPReal sum(prec);
    HPReal power(1, prec);
    for (std::size_t j = 0; j < coef.size(); ++j) {
      if (static_cast<int>(j) == p - 1) {
        sum += power * inv_fact_p1 * (harmonic_p1 - log(-l));
      } else {
        sum += coef[j] * power;
      }
      power *= l;
    }
    return sum;
  }

  HPReal from_log(const HPReal& l) const {
    if (l.sign() > 0) throw DomainError("polylog: log x must be <= 0");
    if (-l < ln2) return about_one(l);
    return series(exp(l));
  }

  HPReal at(const HPReal& x) const {
    HPReal ax = abs(x);
    if (ax > 1) throw DomainError("polylog: |x| must be <= 1");
    if (ax.is_zero()) return HPReal(prec);
    if (ax * 2 <= HPReal(1, prec)) return series(x);
    if (x.sign() > 0) return about_one(log(x));
    // Li_p(x) = 2^(1-p) Li_p(x^2) - Li_p(-x)
    HPReal sq = x * x;
    HPReal even = sq * 2 <= HPReal(1, prec) ? series(sq) : about_one(log(sq));
    return ldexp(even, 1 - p) - about_one(log(ax));
  }
};

PolylogEvaluator::PolylogEvaluator(int p, Precision prec) {
  if (p < 2) throw DomainError("polylog: only p >= 2 is supported");
  impl_ = std::make_unique<Impl>(p, prec);
}

PolylogEvaluator::~PolylogEvaluator() = default;
PolylogEvaluator::PolylogEvaluator(PolylogEvaluator&&) noexcept = default;

HPReal PolylogEvaluator::operator()(const HPReal& x) const { return impl_->at(x); }
HPReal PolylogEvaluator::from_log(const HPReal& log_x) const { return impl_->from_log(log_x); }
const HPReal& PolylogEvaluator::error_bound() const { return impl_->bound; }

EvalResult polylog(int p, const HPReal& x, Precision prec) {
  PolylogEvaluator li(p, prec);
  HPReal v = li(x);
  HPReal err = li.error_bound();
  // the negative branch combines two evaluations
  if (x.sign() < 0) err = bound_mul(err, bound_from_double(2.0));
  return EvalResult(std::move(v), std::move(err), Method::Series, true);
}

// ---------------------------------------------------------------- integrals

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": parameter must be >= 1");
}

// (arcsin x, arccos x), the latter through 2 arcsin(sqrt((1-x)/2)) near 1
std::pair<HPReal, HPReal> arcsin_arccos(const HPReal& x, const HPReal& c, const HPReal& half_pi) {
  if (c * 2 < 1) {
    HPReal ac = asin(sqrt(c / 2)) * 2;
    return {half_pi - ac, ac};
  }
  HPReal as = asin(x);
  return {as, half_pi - as};
}

// log x, through log1p(-(1-x)) near 1
HPReal log_pair(const HPReal& x, const HPReal& c) {
  if (c * 2 < 1) return log1p(-c);
  return log(x);
}

}  // namespace

QuadratureResult I_quad(int n, Precision prec) {
  require_positive(n, "I(N)");
  const HPReal half_pi = HPReal::pi(prec) / 2;
  Integrand f{[&](const HPReal& x, const HPReal& c) {
                auto [as, ac] = arcsin_arccos(x, c, half_pi);
                return pow(as, n) / x;
              },
              EndpointBehavior::Regular, EndpointBehavior::Algebraic, 0.0, 0.5};
  return integrate01(f, prec);
}

QuadratureResult j_cot(int n, Precision prec) {
  require_positive(n, "J(n)");
  const HPReal half_pi = HPReal::pi(prec) / 2;
  // z = x/2: J(n) = 2^-(n+1) int_0^1 x^n cot(pi x/2) dx, cot(pi x/2) = tan(pi (1-x)/2)
  Integrand f{[&](const HPReal& x, const HPReal& c) {
                if (x * 2 < 1) {
                  HPReal arg = half_pi * x;
                  return pow(x, n) * cos(arg) / sin(arg);
                }
                HPReal arg = half_pi * c;
                return pow(x, n) * sin(arg) / cos(arg);
              }};
  QuadratureResult r = integrate01(f, prec);
  r.value = ldexp(r.value, -(n + 1));
  r.error_bound = ldexp(r.error_bound, -(n + 1));
  return r;
}

QuadratureResult k_arctanh(int n, Precision prec) {
  require_positive(n, "K(N)");
  // arctanh x = (log(2 - c) - log c) / 2 with c = 1 - x
  Integrand f{[&](const HPReal& x, const HPReal& c) {
                HPReal at = x < HPReal(Rational(1, 2), prec) ? atanh(x) : (log(-(c - 2)) - log(c)) / 2;
                return pow(at, n) / x;
              },
              EndpointBehavior::Regular, EndpointBehavior::Logarithmic};
  return integrate01(f, prec);
}

QuadratureResult t_kernel_quad(int n, Precision prec) {
  require_positive(n, "t kernel");
  const HPReal half_pi = HPReal::pi(prec) / 2;
  const int m = 2 * n + 1;
  Integrand f{[&](const HPReal& x, const HPReal& c) {
                auto [as, ac] = arcsin_arccos(x, c, half_pi);
                return pow(as, m) * ac / x;
              },
              EndpointBehavior::Regular, EndpointBehavior::Algebraic, 0.0, 0.5};
  QuadratureResult r = integrate01(f, prec);
  Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(m)));
  EvalResult scaled = scale(r, inv);
  scaled.rigorous = false;
  return QuadratureResult(std::move(scaled), r.levels_used);
}

QuadratureResult logpolylog_kernel(int p, int q, int sign_arg, int sign_den, Precision prec) {
  if (p < 2) throw DomainError("log-polylog kernel: p must be >= 2");
  if (q < 1) throw DomainError("log-polylog kernel: q must be >= 1");
  if ((sign_arg != 1 && sign_arg != -1) || (sign_den != 1 && sign_den != -1))
    throw PreconditionError("log-polylog kernel: signs must be +1 or -1");
  if (q < 2 && sign_den == -1) throw DomainError("log-polylog kernel: non-integrable at x = 1 for q < 2");

  PolylogEvaluator li(p, prec);
  Integrand f{[&](const HPReal& x, const HPReal& c) {
                HPReal lx = log_pair(x, c);
                HPReal lip = sign_arg > 0 ? li.from_log(lx) : li(-x);
                // 1 - x^2 = c (2 - c), free of cancellation near 1
                HPReal den = sign_den > 0 ? x * x + 1 : c * -(c - 2);
                return pow(lx, q - 1) * lip / (x * den);
              },
              EndpointBehavior::Logarithmic, sign_den > 0 ? EndpointBehavior::Regular : EndpointBehavior::Logarithmic};
  QuadratureResult r = integrate01(f, prec);
  // integrand error from Li_p, integrated against |log^(q-1) x| / (x |1 +- x^2|)
  // is below (q-1)! * error times a modest constant; fold it in
  HPReal li_err = bound_mul(li.error_bound(), bound_from_double(std::tgamma(q) * 4.0));
  r.error_bound = bound_add(r.error_bound, li_err);
  return r;
}

QuadratureResult logsine_check(int n, Precision prec) {
  require_positive(n, "log-sine");
  const HPReal half_pi = HPReal::pi(prec) / 2;
  // z = (pi/2) x: -n (pi/2)^n int_0^1 x^(n-1) log sin(pi x/2) dx
  Integrand f{[&](const HPReal& x, const HPReal&) { return pow(x, n - 1) * log(sin(half_pi * x)); },
              EndpointBehavior::Logarithmic, EndpointBehavior::Regular};
  QuadratureResult r = integrate01(f, prec);
  HPReal factor = -(pow(half_pi, n) * n);
  EvalResult scaled = scale(r, factor);
  return QuadratureResult(std::move(scaled), r.levels_used);
}

}  // namespace zetakit
