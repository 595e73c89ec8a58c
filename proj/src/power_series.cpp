#include "zetakit/power_series.hpp"

#include <map>
#include <mutex>

#include "zetakit/errors.hpp"
#include "zetakit/quadrature.hpp"

namespace zetakit {

TruncatedSeries::TruncatedSeries(std::vector<HPReal> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw PreconditionError("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(const std::vector<Rational>& coefficients, Precision prec) {
  if (coefficients.empty()) throw PreconditionError("series needs at least one coefficient");
  for (const auto& c : coefficients) coefficients_.emplace_back(c, prec);
}

HPReal TruncatedSeries::polynomial(const HPReal& z) const {
  HPReal acc = coefficients_.back();
  for (int i = order() - 1; i >= 0; --i) {
    acc *= z;
    acc += coefficients_[i];
  }
  return acc;
}

EvalResult TruncatedSeries::evaluate(const HPReal& z) const {
  HPReal v = polynomial(z);
  HPReal r = abs(z);
  HPReal err = rounding_allowance(v, 2 * (order() + 1));
  if (r >= 1) {
    err = HPReal::with_bits(kBoundBits);
    mpfr_set_inf(err.get(), 1);
    return EvalResult(std::move(v), std::move(err), Method::Series, false);
  }
  int last = order();
  while (last > 0 && coefficients_[last].is_zero()) --last;
  HPReal rem = abs(coefficients_[last]) * pow(r, order() + 1) / -(r - 1);
  err = bound_add(err, rem.rounded_to(kBoundBits));
  return EvalResult(std::move(v), std::move(err), Method::Series, false);
}

namespace {

// Rows of a two-parameter coefficient family, grown on demand. Row n is
// defined from row n - 1 by a prefix sum.
class CoeffTable {
 public:
  template <typename Base, typename Step>
  Rational get(int n, int k, Base&& base, Step&& step) {
    std::lock_guard<std::mutex> lock(mutex_);
    for (int level = 0; level <= n; ++level) {
      auto& row = rows_[level];
      while (static_cast<int>(row.size()) <= k) {
        int j = static_cast<int>(row.size());
        row.push_back(level == 0 ? base(j) : step(rows_[level - 1], row, j));
      }
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<Rational>> rows_;
};

Rational odd_square_inverse(int n) { return Rational(1, mpz_class(2 * n + 1) * (2 * n + 1)); }

}  // namespace

Rational g_coeff(int n, int k) {
  if (n < 0 || k < 0) throw PreconditionError("G_N(k) needs N, k >= 0");
  static CoeffTable table;
  return table.get(
      n, k, [](int) { return Rational(1); },
      [](const std::vector<Rational>& prev, const std::vector<Rational>& row, int j) {
        // G_N(j) = G_N(j-1) + G_{N-1}(j-1)/(2j-1)^2
        if (j == 0) return Rational(0);
        Rational v = row[j - 1] + prev[j - 1] * odd_square_inverse(j - 1);
        v.canonicalize();
        return v;
      });
}

Rational h_coeff(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("H_N(k) needs N, k >= 1");
  static CoeffTable table;
  // level index n - 1; index 0 of each row is unused
  return table.get(
      n - 1, k, [](int j) { return j == 0 ? Rational(0) : Rational(1, 4); },
      [](const std::vector<Rational>& prev, const std::vector<Rational>& row, int j) {
        // H_{N+1}(j) = H_{N+1}(j-1) + H_N(j-1)/(2(j-1))^2
        if (j <= 1) return Rational(0);
        Rational v = row[j - 1] + prev[j - 1] / (mpz_class(4) * (j - 1) * (j - 1));
        v.canonicalize();
        return v;
      });
}

Rational arctanh_coeff(int n, int m) {
  if (n < 1 || m < 0) throw PreconditionError("arctanh coefficient needs N >= 1, m >= 0");
  // A_j(x) = (1/x) sum_{y < x} A_{j-1}(y) for x = j mod 2
  std::vector<Rational> prev(m + 1), cur(m + 1);
  for (int x = 1; x <= m; ++x)
    if (x % 2 == 1) prev[x] = Rational(1, x);
  for (int j = 2; j <= n; ++j) {
    Rational prefix = 0;
    for (int x = 0; x <= m; ++x) {
      cur[x] = (x >= 1 && x % 2 == j % 2) ? prefix / x : Rational(0);
      prefix += prev[x];
    }
    std::swap(prev, cur);
  }
  Rational v = prev[m];
  v.canonicalize();
  return v;
}

std::vector<Rational> arcsin_coefficients(int n, int order) {
  if (n < 1) throw PreconditionError("arcsin power needs N >= 1");
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  std::vector<Rational> c(order + 1, Rational(0));
  if (n % 2 == 1) {
    // z^(2k+1): G_K(k) (2k-1)!! / ((2k)!! (2k+1)), N = 2K+1
    const int big_k = (n - 1) / 2;
    for (int k = 0; 2 * k + 1 <= order; ++k) {
      Rational v = g_coeff(big_k, k) * Rational(double_factorial(2 * k - 1), double_factorial(2 * k) * (2 * k + 1));
      v.canonicalize();
      c[2 * k + 1] = v;
    }
  } else {
    // z^(2k): H_K(k) (2k)!! / ((2k-1)!! k^2), N = 2K
    const int big_k = n / 2;
    for (int k = 1; 2 * k <= order; ++k) {
      Rational v = h_coeff(big_k, k) * Rational(double_factorial(2 * k), double_factorial(2 * k - 1) * k * k);
      v.canonicalize();
      c[2 * k] = v;
    }
  }
  return c;
}

std::vector<Rational> arctanh_coefficients(int n, int order) {
  if (n < 1) throw PreconditionError("arctanh power needs N >= 1");
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  std::vector<Rational> c(order + 1, Rational(0));
  for (int m = 1; m <= order; ++m) c[m] = arctanh_coeff(n, m);
  return c;
}

TruncatedSeries arcsin_power_series(int n, int order, Precision prec) {
  return TruncatedSeries(arcsin_coefficients(n, order), prec);
}

TruncatedSeries arctanh_power_series(int n, int order, Precision prec) {
  return TruncatedSeries(arctanh_coefficients(n, order), prec);
}

Rational wallis_ratio(int n) {
  if (n < 0) throw PreconditionError("Wallis integral needs n >= 0");
  Rational r(double_factorial(n - 1), double_factorial(n));
  r.canonicalize();
  return r;
}

std::vector<Rational> w_apply_exact(const std::vector<Rational>& coefficients) {
  std::vector<Rational> out;
  out.reserve(coefficients.size());
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    Rational v = coefficients[n] * wallis_ratio(static_cast<int>(n));
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

TruncatedSeries w_apply(const TruncatedSeries& f) {
  const auto& c = f.coefficients();
  HPReal half_pi = HPReal::with_bits(c.front().bits());
  mpfr_const_pi(half_pi.get(), MPFR_RNDN);
  half_pi = ldexp(half_pi, -1);
  std::vector<HPReal> out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    HPReal w = HPReal::with_bits(c[n].bits());
    Rational ratio = wallis_ratio(static_cast<int>(n));
    mpfr_set_q(w.get(), ratio.get_mpq_t(), MPFR_RNDN);
    HPReal v = c[n] * w;
    if (n % 2 == 0) v *= half_pi;
    out.push_back(std::move(v));
  }
  return TruncatedSeries(std::move(out));
}

std::pair<EvalResult, EvalResult> wallis_identity_check(const TruncatedSeries& f, const HPReal& alpha,
                                                        Precision prec) {
  const auto& c = f.coefficients();
  if (!c.front().is_zero()) throw PreconditionError("Wallis identity needs f(0) = 0");
  if (alpha.sign() <= 0 || alpha > 1) throw PreconditionError("Wallis identity needs alpha in (0, 1]");

  // g(z) = int_0^z f(t)/t dt has coefficients c_n / n
  std::vector<HPReal> g;
  g.push_back(HPReal(prec));
  for (int n = 1; n <= f.order(); ++n) g.push_back(c[n] / n);
  TruncatedSeries wg = w_apply(TruncatedSeries(std::move(g)));
  HPReal left = wg.polynomial(alpha);
  EvalResult lhs(left, rounding_allowance(left, 4 * (f.order() + 1)), Method::Series, true);

  const HPReal half_pi = HPReal::pi(prec) / 2;
  Integrand integrand{[&](const HPReal& x, const HPReal& cx) {
                        HPReal ac = cx * 2 < 1 ? asin(sqrt(cx / 2)) * 2 : half_pi - asin(x);
                        return f.polynomial(alpha * x) * ac / x;
                      },
                      EndpointBehavior::Regular, EndpointBehavior::Algebraic, 0.0, 0.5};
  QuadratureResult rhs = integrate01(integrand, prec);
  return {std::move(lhs), static_cast<EvalResult>(rhs)};
}

}  // namespace zetakit
