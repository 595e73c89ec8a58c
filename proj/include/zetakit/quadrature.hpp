#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "zetakit/eval_result.hpp"
#include "zetakit/hp_real.hpp"

namespace zetakit {

enum class EndpointBehavior { Regular, Logarithmic, Algebraic };

// f on the open interval (0,1). The evaluator receives x together with 1 - x
// computed independently, so integrands with structure at x = 1 can avoid the
// cancellation in 1 - x (x itself may round to 1 at the outermost nodes).
struct Integrand {
  std::function<HPReal(const HPReal& x, const HPReal& one_minus_x)> evaluate;
  EndpointBehavior at_zero = EndpointBehavior::Regular;
  EndpointBehavior at_one = EndpointBehavior::Regular;
  double exponent_at_zero = 0.0;  // for Algebraic: f ~ x^exponent
  double exponent_at_one = 0.0;
};

inline constexpr int kMaxQuadratureLevel = 12;

// Tanh-sinh quadrature with step 2^-level, refined until two successive
// levels agree to 10^-(digits+3). The bound is ten times the last difference
// and is heuristic. Throws ConvergenceError at the level cap.
QuadratureResult integrate01(const Integrand& f, Precision prec = Precision());

// Li_p(x) for p >= 2, |x| <= 1.
EvalResult polylog(int p, const HPReal& x, Precision prec = Precision());

// Evaluates Li_p many times at one precision. The constant tables used by the
// expansion about x = 1 are built once.
class PolylogEvaluator {
 public:
  PolylogEvaluator(int p, Precision prec);
  ~PolylogEvaluator();
  PolylogEvaluator(PolylogEvaluator&&) noexcept;

  // x in [-1, 1].
  HPReal operator()(const HPReal& x) const;
  // Li_p(x) for x in (0,1] given log x <= 0 directly; accurate when x is so
  // close to 1 that x itself has lost the information.
  HPReal from_log(const HPReal& log_x) const;
  // Absolute error bound valid for every evaluation by this object.
  const HPReal& error_bound() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// I(N) = int_0^1 arcsin^N(z)/z dz
QuadratureResult I_quad(int n, Precision prec = Precision());

// J(n) = int_0^{1/2} z^n cot(pi z) dz
QuadratureResult j_cot(int n, Precision prec = Precision());

// K(N) = int_0^1 arctanh^N(z)/z dz
QuadratureResult k_arctanh(int n, Precision prec = Precision());

// 1/(2N+1)! int_0^1 arcsin^(2N+1)(z) arccos(z)/z dz, which equals t(3,{2}^N).
QuadratureResult t_kernel_quad(int n, Precision prec = Precision());

// int_0^1 log^(q-1)(x) Li_p(sign_arg x) / (x (1 + sign_den x^2)) dx
QuadratureResult logpolylog_kernel(int p, int q, int sign_arg, int sign_den, Precision prec = Precision());

// -n int_0^{pi/2} z^(n-1) log(sin z) dz, equal to I(n).
QuadratureResult logsine_check(int n, Precision prec = Precision());

// Drops cached abscissae and weights.
void clear_quadrature_cache();

}  // namespace zetakit
