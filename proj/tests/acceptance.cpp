// One line per acceptance criterion. Tolerances live in the check catalog
// (src/verify.cpp); here they are only aggregated, plus the runtime limits.
#include <chrono>
#include <cstdio>
#include <string>

#include "zetakit/verify.hpp"

using namespace zetakit;

namespace {

struct Criterion {
  int id;
  const char* title;
  double max_seconds;  // 0: no runtime limit stated
};

const Criterion kCriteria[] = {
    {1, "printed decimals of zeta(3,{2}^N), t(3,{2}^N)", 1.0},
    {2, "closed / quadrature / series agreement, N = 1..4", 130.0},
    {3, "I(N) table, J and log-sine routes", 0},
    {4, "mu(2,{1}^(N-1)) and K(N), N = 1..5", 0},
    {5, "odd Euler reflection grid and diagonals", 0},
    {6, "kernel theorems and remark integrals", 0},
    {7, "B(2,3) and the alternating harmonic sums", 0},
    {8, "dualities and zeta(3,1,1)", 0},
    {9, "t({2}^N,1) conjecture suite (non-blocking)", 0},
    {10, "O(4,3): pi^4/768 vs the printed pi^4/728", 0},
    {11, "property suites without printed numbers", 0},
};

// An expected mismatch must sit far outside its bounds to count as detected.
constexpr double kMismatchFactor = 100.0;

bool row_ok(const CheckRow& r) {
  if (r.kind == CheckKind::Printed && r.expect_mismatch) return !r.pass && r.ratio > kMismatchFactor;
  return r.pass;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    VerifyOptions o;
    o.suite = Suite::All;
    o.prec = Precision(50);
    o.cutoff = 1000000;
    o.criteria = {c.id};
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = run_verify(o);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int bad = 0;
    for (const auto& r : rep.rows) bad += !row_ok(r);
    bool time_ok = c.max_seconds == 0 || seconds <= c.max_seconds;
    bool ok = bad == 0 && time_ok && !rep.rows.empty();
    failed += !ok;
    std::printf("[%s] criterion %2d: %-52s %3zu checks, %6.2f s%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                rep.rows.size(), seconds, time_ok ? "" : " (over the time limit)");
    for (const auto& r : rep.rows) {
      if (row_ok(r)) continue;
      std::printf("         %s  %s\n           left %s\n           right %s\n           |diff| %s  tol %s\n",
                  r.id.c_str(), r.description.c_str(), r.left.c_str(), r.right.c_str(), r.difference.c_str(),
                  r.tolerance.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
