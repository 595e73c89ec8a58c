#include <algorithm>

#include "doctest.h"
#include "zetakit/verify.hpp"

using namespace zetakit;

namespace {

VerifyReport run(Suite s, std::vector<int> criteria, unsigned threads) {
  VerifyOptions o;
  o.suite = s;
  o.prec = Precision(30);
  o.cutoff = 10000;
  o.criteria = std::move(criteria);
  o.threads = threads;
  return run_verify(o);
}

}  // namespace

TEST_CASE("rows are ordered by id whatever the thread count") {
  VerifyReport one = run(Suite::All, {3, 11}, 1);
  VerifyReport three = run(Suite::All, {3, 11}, 3);
  REQUIRE(one.rows.size() == three.rows.size());
  CHECK(std::is_sorted(one.rows.begin(), one.rows.end(), [](auto& a, auto& b) { return a.id < b.id; }));
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].id == three.rows[i].id);
    CHECK(one.rows[i].left == three.rows[i].left);
  }
  CHECK(report_json(one).dump() == report_json(three).dump());
}

TEST_CASE("suite and criterion filters") {
  VerifyReport props = run(Suite::Properties, {}, 0);
  REQUIRE(!props.rows.empty());
  for (const auto& r : props.rows) CHECK(r.criterion == 11);
  CHECK(run(Suite::Conjectures, {3}, 0).rows.empty());
  VerifyReport c10 = run(Suite::Paper, {10}, 0);
  for (const auto& r : c10.rows) CHECK(r.id.rfind("C10.", 0) == 0);
}

TEST_CASE("pass matches |diff| <= tol and printed rows never block") {
  VerifyReport r = run(Suite::Paper, {5, 10}, 0);
  int printed_bad = 0;
  for (const auto& row : r.rows) {
    if (row.kind == CheckKind::Printed && !row.pass) ++printed_bad;
    if (row.kind == CheckKind::Printed && row.expect_mismatch) CHECK(row.ratio > 100);
  }
  CHECK(printed_bad == r.printed_mismatch);
  CHECK(printed_bad > 0);
  CHECK(r.theorem_failed == 0);
  CHECK(r.ok(true));
}
