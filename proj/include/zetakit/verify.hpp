#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zetakit/hp_real.hpp"

namespace zetakit {

enum class Suite { Paper, Conjectures, Properties, All };

// Theorem: an identity that is proven, must hold.
// Conjecture: numerically supported only; reported, blocking only when strict.
// Printed: a value as it appears in print next to what the arithmetic gives.
//   Never blocks. `expect_mismatch` marks printed values known to be wrong,
//   where the interesting outcome is a gap far outside the error bounds.
enum class CheckKind { Theorem, Conjecture, Printed };

struct CheckRow {
  std::string id;
  int criterion = 0;
  std::string description;
  std::string left;
  std::string right;
  std::string difference;
  std::string tolerance;
  bool pass = false;
  CheckKind kind = CheckKind::Theorem;
  bool expect_mismatch = false;
  // |difference| / tolerance, used to judge expected mismatches
  double ratio = 0.0;

  bool conjectural() const { return kind == CheckKind::Conjecture; }
};

struct VerifyOptions {
  Suite suite = Suite::All;
  Precision prec{50};
  long cutoff = 1000000;
  // only these criteria (1..11); empty means every criterion of the suite
  std::vector<int> criteria;
  // 0: one worker per hardware thread
  unsigned threads = 0;
};

struct VerifyReport {
  std::vector<CheckRow> rows;  // sorted by id
  int theorem_failed = 0;
  int conjecture_failed = 0;
  int printed_mismatch = 0;
  int passed = 0;

  // exit status contract: theorem rows must pass, conjecture rows only in strict mode
  bool ok(bool strict_conjectures) const {
    return theorem_failed == 0 && (!strict_conjectures || conjecture_failed == 0);
  }
};

VerifyReport run_verify(const VerifyOptions& opts);

std::string report_table(const VerifyReport& r);
nlohmann::json report_json(const VerifyReport& r);

std::string_view suite_name(Suite s);
std::string_view kind_name(CheckKind k);

}  // namespace zetakit
