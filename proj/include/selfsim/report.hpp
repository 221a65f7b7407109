#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace selfsim {

enum class Verdict { Pass, Fail, Inapplicable };

std::string_view to_string(Verdict v);

using Number = std::variant<std::int64_t, double>;

enum class Relation { Equal, LessEq, GreaterEq, Less, Info };

std::string_view to_string(Relation r);

/// One (depth, predicted, measured) row. For bounds, `predicted` is the bound
/// and the row holds iff `measured <relation> predicted`.
struct Measurement {
  int n = 0;
  std::string quantity;
  Number predicted;
  Number measured;
  Relation relation = Relation::Equal;
  bool holds = true;
};

/// Machine-checkable verdict for one theorem on one model over a depth range.
struct TheoremReport {
  std::string theorem;
  std::string model;
  int depth_min = 0;
  int depth_max = 0;
  Verdict verdict = Verdict::Pass;
  std::vector<Measurement> measurements;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }

  /// Integer equality; a mismatch fails the report.
  bool exact(int n, std::string quantity, std::int64_t predicted, std::int64_t measured);
  /// `measured <relation> bound`; a violation fails the report.
  bool bound(int n, std::string quantity, Number bound, Number measured, Relation relation);
  /// Boolean condition expected to equal `expected`.
  bool flag(int n, std::string quantity, bool expected, bool measured);
  /// Recorded for the reader; never affects the verdict.
  void info(int n, std::string quantity, Number value);

  /// Marks the report inapplicable (hypothesis unmet) unless it already failed.
  void inapplicable(std::string why);
  void fail(std::string witness);
};

}  // namespace selfsim
