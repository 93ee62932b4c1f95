#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ballotworks/tie.hpp"
#include "ballotworks/types.hpp"

namespace ballotworks {

struct RoundAction {
  enum class Kind { none, elected, excluded, runoff };
  Kind kind = Kind::none;
  int candidate = -1;  // elected / excluded
  int runoff_a = -1;
  int runoff_b = -1;
  bool operator==(const RoundAction&) const = default;

  static RoundAction elected(int c) { return {Kind::elected, c, -1, -1}; }
  static RoundAction excluded(int c) { return {Kind::excluded, c, -1, -1}; }
  static RoundAction runoff(int a, int b) { return {Kind::runoff, -1, a, b}; }
};

// One count. `totals` holds the standing value of every candidate still holding
// votes at the start of the count (elected candidates keep their retained value,
// a mid-exclusion candidate keeps the not-yet-moved parcels). `transfers` records
// this count's movements, negative outflow and positive inflow; their sum equals
// minus the growth of `exhausted`, so weight is conserved row to row.
struct RoundReport {
  int index = 1;
  std::map<int, Rational> totals;
  Rational exhausted = 0;
  std::optional<Rational> quota;
  RoundAction action;
  std::map<int, Rational> transfers;
  bool operator==(const RoundReport&) const = default;
};

struct TallyResult {
  std::vector<int> winners;  // in election order
  std::vector<RoundReport> rounds;
  std::vector<TieEvent> ties;
  std::string note;  // free-form remark, e.g. which branch a hybrid method took
  bool operator==(const TallyResult&) const = default;
};

}  // namespace ballotworks
