#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ballotworks/rational.hpp"

namespace ballotworks {

struct TiePolicy {
  enum class Mode {
    error,                       // refuse: throw tie_unresolved with the tied set
    first_listed,                // lowest roster index wins the pick
    backward_then_first_listed,  // walk earlier rounds' totals, then roster order
    seeded_random,               // reproducible draw from `seed`
    scripted,                    // consume `script`; exhausts into error (audit use)
  };
  Mode mode = Mode::backward_then_first_listed;
  std::uint64_t seed = 0;
  std::vector<int> script;
};

inline TiePolicy tie_error() { return {TiePolicy::Mode::error, 0, {}}; }
inline TiePolicy tie_first_listed() { return {TiePolicy::Mode::first_listed, 0, {}}; }
inline TiePolicy tie_backward() { return {}; }
inline TiePolicy tie_seeded(std::uint64_t seed) {
  return {TiePolicy::Mode::seeded_random, seed, {}};
}
inline TiePolicy tie_scripted(std::vector<int> script) {
  return {TiePolicy::Mode::scripted, 0, std::move(script)};
}

struct TieEvent {
  int round = 0;
  std::vector<int> tied;
  int chosen = -1;
  bool operator==(const TieEvent&) const = default;
};

std::uint64_t splitmix64(std::uint64_t x);

// Resolves one tie at a time; engines own one breaker per run so seeded draws
// advance deterministically across rounds.
class TieBreaker {
 public:
  TieBreaker(const TiePolicy& policy, std::vector<TieEvent>* log)
      : policy_(policy), log_(log) {}

  // `tied` must be sorted ascending. `history` holds one totals map per earlier
  // round, oldest first; the backward mode walks it newest first keeping the
  // highest (keep_high) or lowest entries. Candidates absent from a round count 0.
  int pick(const std::vector<int>& tied,
           const std::vector<std::map<int, Rational>>& history, bool keep_high,
           int round);

 private:
  TiePolicy policy_;
  std::vector<TieEvent>* log_;
  std::uint64_t draws_ = 0;
  size_t script_pos_ = 0;
};

}  // namespace ballotworks
