#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballotworks/quota.hpp"
#include "ballotworks/tie.hpp"
#include "ballotworks/types.hpp"

namespace ballotworks {

struct PartyVotes {
  std::vector<std::pair<std::string, Rational>> entries;  // input order is kept
  Rational total() const;
  // No duplicate names, no negative vote counts.
  void validate() const;
};

struct PartyRow {
  std::string party;
  Rational votes;
  long long seats = 0;
  bool excluded = false;  // below threshold
  // Highest-averages working column: votes / d_0, votes / d_1, ...
  std::vector<Rational> averages;
  // Largest-remainder working columns.
  Rational quotient;
  long long quotient_floor = 0;
  Rational remainder;
  long long extra = 0;
  bool operator==(const PartyRow&) const = default;
};

struct SeatAllocation {
  std::vector<PartyRow> rows;  // input order
  long long house = 0;
  std::optional<Rational> quota;           // largest remainder only
  std::vector<Rational> winning_averages;  // the selected averages, descending
  std::vector<TieEvent> ties;              // indices refer to rows
  long long seats_of(const std::string& party) const;
  bool operator==(const SeatAllocation&) const = default;
};

struct DivisorFamily {
  enum class Kind {
    dhondt,                 // 1, 2, 3, ...
    sainte_lague,           // 1, 3, 5, ...
    modified_sainte_lague,  // 1.4, 3, 5, ...
    imperiali,              // 2, 3, 4, ...
    danish,                 // 1, 4, 7, ...
    custom,                 // strictly increasing positive values
  };
  Kind kind = Kind::dhondt;
  std::vector<Rational> custom;
  Rational divisor(long long i) const;  // 0-based
};

// d'Hondt/Sainte-Lague style: hand seats to the `house` highest quotients
// votes/d_i. Parties whose share of the total falls strictly below `threshold`
// (a fraction, e.g. 5/100) are excluded first. Boundary ties fall to the policy.
SeatAllocation highest_averages(const PartyVotes& votes, long long house,
                                const DivisorFamily& family, const Rational& threshold,
                                const TiePolicy& tie);

// Floor of votes/quota per party, leftover seats by descending remainder.
// The quota divides the full vote total by default; quota_votes overrides that
// total (useful when the tallied rows omit part of the valid poll). Throws
// initial_seats_exceed_house when the floors alone overshoot (possible with the
// imperiali quota).
SeatAllocation largest_remainder(const PartyVotes& votes, long long house, QuotaKind kind,
                                 const Rational& threshold, const TiePolicy& tie,
                                 std::optional<Rational> quota_votes = {});

// Reorders a party list by personal votes (descending) and returns the first
// `seats` names. Ties inside the elected block keep list order; a tie across
// the seat boundary falls to the policy.
std::vector<std::string> open_list_order(
    const std::vector<std::pair<std::string, Weight>>& list, long long seats,
    const TiePolicy& tie);

}  // namespace ballotworks
