#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ballotworks/apportionment.hpp"

namespace ballotworks {

// One switchable list-seat apportionment rule.
struct ApportionSpec {
  enum class Method { highest_averages, largest_remainder };
  Method method = Method::highest_averages;
  DivisorFamily family;                    // highest averages only
  QuotaKind quota = QuotaKind::hare;       // largest remainder only
  std::optional<Rational> quota_votes;     // largest remainder base override
  Rational threshold = 0;
  TiePolicy tie = tie_backward();
};

SeatAllocation apportion(const PartyVotes& votes, long long house,
                         const ApportionSpec& spec);

struct MixedRow {
  std::string party;
  long long constituency = 0;
  long long entitlement = 0;  // list-vote share of the tier this row competed in
  long long list = 0;         // seats actually filled from the list
  long long total = 0;
  long long overhang = 0;
  bool operator==(const MixedRow&) const = default;
};

struct MixedResult {
  std::vector<MixedRow> rows;  // party-vote order, then constituency-only parties
  long long house = 0;         // seats filled; exceeds the target under overhang
  SeatAllocation allocation;   // the list-vote apportionment behind `entitlement`
  long long seats_of(const std::string& party) const;
  bool operator==(const MixedResult&) const = default;
};

// Compensatory two-tier count: apportion all `total_seats` by party vote, then
// top parties up past their constituency wins. A party keeps constituency seats
// beyond its entitlement (overhang) and no leveling follows, so `house` can
// end up above `total_seats`.
MixedResult mmp(const PartyVotes& votes,
                const std::map<std::string, long long>& constituency_seats,
                long long total_seats, const ApportionSpec& spec);

// Non-compensatory two-tier count: the list tier is apportioned on its own and
// added to the constituency wins.
MixedResult parallel(const PartyVotes& votes,
                     const std::map<std::string, long long>& constituency_seats,
                     long long list_seats, const ApportionSpec& spec);

// Sums candidate-level votes by party, keeping first-appearance order. Covers
// systems where the party vote is implied by the constituency vote.
PartyVotes aggregate_party_votes(
    const std::vector<std::pair<std::string, Rational>>& candidate_votes);

}  // namespace ballotworks
