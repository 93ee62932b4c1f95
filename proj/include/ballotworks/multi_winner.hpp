#pragma once

#include "ballotworks/apportionment.hpp"
#include "ballotworks/tally.hpp"

namespace ballotworks {

// At-large plurality: every ballot may mark up to max_marks candidates and the
// `seats` highest totals win. max_marks = seats is the block vote, 1 is SNTV,
// anything between is the limited vote.
TallyResult block_vote(const NominalProfile& p, int seats, int max_marks,
                       const TiePolicy& tie);
TallyResult limited_vote(const NominalProfile& p, int seats, int max_marks,
                         const TiePolicy& tie);
TallyResult sntv(const NominalProfile& p, int seats, const TiePolicy& tie);

// The leading party takes every seat.
SeatAllocation party_block_vote(const PartyVotes& votes, long long seats,
                                const TiePolicy& tie);

struct StvConfig {
  int seats = 1;
  QuotaKind quota = QuotaKind::droop;
  // Recompute the quota from the live (non-exhausted) weight at each count
  // start; off keeps the initial quota for the whole count.
  bool recompute_quota = false;
  TiePolicy tie;
};

// Single transferable vote with inclusive Gregory surpluses: every paper held
// by an elected candidate transfers at its current value times surplus/total.
// One action per count: electing the highest candidate at or over quota
// (distributing the surplus in the same count), else moving the next parcel
// batch of a part-transferred exclusion (descending value, one batch per
// count), else excluding the lowest candidate, else - when the continuing
// candidates exactly fill the remaining seats - electing the highest of them.
// The count stops the moment the last seat fills; parked parcels stay where
// they lie, which the round totals report faithfully.
TallyResult stv(const RankedProfile& p, const StvConfig& cfg);

}  // namespace ballotworks
