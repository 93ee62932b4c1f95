#pragma once

#include <optional>
#include <variant>

#include "ballotworks/pairwise.hpp"
#include "ballotworks/tally.hpp"

namespace ballotworks {

// ---- one-round rules ----

// Plurality over one-mark ballots.
TallyResult fptp(const NominalProfile& p, const TiePolicy& tie);

// Super-majority rule: the candidate whose share strictly exceeds q, if any.
// q is a fraction of the total weight, 0 < q < 1 (q = 1/2 is simple majority).
std::optional<int> quota_winner(const NominalProfile& p, const Rational& q);

// Most marks wins; ballots may mark any number of listed candidates.
TallyResult approval(const NominalProfile& p, const TiePolicy& tie);

struct BordaScheme {
  enum class Kind { standard, slovenian, dowdall, custom };
  Kind kind = Kind::standard;
  std::vector<Rational> custom;  // size k, strictly decreasing, non-negative

  // standard:  k-1, k-2, ..., 0
  // slovenian: k, k-1, ..., 1
  // dowdall:   1, 1/2, 1/3, ...
  // Unranked candidates always score 0.
  std::vector<Rational> points_for(int k) const;
};

TallyResult borda(const RankedProfile& p, const BordaScheme& scheme, const TiePolicy& tie);

// Sum of scores; candidates a ballot omits score the range's lower bound.
TallyResult range_voting(const ScoreProfile& p, const ScoreRange& range, const TiePolicy& tie);

// Highest lower-median grade; ties broken by repeatedly removing one median
// grade from each tied candidate and recomparing, then by policy.
TallyResult majority_judgement(const ScoreProfile& p, const ScoreRange& range,
                               const TiePolicy& tie);

// Each ballot spreads up to `budget` points, at most `cap` per candidate; the
// `seats` highest point totals win.
TallyResult cumulative(const CumulativeProfile& p, Weight budget, Weight cap, int seats,
                       const TiePolicy& tie);

// ---- elimination rules ----

TallyResult irv(const RankedProfile& p, const TiePolicy& tie);

// Eliminates the candidate with the most last places among continuing candidates
// until someone holds a majority of first preferences. Requires complete rankings.
TallyResult coombs(const RankedProfile& p, const TiePolicy& tie);

// Top-two instant runoff; rankings may be capped at max_prefs marks
// (2 = supplementary vote, 3 = the Sri Lankan variant).
TallyResult contingent(const RankedProfile& p, std::optional<int> max_prefs,
                       const TiePolicy& tie);

struct RunoffPair {
  int a = -1, b = -1;
};

// Two-round system over fresh one-mark profiles. Round one elects on a strict
// majority; otherwise the top two proceed and `round2` (restricted to them)
// decides. Missing round2 when one is needed is an error.
std::variant<int, RunoffPair> trs_round1(const NominalProfile& p, const TiePolicy& tie);
TallyResult trs(const NominalProfile& round1, const std::optional<NominalProfile>& round2,
                const TiePolicy& tie);

// Runoff simulated from rankings; equivalent to contingent with no mark cap.
TallyResult trs_from_ranked(const RankedProfile& p, const TiePolicy& tie);

// Exhaustive ballot over fresh one-mark profiles, one per round; each round
// eliminates the lowest candidate until someone reaches a majority of that
// round's turnout. Profiles may only mark continuing candidates.
TallyResult exhaustive(const std::vector<NominalProfile>& rounds, const TiePolicy& tie);

// Every round derived from the same rankings; round-for-round equal to IRV.
TallyResult exhaustive_from_ranked(const RankedProfile& p, const TiePolicy& tie);

// ---- Condorcet family ----

// Smallest non-empty set whose members all beat every outsider head to head.
std::vector<int> smith_set(const PairwiseMatrix& m);

// IRV restricted to the Smith set.
TallyResult smith_irv(const RankedProfile& p, const TiePolicy& tie);

// Condorcet winner when one exists, otherwise Borda.
TallyResult black(const RankedProfile& p, const BordaScheme& scheme, const TiePolicy& tie);

enum class PathStrength { winning_votes, margins };

struct SchulzeResult {
  std::vector<std::vector<int>> ranking;  // strongest group first, ties grouped
  std::vector<int> winners;               // first group
  std::vector<std::vector<Weight>> p;     // widest-path strengths
  PairwiseMatrix d;
  bool operator==(const SchulzeResult&) const = default;
};

SchulzeResult schulze(const RankedProfile& p,
                      PathStrength strength = PathStrength::winning_votes);

}  // namespace ballotworks
