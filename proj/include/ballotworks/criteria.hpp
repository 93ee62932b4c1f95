#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ballotworks/apportionment.hpp"
#include "ballotworks/single_winner.hpp"

namespace ballotworks {

// The single-winner rules the audit machinery knows how to drive.
enum class MethodId {
  fptp,
  approval,
  trs,
  contingent,
  exhaustive,
  irv,
  borda,
  cumulative,
  schulze,
};

const char* method_name(MethodId m);
std::optional<MethodId> method_from_name(const std::string& name);

// How ranked ballots are cast under rules whose ballots carry less than a full
// ranking. Approval marks the top `depth` listed candidates per ballot entry
// (missing or empty = first choice only). Cumulative spends a budget of
// k(k-1)/2 points, either all on the favorite or descending down the ranking;
// per-entry overrides name an explicit allocation.
struct Behavior {
  std::vector<int> approval_depths;
  enum class Points { plump, spread };
  Points points = Points::plump;
  std::map<size_t, std::map<int, Weight>> point_overrides;
  bool operator==(const Behavior&) const = default;
};

Weight cumulative_budget(int k);
NominalProfile approval_profile(const RankedProfile& p, const Behavior& b);
CumulativeProfile cumulative_profile(const RankedProfile& p, const Behavior& b);

// Casts `p` the way `m` needs it and tallies.
TallyResult audit_tally(MethodId m, const RankedProfile& p, const Behavior& b,
                        const TiePolicy& tie);

// Every winner reachable over every resolution of every tie the count hits.
// A singleton means the rule is decisive on this profile.
std::set<int> winner_set(MethodId m, const RankedProfile& p, const Behavior& b = {});

enum class CriterionKind {
  equality,
  neutrality,
  majority,
  condorcet,
  monotonicity,
  pareto,
  iia,
  nearly_decisive,
};

const char* criterion_name(CriterionKind c);

// A violation kept replayable: tallying `after` under `behavior` reproduces
// `winners_after`. `winners_before` is the baseline outcome, tallied under the
// method's canonical behavior (instance checks store the entitled winner).
struct Witness {
  RankedProfile before;
  RankedProfile after;
  Behavior behavior;
  std::set<int> winners_before;
  std::set<int> winners_after;
  std::string note;
};

struct Verdict {
  enum class Status {
    holds,        // instance check passed (or held vacuously)
    violated,     // witness attached, already replayed
    not_refuted,  // search exhausted its bounds without a counterexample
  };
  Status status = Status::holds;
  std::optional<Witness> witness;
  long long search_size = 0;  // tallies evaluated
};

// First-preference strict majority holder, if any.
std::optional<int> majority_candidate(const RankedProfile& p);

// Instance checks. Rules driven by a Behavior are quantified over the
// enumerated behavior space: one violating behavior refutes the criterion.
Verdict check_majority(MethodId m, const RankedProfile& p);
Verdict check_condorcet(MethodId m, const RankedProfile& p);
Verdict check_pareto(MethodId m, const RankedProfile& p);

// Winner sets must survive reordering the ballot list: every order when the
// profile has at most 6 entries, otherwise rotations plus 64 seeded shuffles.
Verdict check_equality(MethodId m, const RankedProfile& p, std::uint64_t seed = 0);

// Winner sets must follow every relabeling of the candidates.
Verdict check_neutrality(MethodId m, const RankedProfile& p);

// Bounded search for a winner hurt by ballots moving in the winner's favor.
// A move swaps the winner with a higher-ranked candidate on one ballot paper
// (approval may instead extend a paper's marks to reach the winner); at most
// `bounds` papers are moved. Profiles without a decisive winner pass vacuously.
Verdict search_monotonicity(MethodId m, const RankedProfile& p, int bounds);

// Bounded search for a decisive winner flip from w to x while every rewritten
// ballot keeps its relative w-vs-x stance. Rewrites replace up to `bounds`
// whole ballot entries with any ranking (approval: any mark set; cumulative:
// any point allocation) preserving that entry's stance.
Verdict search_iia(MethodId m, const RankedProfile& p, int bounds);

struct TableCell {
  CriterionKind criterion;
  Verdict verdict;
};

struct TableRow {
  MethodId method;
  std::vector<TableCell> cells;  // equality .. iia, in CriterionKind order
};

// Runs all seven criteria for each method over the pool in order, stopping a
// cell at its first verified violation. Ticks certify only "not refuted over
// this pool within these bounds".
std::vector<TableRow> criteria_table(const std::vector<MethodId>& methods,
                                     const std::vector<RankedProfile>& pool, int bounds,
                                     std::uint64_t seed = 0);

// Canonical audit seeds: the three worked three-candidate elections, the
// majority variant of the first, and the cyclic profile.
RankedProfile election_one();
RankedProfile election_two();
RankedProfile election_three();
RankedProfile election_one_majority();
RankedProfile cyclic_profile();
std::vector<RankedProfile> default_audit_pool();

// Every multiset of complete rankings over k candidates with 1..max_ballots
// papers, unit weights collapsed per ranking, lexicographic order.
std::vector<RankedProfile> enumerate_complete_profiles(int k, int max_ballots);

// ---- two-candidate decision rules ----

// votes[i] is voter i's choice, candidate 0 or 1; the outcome is the winner
// set ({0,1} = tie).
struct TwoCandidateRule {
  std::string name;
  std::function<std::set<int>(const std::vector<int>&)> outcome;
};

TwoCandidateRule simple_majority_rule();
// Wins only on a share strictly above q (a fraction of the voters).
TwoCandidateRule super_majority_rule(const Rational& q);
TwoCandidateRule constant_tie_rule();

struct MayCheck {
  std::string property;  // egalitarian, neutral, monotone, nearly decisive
  bool holds = true;
  std::string witness;  // first offending vote vector, empty when holds
};

struct MayReport {
  std::vector<MayCheck> checks;
  long long profiles = 0;
};

// Exhausts every ordered 0/1 vote vector with 1..max_voters voters.
// egalitarian: outcome depends only on the two counts; neutral: flipping all
// votes flips the outcome; monotone: a decisive winner survives any single
// switch toward it; nearly decisive: ties only on exact splits.
MayReport check_may_properties(const TwoCandidateRule& rule, int max_voters);

// ---- wasted votes ----

struct WastedVotes {
  Rational count;
  Rational fraction;  // of the total weight (votes for list methods)
};

// Ballots none of whose marked / ranked candidates were elected.
WastedVotes wasted_votes(const NominalProfile& p, const std::vector<int>& winners);
WastedVotes wasted_votes(const RankedProfile& p, const std::vector<int>& winners);
// Votes for parties that took no seat.
WastedVotes wasted_votes(const SeatAllocation& a);

}  // namespace ballotworks
