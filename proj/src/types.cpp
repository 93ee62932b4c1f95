#include "ballotworks/types.hpp"

#include <algorithm>
#include <optional>

namespace ballotworks {

int Roster::find(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

void require_roster(const Roster& roster) {
  if (roster.size() == 0) fail(Errc::empty_roster, "roster has no candidates");
}

// Returns the offending error for one ballot, or nullopt if valid.
template <class Seq>
std::optional<Errc> check_candidates(const Seq& ids, int k) {
  std::vector<int> seen;
  for (int c : ids) {
    if (c < 0 || c >= k) return Errc::unknown_candidate;
    if (std::find(seen.begin(), seen.end(), c) != seen.end())
      return Errc::duplicate_candidate_in_ballot;
    seen.push_back(c);
  }
  return std::nullopt;
}

template <class Ballot, class Validate>
Built<Ballot> build(Roster roster, std::vector<Ballot> ballots, Strictness strictness,
                    Validate validate) {
  require_roster(roster);
  Built<Ballot> out;
  out.profile.roster = std::move(roster);
  for (auto& b : ballots) {
    std::optional<Errc> bad;
    if (b.weight < 1)
      bad = Errc::invalid_ballot;
    else
      bad = validate(b);
    if (bad) {
      if (strictness == Strictness::strict)
        fail(*bad, std::string("invalid ballot: ") + errc_name(*bad));
      out.spoiled += std::max<Weight>(b.weight, 0);
      continue;
    }
    out.profile.total_weight += b.weight;
    out.profile.ballots.push_back(std::move(b));
  }
  return out;
}

}  // namespace

Built<RankedBallot> build_ranked_profile(Roster roster, std::vector<RankedBallot> ballots,
                                         Strictness strictness) {
  int k = roster.size();
  return build(std::move(roster), std::move(ballots), strictness,
               [k](const RankedBallot& b) -> std::optional<Errc> {
                 if (b.ranking.empty()) return Errc::invalid_ballot;
                 return check_candidates(b.ranking, k);
               });
}

Built<NominalBallot> build_nominal_profile(Roster roster, std::vector<NominalBallot> ballots,
                                           Strictness strictness) {
  int k = roster.size();
  auto built = build(std::move(roster), std::move(ballots), strictness,
                     [k](const NominalBallot& b) -> std::optional<Errc> {
                       if (b.marks.empty()) return Errc::invalid_ballot;
                       return check_candidates(b.marks, k);
                     });
  for (auto& b : built.profile.ballots) std::sort(b.marks.begin(), b.marks.end());
  return built;
}

Built<ScoreBallot> build_score_profile(Roster roster, std::vector<ScoreBallot> ballots,
                                       ScoreRange range, Strictness strictness) {
  int k = roster.size();
  return build(std::move(roster), std::move(ballots), strictness,
               [k, range](const ScoreBallot& b) -> std::optional<Errc> {
                 for (auto& [c, s] : b.scores) {
                   if (c < 0 || c >= k) return Errc::unknown_candidate;
                   if (s < range.lo || s > range.hi) return Errc::score_out_of_range;
                 }
                 return std::nullopt;
               });
}

Built<CumulativeBallot> build_cumulative_profile(Roster roster,
                                                 std::vector<CumulativeBallot> ballots,
                                                 Weight budget, Weight cap,
                                                 Strictness strictness) {
  if (budget < 1 || cap < 1) fail(Errc::bad_argument, "budget and cap must be positive");
  int k = roster.size();
  return build(std::move(roster), std::move(ballots), strictness,
               [k, budget, cap](const CumulativeBallot& b) -> std::optional<Errc> {
                 Weight spent = 0;
                 for (auto& [c, pts] : b.points) {
                   if (c < 0 || c >= k) return Errc::unknown_candidate;
                   if (pts < 0) return Errc::invalid_ballot;
                   if (pts > cap) return Errc::over_cap;
                   spent += pts;
                 }
                 if (spent > budget) return Errc::over_budget;
                 return std::nullopt;
               });
}

NominalProfile first_preferences(const RankedProfile& p) {
  NominalProfile out;
  out.roster = p.roster;
  out.total_weight = p.total_weight;
  for (const auto& b : p.ballots)
    out.ballots.push_back({{b.ranking.front()}, b.weight});
  return out;
}

NominalProfile all_listed(const RankedProfile& p) {
  NominalProfile out;
  out.roster = p.roster;
  out.total_weight = p.total_weight;
  for (const auto& b : p.ballots) {
    NominalBallot nb{b.ranking, b.weight};
    std::sort(nb.marks.begin(), nb.marks.end());
    out.ballots.push_back(std::move(nb));
  }
  return out;
}

NominalProfile top_k_marks(const RankedProfile& p, const std::vector<int>& depths) {
  if (depths.size() != p.ballots.size())
    fail(Errc::bad_argument, "one approval depth required per ballot entry");
  NominalProfile out;
  out.roster = p.roster;
  out.total_weight = p.total_weight;
  for (size_t i = 0; i < p.ballots.size(); ++i) {
    if (depths[i] < 1) fail(Errc::bad_argument, "approval depth must be >= 1");
    const auto& r = p.ballots[i].ranking;
    size_t n = std::min<size_t>(static_cast<size_t>(depths[i]), r.size());
    NominalBallot nb{std::vector<int>(r.begin(), r.begin() + n), p.ballots[i].weight};
    std::sort(nb.marks.begin(), nb.marks.end());
    out.ballots.push_back(std::move(nb));
  }
  return out;
}

}  // namespace ballotworks
