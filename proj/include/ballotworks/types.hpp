#pragma once

#include <map>
#include <string>
#include <vector>

#include "ballotworks/errors.hpp"
#include "ballotworks/rational.hpp"

namespace ballotworks {

using Weight = long long;

struct Roster {
  std::vector<std::string> names;
  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(int c) const { return names.at(static_cast<size_t>(c)); }
  // Index for a display name; -1 when absent.
  int find(const std::string& name) const;
};

// Candidates are 0-based roster indices throughout; 1-based only in ballot files.

struct RankedBallot {
  std::vector<int> ranking;  // most preferred first, no repeats, may be truncated
  Weight weight = 1;
  bool operator==(const RankedBallot&) const = default;
};

struct NominalBallot {
  std::vector<int> marks;  // kept sorted ascending, no repeats
  Weight weight = 1;
  bool operator==(const NominalBallot&) const = default;
};

struct ScoreBallot {
  std::map<int, int> scores;  // omitted candidates score the configured lower bound
  Weight weight = 1;
  bool operator==(const ScoreBallot&) const = default;
};

struct CumulativeBallot {
  std::map<int, Weight> points;
  Weight weight = 1;
  bool operator==(const CumulativeBallot&) const = default;
};

// One entry per ballot paper as cast; equal papers are usually collapsed into a
// single entry whose weight carries the multiplicity. Treat as immutable once built.
template <class Ballot>
struct Profile {
  Roster roster;
  std::vector<Ballot> ballots;
  Weight total_weight = 0;
  bool operator==(const Profile&) const = default;
};

using RankedProfile = Profile<RankedBallot>;
using NominalProfile = Profile<NominalBallot>;
using ScoreProfile = Profile<ScoreBallot>;
using CumulativeProfile = Profile<CumulativeBallot>;

enum class Strictness { strict, lenient };

template <class Ballot>
struct Built {
  Profile<Ballot> profile;
  Weight spoiled = 0;  // weight dropped under lenient validation
};

struct ScoreRange {
  int lo = 0;
  int hi = 5;
};

// Validation: candidates known, no repeats, weight >= 1, at least one mark/rank.
// strict throws on the first offense; lenient drops the ballot and counts it.
Built<RankedBallot> build_ranked_profile(Roster roster, std::vector<RankedBallot> ballots,
                                         Strictness strictness);
Built<NominalBallot> build_nominal_profile(Roster roster, std::vector<NominalBallot> ballots,
                                           Strictness strictness);
Built<ScoreBallot> build_score_profile(Roster roster, std::vector<ScoreBallot> ballots,
                                       ScoreRange range, Strictness strictness);
Built<CumulativeBallot> build_cumulative_profile(Roster roster,
                                                 std::vector<CumulativeBallot> ballots,
                                                 Weight budget, Weight cap,
                                                 Strictness strictness);

// First preference of each ranked ballot as a one-mark nominal profile.
NominalProfile first_preferences(const RankedProfile& p);

// Every listed candidate marked (the ranked ballot read as an approval ballot).
NominalProfile all_listed(const RankedProfile& p);

// Top min(depth, listed) candidates marked, one depth per ballot entry.
NominalProfile top_k_marks(const RankedProfile& p, const std::vector<int>& depths);

}  // namespace ballotworks
