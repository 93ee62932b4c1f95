#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ballotworks/apportionment.hpp"
#include "ballotworks/criteria.hpp"
#include "ballotworks/mixed.hpp"
#include "ballotworks/tally.hpp"

namespace ballotworks {

// A ballot file as written: "k n" header, an optional line of negative indices
// withdrawing candidates, weighted preference lines "w c1 c2 .. 0", a lone "0",
// k quoted names, and a quoted title. Candidate indices are 1-based in files,
// 0-based here and everywhere else.
struct ElectionFile {
  int candidate_count = 0;
  int seats = 0;
  std::vector<int> withdrawn;
  std::vector<RankedBallot> ballots;
  std::vector<std::string> names;
  std::string title;
  bool operator==(const ElectionFile&) const = default;
};

// Throws with 1-based line numbers on malformed input. LF or CRLF accepted.
ElectionFile parse_blt(const std::string& text);
std::string write_blt(const ElectionFile& f);

struct BltProfile {
  RankedProfile profile;
  int seats = 0;
  std::string title;
  Weight spoiled = 0;  // weight dropped by withdrawals or lenient validation
};

// Withdrawn candidates leave the roster; survivors are renumbered in file
// order and ballots reduced accordingly. Ballots left empty lose their weight.
BltProfile blt_to_profile(const ElectionFile& f,
                          Strictness strictness = Strictness::strict);

// CSV "party,votes" with an optional header line and '#' comments. Votes may
// be integers, decimals, or "num/den"; all are kept exact.
PartyVotes parse_party_csv(const std::string& text);
std::string write_party_csv(const PartyVotes& votes);

// CSV "party,seats" for constituency wins.
std::map<std::string, long long> parse_constituency_csv(const std::string& text);

// ---- JSON ----
// Exact values ride as {"num", "den", "display"}; num/den are JSON integers
// when they fit in 64 bits and decimal strings otherwise. Serialization is
// byte-stable: sorted keys, two-space indent, trailing newline.

nlohmann::json rational_to_json(const Rational& r, int display_scale = 2);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const TallyResult& r, const Roster& roster,
                              const std::string& method, int display_scale = 2,
                              const std::optional<WastedVotes>& wasted = {});
struct ParsedResult {
  TallyResult result;
  Roster roster;
  std::string method;
  std::optional<WastedVotes> wasted;
};
ParsedResult result_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const SeatAllocation& a, int display_scale = 2);
nlohmann::json mixed_to_json(const MixedResult& m, int display_scale = 2);

nlohmann::json profile_to_json(const RankedProfile& p, const std::string& title,
                               int seats);
BltProfile ranked_profile_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v, int display_scale = 2);

std::string serialize(const nlohmann::json& j);

}  // namespace ballotworks
