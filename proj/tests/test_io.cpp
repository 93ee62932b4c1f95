#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ballotworks/criteria.hpp"
#include "ballotworks/io.hpp"
#include "ballotworks/single_winner.hpp"
#include "doctest.h"

using namespace ballotworks;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_same_profile(const RankedProfile& a, const RankedProfile& b) {
  REQUIRE(a.roster.size() == b.roster.size());
  for (int c = 0; c < a.roster.size(); ++c)
    CHECK(a.roster.name(c) == b.roster.name(c));
  CHECK(a.ballots == b.ballots);
  CHECK(a.total_weight == b.total_weight);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ElectionError& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::bad_argument;
}

int line_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ElectionError& e) {
    return e.line();
  }
  FAIL("no error raised");
  return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("ballot files parse to their written form and back") {
  std::string text = slurp(BALLOTWORKS_DATA_DIR "/derwent.blt");
  ElectionFile f = parse_blt(text);

  CHECK(f.candidate_count == 5);
  CHECK(f.seats == 1);
  CHECK(f.withdrawn.empty());
  REQUIRE(f.ballots.size() == 14);
  CHECK(f.ballots.front() == RankedBallot{{0}, 870});
  CHECK(f.ballots.back() == RankedBallot{{4, 2}, 307});
  CHECK(f.names == std::vector<std::string>{"PBe", "PBi", "MEv", "CLe", "FPe"});
  CHECK(f.title == "Derwent Valley mayoral election 2014");

  CHECK(write_blt(f) == text);
  CHECK(parse_blt(write_blt(f)) == f);

  auto built = blt_to_profile(f);
  CHECK(built.profile.total_weight == 3878);
  CHECK(built.seats == 1);
  CHECK(built.spoiled == 0);
}

TEST_CASE("carriage returns and blank lines are tolerated") {
  std::string text = "2 1\r\n\r\n3 1 2 0\r\n1 2 0\r\n0\r\n\"A\"\r\n\"B\"\r\n\"T\"\r\n";
  ElectionFile f = parse_blt(text);
  CHECK(f.ballots.size() == 2);
  CHECK(f.title == "T");
}

TEST_CASE("withdrawals drop candidates and renumber the rest") {
  std::string text =
      "3 1\n-2\n4 1 2 3 0\n2 2 0\n1 3 1 0\n0\n\"A\"\n\"B\"\n\"C\"\n\"T\"\n";
  ElectionFile f = parse_blt(text);
  CHECK(f.withdrawn == std::vector<int>{1});

  auto built = blt_to_profile(f);
  REQUIRE(built.profile.roster.size() == 2);
  CHECK(built.profile.roster.name(0) == "A");
  CHECK(built.profile.roster.name(1) == "C");
  // "4 1 2 3" loses B; "2 2" empties out and its weight is spoiled.
  CHECK(built.profile.ballots[0] == RankedBallot{{0, 1}, 4});
  CHECK(built.spoiled == 2);
  CHECK(built.profile.total_weight == 5);
}

TEST_CASE("malformed ballot files carry a line number") {
  auto parse = [](std::string text) { return [text] { parse_blt(text); }; };
  std::string tail = "0\n\"A\"\n\"B\"\n\"T\"\n";

  CHECK(code_of(parse("x 1\n" + tail)) == Errc::syntax_error);
  CHECK(line_of(parse("x 1\n" + tail)) == 1);
  CHECK(code_of(parse("0 1\n" + tail)) == Errc::syntax_error);
  CHECK(code_of(parse("2 0\n" + tail)) == Errc::syntax_error);

  CHECK(code_of(parse("2 1\n0 1 0\n" + tail)) == Errc::syntax_error);
  CHECK(code_of(parse("2 1\n1 1 0\n-1 1 0\n" + tail)) == Errc::syntax_error);
  CHECK(code_of(parse("2 1\n1 3 0\n" + tail)) ==
        Errc::candidate_index_out_of_range);
  CHECK(code_of(parse("2 1\n1 1 1 0\n" + tail)) ==
        Errc::duplicate_candidate_in_ballot);
  CHECK(line_of(parse("2 1\n1 1 0\n1 1 1 0\n" + tail)) == 3);
  CHECK(code_of(parse("2 1\n1 0\n" + tail)) == Errc::syntax_error);

  // Ballot section that never terminates.
  CHECK(code_of(parse("2 1\n1 1 2\n" + tail)) == Errc::missing_terminator);
  CHECK(code_of(parse("2 1\n1 1 2 0\n")) == Errc::missing_terminator);
  CHECK(code_of(parse("2 1\n" + tail)) == Errc::syntax_error);

  // Withdrawal line trouble: mixed signs, repeats, out of range.
  CHECK(code_of(parse("2 1\n-1 2\n1 2 0\n" + tail)) == Errc::syntax_error);
  CHECK(code_of(parse("2 1\n-1 -1\n1 2 0\n" + tail)) == Errc::syntax_error);
  CHECK(code_of(parse("2 1\n-3\n1 2 0\n" + tail)) ==
        Errc::candidate_index_out_of_range);

  // Name and title sections.
  CHECK(code_of(parse("2 1\n1 1 0\n0\n\"A\"\nB\n\"T\"\n")) == Errc::syntax_error);
  CHECK(line_of(parse("2 1\n1 1 0\n0\n\"A\"\nB\n\"T\"\n")) == 5);
  CHECK(code_of(parse("2 1\n1 1 0\n0\n\"A\"\n\"B\"\n")) == Errc::syntax_error);
  CHECK(code_of(parse("2 1\n1 1 0\n" + tail + "\"extra\"\n")) ==
        Errc::syntax_error);
}

TEST_CASE("party tables survive a round trip with exact values") {
  std::string text =
      "# regional list\nparty,votes\nAlpha,34.97\nBeta,1/3\nGamma,120\n";
  PartyVotes v = parse_party_csv(text);
  REQUIRE(v.entries.size() == 3);
  CHECK(v.entries[0].second == Rational(3497, 100));
  CHECK(v.entries[1].second == Rational(1, 3));
  CHECK(v.entries[2].second == 120);

  std::string out = write_party_csv(v);
  CHECK(out == "party,votes\nAlpha,3497/100\nBeta,1/3\nGamma,120\n");
  CHECK(parse_party_csv(out).entries == v.entries);

  // Names may contain commas; the split happens at the last one.
  PartyVotes odd = parse_party_csv("Left, Greens,12\n");
  REQUIRE(odd.entries.size() == 1);
  CHECK(odd.entries[0].first == "Left, Greens");
  CHECK(odd.entries[0].second == 12);

  CHECK(code_of([] { parse_party_csv("A,1\nA,2\n"); }) == Errc::duplicate_party);
  CHECK(code_of([] { parse_party_csv("A,-1\n"); }) == Errc::negative_votes);
  CHECK(code_of([] { parse_party_csv("A,1.2.3\n"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_party_csv("justonefield\n"); }) == Errc::syntax_error);
}

TEST_CASE("constituency tables accept whole seat counts only") {
  auto seats = parse_constituency_csv("party,seats\nP,4\nQ,0\n");
  CHECK(seats.at("P") == 4);
  CHECK(seats.at("Q") == 0);

  CHECK(code_of([] { parse_constituency_csv("P,1.5\n"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_constituency_csv("P,-1\n"); }) == Errc::negative_votes);
  CHECK(code_of([] { parse_constituency_csv("P,1\nP,2\n"); }) ==
        Errc::duplicate_party);
}

TEST_CASE("exact values ride through json") {
  Rational r(-1311, 80);
  auto j = rational_to_json(r, 4);
  CHECK(j["num"] == -1311);
  CHECK(j["den"] == 80);
  CHECK(j["display"] == "-16.3875");
  CHECK(rational_from_json(j) == r);

  // Past 64 bits the components travel as decimal strings.
  Rational big = Rational(std::string("123456789012345678901234567890")) / 7;
  auto bj = rational_to_json(big);
  REQUIRE(bj["num"].is_string());
  CHECK(rational_from_json(bj) == big);

  CHECK(rational_from_json(nlohmann::json{{"num", 1}, {"den", 3}}) ==
        Rational(1, 3));
}

TEST_CASE("count results survive a json round trip") {
  auto blt = blt_to_profile(parse_blt(slurp(BALLOTWORKS_DATA_DIR "/derwent.blt")));
  TallyResult res = irv(blt.profile, tie_backward());
  auto wasted = wasted_votes(blt.profile, res.winners);

  auto j = result_to_json(res, blt.profile.roster, "irv", 2, wasted);
  ParsedResult back = result_from_json(j);

  CHECK(back.method == "irv");
  CHECK(back.result == res);
  CHECK(back.roster.size() == 5);
  REQUIRE(back.wasted.has_value());
  CHECK(back.wasted->count == wasted.count);
  CHECK(back.wasted->fraction == wasted.fraction);

  auto no_waste = result_from_json(result_to_json(res, blt.profile.roster, "irv"));
  CHECK(!no_waste.wasted.has_value());

  j["winners"][0] = "nobody";
  CHECK(code_of([&] { result_from_json(j); }) == Errc::unknown_candidate);
}

TEST_CASE("profiles and verdicts serialize with stable bytes") {
  auto e2 = election_two();
  auto j = profile_to_json(e2, "who knows", 1);
  BltProfile back = ranked_profile_from_json(j);
  check_same_profile(back.profile, e2);
  CHECK(back.title == "who knows");
  CHECK(back.seats == 1);

  auto v = search_monotonicity(MethodId::irv, e2, 2);
  REQUIRE(v.status == Verdict::Status::violated);
  auto vj = verdict_to_json(v);
  CHECK(vj["status"] == "violated");
  CHECK(vj["search_size"].get<long long>() == v.search_size);
  REQUIRE(vj.contains("witness"));
  check_same_profile(ranked_profile_from_json(vj["witness"]["before"]).profile, e2);
  CHECK(vj["witness"]["note"] == v.witness->note);

  auto held = verdict_to_json(search_monotonicity(MethodId::irv, election_one(), 2));
  CHECK(held["status"] == "not refuted within bounds");
  CHECK(held["witness"].is_null());

  std::string once = serialize(vj);
  CHECK(once == serialize(vj));
  CHECK(once.back() == '\n');
  CHECK(once.find("  \"status\"") != std::string::npos);
}

}  // TEST_SUITE
