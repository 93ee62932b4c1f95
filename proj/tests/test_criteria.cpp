#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ballotworks/criteria.hpp"
#include "ballotworks/io.hpp"
#include "ballotworks/single_winner.hpp"
#include "doctest.h"
#include "support/gen.hpp"

using namespace ballotworks;

namespace {

RankedProfile ranked(const Roster& roster, std::vector<RankedBallot> ballots) {
  return build_ranked_profile(roster, std::move(ballots), Strictness::strict).profile;
}

// The after side always replays under the stored behavior. The before side
// only does for ranked-ballot methods, whose behavior carries no per-entry
// rewrites; elsewhere winners_before belongs to the canonical behavior.
void check_replay(MethodId m, const Witness& w) {
  if (m != MethodId::approval && m != MethodId::cumulative)
    CHECK(winner_set(m, w.before, w.behavior) == w.winners_before);
  CHECK(winner_set(m, w.after, w.behavior) == w.winners_after);
}

// Instance checks store the entitled winner in winners_before; only the actual
// outcome is a tally.
void check_replay_after(MethodId m, const Witness& w) {
  CHECK(winner_set(m, w.after, w.behavior) == w.winners_after);
}

const std::vector<MethodId> kAllMethods = {
    MethodId::fptp,     MethodId::approval,   MethodId::trs,
    MethodId::contingent, MethodId::exhaustive, MethodId::irv,
    MethodId::borda,    MethodId::cumulative, MethodId::schulze,
};

PartyVotes czestochowa() {
  PartyVotes v;
  auto add = [&](const std::string& p, long long hundredths) {
    v.entries.emplace_back(p, Rational(hundredths, 100));
  };
  add("PO", 3497);
  add("PiS", 2736);
  add("RP", 1339);
  add("SLD", 1049);
  add("PSL", 877);
  add("PJN", 214);
  add("NP", 206);
  add("PPP", 84);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("canonical elections and profile enumeration") {
  auto pool = default_audit_pool();
  REQUIRE(pool.size() == 5);
  for (const auto& p : pool) CHECK(p.roster.size() == 3);
  CHECK(pool[0].total_weight == 9);
  CHECK(pool[1].total_weight == 17);
  CHECK(pool[2].total_weight == 81);
  CHECK(pool[3].total_weight == 11);
  CHECK(pool[4].total_weight == 3);

  CHECK(!majority_candidate(election_one()).has_value());
  CHECK(majority_candidate(election_one_majority()) == 0);
  CHECK(!majority_candidate(cyclic_profile()).has_value());

  // Two rankings over two candidates, multisets of one or two papers.
  auto small = enumerate_complete_profiles(2, 2);
  REQUIRE(small.size() == 5);
  int singles = 0, pairs = 0;
  for (const auto& p : small) {
    REQUIRE(p.roster.size() == 2);
    (p.total_weight == 1 ? singles : pairs)++;
    CHECK(p.total_weight <= 2);
  }
  CHECK(singles == 2);
  CHECK(pairs == 3);

  // Multisets of size 1..5 drawn from the 6 rankings of three candidates.
  auto profiles = enumerate_complete_profiles(3, 5);
  CHECK(profiles.size() == 461);
  std::set<std::string> seen;
  for (const auto& p : profiles) {
    CHECK(p.total_weight >= 1);
    CHECK(p.total_weight <= 5);
    std::string key;
    for (const auto& b : p.ballots) {
      for (int c : b.ranking) key += static_cast<char>('0' + c);
      key += "x" + std::to_string(b.weight) + ";";
    }
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("ballot casting under a behavior") {
  CHECK(cumulative_budget(1) == 0);
  CHECK(cumulative_budget(3) == 3);
  CHECK(cumulative_budget(4) == 6);

  auto e1 = election_one();

  Behavior first_only;  // empty depth vector marks the first choice alone
  auto nom = approval_profile(e1, first_only);
  REQUIRE(nom.ballots.size() == 3);
  for (const auto& b : nom.ballots) CHECK(b.marks.size() == 1);

  Behavior two_deep;
  two_deep.approval_depths = {1, 2, 1};
  nom = approval_profile(e1, two_deep);
  CHECK(nom.ballots[1].marks == std::vector<int>{1, 2});

  // A short depth vector pads with first-choice-only entries.
  Behavior partial;
  partial.approval_depths = {2};
  nom = approval_profile(e1, partial);
  CHECK(nom.ballots[0].marks == std::vector<int>{0, 1});
  CHECK(nom.ballots[1].marks == std::vector<int>{1});
  CHECK(nom.ballots[2].marks == std::vector<int>{2});

  // Spread points descend down the ranking, plump stacks them on the favorite.
  auto maj = election_one_majority();
  auto points = [&](const Behavior& b) {
    auto r = cumulative(cumulative_profile(maj, b), cumulative_budget(3),
                        cumulative_budget(3), 1, tie_error());
    return r.rounds.back().totals;
  };
  Behavior spread;
  spread.points = Behavior::Points::spread;
  auto totals = points(spread);
  CHECK(totals[0] == 12);
  CHECK(totals[1] == 13);
  CHECK(totals[2] == 8);

  Behavior plump;
  totals = points(plump);
  CHECK(totals[0] == 18);
  CHECK(totals[1] == 6);
  CHECK(totals[2] == 9);

  Behavior steered;
  steered.point_overrides[0] = {{0, 2}, {1, 1}};
  CHECK(winner_set(MethodId::cumulative, e1, steered) == std::set<int>{1});
}

TEST_CASE("winner sets fork over every tie resolution") {
  Roster abc = testgen::letters(3);
  auto tied = ranked(abc, {{{0}, 2}, {{1}, 2}, {{2}, 1}});
  CHECK(winner_set(MethodId::fptp, tied) == std::set<int>{0, 1});

  Roster ab = testgen::letters(2);
  auto split = ranked(ab, {{{0, 1}, 1}, {{1, 0}, 1}});
  CHECK(winner_set(MethodId::irv, split) == std::set<int>{0, 1});

  CHECK(winner_set(MethodId::irv, election_one()) == std::set<int>{2});
  CHECK(winner_set(MethodId::schulze, election_one()) == std::set<int>{1});
}

TEST_CASE("majority holders can lose under positional rules") {
  auto maj = election_one_majority();

  for (MethodId m : {MethodId::borda, MethodId::cumulative, MethodId::approval}) {
    auto v = check_majority(m, maj);
    REQUIRE(v.status == Verdict::Status::violated);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->winners_before == std::set<int>{0});
    CHECK(v.witness->winners_after != std::set<int>{0});
    check_replay_after(m, *v.witness);
  }

  for (MethodId m : {MethodId::fptp, MethodId::irv, MethodId::trs,
                     MethodId::exhaustive, MethodId::contingent, MethodId::schulze}) {
    CHECK(check_majority(m, maj).status == Verdict::Status::holds);
  }

  // No majority holder: nothing to check.
  auto vacuous = check_majority(MethodId::borda, election_one());
  CHECK(vacuous.status == Verdict::Status::holds);
  CHECK(vacuous.search_size == 0);
}

TEST_CASE("pairwise champions are missed by every rule but the pairwise one") {
  auto e1 = election_one();

  auto v = check_condorcet(MethodId::fptp, e1);
  REQUIRE(v.status == Verdict::Status::violated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->winners_before == std::set<int>{1});
  CHECK(v.witness->winners_after == std::set<int>{0});
  check_replay_after(MethodId::fptp, *v.witness);

  CHECK(check_condorcet(MethodId::schulze, e1).status == Verdict::Status::holds);
  CHECK(check_condorcet(MethodId::schulze, election_three()).status ==
        Verdict::Status::holds);

  auto cyc = check_condorcet(MethodId::fptp, cyclic_profile());
  CHECK(cyc.status == Verdict::Status::holds);
  CHECK(cyc.search_size == 0);
}

TEST_CASE("helping the winner can unseat it under elimination rules") {
  auto v = search_monotonicity(MethodId::irv, election_two(), 2);
  REQUIRE(v.status == Verdict::Status::violated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->winners_before == std::set<int>{0});
  CHECK(v.witness->winners_after == std::set<int>{2});
  check_replay(MethodId::irv, *v.witness);

  auto held = search_monotonicity(MethodId::irv, election_one(), 2);
  CHECK(held.status == Verdict::Status::not_refuted);
  CHECK(held.search_size > 0);

  CHECK(search_monotonicity(MethodId::fptp, election_two(), 2).status ==
        Verdict::Status::not_refuted);
  CHECK(search_monotonicity(MethodId::schulze, election_two(), 2).status ==
        Verdict::Status::not_refuted);
}

TEST_CASE("rewriting ballots about other candidates can flip the winner") {
  auto v = search_iia(MethodId::borda, election_three(), 2);
  REQUIRE(v.status == Verdict::Status::violated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->winners_before == std::set<int>{1});
  check_replay(MethodId::borda, *v.witness);

  // Rewritten papers keep their stance on the two candidates that swap.
  {
    int w = *v.witness->winners_before.begin();
    int x = *v.witness->winners_after.begin();
    auto stance = [&](const RankedBallot& b) {
      int pw = -1, px = -1;
      for (size_t i = 0; i < b.ranking.size(); ++i) {
        if (b.ranking[i] == w) pw = static_cast<int>(i);
        if (b.ranking[i] == x) px = static_cast<int>(i);
      }
      if (pw < 0 && px < 0) return 0;
      if (px < 0) return 1;
      if (pw < 0) return -1;
      return pw < px ? 1 : -1;
    };
    REQUIRE(v.witness->before.ballots.size() == v.witness->after.ballots.size());
    for (size_t i = 0; i < v.witness->before.ballots.size(); ++i)
      CHECK(stance(v.witness->before.ballots[i]) ==
            stance(v.witness->after.ballots[i]));
  }

  auto sch = search_iia(MethodId::schulze, election_one(), 2);
  REQUIRE(sch.status == Verdict::Status::violated);
  check_replay(MethodId::schulze, *sch.witness);

  auto irv = search_iia(MethodId::irv, election_one(), 2);
  REQUIRE(irv.status == Verdict::Status::violated);
  check_replay(MethodId::irv, *irv.witness);

  CHECK(search_iia(MethodId::approval, election_one(), 2).status ==
        Verdict::Status::not_refuted);
}

TEST_CASE("anonymity and neutrality hold across the audit pool") {
  for (MethodId m : kAllMethods) {
    for (const auto& p : default_audit_pool()) {
      auto eq = check_equality(m, p);
      CHECK(eq.status == Verdict::Status::not_refuted);
      CHECK(eq.search_size > 1);
      auto neu = check_neutrality(m, p);
      CHECK(neu.status == Verdict::Status::not_refuted);
      CHECK(neu.search_size > 1);
    }
  }
}

TEST_CASE("unanimously dominated candidates never win") {
  Roster abc = testgen::letters(3);
  // Every paper ranks B over C.
  auto dominated = ranked(abc, {{{0, 1, 2}, 3}, {{1, 0, 2}, 2}});
  for (MethodId m : kAllMethods) {
    auto v = check_pareto(m, dominated);
    CHECK(v.status == Verdict::Status::holds);
    CHECK(v.search_size > 0);
    CHECK(!winner_set(m, dominated).count(2));
  }
}

TEST_CASE("two candidate rules against the exhaustive vote space") {
  auto simple = check_may_properties(simple_majority_rule(), 8);
  CHECK(simple.profiles == 510);
  REQUIRE(simple.checks.size() == 4);
  for (const auto& c : simple.checks) {
    CHECK(c.holds);
    CHECK(c.witness.empty());
  }

  auto super = check_may_properties(super_majority_rule(Rational(3, 5)), 8);
  CHECK(super.checks[0].holds);
  CHECK(super.checks[1].holds);
  CHECK(super.checks[2].holds);
  CHECK(!super.checks[3].holds);
  CHECK(super.checks[3].property == "nearly decisive");
  CHECK(super.checks[3].witness == "votes 0,0,0,1,1: tie declared at 3-2");

  auto flat = check_may_properties(constant_tie_rule(), 4);
  CHECK(flat.checks[0].holds);
  CHECK(flat.checks[1].holds);
  CHECK(flat.checks[2].holds);
  CHECK(flat.checks[3].witness == "votes 0: tie declared at 1-0");
}

TEST_CASE("criterion grid over the canonical pool") {
  // Marks cover majority, condorcet, monotonicity, pareto; x = violated.
  const std::vector<std::pair<MethodId, std::string>> expected = {
      {MethodId::fptp, ".x.."},       {MethodId::approval, "xx.."},
      {MethodId::trs, ".xx."},        {MethodId::contingent, ".xx."},
      {MethodId::exhaustive, ".xx."}, {MethodId::irv, ".xx."},
      {MethodId::borda, "xx.."},      {MethodId::cumulative, "xx.."},
      {MethodId::schulze, "...."},
  };

  auto rows = criteria_table(kAllMethods, default_audit_pool(), 2);
  REQUIRE(rows.size() == kAllMethods.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    CHECK(row.method == expected[i].first);
    REQUIRE(row.cells.size() == 7);
    CHECK(row.cells[0].criterion == CriterionKind::equality);
    CHECK(row.cells[6].criterion == CriterionKind::iia);

    // Ballot-order and relabeling invariance hold everywhere.
    CHECK(row.cells[0].verdict.status == Verdict::Status::not_refuted);
    CHECK(row.cells[1].verdict.status == Verdict::Status::not_refuted);

    const std::string& marks = expected[i].second;
    for (size_t c = 0; c < marks.size(); ++c) {
      bool expect_violated = marks[c] == 'x';
      const Verdict& v = row.cells[c + 2].verdict;
      INFO((std::string(method_name(row.method)) + " / " +
            criterion_name(row.cells[c + 2].criterion)));
      CHECK((v.status == Verdict::Status::violated) == expect_violated);
      CHECK(v.witness.has_value() == expect_violated);
      if (!v.witness) continue;
      if (row.cells[c + 2].criterion == CriterionKind::monotonicity)
        check_replay(row.method, *v.witness);
      else
        check_replay_after(row.method, *v.witness);
    }

    // Everything but approval keys on more than the pair at hand.
    bool iia_violated = row.method != MethodId::approval;
    const Verdict& iia = row.cells[6].verdict;
    INFO(std::string(method_name(row.method)));
    CHECK((iia.status == Verdict::Status::violated) == iia_violated);
    if (iia.witness) check_replay(row.method, *iia.witness);
  }
}

TEST_CASE("unrepresented weight after a count") {
  auto blt = blt_to_profile(parse_blt(slurp(BALLOTWORKS_DATA_DIR "/derwent.blt")));
  auto ranked_waste = wasted_votes(blt.profile, {2});
  CHECK(ranked_waste.count == 1706);
  CHECK(ranked_waste.fraction == Rational(1706, 3878));

  Behavior first_only;
  auto nom = approval_profile(election_one(), first_only);
  auto nominal_waste = wasted_votes(nom, {0});
  CHECK(nominal_waste.count == 5);
  CHECK(nominal_waste.fraction == Rational(5, 9));

  auto seats = highest_averages(czestochowa(), 7,
                                DivisorFamily{DivisorFamily::Kind::dhondt, {}}, 0,
                                tie_backward());
  auto list_waste = wasted_votes(seats);
  CHECK(list_waste.count == Rational(1381, 100));
  CHECK(list_waste.fraction == Rational(1381, 10002));

  // Every ballot elected someone: nothing is wasted.
  CHECK(wasted_votes(blt.profile, {0, 1, 2, 3, 4}).count == 0);
}

}  // TEST_SUITE
