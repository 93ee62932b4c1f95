#include "ballotworks/single_winner.hpp"

#include <algorithm>
#include <set>

namespace ballotworks {

namespace {

std::vector<int> max_keys(const std::map<int, Rational>& totals) {
  std::vector<int> out;
  for (const auto& [c, t] : totals) {
    if (out.empty() || t > totals.at(out.front())) out = {c};
    else if (t == totals.at(out.front())) out.push_back(c);
  }
  return out;
}

std::vector<int> min_keys(const std::map<int, Rational>& totals) {
  std::vector<int> out;
  for (const auto& [c, t] : totals) {
    if (out.empty() || t < totals.at(out.front())) out = {c};
    else if (t == totals.at(out.front())) out.push_back(c);
  }
  return out;
}

void require_one_mark(const NominalProfile& p) {
  for (const auto& b : p.ballots)
    if (b.marks.size() != 1)
      fail(Errc::mark_limit_violation, "ballot must mark exactly one candidate");
}

std::map<int, Rational> mark_totals(const NominalProfile& p) {
  std::map<int, Rational> totals;
  for (int c = 0; c < p.roster.size(); ++c) totals[c] = 0;
  for (const auto& b : p.ballots)
    for (int c : b.marks) totals[c] += b.weight;
  return totals;
}

TallyResult single_round_winner(std::map<int, Rational> totals, const TiePolicy& tie) {
  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  int w = breaker.pick(max_keys(totals), {}, true, 1);
  RoundReport rep;
  rep.totals = std::move(totals);
  rep.action = RoundAction::elected(w);
  res.rounds.push_back(std::move(rep));
  res.winners = {w};
  return res;
}

}  // namespace

// ---- one-round rules ----

TallyResult fptp(const NominalProfile& p, const TiePolicy& tie) {
  require_one_mark(p);
  return single_round_winner(mark_totals(p), tie);
}

std::optional<int> quota_winner(const NominalProfile& p, const Rational& q) {
  if (q <= 0 || q >= 1) fail(Errc::bad_argument, "quota share must lie strictly between 0 and 1");
  require_one_mark(p);
  auto totals = mark_totals(p);
  Rational bar = q * p.total_weight;
  for (const auto& [c, t] : totals)
    if (t > bar) return c;
  return std::nullopt;
}

TallyResult approval(const NominalProfile& p, const TiePolicy& tie) {
  return single_round_winner(mark_totals(p), tie);
}

std::vector<Rational> BordaScheme::points_for(int k) const {
  std::vector<Rational> pts;
  switch (kind) {
    case Kind::standard:
      for (int i = 0; i < k; ++i) pts.emplace_back(k - 1 - i);
      break;
    case Kind::slovenian:
      for (int i = 0; i < k; ++i) pts.emplace_back(k - i);
      break;
    case Kind::dowdall:
      for (int i = 0; i < k; ++i) pts.push_back(Rational(1) / (i + 1));
      break;
    case Kind::custom:
      pts = custom;
      if (static_cast<int>(pts.size()) != k)
        fail(Errc::invalid_scheme, "custom scheme needs one value per candidate");
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] <= pts[i + 1])
          fail(Errc::invalid_scheme, "custom scheme must be strictly decreasing");
      if (!pts.empty() && pts.back() < 0)
        fail(Errc::invalid_scheme, "custom scheme must be non-negative");
      break;
  }
  return pts;
}

TallyResult borda(const RankedProfile& p, const BordaScheme& scheme, const TiePolicy& tie) {
  auto pts = scheme.points_for(p.roster.size());
  std::map<int, Rational> totals;
  for (int c = 0; c < p.roster.size(); ++c) totals[c] = 0;
  for (const auto& b : p.ballots)
    for (size_t i = 0; i < b.ranking.size(); ++i)
      totals[b.ranking[i]] += pts[i] * b.weight;
  return single_round_winner(std::move(totals), tie);
}

TallyResult range_voting(const ScoreProfile& p, const ScoreRange& range, const TiePolicy& tie) {
  if (range.lo > range.hi) fail(Errc::bad_argument, "score range is empty");
  std::map<int, Rational> totals;
  for (int c = 0; c < p.roster.size(); ++c)
    totals[c] = Rational(range.lo) * p.total_weight;
  for (const auto& b : p.ballots)
    for (const auto& [c, s] : b.scores) {
      if (s < range.lo || s > range.hi)
        fail(Errc::score_out_of_range, "score outside the configured range");
      totals[c] += Rational(s - range.lo) * b.weight;
    }
  return single_round_winner(std::move(totals), tie);
}

namespace {

// Grade tallies per candidate; omitted candidates grade `lo`, so every candidate
// holds exactly total_weight grades.
struct GradeCounts {
  int lo = 0;
  std::vector<std::vector<Weight>> count;  // [candidate][grade - lo]
  std::vector<Weight> n;

  int median(int c) const {
    Weight need = (n[static_cast<size_t>(c)] + 1) / 2;  // lower median
    Weight cum = 0;
    const auto& row = count[static_cast<size_t>(c)];
    for (size_t g = 0; g < row.size(); ++g) {
      cum += row[g];
      if (cum >= need) return lo + static_cast<int>(g);
    }
    return lo;
  }
};

}  // namespace

TallyResult majority_judgement(const ScoreProfile& p, const ScoreRange& range,
                               const TiePolicy& tie) {
  if (range.lo > range.hi) fail(Errc::bad_argument, "score range is empty");
  int k = p.roster.size();
  int spread = range.hi - range.lo + 1;
  GradeCounts gc;
  gc.lo = range.lo;
  gc.count.assign(static_cast<size_t>(k), std::vector<Weight>(static_cast<size_t>(spread), 0));
  gc.n.assign(static_cast<size_t>(k), p.total_weight);
  for (size_t c = 0; c < gc.count.size(); ++c) gc.count[c][0] = p.total_weight;
  for (const auto& b : p.ballots)
    for (const auto& [c, s] : b.scores) {
      if (s < range.lo || s > range.hi)
        fail(Errc::score_out_of_range, "score outside the configured range");
      gc.count[static_cast<size_t>(c)][0] -= b.weight;
      gc.count[static_cast<size_t>(c)][static_cast<size_t>(s - range.lo)] += b.weight;
    }

  TallyResult res;
  RoundReport rep;
  std::vector<int> med(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c) {
    med[static_cast<size_t>(c)] = gc.median(c);
    rep.totals[c] = med[static_cast<size_t>(c)];
  }

  int best = *std::max_element(med.begin(), med.end());
  std::vector<int> tied;
  for (int c = 0; c < k; ++c)
    if (med[static_cast<size_t>(c)] == best) tied.push_back(c);

  // Remove one median grade per tied candidate and recompare until separated.
  while (tied.size() > 1) {
    bool identical = true;
    for (size_t i = 1; i < tied.size() && identical; ++i)
      identical = gc.count[static_cast<size_t>(tied[i])] ==
                  gc.count[static_cast<size_t>(tied[0])];
    if (identical || gc.n[static_cast<size_t>(tied[0])] == 0) break;
    for (int c : tied) {
      int m = gc.median(c);
      --gc.count[static_cast<size_t>(c)][static_cast<size_t>(m - range.lo)];
      --gc.n[static_cast<size_t>(c)];
    }
    int top = gc.median(tied[0]);
    for (int c : tied) top = std::max(top, gc.median(c));
    std::vector<int> next;
    for (int c : tied)
      if (gc.median(c) == top) next.push_back(c);
    tied = std::move(next);
  }

  TieBreaker breaker(tie, &res.ties);
  int w = breaker.pick(tied, {}, true, 1);
  rep.action = RoundAction::elected(w);
  res.rounds.push_back(std::move(rep));
  res.winners = {w};
  return res;
}

TallyResult cumulative(const CumulativeProfile& p, Weight budget, Weight cap, int seats,
                       const TiePolicy& tie) {
  if (budget < 1 || cap < 1) fail(Errc::bad_argument, "budget and cap must be positive");
  if (seats < 1) fail(Errc::zero_seats, "seats must be positive");
  if (seats > p.roster.size())
    fail(Errc::seats_exceed_candidates, "more seats than candidates");
  std::map<int, Rational> totals;
  for (int c = 0; c < p.roster.size(); ++c) totals[c] = 0;
  for (const auto& b : p.ballots) {
    Weight spent = 0;
    for (const auto& [c, pts] : b.points) {
      if (pts > cap) fail(Errc::over_cap, "per-candidate cap exceeded");
      spent += pts;
      totals[c] += Rational(pts) * b.weight;
    }
    if (spent > budget) fail(Errc::over_budget, "ballot spends more than its budget");
  }

  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  RoundReport rep;
  rep.totals = totals;
  std::map<int, Rational> pool = totals;
  int remaining = seats;
  while (remaining > 0) {
    std::vector<int> tied = max_keys(pool);
    if (static_cast<int>(tied.size()) <= remaining) {
      for (int c : tied) {
        res.winners.push_back(c);
        pool.erase(c);
      }
      remaining -= static_cast<int>(tied.size());
    } else {
      while (remaining > 0) {
        int c = breaker.pick(tied, {}, true, 1);
        res.winners.push_back(c);
        tied.erase(std::find(tied.begin(), tied.end(), c));
        pool.erase(c);
        --remaining;
      }
    }
  }
  if (seats == 1) rep.action = RoundAction::elected(res.winners.front());
  res.rounds.push_back(std::move(rep));
  return res;
}

// ---- elimination rules ----

namespace {

TallyResult irv_engine(const RankedProfile& p, const TiePolicy& tie,
                       const std::vector<char>* eligible) {
  int k = p.roster.size();
  std::vector<char> continuing(static_cast<size_t>(k), 1);
  if (eligible) continuing = *eligible;

  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  std::vector<std::map<int, Rational>> history;

  auto first_continuing = [&](const RankedBallot& b, int skip) -> int {
    for (int c : b.ranking)
      if (continuing[static_cast<size_t>(c)] && c != skip) return c;
    return -1;
  };

  for (int round = 1;; ++round) {
    std::map<int, Rational> totals;
    Weight live = 0;
    int ncont = 0;
    for (int c = 0; c < k; ++c)
      if (continuing[static_cast<size_t>(c)]) {
        totals[c] = 0;
        ++ncont;
      }
    for (const auto& b : p.ballots) {
      int c = first_continuing(b, -1);
      if (c >= 0) {
        totals[c] += b.weight;
        live += b.weight;
      }
    }

    RoundReport rep;
    rep.index = round;
    rep.totals = totals;
    rep.exhausted = p.total_weight - live;
    rep.quota = Rational(live / 2 + 1);

    auto leaders = max_keys(totals);
    if (!leaders.empty() && totals.at(leaders.front()) >= *rep.quota) {
      // A strict majority of live ballots is unique.
      rep.action = RoundAction::elected(leaders.front());
      res.winners = {leaders.front()};
      res.rounds.push_back(std::move(rep));
      return res;
    }
    if (ncont == 1) {
      rep.action = RoundAction::elected(leaders.front());
      res.winners = {leaders.front()};
      res.rounds.push_back(std::move(rep));
      return res;
    }

    int out = breaker.pick(min_keys(totals), history, false, round);
    history.push_back(totals);
    rep.action = RoundAction::excluded(out);
    Rational outflow = 0;
    for (const auto& b : p.ballots) {
      if (first_continuing(b, -1) != out) continue;
      outflow += b.weight;
      int next = first_continuing(b, out);
      if (next >= 0) rep.transfers[next] += b.weight;
    }
    if (outflow != 0) rep.transfers[out] = -outflow;
    continuing[static_cast<size_t>(out)] = 0;
    res.rounds.push_back(std::move(rep));
  }
}

}  // namespace

TallyResult irv(const RankedProfile& p, const TiePolicy& tie) {
  return irv_engine(p, tie, nullptr);
}

TallyResult coombs(const RankedProfile& p, const TiePolicy& tie) {
  int k = p.roster.size();
  for (const auto& b : p.ballots)
    if (static_cast<int>(b.ranking.size()) != k)
      fail(Errc::incomplete_ranking, "coombs needs complete rankings");

  std::vector<char> continuing(static_cast<size_t>(k), 1);
  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  std::vector<std::map<int, Rational>> last_history;
  Rational bar = Rational(p.total_weight / 2 + 1);

  for (int round = 1;; ++round) {
    std::map<int, Rational> totals, lasts;
    int ncont = 0;
    for (int c = 0; c < k; ++c)
      if (continuing[static_cast<size_t>(c)]) {
        totals[c] = 0;
        lasts[c] = 0;
        ++ncont;
      }
    for (const auto& b : p.ballots) {
      int first = -1, last = -1;
      for (int c : b.ranking) {
        if (!continuing[static_cast<size_t>(c)]) continue;
        if (first < 0) first = c;
        last = c;
      }
      totals[first] += b.weight;
      lasts[last] += b.weight;
    }

    RoundReport rep;
    rep.index = round;
    rep.totals = totals;
    rep.quota = bar;

    auto leaders = max_keys(totals);
    if (totals.at(leaders.front()) >= bar || ncont == 1) {
      int w = leaders.size() == 1 ? leaders.front()
                                  : breaker.pick(leaders, last_history, true, round);
      rep.action = RoundAction::elected(w);
      res.winners = {w};
      res.rounds.push_back(std::move(rep));
      return res;
    }

    int out = breaker.pick(max_keys(lasts), last_history, true, round);
    last_history.push_back(lasts);
    rep.action = RoundAction::excluded(out);
    Rational outflow = totals.at(out);
    if (outflow != 0) {
      rep.transfers[out] = -outflow;
      for (const auto& b : p.ballots) {
        int first = -1, next = -1;
        for (int c : b.ranking) {
          if (!continuing[static_cast<size_t>(c)]) continue;
          if (first < 0) first = c;
          else if (first == out && next < 0) next = c;
        }
        if (first == out && next >= 0) rep.transfers[next] += b.weight;
      }
    }
    continuing[static_cast<size_t>(out)] = 0;
    res.rounds.push_back(std::move(rep));
  }
}

namespace {

// Top-two selection shared by contingent and the two-round system.
RunoffPair select_finalists(const std::map<int, Rational>& totals, TieBreaker& breaker) {
  auto leaders = max_keys(totals);
  int a = breaker.pick(leaders, {}, true, 1);
  std::map<int, Rational> rest = totals;
  rest.erase(a);
  int b = breaker.pick(max_keys(rest), {}, true, 1);
  return {a, b};
}

}  // namespace

TallyResult contingent(const RankedProfile& p, std::optional<int> max_prefs,
                       const TiePolicy& tie) {
  if (max_prefs && *max_prefs < 2)
    fail(Errc::bad_argument, "max_prefs must be at least 2");
  RankedProfile capped;
  const RankedProfile* use = &p;
  if (max_prefs) {
    capped = p;
    for (auto& b : capped.ballots)
      if (static_cast<int>(b.ranking.size()) > *max_prefs)
        b.ranking.resize(static_cast<size_t>(*max_prefs));
    use = &capped;
  }

  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  std::map<int, Rational> totals;
  for (int c = 0; c < use->roster.size(); ++c) totals[c] = 0;
  for (const auto& b : use->ballots) totals[b.ranking.front()] += b.weight;

  Rational bar = Rational(use->total_weight / 2 + 1);
  RoundReport r1;
  r1.index = 1;
  r1.totals = totals;
  r1.quota = bar;

  auto leaders = max_keys(totals);
  if (totals.at(leaders.front()) >= bar) {
    r1.action = RoundAction::elected(leaders.front());
    res.winners = {leaders.front()};
    res.rounds.push_back(std::move(r1));
    return res;
  }

  auto [a, b] = select_finalists(totals, breaker);
  r1.action = RoundAction::runoff(a, b);

  std::map<int, Rational> r2totals{{a, 0}, {b, 0}};
  Rational exhausted = 0;
  for (const auto& bal : use->ballots) {
    int to = -1;
    for (int c : bal.ranking)
      if (c == a || c == b) {
        to = c;
        break;
      }
    int from = bal.ranking.front();
    if (to < 0) {
      exhausted += bal.weight;
      if (from != a && from != b) r1.transfers[from] -= bal.weight;
    } else {
      r2totals[to] += bal.weight;
      if (from != a && from != b) {
        r1.transfers[from] -= bal.weight;
        r1.transfers[to] += bal.weight;
      }
    }
  }
  res.rounds.push_back(r1);

  RoundReport r2;
  r2.index = 2;
  r2.totals = r2totals;
  r2.exhausted = exhausted;
  int w = r2totals.at(a) == r2totals.at(b)
              ? breaker.pick({std::min(a, b), std::max(a, b)}, {totals}, true, 2)
              : (r2totals.at(a) > r2totals.at(b) ? a : b);
  r2.action = RoundAction::elected(w);
  res.rounds.push_back(std::move(r2));
  res.winners = {w};
  return res;
}

std::variant<int, RunoffPair> trs_round1(const NominalProfile& p, const TiePolicy& tie) {
  require_one_mark(p);
  auto totals = mark_totals(p);
  auto leaders = max_keys(totals);
  if (leaders.size() == 1 && 2 * totals.at(leaders.front()) > Rational(p.total_weight))
    return leaders.front();
  TieBreaker breaker(tie, nullptr);
  return select_finalists(totals, breaker);
}

TallyResult trs(const NominalProfile& round1, const std::optional<NominalProfile>& round2,
                const TiePolicy& tie) {
  require_one_mark(round1);
  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  auto totals = mark_totals(round1);
  Rational bar = Rational(round1.total_weight / 2 + 1);

  RoundReport r1;
  r1.index = 1;
  r1.totals = totals;
  r1.quota = bar;

  auto leaders = max_keys(totals);
  if (totals.at(leaders.front()) >= bar) {
    r1.action = RoundAction::elected(leaders.front());
    res.winners = {leaders.front()};
    res.rounds.push_back(std::move(r1));
    return res;
  }

  auto [a, b] = select_finalists(totals, breaker);
  r1.action = RoundAction::runoff(a, b);
  res.rounds.push_back(std::move(r1));

  if (!round2) fail(Errc::insufficient_rounds, "runoff required but no second round given");
  require_one_mark(*round2);
  std::map<int, Rational> r2totals{{a, 0}, {b, 0}};
  for (const auto& bal : round2->ballots) {
    int c = bal.marks.front();
    if (c != a && c != b)
      fail(Errc::non_finalist_mark, "second round marks a non-finalist");
    r2totals[c] += bal.weight;
  }

  RoundReport r2;
  r2.index = 2;
  r2.totals = r2totals;
  int w = r2totals.at(a) == r2totals.at(b)
              ? breaker.pick({std::min(a, b), std::max(a, b)}, {totals}, true, 2)
              : (r2totals.at(a) > r2totals.at(b) ? a : b);
  r2.action = RoundAction::elected(w);
  res.rounds.push_back(std::move(r2));
  res.winners = {w};
  return res;
}

TallyResult trs_from_ranked(const RankedProfile& p, const TiePolicy& tie) {
  return contingent(p, std::nullopt, tie);
}

TallyResult exhaustive(const std::vector<NominalProfile>& rounds, const TiePolicy& tie) {
  if (rounds.empty()) fail(Errc::insufficient_rounds, "no round profiles given");
  int k = rounds.front().roster.size();
  std::vector<char> continuing(static_cast<size_t>(k), 1);
  TallyResult res;
  TieBreaker breaker(tie, &res.ties);
  std::vector<std::map<int, Rational>> history;

  for (size_t r = 0;; ++r) {
    if (r >= rounds.size())
      fail(Errc::insufficient_rounds, "round profiles ran out before a majority");
    const auto& p = rounds[r];
    require_one_mark(p);
    if (p.roster.size() != k) fail(Errc::bad_argument, "round rosters must match");

    std::map<int, Rational> totals;
    for (int c = 0; c < k; ++c)
      if (continuing[static_cast<size_t>(c)]) totals[c] = 0;
    for (const auto& b : p.ballots) {
      int c = b.marks.front();
      if (!continuing[static_cast<size_t>(c)])
        fail(Errc::mark_for_eliminated_candidate, "mark for an eliminated candidate");
      totals[c] += b.weight;
    }

    RoundReport rep;
    rep.index = static_cast<int>(r) + 1;
    rep.totals = totals;
    rep.quota = Rational(p.total_weight / 2 + 1);

    auto leaders = max_keys(totals);
    if (totals.at(leaders.front()) >= *rep.quota) {
      rep.action = RoundAction::elected(leaders.front());
      res.winners = {leaders.front()};
      res.rounds.push_back(std::move(rep));
      return res;
    }

    int out = breaker.pick(min_keys(totals), history, false, rep.index);
    history.push_back(totals);
    rep.action = RoundAction::excluded(out);
    continuing[static_cast<size_t>(out)] = 0;
    res.rounds.push_back(std::move(rep));
  }
}

TallyResult exhaustive_from_ranked(const RankedProfile& p, const TiePolicy& tie) {
  // Re-voting from unchanged preferences collapses to IRV round for round.
  return irv_engine(p, tie, nullptr);
}

// ---- Condorcet family ----

std::vector<int> smith_set(const PairwiseMatrix& m) {
  int k = m.k;
  if (k == 0) return {};
  // Seed with the Copeland maximizers (always inside the Smith set), then grow
  // until every member beats every outsider.
  std::vector<int> cop(static_cast<size_t>(k), 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (y == x) continue;
      if (m.beats(x, y)) ++cop[static_cast<size_t>(x)];
      else if (m.beats(y, x)) --cop[static_cast<size_t>(x)];
    }
  int best = *std::max_element(cop.begin(), cop.end());
  std::set<int> s;
  for (int x = 0; x < k; ++x)
    if (cop[static_cast<size_t>(x)] == best) s.insert(x);

  bool grew = true;
  while (grew) {
    grew = false;
    for (int y = 0; y < k && !grew; ++y) {
      if (s.count(y)) continue;
      for (int x : s)
        if (!m.beats(x, y)) {
          s.insert(y);
          grew = true;
          break;
        }
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

TallyResult smith_irv(const RankedProfile& p, const TiePolicy& tie) {
  auto m = pairwise_matrix(p);
  auto smith = smith_set(m);
  std::string members;
  for (int c : smith) {
    if (!members.empty()) members += ", ";
    members += p.roster.name(c);
  }

  if (smith.size() == 1) {
    TallyResult res;
    RoundReport rep;
    std::map<int, Rational> totals;
    for (int c = 0; c < p.roster.size(); ++c) totals[c] = 0;
    for (const auto& b : p.ballots) totals[b.ranking.front()] += b.weight;
    rep.totals = std::move(totals);
    rep.action = RoundAction::elected(smith.front());
    res.rounds.push_back(std::move(rep));
    res.winners = {smith.front()};
    res.note = "smith set: " + members;
    return res;
  }

  std::vector<char> eligible(static_cast<size_t>(p.roster.size()), 0);
  for (int c : smith) eligible[static_cast<size_t>(c)] = 1;
  auto res = irv_engine(p, tie, &eligible);
  res.note = "smith set: " + members;
  return res;
}

TallyResult black(const RankedProfile& p, const BordaScheme& scheme, const TiePolicy& tie) {
  auto m = pairwise_matrix(p);
  if (auto cw = condorcet_winner(m)) {
    TallyResult res;
    RoundReport rep;
    std::map<int, Rational> totals;
    for (int c = 0; c < p.roster.size(); ++c) totals[c] = 0;
    for (const auto& b : p.ballots) totals[b.ranking.front()] += b.weight;
    rep.totals = std::move(totals);
    rep.action = RoundAction::elected(*cw);
    res.rounds.push_back(std::move(rep));
    res.winners = {*cw};
    res.note = "condorcet winner";
    return res;
  }
  auto res = borda(p, scheme, tie);
  res.note = "no condorcet winner; borda decides";
  return res;
}

SchulzeResult schulze(const RankedProfile& p, PathStrength strength) {
  SchulzeResult res;
  res.d = pairwise_matrix(p);
  int k = res.d.k;
  res.p.assign(static_cast<size_t>(k), std::vector<Weight>(static_cast<size_t>(k), 0));

  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      if (strength == PathStrength::winning_votes)
        res.p[x][y] = res.d.beats(x, y) ? res.d.at(x, y) : 0;
      else
        res.p[x][y] = res.d.at(x, y) - res.d.at(y, x);
    }

  for (int z = 0; z < k; ++z)
    for (int x = 0; x < k; ++x) {
      if (x == z) continue;
      for (int y = 0; y < k; ++y) {
        if (y == z || y == x) continue;
        res.p[x][y] = std::max(res.p[x][y], std::min(res.p[x][z], res.p[z][y]));
      }
    }

  // The widest-path relation is a strict partial order; peel its maximal
  // elements into ranked groups.
  std::vector<char> placed(static_cast<size_t>(k), 0);
  int left = k;
  while (left > 0) {
    std::vector<int> level;
    for (int x = 0; x < k; ++x) {
      if (placed[static_cast<size_t>(x)]) continue;
      bool beaten = false;
      for (int y = 0; y < k && !beaten; ++y)
        if (y != x && !placed[static_cast<size_t>(y)] && res.p[y][x] > res.p[x][y])
          beaten = true;
      if (!beaten) level.push_back(x);
    }
    for (int x : level) placed[static_cast<size_t>(x)] = 1;
    left -= static_cast<int>(level.size());
    res.ranking.push_back(std::move(level));
  }
  res.winners = res.ranking.front();
  return res;
}

}  // namespace ballotworks
