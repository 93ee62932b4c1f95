#include "ballotworks/multi_winner.hpp"

#include <algorithm>

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

}  // namespace

TallyResult block_vote(const NominalProfile& p, int seats, int max_marks,
                       const TiePolicy& tie) {
  int k = p.roster.size();
  if (seats < 1) fail(Errc::zero_seats, "seats must be positive");
  if (seats > k) fail(Errc::seats_exceed_candidates, "more seats than candidates");
  if (max_marks < 1) fail(Errc::bad_argument, "max_marks must be positive");
  for (const auto& b : p.ballots)
    if (static_cast<int>(b.marks.size()) > max_marks)
      fail(Errc::mark_limit_violation, "ballot marks more candidates than allowed");

  std::map<int, Rational> totals;
  for (int c = 0; c < k; ++c) totals[c] = 0;
  for (const auto& b : p.ballots)
    for (int c : b.marks) totals[c] += b.weight;

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

TallyResult limited_vote(const NominalProfile& p, int seats, int max_marks,
                         const TiePolicy& tie) {
  if (max_marks > seats)
    fail(Errc::bad_argument, "limited vote allows at most `seats` marks");
  return block_vote(p, seats, max_marks, tie);
}

TallyResult sntv(const NominalProfile& p, int seats, const TiePolicy& tie) {
  return block_vote(p, seats, 1, tie);
}

SeatAllocation party_block_vote(const PartyVotes& votes, long long seats,
                                const TiePolicy& tie) {
  votes.validate();
  if (seats < 1) fail(Errc::zero_seats, "seats must be positive");
  if (votes.entries.empty()) fail(Errc::bad_argument, "no parties");

  SeatAllocation alloc;
  alloc.house = seats;
  Rational best = 0;
  for (const auto& [name, v] : votes.entries) {
    PartyRow row;
    row.party = name;
    row.votes = v;
    alloc.rows.push_back(std::move(row));
    best = std::max(best, v);
  }
  std::vector<int> tied;
  for (size_t i = 0; i < alloc.rows.size(); ++i)
    if (alloc.rows[i].votes == best) tied.push_back(static_cast<int>(i));
  TieBreaker breaker(tie, &alloc.ties);
  int w = breaker.pick(tied, {}, true, 1);
  alloc.rows[static_cast<size_t>(w)].seats = seats;
  return alloc;
}

// ---- STV ----

namespace {

struct Parcel {
  int ballot;      // index into profile.ballots
  Weight papers;   // paper count (the ballot's weight)
  Rational value;  // per-paper value
};

enum class Status { continuing, elected, excluded };

}  // namespace

TallyResult stv(const RankedProfile& p, const StvConfig& cfg) {
  int k = p.roster.size();
  if (cfg.seats < 1) fail(Errc::zero_seats, "seats must be positive");
  if (cfg.seats > k) fail(Errc::seats_exceed_candidates, "more seats than candidates");

  TallyResult res;
  TieBreaker breaker(cfg.tie, &res.ties);
  std::vector<std::map<int, Rational>> history;

  std::vector<Status> status(static_cast<size_t>(k), Status::continuing);
  std::vector<std::vector<Parcel>> held(static_cast<size_t>(k));
  std::vector<Rational> locked(static_cast<size_t>(k), 0);
  Rational exhausted = 0;
  int excl_pending = -1;  // excluded candidate still holding parcel batches

  for (size_t i = 0; i < p.ballots.size(); ++i)
    held[static_cast<size_t>(p.ballots[i].ranking.front())].push_back(
        {static_cast<int>(i), p.ballots[i].weight, 1});

  Rational quota = Rational(quota_value(cfg.quota, p.total_weight, cfg.seats));

  auto next_continuing = [&](int ballot) -> int {
    for (int c : p.ballots[static_cast<size_t>(ballot)].ranking)
      if (status[static_cast<size_t>(c)] == Status::continuing) return c;
    return -1;
  };

  auto standing = [&]() {
    std::map<int, Rational> totals;
    for (int c = 0; c < k; ++c) {
      Rational t = locked[static_cast<size_t>(c)];
      for (const auto& parcel : held[static_cast<size_t>(c)])
        t += parcel.value * parcel.papers;
      if (status[static_cast<size_t>(c)] == Status::continuing ||
          status[static_cast<size_t>(c)] == Status::elected || t != 0)
        totals[c] = t;
    }
    return totals;
  };

  // Moves a set of parcels on from `from`, recording per-candidate deltas. The
  // outflow is the post-factor value: the whole batch for exclusions (factor 1),
  // exactly the surplus for distributions.
  auto transfer = [&](int from, std::vector<Parcel> parcels, const Rational& factor,
                      RoundReport& rep) {
    Rational moved = 0;
    for (auto& parcel : parcels) {
      Rational v = parcel.value * factor;
      Rational amount = v * parcel.papers;
      moved += amount;
      int to = next_continuing(parcel.ballot);
      if (to < 0) {
        exhausted += amount;
        continue;
      }
      rep.transfers[to] += amount;
      held[static_cast<size_t>(to)].push_back({parcel.ballot, parcel.papers, v});
    }
    if (moved != 0) rep.transfers[from] -= moved;
  };

  for (int round = 1; static_cast<int>(res.winners.size()) < cfg.seats; ++round) {
    if (cfg.recompute_quota)
      quota = Rational(quota_value(cfg.quota, Rational(p.total_weight) - exhausted,
                                   cfg.seats));
    auto totals = standing();

    RoundReport rep;
    rep.index = round;
    rep.totals = totals;
    rep.exhausted = exhausted;
    rep.quota = quota;

    std::map<int, Rational> continuing_totals;
    int ncont = 0;
    for (int c = 0; c < k; ++c)
      if (status[static_cast<size_t>(c)] == Status::continuing) {
        continuing_totals[c] = totals.at(c);
        ++ncont;
      }
    history.push_back(continuing_totals);

    std::vector<int> at_quota;
    for (const auto& [c, t] : continuing_totals)
      if (t >= quota) at_quota.push_back(c);

    if (!at_quota.empty()) {
      std::map<int, Rational> leaders_pool;
      for (int c : at_quota) leaders_pool[c] = continuing_totals.at(c);
      int w = breaker.pick(max_keys(leaders_pool), history, true, round);
      status[static_cast<size_t>(w)] = Status::elected;
      res.winners.push_back(w);
      rep.action = RoundAction::elected(w);
      Rational total_w = totals.at(w);
      if (static_cast<int>(res.winners.size()) == cfg.seats) {
        // Last seat: no distribution; the candidate keeps the full total.
        locked[static_cast<size_t>(w)] = total_w;
        held[static_cast<size_t>(w)].clear();
        res.rounds.push_back(std::move(rep));
        break;
      }
      Rational surplus = total_w - quota;
      locked[static_cast<size_t>(w)] = quota;
      auto parcels = std::move(held[static_cast<size_t>(w)]);
      held[static_cast<size_t>(w)].clear();
      if (surplus > 0) transfer(w, std::move(parcels), surplus / total_w, rep);
      res.rounds.push_back(std::move(rep));
      continue;
    }

    if (excl_pending >= 0) {
      auto& parked = held[static_cast<size_t>(excl_pending)];
      Rational top = parked.front().value;
      for (const auto& parcel : parked) top = std::max(top, parcel.value);
      std::vector<Parcel> batch;
      std::vector<Parcel> rest;
      for (auto& parcel : parked)
        (parcel.value == top ? batch : rest).push_back(parcel);
      parked = std::move(rest);
      rep.action = RoundAction::excluded(excl_pending);
      transfer(excl_pending, std::move(batch), 1, rep);
      if (parked.empty()) excl_pending = -1;
      res.rounds.push_back(std::move(rep));
      continue;
    }

    if (ncont == cfg.seats - static_cast<int>(res.winners.size())) {
      // The rest are elected on the count, highest first.
      int w = breaker.pick(max_keys(continuing_totals), history, true, round);
      status[static_cast<size_t>(w)] = Status::elected;
      res.winners.push_back(w);
      locked[static_cast<size_t>(w)] = totals.at(w);
      held[static_cast<size_t>(w)].clear();
      rep.action = RoundAction::elected(w);
      res.rounds.push_back(std::move(rep));
      continue;
    }

    std::vector<int> lowest;
    for (const auto& [c, t] : continuing_totals)
      if (lowest.empty() || t < continuing_totals.at(lowest.front())) lowest = {c};
      else if (t == continuing_totals.at(lowest.front())) lowest.push_back(c);
    int out = breaker.pick(lowest, history, false, round);
    status[static_cast<size_t>(out)] = Status::excluded;
    rep.action = RoundAction::excluded(out);
    auto& parked = held[static_cast<size_t>(out)];
    if (!parked.empty()) {
      Rational top = parked.front().value;
      for (const auto& parcel : parked) top = std::max(top, parcel.value);
      std::vector<Parcel> batch;
      std::vector<Parcel> rest;
      for (auto& parcel : parked)
        (parcel.value == top ? batch : rest).push_back(parcel);
      parked = std::move(rest);
      transfer(out, std::move(batch), 1, rep);
      if (!parked.empty()) excl_pending = out;
    }
    res.rounds.push_back(std::move(rep));
  }

  return res;
}

}  // namespace ballotworks
