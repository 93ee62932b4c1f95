#include "ballotworks/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ballotworks/pairwise.hpp"

namespace ballotworks {

const char* method_name(MethodId m) {
  switch (m) {
    case MethodId::fptp: return "fptp";
    case MethodId::approval: return "approval";
    case MethodId::trs: return "trs";
    case MethodId::contingent: return "contingent";
    case MethodId::exhaustive: return "exhaustive";
    case MethodId::irv: return "irv";
    case MethodId::borda: return "borda";
    case MethodId::cumulative: return "cumulative";
    case MethodId::schulze: return "schulze";
  }
  return "?";
}

std::optional<MethodId> method_from_name(const std::string& name) {
  static const MethodId all[] = {
      MethodId::fptp,    MethodId::approval,   MethodId::trs,
      MethodId::contingent, MethodId::exhaustive, MethodId::irv,
      MethodId::borda,   MethodId::cumulative, MethodId::schulze,
  };
  for (MethodId m : all)
    if (name == method_name(m)) return m;
  return std::nullopt;
}

const char* criterion_name(CriterionKind c) {
  switch (c) {
    case CriterionKind::equality: return "equality";
    case CriterionKind::neutrality: return "neutrality";
    case CriterionKind::majority: return "majority";
    case CriterionKind::condorcet: return "condorcet";
    case CriterionKind::monotonicity: return "monotonicity";
    case CriterionKind::pareto: return "pareto";
    case CriterionKind::iia: return "iia";
    case CriterionKind::nearly_decisive: return "nearly decisive";
  }
  return "?";
}

Weight cumulative_budget(int k) { return static_cast<Weight>(k) * (k - 1) / 2; }

NominalProfile approval_profile(const RankedProfile& p, const Behavior& b) {
  std::vector<int> depths(p.ballots.size(), 1);
  for (size_t i = 0; i < depths.size() && i < b.approval_depths.size(); ++i)
    depths[i] = b.approval_depths[i];
  return top_k_marks(p, depths);
}

CumulativeProfile cumulative_profile(const RankedProfile& p, const Behavior& b) {
  int k = p.roster.size();
  Weight budget = cumulative_budget(k);
  CumulativeProfile out;
  out.roster = p.roster;
  out.total_weight = p.total_weight;
  for (size_t i = 0; i < p.ballots.size(); ++i) {
    const RankedBallot& rb = p.ballots[i];
    CumulativeBallot cb;
    cb.weight = rb.weight;
    auto ov = b.point_overrides.find(i);
    if (ov != b.point_overrides.end()) {
      cb.points = ov->second;
    } else if (b.points == Behavior::Points::plump) {
      cb.points[rb.ranking.front()] = budget;
    } else {
      for (size_t j = 0; j < rb.ranking.size(); ++j) {
        Weight pts = k - 1 - static_cast<Weight>(j);
        if (pts > 0) cb.points[rb.ranking[j]] = pts;
      }
    }
    out.ballots.push_back(std::move(cb));
  }
  return out;
}

TallyResult audit_tally(MethodId m, const RankedProfile& p, const Behavior& b,
                        const TiePolicy& tie) {
  switch (m) {
    case MethodId::fptp: return fptp(first_preferences(p), tie);
    case MethodId::approval: return approval(approval_profile(p, b), tie);
    case MethodId::trs: return trs_from_ranked(p, tie);
    case MethodId::contingent: return contingent(p, 2, tie);
    case MethodId::exhaustive: return exhaustive_from_ranked(p, tie);
    case MethodId::irv: return irv(p, tie);
    case MethodId::borda: return borda(p, BordaScheme{}, tie);
    case MethodId::cumulative: {
      Weight budget = cumulative_budget(p.roster.size());
      return cumulative(cumulative_profile(p, b), budget, budget, 1, tie);
    }
    case MethodId::schulze: {
      SchulzeResult r = schulze(p);
      TallyResult t;
      RoundReport rep;
      rep.index = 1;
      NominalProfile firsts = first_preferences(p);
      for (int c = 0; c < p.roster.size(); ++c) rep.totals[c] = 0;
      for (const auto& ballot : firsts.ballots)
        rep.totals[ballot.marks.front()] += ballot.weight;
      int w = r.winners.front();
      if (r.winners.size() > 1) {
        TieBreaker breaker(tie, &t.ties);
        w = breaker.pick(r.winners, {}, true, 1);
      }
      rep.action = RoundAction::elected(w);
      t.rounds.push_back(std::move(rep));
      t.winners = {w};
      t.note = "widest paths decide";
      return t;
    }
  }
  fail(Errc::bad_argument, "unknown method");
}

std::set<int> winner_set(MethodId m, const RankedProfile& p, const Behavior& b) {
  std::set<int> out;
  std::vector<std::vector<int>> pending;
  pending.push_back({});
  while (!pending.empty()) {
    std::vector<int> script = std::move(pending.back());
    pending.pop_back();
    try {
      TallyResult r = audit_tally(m, p, b, tie_scripted(script));
      out.insert(r.winners.front());
    } catch (const ElectionError& e) {
      if (e.code() != Errc::tie_unresolved) throw;
      for (int t : e.tied()) {
        std::vector<int> next = script;
        next.push_back(t);
        pending.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<int> majority_candidate(const RankedProfile& p) {
  std::map<int, Weight> firsts;
  for (const auto& ballot : p.ballots) firsts[ballot.ranking.front()] += ballot.weight;
  for (const auto& [c, n] : firsts)
    if (2 * n > p.total_weight) return c;
  return std::nullopt;
}

namespace {

std::string set_names(const RankedProfile& p, const std::set<int>& s) {
  std::string out;
  for (int c : s) {
    if (!out.empty()) out += ",";
    out += p.roster.name(c);
  }
  return "{" + out + "}";
}

// Behavior spaces. Rules whose ballots equal the ranking get the single
// default behavior. For existence searches approval enumerates every
// per-entry depth assignment (capped, then uniform depths only); elsewhere
// approval varies a uniform depth so ballot reorderings and relabelings stay
// comparable.
std::vector<Behavior> exhaustive_behaviors(MethodId m, const RankedProfile& p) {
  std::vector<Behavior> out;
  if (m == MethodId::approval) {
    int k = p.roster.size();
    size_t g = p.ballots.size();
    double combos = 1;
    for (size_t i = 0; i < g; ++i) combos *= k;
    if (combos <= 100000) {
      std::vector<int> depths(g, 1);
      for (;;) {
        Behavior b;
        b.approval_depths = depths;
        out.push_back(std::move(b));
        size_t i = g;
        while (i > 0 && depths[i - 1] == k) depths[--i] = 1;
        if (i == 0) break;
        ++depths[i - 1];
      }
      return out;
    }
    for (int d = 1; d <= k; ++d) {
      Behavior b;
      b.approval_depths.assign(g, d);
      out.push_back(std::move(b));
    }
    return out;
  }
  if (m == MethodId::cumulative) {
    Behavior plump;
    Behavior spread;
    spread.points = Behavior::Points::spread;
    return {plump, spread};
  }
  return {Behavior{}};
}

std::vector<Behavior> canonical_behaviors(MethodId m, const RankedProfile& p) {
  if (m == MethodId::approval) {
    std::vector<Behavior> out;
    for (int d = 1; d <= p.roster.size(); ++d) {
      Behavior b;
      b.approval_depths.assign(p.ballots.size(), d);
      out.push_back(std::move(b));
    }
    return out;
  }
  if (m == MethodId::cumulative) {
    Behavior plump;
    Behavior spread;
    spread.points = Behavior::Points::spread;
    return {plump, spread};
  }
  return {Behavior{}};
}

std::string behavior_label(MethodId m, const Behavior& b) {
  if (m == MethodId::approval) {
    std::string out = "approval depths ";
    for (size_t i = 0; i < b.approval_depths.size(); ++i)
      out += (i ? "," : "") + std::to_string(b.approval_depths[i]);
    return out;
  }
  if (m == MethodId::cumulative) {
    std::string out =
        b.points == Behavior::Points::plump ? "points plumped" : "points spread";
    if (!b.point_overrides.empty()) out += " with rewrites";
    return out;
  }
  return "";
}

RankedProfile reorder(const RankedProfile& p, const std::vector<size_t>& order) {
  RankedProfile q;
  q.roster = p.roster;
  q.total_weight = p.total_weight;
  for (size_t i : order) q.ballots.push_back(p.ballots[i]);
  return q;
}

RankedProfile relabel(const RankedProfile& p, const std::vector<int>& sigma) {
  RankedProfile q = p;
  for (auto& ballot : q.ballots)
    for (int& c : ballot.ranking) c = sigma[static_cast<size_t>(c)];
  return q;
}

RankedProfile expand_units(const RankedProfile& p) {
  RankedProfile q;
  q.roster = p.roster;
  q.total_weight = p.total_weight;
  for (const auto& ballot : p.ballots)
    for (Weight i = 0; i < ballot.weight; ++i)
      q.ballots.push_back({ballot.ranking, 1});
  return q;
}

enum class Stance { w_first, x_first, none };

Stance ranked_stance(const std::vector<int>& ranking, int w, int x) {
  for (int c : ranking) {
    if (c == w) return Stance::w_first;
    if (c == x) return Stance::x_first;
  }
  return Stance::none;
}

Stance mark_stance(const std::vector<int>& marks, int w, int x) {
  bool has_w = std::find(marks.begin(), marks.end(), w) != marks.end();
  bool has_x = std::find(marks.begin(), marks.end(), x) != marks.end();
  if (has_w == has_x) return Stance::none;
  return has_w ? Stance::w_first : Stance::x_first;
}

Stance points_stance(const std::map<int, Weight>& points, int w, int x) {
  auto get = [&](int c) {
    auto it = points.find(c);
    return it == points.end() ? 0 : it->second;
  };
  Weight pw = get(w), px = get(x);
  if (pw == px) return Stance::none;
  return pw > px ? Stance::w_first : Stance::x_first;
}

// All rankings over 0..k-1 of length 1..k, ordered by length then
// lexicographically.
std::vector<std::vector<int>> all_rankings(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<size_t>(k), false);
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int c = 0; c < k; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      used[static_cast<size_t>(c)] = true;
      cur.push_back(c);
      self(self);
      cur.pop_back();
      used[static_cast<size_t>(c)] = false;
    }
  };
  rec(rec);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// All point allocations spending 1..budget, lexicographic.
std::vector<std::map<int, Weight>> all_allocations(int k, Weight budget) {
  std::vector<std::map<int, Weight>> out;
  std::vector<Weight> cur(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int i, Weight left) -> void {
    if (i == k) {
      if (left < budget) {
        std::map<int, Weight> alloc;
        for (int c = 0; c < k; ++c)
          if (cur[static_cast<size_t>(c)] > 0) alloc[c] = cur[static_cast<size_t>(c)];
        out.push_back(std::move(alloc));
      }
      return;
    }
    for (Weight v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
    cur[static_cast<size_t>(i)] = 0;
  };
  rec(rec, 0, budget);
  return out;
}

Verdict violated_verdict(const RankedProfile& before, const RankedProfile& after,
                         const Behavior& b, std::set<int> winners_before,
                         std::set<int> winners_after, std::string note,
                         long long search_size) {
  Verdict v;
  v.status = Verdict::Status::violated;
  v.search_size = search_size;
  v.witness = Witness{before, after, b, std::move(winners_before),
                      std::move(winners_after), std::move(note)};
  return v;
}

}  // namespace

Verdict check_majority(MethodId m, const RankedProfile& p) {
  Verdict v;
  auto mc = majority_candidate(p);
  if (!mc) return v;
  for (const Behavior& b : exhaustive_behaviors(m, p)) {
    std::set<int> ws = winner_set(m, p, b);
    ++v.search_size;
    if (ws != std::set<int>{*mc}) {
      std::string note = "majority candidate " + p.roster.name(*mc) +
                         " does not win outright; reachable winners " +
                         set_names(p, ws);
      std::string label = behavior_label(m, b);
      if (!label.empty()) note += " under " + label;
      return violated_verdict(p, p, b, {*mc}, ws, note, v.search_size);
    }
  }
  return v;
}

Verdict check_condorcet(MethodId m, const RankedProfile& p) {
  Verdict v;
  auto cw = condorcet_winner(pairwise_matrix(p));
  if (!cw) return v;
  for (const Behavior& b : exhaustive_behaviors(m, p)) {
    std::set<int> ws = winner_set(m, p, b);
    ++v.search_size;
    if (ws != std::set<int>{*cw}) {
      std::string note = "condorcet winner " + p.roster.name(*cw) +
                         " does not win outright; reachable winners " +
                         set_names(p, ws);
      std::string label = behavior_label(m, b);
      if (!label.empty()) note += " under " + label;
      return violated_verdict(p, p, b, {*cw}, ws, note, v.search_size);
    }
  }
  return v;
}

Verdict check_pareto(MethodId m, const RankedProfile& p) {
  Verdict v;
  int k = p.roster.size();
  std::vector<std::pair<int, int>> dominated;  // (a, b): all prefer a over b
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      bool all = true;
      for (const auto& ballot : p.ballots)
        if (ranked_stance(ballot.ranking, a, b) != Stance::w_first) {
          all = false;
          break;
        }
      if (all) dominated.emplace_back(a, b);
    }
  if (dominated.empty()) return v;
  for (const Behavior& beh : exhaustive_behaviors(m, p)) {
    std::set<int> ws = winner_set(m, p, beh);
    ++v.search_size;
    for (auto [a, b] : dominated) {
      if (ws.count(b) && !ws.count(a)) {
        std::string note = p.roster.name(b) + " can win though every ballot prefers " +
                           p.roster.name(a);
        std::string label = behavior_label(m, beh);
        if (!label.empty()) note += " under " + label;
        return violated_verdict(p, p, beh, {a}, ws, note, v.search_size);
      }
    }
  }
  return v;
}

Verdict check_equality(MethodId m, const RankedProfile& p, std::uint64_t seed) {
  Verdict v;
  size_t g = p.ballots.size();
  std::vector<std::vector<size_t>> orders;
  std::vector<size_t> identity(g);
  std::iota(identity.begin(), identity.end(), size_t{0});
  if (g <= 6) {
    std::vector<size_t> order = identity;
    do {
      if (order != identity) orders.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    for (size_t r = 1; r < g; ++r) {
      std::vector<size_t> order;
      for (size_t i = 0; i < g; ++i) order.push_back((i + r) % g);
      orders.push_back(std::move(order));
    }
    std::uint64_t state = seed;
    for (int t = 0; t < 64; ++t) {
      std::vector<size_t> order = identity;
      for (size_t i = g - 1; i > 0; --i) {
        state = splitmix64(state + 1);
        std::swap(order[i], order[state % (i + 1)]);
      }
      orders.push_back(std::move(order));
    }
  }
  for (const Behavior& b : canonical_behaviors(m, p)) {
    std::set<int> base = winner_set(m, p, b);
    ++v.search_size;
    for (const auto& order : orders) {
      RankedProfile q = reorder(p, order);
      std::set<int> ws = winner_set(m, q, b);
      ++v.search_size;
      if (ws != base) {
        std::string note = "reordering the ballot list moves the winners from " +
                           set_names(p, base) + " to " + set_names(p, ws);
        std::string label = behavior_label(m, b);
        if (!label.empty()) note += " under " + label;
        return violated_verdict(p, q, b, base, ws, note, v.search_size);
      }
    }
  }
  v.status = Verdict::Status::not_refuted;
  return v;
}

Verdict check_neutrality(MethodId m, const RankedProfile& p) {
  Verdict v;
  int k = p.roster.size();
  std::vector<int> sigma(static_cast<size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> sigmas;
  while (std::next_permutation(sigma.begin(), sigma.end())) sigmas.push_back(sigma);
  for (const Behavior& b : canonical_behaviors(m, p)) {
    std::set<int> base = winner_set(m, p, b);
    ++v.search_size;
    for (const auto& s : sigmas) {
      RankedProfile q = relabel(p, s);
      std::set<int> expected;
      for (int w : base) expected.insert(s[static_cast<size_t>(w)]);
      std::set<int> ws = winner_set(m, q, b);
      ++v.search_size;
      if (ws != expected) {
        std::string note = "relabeling candidates does not relabel the winners: expected " +
                           set_names(p, expected) + ", got " + set_names(p, ws);
        std::string label = behavior_label(m, b);
        if (!label.empty()) note += " under " + label;
        return violated_verdict(p, q, b, base, ws, note, v.search_size);
      }
    }
  }
  v.status = Verdict::Status::not_refuted;
  return v;
}

namespace {

struct Move {
  size_t unit;
  int param;  // swap target position, or -1 for an approval depth extension
  bool operator<(const Move& o) const {
    return unit != o.unit ? unit < o.unit : param < o.param;
  }
};

std::vector<Move> legal_moves(const RankedProfile& u, const Behavior& b, MethodId m,
                              int w) {
  std::vector<Move> out;
  for (size_t i = 0; i < u.ballots.size(); ++i) {
    const auto& r = u.ballots[i].ranking;
    auto it = std::find(r.begin(), r.end(), w);
    if (it != r.end()) {
      int pos = static_cast<int>(it - r.begin());
      for (int t = 0; t < pos; ++t) out.push_back({i, t});
    }
    if (m == MethodId::approval) {
      int depth = i < b.approval_depths.size() ? b.approval_depths[i] : 1;
      if (depth < static_cast<int>(r.size()) && r[static_cast<size_t>(depth)] == w)
        out.push_back({i, -1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void apply_move(RankedProfile& u, Behavior& b, int w, const Move& mv) {
  auto& r = u.ballots[mv.unit].ranking;
  if (mv.param < 0) {
    ++b.approval_depths[mv.unit];
    return;
  }
  auto it = std::find(r.begin(), r.end(), w);
  std::swap(r[static_cast<size_t>(mv.param)], *it);
}

}  // namespace

Verdict search_monotonicity(MethodId m, const RankedProfile& p, int bounds) {
  Verdict v;
  v.status = Verdict::Status::not_refuted;
  for (const Behavior& base_b : canonical_behaviors(m, p)) {
    std::set<int> base = winner_set(m, p, base_b);
    ++v.search_size;
    if (base.size() != 1) continue;
    int w = *base.begin();

    RankedProfile units = expand_units(p);
    Behavior ub = base_b;
    if (m == MethodId::approval) {
      // Per-unit depths: uniform depth carried onto each paper.
      int d = base_b.approval_depths.empty() ? 1 : base_b.approval_depths.front();
      ub.approval_depths.assign(units.ballots.size(), d);
    }

    struct Frame {
      RankedProfile prof;
      Behavior beh;
      Move last;
      int depth;
    };
    std::vector<Frame> stack;
    stack.push_back({units, ub, Move{0, -2}, 0});
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.depth > 0) {
        std::set<int> ws = winner_set(m, f.prof, f.beh);
        ++v.search_size;
        if (!ws.count(w)) {
          std::set<int> replay = winner_set(m, f.prof, f.beh);
          std::string note = "winner " + p.roster.name(w) + " loses after " +
                             std::to_string(f.depth) +
                             " ballot move(s) in the winner's favor; reachable winners " +
                             set_names(p, replay);
          std::string label = behavior_label(m, f.beh);
          if (!label.empty()) note += " under " + label;
          return violated_verdict(p, f.prof, f.beh, base, replay, note, v.search_size);
        }
      }
      if (f.depth >= bounds) continue;
      std::vector<Move> moves = legal_moves(f.prof, f.beh, m, w);
      // Non-decreasing move order keeps one canonical representative per set.
      for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (f.depth > 0 && *it < f.last) continue;
        Frame next{f.prof, f.beh, *it, f.depth + 1};
        apply_move(next.prof, next.beh, w, *it);
        stack.push_back(std::move(next));
      }
    }
  }
  return v;
}

Verdict search_iia(MethodId m, const RankedProfile& p, int bounds) {
  Verdict v;
  v.status = Verdict::Status::not_refuted;
  int k = p.roster.size();
  size_t g = p.ballots.size();
  Weight budget = cumulative_budget(k);
  std::vector<std::vector<int>> rankings = all_rankings(k);
  std::vector<std::map<int, Weight>> allocations;
  if (m == MethodId::cumulative) allocations = all_allocations(k, budget);

  for (const Behavior& base_b : canonical_behaviors(m, p)) {
    std::set<int> base = winner_set(m, p, base_b);
    ++v.search_size;
    if (base.size() != 1) continue;
    int w = *base.begin();
    NominalProfile marks;
    CumulativeProfile points;
    if (m == MethodId::approval) marks = approval_profile(p, base_b);
    if (m == MethodId::cumulative) points = cumulative_profile(p, base_b);

    for (int x = 0; x < k; ++x) {
      if (x == w) continue;
      // Per-entry rewrite choices preserving that entry's w-vs-x stance.
      // Approval rewrites carry (mark set, depth); cumulative rewrites carry a
      // point override; ranked rewrites replace the ranking.
      std::vector<std::vector<std::pair<std::vector<int>, int>>> choices(g);
      for (size_t i = 0; i < g; ++i) {
        if (m == MethodId::approval) {
          Stance st = mark_stance(marks.ballots[i].marks, w, x);
          for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> set;
            for (int c = 0; c < k; ++c)
              if (mask & (1u << c)) set.push_back(c);
            if (mark_stance(set, w, x) != st) continue;
            if (set == marks.ballots[i].marks) continue;
            choices[i].emplace_back(set, static_cast<int>(set.size()));
          }
        } else if (m == MethodId::cumulative) {
          Stance st = points_stance(points.ballots[i].points, w, x);
          for (size_t a = 0; a < allocations.size(); ++a) {
            if (points_stance(allocations[a], w, x) != st) continue;
            if (allocations[a] == points.ballots[i].points) continue;
            choices[i].emplace_back(std::vector<int>{}, static_cast<int>(a));
          }
        } else {
          Stance st = ranked_stance(p.ballots[i].ranking, w, x);
          for (const auto& r : rankings) {
            if (ranked_stance(r, w, x) != st) continue;
            if (r == p.ballots[i].ranking) continue;
            choices[i].emplace_back(r, 0);
          }
        }
      }

      // Subsets of entries to rewrite, size 1..bounds, lexicographic.
      std::vector<size_t> subset;
      auto run_subset = [&](const std::vector<size_t>& groups) -> std::optional<Verdict> {
        std::vector<size_t> pick(groups.size(), 0);
        for (;;) {
          RankedProfile q = p;
          Behavior b = base_b;
          if (m == MethodId::approval && b.approval_depths.empty())
            b.approval_depths.assign(g, 1);
          for (size_t j = 0; j < groups.size(); ++j) {
            size_t i = groups[j];
            const auto& [payload, aux] = choices[i][pick[j]];
            if (m == MethodId::approval) {
              q.ballots[i].ranking = payload;
              b.approval_depths[i] = aux;
            } else if (m == MethodId::cumulative) {
              b.point_overrides[i] = allocations[static_cast<size_t>(aux)];
            } else {
              q.ballots[i].ranking = payload;
            }
          }
          std::set<int> ws = winner_set(m, q, b);
          ++v.search_size;
          if (ws == std::set<int>{x}) {
            std::set<int> replay = winner_set(m, q, b);
            std::string note = "winner flips from " + p.roster.name(w) + " to " +
                               p.roster.name(x) + " though every rewritten ballot keeps its " +
                               p.roster.name(w) + "-vs-" + p.roster.name(x) + " stance";
            std::string label = behavior_label(m, b);
            if (!label.empty()) note += " under " + label;
            return violated_verdict(p, q, b, base, replay, note, v.search_size);
          }
          size_t j = groups.size();
          while (j > 0 && ++pick[j - 1] == choices[groups[j - 1]].size())
            pick[--j] = 0;
          if (j == 0) break;
        }
        return std::nullopt;
      };

      auto rec = [&](auto&& self, size_t start) -> std::optional<Verdict> {
        if (!subset.empty()) {
          bool any_empty = false;
          for (size_t i : subset)
            if (choices[i].empty()) any_empty = true;
          if (!any_empty) {
            if (auto hit = run_subset(subset)) return hit;
          }
        }
        if (subset.size() >= static_cast<size_t>(bounds)) return std::nullopt;
        for (size_t i = start; i < g; ++i) {
          subset.push_back(i);
          if (auto hit = self(self, i + 1)) return hit;
          subset.pop_back();
        }
        return std::nullopt;
      };
      if (auto hit = rec(rec, 0)) return *hit;
    }
  }
  return v;
}

std::vector<TableRow> criteria_table(const std::vector<MethodId>& methods,
                                     const std::vector<RankedProfile>& pool, int bounds,
                                     std::uint64_t seed) {
  static const CriterionKind columns[] = {
      CriterionKind::equality,   CriterionKind::neutrality, CriterionKind::majority,
      CriterionKind::condorcet,  CriterionKind::monotonicity, CriterionKind::pareto,
      CriterionKind::iia,
  };
  std::vector<TableRow> table;
  for (MethodId m : methods) {
    TableRow row;
    row.method = m;
    for (CriterionKind c : columns) {
      Verdict acc;
      acc.status = Verdict::Status::not_refuted;
      for (const RankedProfile& prof : pool) {
        Verdict v;
        switch (c) {
          case CriterionKind::equality: v = check_equality(m, prof, seed); break;
          case CriterionKind::neutrality: v = check_neutrality(m, prof); break;
          case CriterionKind::majority: v = check_majority(m, prof); break;
          case CriterionKind::condorcet: v = check_condorcet(m, prof); break;
          case CriterionKind::monotonicity: v = search_monotonicity(m, prof, bounds); break;
          case CriterionKind::pareto: v = check_pareto(m, prof); break;
          case CriterionKind::iia: v = search_iia(m, prof, bounds); break;
          case CriterionKind::nearly_decisive: break;
        }
        acc.search_size += v.search_size;
        if (v.status == Verdict::Status::violated) {
          v.search_size = acc.search_size;
          acc = std::move(v);
          break;
        }
      }
      row.cells.push_back({c, std::move(acc)});
    }
    table.push_back(std::move(row));
  }
  return table;
}

namespace {

RankedProfile make_profile(std::vector<std::string> names,
                           std::vector<std::pair<std::vector<int>, Weight>> groups) {
  Roster roster{std::move(names)};
  std::vector<RankedBallot> ballots;
  for (auto& [ranking, weight] : groups) ballots.push_back({std::move(ranking), weight});
  return build_ranked_profile(std::move(roster), std::move(ballots), Strictness::strict)
      .profile;
}

}  // namespace

RankedProfile election_one() {
  return make_profile({"A", "B", "C"},
                      {{{0, 1, 2}, 4}, {{1, 2, 0}, 2}, {{2, 1, 0}, 3}});
}

RankedProfile election_two() {
  return make_profile({"A", "B", "C"},
                      {{{0, 1, 2}, 6}, {{2, 0, 1}, 5}, {{1, 2, 0}, 4}, {{1, 0, 2}, 2}});
}

RankedProfile election_three() {
  return make_profile({"A", "B", "C"}, {{{0, 1, 2}, 30},
                                        {{0, 2, 1}, 1},
                                        {{1, 0, 2}, 29},
                                        {{1, 2, 0}, 10},
                                        {{2, 0, 1}, 10},
                                        {{2, 1, 0}, 1}});
}

RankedProfile election_one_majority() {
  return make_profile({"A", "B", "C"},
                      {{{0, 1, 2}, 6}, {{1, 2, 0}, 2}, {{2, 1, 0}, 3}});
}

RankedProfile cyclic_profile() {
  return make_profile({"A", "B", "C"},
                      {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
}

std::vector<RankedProfile> default_audit_pool() {
  return {election_one(), election_two(), election_three(), election_one_majority(),
          cyclic_profile()};
}

std::vector<RankedProfile> enumerate_complete_profiles(int k, int max_ballots) {
  std::vector<std::string> names;
  for (int c = 0; c < k; ++c) names.push_back(std::string(1, static_cast<char>('A' + c)));
  std::vector<std::vector<int>> rankings;
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    rankings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<RankedProfile> out;
  std::vector<Weight> counts(rankings.size(), 0);
  auto rec = [&](auto&& self, size_t i, Weight left) -> void {
    if (i == rankings.size()) {
      std::vector<std::pair<std::vector<int>, Weight>> groups;
      for (size_t r = 0; r < rankings.size(); ++r)
        if (counts[r] > 0) groups.emplace_back(rankings[r], counts[r]);
      if (!groups.empty()) out.push_back(make_profile(names, std::move(groups)));
      return;
    }
    for (Weight c = 0; c <= left; ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
    counts[i] = 0;
  };
  rec(rec, 0, max_ballots);
  return out;
}

// ---- two-candidate decision rules ----

namespace {

std::pair<int, int> vote_counts(const std::vector<int>& votes) {
  int n1 = 0;
  for (int v : votes) n1 += v;
  return {static_cast<int>(votes.size()) - n1, n1};
}

std::string votes_label(const std::vector<int>& votes) {
  std::string out = "votes ";
  for (size_t i = 0; i < votes.size(); ++i)
    out += (i ? "," : "") + std::to_string(votes[i]);
  return out;
}

}  // namespace

TwoCandidateRule simple_majority_rule() {
  return {"simple majority", [](const std::vector<int>& votes) -> std::set<int> {
            auto [n0, n1] = vote_counts(votes);
            if (n0 > n1) return {0};
            if (n1 > n0) return {1};
            return {0, 1};
          }};
}

TwoCandidateRule super_majority_rule(const Rational& q) {
  std::ostringstream name;
  name << "super majority above " << q;
  return {name.str(), [q](const std::vector<int>& votes) -> std::set<int> {
            auto [n0, n1] = vote_counts(votes);
            Rational n = static_cast<Weight>(votes.size());
            if (Rational(n0) > q * n) return {0};
            if (Rational(n1) > q * n) return {1};
            return {0, 1};
          }};
}

TwoCandidateRule constant_tie_rule() {
  return {"constant tie",
          [](const std::vector<int>&) -> std::set<int> { return {0, 1}; }};
}

MayReport check_may_properties(const TwoCandidateRule& rule, int max_voters) {
  MayReport report;
  report.checks = {{"egalitarian", true, ""},
                   {"neutral", true, ""},
                   {"monotone", true, ""},
                   {"nearly decisive", true, ""}};
  MayCheck& egalitarian = report.checks[0];
  MayCheck& neutral = report.checks[1];
  MayCheck& monotone = report.checks[2];
  MayCheck& nearly = report.checks[3];

  std::map<std::pair<int, int>, std::set<int>> by_counts;
  for (int n = 1; n <= max_voters; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> votes(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        votes[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
      std::set<int> out = rule.outcome(votes);
      ++report.profiles;

      auto counts = vote_counts(votes);
      auto [it, fresh] = by_counts.emplace(counts, out);
      if (!fresh && it->second != out && egalitarian.holds) {
        egalitarian.holds = false;
        egalitarian.witness = votes_label(votes) + ": outcome differs from an earlier " +
                              std::to_string(counts.first) + "-" +
                              std::to_string(counts.second) + " profile";
      }

      if (neutral.holds) {
        std::vector<int> flipped = votes;
        for (int& x : flipped) x = 1 - x;
        std::set<int> expected;
        for (int w : out) expected.insert(1 - w);
        if (rule.outcome(flipped) != expected) {
          neutral.holds = false;
          neutral.witness = votes_label(votes) + ": flipping every vote does not flip the outcome";
        }
      }

      if (monotone.holds && out.size() == 1) {
        int w = *out.begin();
        for (size_t i = 0; i < votes.size() && monotone.holds; ++i) {
          if (votes[i] == w) continue;
          std::vector<int> moved = votes;
          moved[i] = w;
          if (rule.outcome(moved) != out) {
            monotone.holds = false;
            monotone.witness = votes_label(votes) + ": switching voter " +
                               std::to_string(i) + " toward the winner changes the outcome";
          }
        }
      }

      if (nearly.holds && out.size() == 2 && counts.first != counts.second) {
        nearly.holds = false;
        nearly.witness = votes_label(votes) + ": tie declared at " +
                         std::to_string(counts.first) + "-" +
                         std::to_string(counts.second);
      }
    }
  }
  return report;
}

// ---- wasted votes ----

namespace {

WastedVotes finish(Rational count, const Rational& total) {
  WastedVotes out;
  out.count = count;
  out.fraction = total == 0 ? Rational(0) : count / total;
  return out;
}

}  // namespace

WastedVotes wasted_votes(const NominalProfile& p, const std::vector<int>& winners) {
  std::set<int> won(winners.begin(), winners.end());
  Rational count = 0;
  for (const auto& ballot : p.ballots) {
    bool helped = false;
    for (int c : ballot.marks)
      if (won.count(c)) helped = true;
    if (!helped) count += ballot.weight;
  }
  return finish(count, p.total_weight);
}

WastedVotes wasted_votes(const RankedProfile& p, const std::vector<int>& winners) {
  std::set<int> won(winners.begin(), winners.end());
  Rational count = 0;
  for (const auto& ballot : p.ballots) {
    bool helped = false;
    for (int c : ballot.ranking)
      if (won.count(c)) helped = true;
    if (!helped) count += ballot.weight;
  }
  return finish(count, p.total_weight);
}

WastedVotes wasted_votes(const SeatAllocation& a) {
  Rational count = 0;
  Rational total = 0;
  for (const auto& row : a.rows) {
    total += row.votes;
    if (row.seats == 0) count += row.votes;
  }
  return finish(count, total);
}

}  // namespace ballotworks
