#include "ballotworks/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ballotworks/io.hpp"
#include "ballotworks/multi_winner.hpp"

namespace ballotworks {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::bad_argument, "cannot write " + path);
  out << text;
}

std::uint64_t env_seed() {
  const char* env = std::getenv("BALLOTWORKS_SEED");
  if (!env || !*env) return 0;
  return std::strtoull(env, nullptr, 10);
}

TiePolicy make_tie(const std::string& name, std::uint64_t seed) {
  if (name == "error") return tie_error();
  if (name == "first") return tie_first_listed();
  if (name == "backward") return tie_backward();
  if (name == "random") return tie_seeded(seed);
  fail(Errc::bad_argument, "unknown tie policy \"" + name + "\"");
}

// ---- plain-text tables ----

// Right-aligned numeric columns; a trailing remark column stays left-aligned.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool remark_column = false;
};

std::string render(const Table& t) {
  std::vector<size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  };
  grow(t.header);
  for (const auto& row : t.rows) grow(row);

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (size_t i = 0; i < width.size(); ++i) {
      std::string cell = i < row.size() ? row[i] : "";
      if (i) line += "  ";
      if (t.remark_column && i + 1 == width.size())
        line += cell;
      else
        line += std::string(width[i] - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  emit(t.header);
  {
    size_t total = 0;
    for (size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
    out << std::string(total, '-') << "\n";
  }
  for (const auto& row : t.rows) emit(row);
  return out.str();
}

std::string signed_delta(const Rational& v, int scale) {
  std::string s = format_scaled(v, scale);
  return v > 0 ? "+" + s : s;
}

std::string join_names(const Roster& roster, const std::vector<int>& ids) {
  std::string out;
  for (int c : ids) {
    if (!out.empty()) out += ", ";
    out += roster.name(c);
  }
  return out;
}

std::string remark_for(const RoundAction& action, const Roster& roster) {
  switch (action.kind) {
    case RoundAction::Kind::none: return "";
    case RoundAction::Kind::elected: return roster.name(action.candidate) + " elected";
    case RoundAction::Kind::excluded: return roster.name(action.candidate) + " excluded";
    case RoundAction::Kind::runoff:
      return "runoff: " + roster.name(action.runoff_a) + " vs " +
             roster.name(action.runoff_b);
  }
  return "";
}

std::string render_tally(const TallyResult& r, const Roster& roster, int scale,
                         const std::optional<WastedVotes>& wasted) {
  Table t;
  t.remark_column = true;
  for (const auto& name : roster.names) t.header.push_back(name);
  t.header.insert(t.header.end(), {"Exhausted", "Quota", "Remark"});

  for (size_t i = 0; i < r.rounds.size(); ++i) {
    const RoundReport& round = r.rounds[i];
    std::vector<std::string> totals;
    for (int c = 0; c < roster.size(); ++c) {
      auto it = round.totals.find(c);
      totals.push_back(it == round.totals.end() ? "" : format_scaled(it->second, scale));
    }
    totals.push_back(format_scaled(round.exhausted, scale));
    totals.push_back(round.quota ? format_scaled(*round.quota, scale) : "");
    totals.push_back("Count " + std::to_string(round.index));
    t.rows.push_back(std::move(totals));

    if (round.action.kind == RoundAction::Kind::none && round.transfers.empty())
      continue;
    std::vector<std::string> deltas;
    for (int c = 0; c < roster.size(); ++c) {
      auto it = round.transfers.find(c);
      deltas.push_back(it == round.transfers.end() || it->second == 0
                           ? ""
                           : signed_delta(it->second, scale));
    }
    Rational exhausted_delta = 0;
    if (i + 1 < r.rounds.size())
      exhausted_delta = r.rounds[i + 1].exhausted - round.exhausted;
    deltas.push_back(exhausted_delta == 0 ? "" : signed_delta(exhausted_delta, scale));
    deltas.push_back("");
    deltas.push_back(remark_for(round.action, roster));
    t.rows.push_back(std::move(deltas));
  }

  std::ostringstream out;
  out << render(t);
  out << (r.winners.size() == 1 ? "Winner: " : "Winners: ")
      << join_names(roster, r.winners) << "\n";
  if (!r.note.empty()) out << "Note: " << r.note << "\n";
  for (const auto& tie : r.ties)
    out << "Tie in round " << tie.round << " among " << join_names(roster, tie.tied)
        << "; chose " << roster.name(tie.chosen) << "\n";
  if (wasted)
    out << "Wasted: " << format_scaled(wasted->count, scale) << " ("
        << format_scaled(wasted->fraction * 100, scale) << "% of the total)\n";
  return out.str();
}

std::string trim_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string render_allocation(const SeatAllocation& a, int scale) {
  Table t;
  std::ostringstream out;
  if (a.quota) {
    out << "Quota: " << format_scaled(*a.quota, scale) << "\n";
    t.header = {"Party", "Votes", "Quotient", "Floor", "Remainder", "Extra", "Seats"};
    for (const auto& row : a.rows) {
      t.rows.push_back({row.party, format_scaled(row.votes, scale),
                        row.excluded ? "" : format_scaled(row.quotient, scale),
                        row.excluded ? "" : std::to_string(row.quotient_floor),
                        row.excluded ? "" : format_scaled(row.remainder, scale),
                        row.excluded ? "" : std::to_string(row.extra),
                        std::to_string(row.seats)});
    }
  } else if (!a.winning_averages.empty() || a.house == 0) {
    size_t columns = 1;
    for (const auto& row : a.rows)
      columns = std::max(columns, static_cast<size_t>(row.seats) + 1);
    for (const auto& row : a.rows) columns = std::min(columns, std::max<size_t>(row.averages.size(), 1));

    t.header = {"Party", "Votes"};
    const PartyRow* sample = nullptr;
    for (const auto& row : a.rows)
      if (!row.averages.empty() && row.votes > 0) {
        sample = &row;
        break;
      }
    for (size_t i = 0; i < columns; ++i) {
      // Recover the divisor from votes / average; label columns "/1", "/2", ...
      std::string label = sample && i < sample->averages.size()
                              ? trim_zeros(format_scaled(sample->votes / sample->averages[i], 3))
                              : std::to_string(i + 1);
      t.header.push_back("/" + label);
    }
    t.header.push_back("Seats");
    for (const auto& row : a.rows) {
      std::vector<std::string> cells = {row.party, format_scaled(row.votes, scale)};
      for (size_t i = 0; i < columns; ++i) {
        if (i >= row.averages.size()) {
          cells.push_back("");
          continue;
        }
        std::string v = format_scaled(row.averages[i], scale);
        // The selected averages are exactly each party's first `seats` ones.
        if (static_cast<long long>(i) < row.seats) v += "*";
        cells.push_back(v);
      }
      cells.push_back(std::to_string(row.seats));
      t.rows.push_back(std::move(cells));
    }
  } else {
    t.header = {"Party", "Votes", "Seats"};
    for (const auto& row : a.rows)
      t.rows.push_back(
          {row.party, format_scaled(row.votes, scale), std::to_string(row.seats)});
  }

  out << render(t);
  for (const auto& row : a.rows)
    if (row.excluded) out << row.party << " below the threshold\n";
  for (const auto& tie : a.ties) {
    out << "Tie in round " << tie.round << " among rows [";
    for (size_t i = 0; i < tie.tied.size(); ++i)
      out << (i ? " " : "") << a.rows[static_cast<size_t>(tie.tied[i])].party;
    out << "]; chose " << a.rows[static_cast<size_t>(tie.chosen)].party << "\n";
  }
  WastedVotes w = wasted_votes(a);
  out << "Wasted: " << format_scaled(w.count, scale) << " ("
      << format_scaled(w.fraction * 100, scale) << "% of the total)\n";
  return out.str();
}

std::string render_mixed(const MixedResult& m, int scale) {
  Table t;
  t.header = {"Party", "Constituency", "Entitlement", "List", "Total", "Overhang"};
  for (const auto& row : m.rows)
    t.rows.push_back({row.party, std::to_string(row.constituency),
                      std::to_string(row.entitlement), std::to_string(row.list),
                      std::to_string(row.total), std::to_string(row.overhang)});
  std::ostringstream out;
  out << render(t);
  out << "House: " << m.house << "\n\nList apportionment:\n"
      << render_allocation(m.allocation, scale);
  return out.str();
}

// ---- ranked-ballot adapters for non-ranked rules ----

ScoreProfile score_from_ranked(const RankedProfile& p, const ScoreRange& range) {
  std::vector<ScoreBallot> ballots;
  for (const auto& ballot : p.ballots) {
    ScoreBallot b;
    b.weight = ballot.weight;
    int score = range.hi;
    for (int c : ballot.ranking) {
      b.scores[c] = std::max(score, range.lo);
      --score;
    }
    ballots.push_back(std::move(b));
  }
  return build_score_profile(p.roster, std::move(ballots), range, Strictness::strict)
      .profile;
}

TallyResult wrap_schulze(const RankedProfile& p, const SchulzeResult& sr,
                         const TiePolicy& tie) {
  TallyResult r;
  RoundReport round;
  NominalProfile firsts = first_preferences(p);
  for (int c = 0; c < p.roster.size(); ++c) round.totals[c] = 0;
  for (const auto& ballot : firsts.ballots)
    for (int c : ballot.marks) round.totals[c] += ballot.weight;
  r.note = "widest paths decide";
  if (sr.winners.size() == 1) {
    r.winners = sr.winners;
  } else {
    TieBreaker breaker(tie, &r.ties);
    r.winners = {breaker.pick(sr.winners, {}, true, 1)};
  }
  round.action = RoundAction::elected(r.winners.front());
  r.rounds.push_back(std::move(round));
  return r;
}

// ---- subcommand options ----

struct CommonOpts {
  std::string in;
  std::string format = "table";
  std::string tie = "backward";
  std::uint64_t seed = 0;
  int display_scale = 2;
};

struct TallyOpts : CommonOpts {
  std::string method;
  int seats = 0;  // 0 = take the ballot file's header value
  bool lenient = false;
  int max_prefs = 0;  // contingent: 0 = unlimited
  std::string scheme = "standard";
  int range_lo = 0;
  int range_hi = 5;
  int marks = 0;  // limited/block mark cap
  int depth = 0;  // approval: top-depth marks, 0 = every listed candidate
  std::string points = "spread";
  std::string strength = "winning-votes";
  std::string quota = "droop";
  bool recompute_quota = false;
};

struct ApportionOpts : CommonOpts {
  std::string method;
  long long seats = 0;
  std::string quota = "hare";
  std::string quota_votes;
  std::string threshold = "0";
};

struct MixedOpts : CommonOpts {
  std::string mode;
  std::string constituency;
  long long seats = 0;       // mmp: total house
  long long list_seats = 0;  // parallel: list tier size
  std::string method = "dhondt";
  std::string quota = "hare";
  std::string threshold = "0";
};

struct AuditOpts : CommonOpts {
  std::string criterion;
  std::string method;
  std::string methods;  // criterion=table: comma-separated subset
  int bounds = 2;
  std::string out_path = "witness.json";
  std::string rule = "simple";
  std::string ratio = "3/5";
  int max_voters = 8;
};

struct ConvertOpts {
  std::string in;
  std::string to;
  std::string out_path;
};

QuotaKind quota_from_name(const std::string& name) {
  if (name == "hare") return QuotaKind::hare;
  if (name == "droop") return QuotaKind::droop;
  if (name == "hb") return QuotaKind::hagenbach_bischoff;
  if (name == "imperiali") return QuotaKind::imperiali;
  fail(Errc::bad_argument, "unknown quota \"" + name + "\"");
}

DivisorFamily family_from_name(const std::string& name) {
  DivisorFamily f;
  if (name == "dhondt") f.kind = DivisorFamily::Kind::dhondt;
  else if (name == "sainte-lague") f.kind = DivisorFamily::Kind::sainte_lague;
  else if (name == "msl") f.kind = DivisorFamily::Kind::modified_sainte_lague;
  else if (name == "imperiali") f.kind = DivisorFamily::Kind::imperiali;
  else if (name == "danish") f.kind = DivisorFamily::Kind::danish;
  else fail(Errc::bad_argument, "unknown divisor method \"" + name + "\"");
  return f;
}

BordaScheme scheme_from_name(const std::string& name) {
  BordaScheme s;
  if (name == "standard") s.kind = BordaScheme::Kind::standard;
  else if (name == "slovenian") s.kind = BordaScheme::Kind::slovenian;
  else if (name == "dowdall") s.kind = BordaScheme::Kind::dowdall;
  else fail(Errc::bad_argument, "unknown scheme \"" + name + "\"");
  return s;
}

Rational rational_flag(const std::string& text, const char* what) {
  std::string s = text;
  size_t slash = s.find('/');
  try {
    if (slash != std::string::npos)
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    size_t dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    BigInt scale = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    return Rational(BigInt(s.substr(0, dot) + s.substr(dot + 1)), scale);
  } catch (const std::exception&) {
    fail(Errc::bad_argument, std::string("bad ") + what + " \"" + text + "\"");
  }
}

int run_tally(const TallyOpts& o, std::ostream& out) {
  TiePolicy tie = make_tie(o.tie, o.seed);

  if (o.method == "pbv") {
    PartyVotes votes = parse_party_csv(slurp(o.in));
    if (o.seats < 1) fail(Errc::bad_argument, "--seats is required for pbv");
    SeatAllocation a = party_block_vote(votes, o.seats, tie);
    out << (o.format == "json" ? serialize(allocation_to_json(a, o.display_scale))
                               : render_allocation(a, o.display_scale));
    return 0;
  }

  BltProfile bp = blt_to_profile(
      parse_blt(slurp(o.in)), o.lenient ? Strictness::lenient : Strictness::strict);
  const RankedProfile& p = bp.profile;
  int seats = o.seats > 0 ? o.seats : bp.seats;
  std::vector<int> uniform_depths(p.ballots.size(),
                                  o.depth > 0 ? o.depth : p.roster.size());

  TallyResult r;
  std::optional<WastedVotes> wasted;
  if (o.method == "fptp") {
    r = fptp(first_preferences(p), tie);
  } else if (o.method == "approval") {
    NominalProfile marks = o.depth > 0 ? top_k_marks(p, uniform_depths) : all_listed(p);
    r = approval(marks, tie);
    wasted = wasted_votes(marks, r.winners);
  } else if (o.method == "trs") {
    r = trs_from_ranked(p, tie);
  } else if (o.method == "contingent") {
    r = contingent(p, o.max_prefs > 0 ? std::optional<int>(o.max_prefs) : std::nullopt,
                   tie);
  } else if (o.method == "exhaustive") {
    r = exhaustive_from_ranked(p, tie);
  } else if (o.method == "irv") {
    r = irv(p, tie);
  } else if (o.method == "coombs") {
    r = coombs(p, tie);
  } else if (o.method == "borda") {
    r = borda(p, scheme_from_name(o.scheme), tie);
  } else if (o.method == "range") {
    ScoreRange range{o.range_lo, o.range_hi};
    r = range_voting(score_from_ranked(p, range), range, tie);
  } else if (o.method == "mj") {
    ScoreRange range{o.range_lo, o.range_hi};
    r = majority_judgement(score_from_ranked(p, range), range, tie);
  } else if (o.method == "cumulative") {
    Behavior b;
    b.points = o.points == "plump" ? Behavior::Points::plump : Behavior::Points::spread;
    Weight budget = cumulative_budget(p.roster.size());
    r = cumulative(cumulative_profile(p, b), budget, budget, seats, tie);
  } else if (o.method == "smith-irv") {
    r = smith_irv(p, tie);
  } else if (o.method == "black") {
    r = black(p, scheme_from_name(o.scheme), tie);
  } else if (o.method == "schulze") {
    PathStrength strength = o.strength == "margins" ? PathStrength::margins
                                                    : PathStrength::winning_votes;
    r = wrap_schulze(p, schulze(p, strength), tie);
  } else if (o.method == "stv") {
    StvConfig cfg;
    cfg.seats = seats;
    cfg.quota = quota_from_name(o.quota);
    cfg.recompute_quota = o.recompute_quota;
    cfg.tie = tie;
    r = stv(p, cfg);
  } else if (o.method == "block") {
    int marks = o.marks > 0 ? o.marks : seats;
    std::vector<int> depths(p.ballots.size(), marks);
    r = block_vote(top_k_marks(p, depths), seats, marks, tie);
  } else if (o.method == "limited") {
    if (o.marks < 1) fail(Errc::bad_argument, "--marks is required for limited");
    std::vector<int> depths(p.ballots.size(), o.marks);
    r = limited_vote(top_k_marks(p, depths), seats, o.marks, tie);
  } else if (o.method == "sntv") {
    r = sntv(first_preferences(p), seats, tie);
  } else {
    fail(Errc::bad_argument, "unknown method \"" + o.method + "\"");
  }

  if (!wasted) wasted = wasted_votes(p, r.winners);
  if (o.format == "json") {
    out << serialize(result_to_json(r, p.roster, o.method, o.display_scale, wasted));
  } else {
    out << render_tally(r, p.roster, o.display_scale, wasted);
    if (bp.spoiled > 0) out << "Spoiled: " << bp.spoiled << "\n";
  }
  return 0;
}

int run_apportion(const ApportionOpts& o, std::ostream& out) {
  TiePolicy tie = make_tie(o.tie, o.seed);
  PartyVotes votes = parse_party_csv(slurp(o.in));
  Rational threshold = rational_flag(o.threshold, "threshold");
  SeatAllocation a;
  if (o.method == "lr") {
    std::optional<Rational> quota_votes;
    if (!o.quota_votes.empty()) quota_votes = rational_flag(o.quota_votes, "quota votes");
    a = largest_remainder(votes, o.seats, quota_from_name(o.quota), threshold, tie,
                          quota_votes);
  } else {
    a = highest_averages(votes, o.seats, family_from_name(o.method), threshold, tie);
  }
  out << (o.format == "json" ? serialize(allocation_to_json(a, o.display_scale))
                             : render_allocation(a, o.display_scale));
  return 0;
}

int run_mixed(const MixedOpts& o, std::ostream& out) {
  PartyVotes votes = parse_party_csv(slurp(o.in));
  auto constituency = parse_constituency_csv(slurp(o.constituency));
  ApportionSpec spec;
  if (o.method == "lr") {
    spec.method = ApportionSpec::Method::largest_remainder;
    spec.quota = quota_from_name(o.quota);
  } else {
    spec.method = ApportionSpec::Method::highest_averages;
    spec.family = family_from_name(o.method);
  }
  spec.threshold = rational_flag(o.threshold, "threshold");
  spec.tie = make_tie(o.tie, o.seed);

  MixedResult m;
  if (o.mode == "mmp") {
    if (o.seats < 1) fail(Errc::bad_argument, "--seats is required for mmp");
    m = mmp(votes, constituency, o.seats, spec);
  } else if (o.mode == "parallel") {
    m = parallel(votes, constituency, o.list_seats, spec);
  } else {
    fail(Errc::bad_argument, "unknown mode \"" + o.mode + "\"");
  }
  out << (o.format == "json" ? serialize(mixed_to_json(m, o.display_scale))
                             : render_mixed(m, o.display_scale));
  return 0;
}

const char* status_text(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::holds: return "holds";
    case Verdict::Status::violated: return "violated";
    case Verdict::Status::not_refuted: return "not refuted within bounds";
  }
  return "";
}

std::string describe_profile(const RankedProfile& p) {
  std::ostringstream out;
  for (const auto& ballot : p.ballots) {
    out << "  " << ballot.weight << " x ";
    for (size_t i = 0; i < ballot.ranking.size(); ++i)
      out << (i ? " > " : "") << p.roster.name(ballot.ranking[i]);
    out << "\n";
  }
  return out.str();
}

int run_audit(const AuditOpts& o, std::ostream& out) {
  int scale = o.display_scale;

  if (o.criterion == "may") {
    TwoCandidateRule rule = simple_majority_rule();
    if (o.rule == "super") rule = super_majority_rule(rational_flag(o.ratio, "ratio"));
    else if (o.rule == "tie") rule = constant_tie_rule();
    else if (o.rule != "simple") fail(Errc::bad_argument, "unknown rule \"" + o.rule + "\"");
    MayReport rep = check_may_properties(rule, o.max_voters);
    if (o.format == "json") {
      nlohmann::json j;
      j["rule"] = rule.name;
      j["profiles"] = rep.profiles;
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& check : rep.checks)
        checks.push_back({{"property", check.property},
                          {"holds", check.holds},
                          {"witness", check.witness}});
      j["checks"] = std::move(checks);
      out << serialize(j);
    } else {
      out << rule.name << " over every vote vector with 1.." << o.max_voters
          << " voters (" << rep.profiles << " profiles)\n";
      for (const auto& check : rep.checks) {
        out << "  " << check.property << ": " << (check.holds ? "holds" : "fails");
        if (!check.witness.empty()) out << " at " << check.witness;
        out << "\n";
      }
    }
    return 0;
  }

  if (o.criterion == "table") {
    std::vector<MethodId> methods;
    if (o.methods.empty()) {
      for (int m = 0; m <= static_cast<int>(MethodId::schulze); ++m)
        methods.push_back(static_cast<MethodId>(m));
    } else {
      std::istringstream in(o.methods);
      std::string name;
      while (std::getline(in, name, ',')) {
        auto m = method_from_name(name);
        if (!m) fail(Errc::bad_argument, "unknown method \"" + name + "\"");
        methods.push_back(*m);
      }
    }
    std::vector<RankedProfile> pool = default_audit_pool();
    std::vector<TableRow> rows = criteria_table(methods, pool, o.bounds, o.seed);
    if (o.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : row.cells)
          cells.push_back({{"criterion", criterion_name(cell.criterion)},
                           {"verdict", verdict_to_json(cell.verdict, scale)}});
        j.push_back({{"method", method_name(row.method)}, {"cells", std::move(cells)}});
      }
      out << serialize(j);
    } else {
      Table t;
      t.header.push_back("Method");
      if (!rows.empty())
        for (const auto& cell : rows.front().cells)
          t.header.push_back(criterion_name(cell.criterion));
      for (const auto& row : rows) {
        std::vector<std::string> cells = {method_name(row.method)};
        for (const auto& cell : row.cells)
          cells.push_back(cell.verdict.status == Verdict::Status::violated ? "x" : "ok");
        t.rows.push_back(std::move(cells));
      }
      out << render(t);
      out << "x = violated with a stored witness; ok = not refuted over the pool "
             "within the bounds\n";
    }
    return 0;
  }

  auto method = method_from_name(o.method);
  if (!method) fail(Errc::bad_argument, "unknown method \"" + o.method + "\"");
  BltProfile bp = blt_to_profile(parse_blt(slurp(o.in)));
  const RankedProfile& p = bp.profile;

  Verdict v;
  if (o.criterion == "majority") v = check_majority(*method, p);
  else if (o.criterion == "condorcet") v = check_condorcet(*method, p);
  else if (o.criterion == "pareto") v = check_pareto(*method, p);
  else if (o.criterion == "equality") v = check_equality(*method, p, o.seed);
  else if (o.criterion == "neutrality") v = check_neutrality(*method, p);
  else if (o.criterion == "monotonicity") v = search_monotonicity(*method, p, o.bounds);
  else if (o.criterion == "iia") v = search_iia(*method, p, o.bounds);
  else fail(Errc::bad_argument, "unknown criterion \"" + o.criterion + "\"");

  if (o.format == "json") {
    out << serialize(verdict_to_json(v, scale));
  } else {
    out << o.criterion << " for " << o.method << ": " << status_text(v.status) << " ("
        << v.search_size << " tallies)\n";
    if (v.witness) {
      const Witness& w = *v.witness;
      out << "before (winners " << join_names(w.before.roster,
                                              {w.winners_before.begin(), w.winners_before.end()})
          << "):\n"
          << describe_profile(w.before);
      out << "after (winners " << join_names(w.after.roster,
                                             {w.winners_after.begin(), w.winners_after.end()})
          << "):\n"
          << describe_profile(w.after);
      if (!w.note.empty()) out << w.note << "\n";
    }
  }
  if (v.witness) {
    spill(o.out_path, serialize(verdict_to_json(v, scale)));
    if (o.format != "json") out << "witness written to " << o.out_path << "\n";
  }
  return 0;
}

int run_convert(const ConvertOpts& o, std::ostream& out) {
  std::string text;
  if (o.to == "json") {
    BltProfile bp = blt_to_profile(parse_blt(slurp(o.in)));
    text = serialize(profile_to_json(bp.profile, bp.title, bp.seats));
  } else if (o.to == "blt") {
    BltProfile bp = ranked_profile_from_json(nlohmann::json::parse(slurp(o.in)));
    ElectionFile f;
    f.candidate_count = bp.profile.roster.size();
    f.seats = bp.seats;
    f.ballots = bp.profile.ballots;
    f.names = bp.profile.roster.names;
    f.title = bp.title;
    text = write_blt(f);
  } else if (o.to == "csv") {
    text = write_party_csv(parse_party_csv(slurp(o.in)));
  } else {
    fail(Errc::bad_argument, "unknown target format \"" + o.to + "\"");
  }
  if (o.out_path.empty())
    out << text;
  else
    spill(o.out_path, text);
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  auto* in = cmd->add_option("--in", o.in, "input file");
  if (needs_input) in->required();
  cmd->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--tie", o.tie, "tie policy: error, first, backward, random")
      ->check(CLI::IsMember({"error", "first", "backward", "random"}));
  cmd->add_option("--seed", o.seed, "seed for the random tie policy");
  cmd->add_option("--display-scale", o.display_scale, "decimal places in tables")
      ->check(CLI::Range(0, 12));
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"deterministic election counting, seat apportionment, and criteria audits"};
  app.require_subcommand(1);

  TallyOpts tally_opts;
  tally_opts.seed = env_seed();
  ApportionOpts apportion_opts;
  apportion_opts.seed = env_seed();
  MixedOpts mixed_opts;
  mixed_opts.seed = env_seed();
  AuditOpts audit_opts;
  audit_opts.seed = env_seed();
  ConvertOpts convert_opts;

  CLI::App* tally_cmd = app.add_subcommand("tally", "count one election from a ballot file");
  tally_cmd->add_option("--method", tally_opts.method, "counting rule")
      ->required()
      ->check(CLI::IsMember({"fptp", "approval", "trs", "contingent", "exhaustive",
                             "irv", "coombs", "borda", "range", "mj", "cumulative",
                             "smith-irv", "black", "schulze", "stv", "block", "sntv",
                             "limited", "pbv"}));
  add_common(tally_cmd, tally_opts);
  tally_cmd->add_option("--seats", tally_opts.seats,
                        "seats to fill (default: the ballot file header)");
  tally_cmd->add_flag("--lenient", tally_opts.lenient,
                      "drop malformed ballots instead of failing");
  tally_cmd->add_option("--max-prefs", tally_opts.max_prefs,
                        "contingent: cap on expressed preferences (2 or 3)");
  tally_cmd->add_option("--scheme", tally_opts.scheme, "borda points")
      ->check(CLI::IsMember({"standard", "slovenian", "dowdall"}));
  tally_cmd->add_option("--range-lo", tally_opts.range_lo, "range/mj lowest score");
  tally_cmd->add_option("--range-hi", tally_opts.range_hi, "range/mj highest score");
  tally_cmd->add_option("--marks", tally_opts.marks, "limited/block mark cap");
  tally_cmd->add_option("--depth", tally_opts.depth,
                        "approval: mark the top N listed (default: all listed)");
  tally_cmd->add_option("--points", tally_opts.points, "cumulative ballot adapter")
      ->check(CLI::IsMember({"plump", "spread"}));
  tally_cmd->add_option("--strength", tally_opts.strength, "schulze path strength")
      ->check(CLI::IsMember({"winning-votes", "margins"}));
  tally_cmd->add_option("--quota", tally_opts.quota, "stv quota")
      ->check(CLI::IsMember({"hare", "droop", "hb", "imperiali"}));
  tally_cmd->add_flag("--recompute-quota", tally_opts.recompute_quota,
                      "stv: requote from live ballots each count");

  CLI::App* apportion_cmd =
      app.add_subcommand("apportion", "allocate seats to party vote totals");
  apportion_cmd->add_option("--method", apportion_opts.method, "apportionment rule")
      ->required()
      ->check(CLI::IsMember(
          {"dhondt", "sainte-lague", "msl", "imperiali", "danish", "lr"}));
  add_common(apportion_cmd, apportion_opts);
  apportion_cmd->add_option("--seats", apportion_opts.seats, "house size")->required();
  apportion_cmd->add_option("--quota", apportion_opts.quota, "largest-remainder quota")
      ->check(CLI::IsMember({"hare", "droop", "hb", "imperiali"}));
  apportion_cmd->add_option("--quota-votes", apportion_opts.quota_votes,
                            "vote base for the quota (default: the vote total)");
  apportion_cmd->add_option("--threshold", apportion_opts.threshold,
                            "exclusion threshold as a fraction, e.g. 5/100");

  CLI::App* mixed_cmd = app.add_subcommand("mixed", "two-tier counts");
  mixed_cmd->add_option("--mode", mixed_opts.mode, "mmp or parallel")
      ->required()
      ->check(CLI::IsMember({"mmp", "parallel"}));
  add_common(mixed_cmd, mixed_opts);
  mixed_cmd->add_option("--constituency", mixed_opts.constituency,
                        "party,seats CSV of district wins")
      ->required();
  mixed_cmd->add_option("--seats", mixed_opts.seats, "mmp: total house size");
  mixed_cmd->add_option("--list-seats", mixed_opts.list_seats,
                        "parallel: size of the list tier");
  mixed_cmd->add_option("--method", mixed_opts.method, "list apportionment rule")
      ->check(CLI::IsMember(
          {"dhondt", "sainte-lague", "msl", "imperiali", "danish", "lr"}));
  mixed_cmd->add_option("--quota", mixed_opts.quota, "largest-remainder quota")
      ->check(CLI::IsMember({"hare", "droop", "hb", "imperiali"}));
  mixed_cmd->add_option("--threshold", mixed_opts.threshold,
                        "exclusion threshold as a fraction");

  CLI::App* audit_cmd = app.add_subcommand("audit", "criteria checks and searches");
  audit_cmd->add_option("--criterion", audit_opts.criterion, "what to check")
      ->required()
      ->check(CLI::IsMember({"majority", "condorcet", "pareto", "equality",
                             "neutrality", "monotonicity", "iia", "table", "may"}));
  add_common(audit_cmd, audit_opts, false);
  audit_cmd->add_option("--method", audit_opts.method, "rule under audit");
  audit_cmd->add_option("--methods", audit_opts.methods,
                        "table: comma-separated rules (default: all)");
  audit_cmd->add_option("--bounds", audit_opts.bounds,
                        "monotonicity/iia: papers or entries rewritten")
      ->check(CLI::Range(1, 16));
  audit_cmd->add_option("--out", audit_opts.out_path, "witness file path");
  audit_cmd->add_option("--rule", audit_opts.rule, "may: simple, super, or tie");
  audit_cmd->add_option("--ratio", audit_opts.ratio, "may: super-majority fraction");
  audit_cmd->add_option("--max-voters", audit_opts.max_voters, "may: voter bound")
      ->check(CLI::Range(1, 20));

  CLI::App* convert_cmd = app.add_subcommand("convert", "translate between formats");
  convert_cmd->add_option("--in", convert_opts.in, "input file")->required();
  convert_cmd->add_option("--to", convert_opts.to, "blt, json, or csv")
      ->required()
      ->check(CLI::IsMember({"blt", "json", "csv"}));
  convert_cmd->add_option("--out", convert_opts.out_path,
                          "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (tally_cmd->parsed()) return run_tally(tally_opts, out);
    if (apportion_cmd->parsed()) return run_apportion(apportion_opts, out);
    if (mixed_cmd->parsed()) return run_mixed(mixed_opts, out);
    if (audit_cmd->parsed()) return run_audit(audit_opts, out);
    if (convert_cmd->parsed()) return run_convert(convert_opts, out);
  } catch (const ElectionError& e) {
    // what() already carries the "(line N)" suffix when one applies.
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::tie_unresolved ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ballotworks
