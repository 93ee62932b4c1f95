#include "ballotworks/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace ballotworks {

namespace {

struct Line {
  int no = 0;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::string cur;
  int no = 1;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back({no++, cur});
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back({no, cur});
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

bool blank(const std::string& s) { return trim(s).empty(); }

std::vector<long long> parse_ints(const Line& line) {
  std::vector<long long> out;
  std::istringstream in(line.text);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::syntax_error, "expected an integer, got \"" + tok + "\"", line.no);
    }
  }
  return out;
}

// Exact numeric literal: integer, decimal, or num/den.
Rational parse_exact(const std::string& raw, int line_no) {
  std::string s = trim(raw);
  if (s.empty()) fail(Errc::syntax_error, "empty number", line_no);
  size_t slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) fail(Errc::syntax_error, "zero denominator", line_no);
      return Rational(num, den);
    }
    size_t dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::syntax_error, "bad decimal \"" + s + "\"", line_no);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(whole) * scale;
    BigInt tail(frac);
    num += negative ? -tail : tail;
    return Rational(num, scale);
  } catch (const ElectionError&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::syntax_error, "bad number \"" + s + "\"", line_no);
  }
}

}  // namespace

ElectionFile parse_blt(const std::string& text) {
  std::vector<Line> lines;
  for (auto& line : split_lines(text))
    if (!blank(line.text)) lines.push_back(line);
  size_t pos = 0;
  int last_no = lines.empty() ? 1 : lines.back().no;
  auto next = [&](const char* what) -> const Line& {
    if (pos >= lines.size())
      fail(Errc::syntax_error, std::string("unexpected end of file, expected ") + what,
           last_no);
    return lines[pos++];
  };

  ElectionFile f;
  {
    const Line& header = next("the \"candidates seats\" header");
    auto ints = parse_ints(header);
    if (ints.size() != 2)
      fail(Errc::syntax_error, "header must be \"candidates seats\"", header.no);
    if (ints[0] < 1) fail(Errc::syntax_error, "candidate count must be positive", header.no);
    if (ints[1] < 1) fail(Errc::syntax_error, "seat count must be positive", header.no);
    f.candidate_count = static_cast<int>(ints[0]);
    f.seats = static_cast<int>(ints[1]);
  }

  // Optional withdrawal line: all entries negative.
  if (pos < lines.size()) {
    auto ints = parse_ints(lines[pos]);
    if (!ints.empty() && ints[0] < 0) {
      const Line& line = lines[pos++];
      for (long long v : ints) {
        if (v >= 0)
          fail(Errc::syntax_error, "withdrawal line mixes signs", line.no);
        long long c = -v;
        if (c > f.candidate_count)
          fail(Errc::candidate_index_out_of_range,
               "withdrawn candidate " + std::to_string(c) + " of " +
                   std::to_string(f.candidate_count),
               line.no);
        int idx = static_cast<int>(c) - 1;
        if (std::find(f.withdrawn.begin(), f.withdrawn.end(), idx) != f.withdrawn.end())
          fail(Errc::syntax_error, "candidate withdrawn twice", line.no);
        f.withdrawn.push_back(idx);
      }
      std::sort(f.withdrawn.begin(), f.withdrawn.end());
    }
  }

  for (;;) {
    if (pos >= lines.size())
      fail(Errc::missing_terminator, "ballot section never ends (lone \"0\" missing)",
           last_no);
    const Line& line = lines[pos++];
    auto ints = parse_ints(line);
    if (ints.size() == 1 && ints[0] == 0) {
      if (f.ballots.empty())
        fail(Errc::syntax_error, "no ballots before the terminator", line.no);
      break;
    }
    if (ints.size() < 2)
      fail(Errc::syntax_error, "ballot line needs a weight and a terminator", line.no);
    if (ints.front() < 1)
      fail(Errc::syntax_error, "ballot weight must be positive", line.no);
    if (ints.back() != 0)
      fail(Errc::missing_terminator, "ballot line must end in 0", line.no);
    RankedBallot ballot;
    ballot.weight = ints.front();
    for (size_t i = 1; i + 1 < ints.size(); ++i) {
      long long c = ints[i];
      if (c < 1 || c > f.candidate_count)
        fail(Errc::candidate_index_out_of_range,
             "candidate " + std::to_string(c) + " of " +
                 std::to_string(f.candidate_count),
             line.no);
      int idx = static_cast<int>(c) - 1;
      if (std::find(ballot.ranking.begin(), ballot.ranking.end(), idx) !=
          ballot.ranking.end())
        fail(Errc::duplicate_candidate_in_ballot,
             "candidate " + std::to_string(c) + " listed twice", line.no);
      ballot.ranking.push_back(idx);
    }
    if (ballot.ranking.empty())
      fail(Errc::syntax_error, "ballot lists no candidates", line.no);
    f.ballots.push_back(std::move(ballot));
  }

  auto quoted = [&](const char* what) -> std::string {
    const Line& line = next(what);
    std::string s = trim(line.text);
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
      fail(Errc::syntax_error, std::string(what) + " must be quoted", line.no);
    return s.substr(1, s.size() - 2);
  };
  for (int c = 0; c < f.candidate_count; ++c) f.names.push_back(quoted("a candidate name"));
  f.title = quoted("the title");
  if (pos < lines.size())
    fail(Errc::syntax_error, "unexpected content after the title", lines[pos].no);
  return f;
}

std::string write_blt(const ElectionFile& f) {
  std::ostringstream out;
  out << f.candidate_count << " " << f.seats << "\n";
  if (!f.withdrawn.empty()) {
    for (size_t i = 0; i < f.withdrawn.size(); ++i)
      out << (i ? " " : "") << -(f.withdrawn[i] + 1);
    out << "\n";
  }
  for (const auto& ballot : f.ballots) {
    out << ballot.weight;
    for (int c : ballot.ranking) out << " " << c + 1;
    out << " 0\n";
  }
  out << "0\n";
  for (const auto& name : f.names) out << '"' << name << '"' << "\n";
  out << '"' << f.title << '"' << "\n";
  return out.str();
}

BltProfile blt_to_profile(const ElectionFile& f, Strictness strictness) {
  std::vector<int> remap(static_cast<size_t>(f.candidate_count), -1);
  Roster roster;
  for (int c = 0; c < f.candidate_count; ++c) {
    if (std::binary_search(f.withdrawn.begin(), f.withdrawn.end(), c)) continue;
    remap[static_cast<size_t>(c)] = roster.size();
    roster.names.push_back(f.names.at(static_cast<size_t>(c)));
  }

  BltProfile out;
  out.seats = f.seats;
  out.title = f.title;
  std::vector<RankedBallot> ballots;
  for (const auto& ballot : f.ballots) {
    RankedBallot reduced;
    reduced.weight = ballot.weight;
    for (int c : ballot.ranking)
      if (remap[static_cast<size_t>(c)] >= 0)
        reduced.ranking.push_back(remap[static_cast<size_t>(c)]);
    if (reduced.ranking.empty()) {
      out.spoiled += reduced.weight;
      continue;
    }
    ballots.push_back(std::move(reduced));
  }
  Built<RankedBallot> built =
      build_ranked_profile(std::move(roster), std::move(ballots), strictness);
  out.profile = std::move(built.profile);
  out.spoiled += built.spoiled;
  return out;
}

namespace {

// Splits a CSV data row at its last comma; names may contain commas.
std::pair<std::string, std::string> split_row(const Line& line) {
  size_t cut = line.text.rfind(',');
  if (cut == std::string::npos)
    fail(Errc::syntax_error, "expected \"name,value\"", line.no);
  std::string name = trim(line.text.substr(0, cut));
  std::string value = trim(line.text.substr(cut + 1));
  if (name.empty()) fail(Errc::syntax_error, "empty name", line.no);
  return {name, value};
}

std::vector<Line> csv_rows(const std::string& text, const std::string& header) {
  std::vector<Line> rows;
  for (auto& line : split_lines(text)) {
    std::string body = line.text;
    size_t hash = body.find('#');
    if (hash != std::string::npos) body.resize(hash);
    if (blank(body)) continue;
    rows.push_back({line.no, body});
  }
  if (!rows.empty()) {
    std::string first = trim(rows.front().text);
    std::transform(first.begin(), first.end(), first.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (first == header) rows.erase(rows.begin());
  }
  return rows;
}

}  // namespace

PartyVotes parse_party_csv(const std::string& text) {
  PartyVotes votes;
  for (const auto& row : csv_rows(text, "party,votes")) {
    auto [name, value] = split_row(row);
    votes.entries.emplace_back(name, parse_exact(value, row.no));
  }
  votes.validate();
  return votes;
}

std::string write_party_csv(const PartyVotes& votes) {
  std::ostringstream out;
  out << "party,votes\n";
  for (const auto& [party, v] : votes.entries) {
    out << party << ",";
    BigInt num = numerator(v);
    BigInt den = denominator(v);
    if (den == 1)
      out << num;
    else
      out << num << "/" << den;
    out << "\n";
  }
  return out.str();
}

std::map<std::string, long long> parse_constituency_csv(const std::string& text) {
  std::map<std::string, long long> out;
  for (const auto& row : csv_rows(text, "party,seats")) {
    auto [name, value] = split_row(row);
    Rational seats = parse_exact(value, row.no);
    if (denominator(seats) != 1)
      fail(Errc::syntax_error, "seat counts must be integers", row.no);
    if (seats < 0) fail(Errc::negative_votes, "negative seats for " + name, row.no);
    if (out.count(name)) fail(Errc::duplicate_party, "party " + name + " listed twice", row.no);
    out[name] = numerator(seats).convert_to<long long>();
  }
  return out;
}

// ---- JSON ----

namespace {

nlohmann::json int_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

BigInt int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  fail(Errc::syntax_error, "expected an integer or integer string");
}

nlohmann::json names_of(const Roster& roster, const std::vector<int>& ids) {
  nlohmann::json out = nlohmann::json::array();
  for (int c : ids) out.push_back(roster.name(c));
  return out;
}

int index_of(const Roster& roster, const std::string& name) {
  int c = roster.find(name);
  if (c < 0) fail(Errc::unknown_candidate, "unknown candidate \"" + name + "\"");
  return c;
}

nlohmann::json rational_map_to_json(const std::map<int, Rational>& m,
                                    const Roster& roster, int scale) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [c, v] : m) out[roster.name(c)] = rational_to_json(v, scale);
  return out;
}

std::map<int, Rational> rational_map_from_json(const nlohmann::json& j,
                                               const Roster& roster) {
  std::map<int, Rational> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[index_of(roster, it.key())] = rational_from_json(it.value());
  return out;
}

nlohmann::json wasted_to_json(const WastedVotes& w, int scale) {
  return {{"count", rational_to_json(w.count, scale)},
          {"fraction", rational_to_json(w.fraction, scale)}};
}

}  // namespace

nlohmann::json rational_to_json(const Rational& r, int display_scale) {
  return {{"num", int_to_json(numerator(r))},
          {"den", int_to_json(denominator(r))},
          {"display", format_scaled(r, display_scale)}};
}

Rational rational_from_json(const nlohmann::json& j) {
  BigInt num = int_from_json(j.at("num"));
  BigInt den = int_from_json(j.at("den"));
  if (den == 0) fail(Errc::syntax_error, "zero denominator");
  return Rational(num, den);
}

nlohmann::json result_to_json(const TallyResult& r, const Roster& roster,
                              const std::string& method, int display_scale,
                              const std::optional<WastedVotes>& wasted) {
  nlohmann::json out;
  out["method"] = method;
  out["candidates"] = roster.names;
  out["winners"] = names_of(roster, r.winners);
  out["note"] = r.note;
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& round : r.rounds) {
    nlohmann::json jr;
    jr["index"] = round.index;
    jr["totals"] = rational_map_to_json(round.totals, roster, display_scale);
    jr["exhausted"] = rational_to_json(round.exhausted, display_scale);
    jr["quota"] = round.quota ? rational_to_json(*round.quota, display_scale)
                              : nlohmann::json();
    nlohmann::json action;
    switch (round.action.kind) {
      case RoundAction::Kind::none: action["kind"] = "none"; break;
      case RoundAction::Kind::elected:
        action["kind"] = "elected";
        action["candidate"] = roster.name(round.action.candidate);
        break;
      case RoundAction::Kind::excluded:
        action["kind"] = "excluded";
        action["candidate"] = roster.name(round.action.candidate);
        break;
      case RoundAction::Kind::runoff:
        action["kind"] = "runoff";
        action["a"] = roster.name(round.action.runoff_a);
        action["b"] = roster.name(round.action.runoff_b);
        break;
    }
    jr["action"] = std::move(action);
    jr["transfers"] = rational_map_to_json(round.transfers, roster, display_scale);
    rounds.push_back(std::move(jr));
  }
  out["rounds"] = std::move(rounds);
  nlohmann::json ties = nlohmann::json::array();
  for (const auto& tie : r.ties) {
    ties.push_back({{"round", tie.round},
                    {"tied", names_of(roster, tie.tied)},
                    {"chosen", roster.name(tie.chosen)}});
  }
  out["ties"] = std::move(ties);
  out["wasted"] = wasted ? wasted_to_json(*wasted, display_scale) : nlohmann::json();
  return out;
}

ParsedResult result_from_json(const nlohmann::json& j) {
  ParsedResult out;
  out.method = j.at("method").get<std::string>();
  out.roster.names = j.at("candidates").get<std::vector<std::string>>();
  for (const auto& name : j.at("winners"))
    out.result.winners.push_back(index_of(out.roster, name.get<std::string>()));
  out.result.note = j.at("note").get<std::string>();
  for (const auto& jr : j.at("rounds")) {
    RoundReport round;
    round.index = jr.at("index").get<int>();
    round.totals = rational_map_from_json(jr.at("totals"), out.roster);
    round.exhausted = rational_from_json(jr.at("exhausted"));
    if (!jr.at("quota").is_null()) round.quota = rational_from_json(jr.at("quota"));
    const auto& action = jr.at("action");
    std::string kind = action.at("kind").get<std::string>();
    if (kind == "elected")
      round.action = RoundAction::elected(
          index_of(out.roster, action.at("candidate").get<std::string>()));
    else if (kind == "excluded")
      round.action = RoundAction::excluded(
          index_of(out.roster, action.at("candidate").get<std::string>()));
    else if (kind == "runoff")
      round.action =
          RoundAction::runoff(index_of(out.roster, action.at("a").get<std::string>()),
                              index_of(out.roster, action.at("b").get<std::string>()));
    else if (kind != "none")
      fail(Errc::syntax_error, "unknown action kind \"" + kind + "\"");
    round.transfers = rational_map_from_json(jr.at("transfers"), out.roster);
    out.result.rounds.push_back(std::move(round));
  }
  for (const auto& jt : j.at("ties")) {
    TieEvent tie;
    tie.round = jt.at("round").get<int>();
    for (const auto& name : jt.at("tied"))
      tie.tied.push_back(index_of(out.roster, name.get<std::string>()));
    tie.chosen = index_of(out.roster, jt.at("chosen").get<std::string>());
    out.result.ties.push_back(std::move(tie));
  }
  if (!j.at("wasted").is_null()) {
    WastedVotes w;
    w.count = rational_from_json(j.at("wasted").at("count"));
    w.fraction = rational_from_json(j.at("wasted").at("fraction"));
    out.wasted = w;
  }
  return out;
}

nlohmann::json allocation_to_json(const SeatAllocation& a, int display_scale) {
  nlohmann::json out;
  out["house"] = a.house;
  out["quota"] = a.quota ? rational_to_json(*a.quota, display_scale) : nlohmann::json();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.rows) {
    nlohmann::json jr;
    jr["party"] = row.party;
    jr["votes"] = rational_to_json(row.votes, display_scale);
    jr["seats"] = row.seats;
    jr["excluded"] = row.excluded;
    nlohmann::json averages = nlohmann::json::array();
    for (const auto& v : row.averages) averages.push_back(rational_to_json(v, display_scale));
    jr["averages"] = std::move(averages);
    jr["quotient"] = rational_to_json(row.quotient, display_scale);
    jr["quotient_floor"] = row.quotient_floor;
    jr["remainder"] = rational_to_json(row.remainder, display_scale);
    jr["extra"] = row.extra;
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  nlohmann::json winning = nlohmann::json::array();
  for (const auto& v : a.winning_averages) winning.push_back(rational_to_json(v, display_scale));
  out["winning_averages"] = std::move(winning);
  nlohmann::json ties = nlohmann::json::array();
  for (const auto& tie : a.ties) {
    nlohmann::json jt;
    jt["round"] = tie.round;
    jt["tied"] = tie.tied;
    jt["chosen"] = tie.chosen;
    ties.push_back(std::move(jt));
  }
  out["ties"] = std::move(ties);
  out["wasted"] = wasted_to_json(wasted_votes(a), display_scale);
  return out;
}

nlohmann::json mixed_to_json(const MixedResult& m, int display_scale) {
  nlohmann::json out;
  out["house"] = m.house;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.rows) {
    rows.push_back({{"party", row.party},
                    {"constituency", row.constituency},
                    {"entitlement", row.entitlement},
                    {"list", row.list},
                    {"total", row.total},
                    {"overhang", row.overhang}});
  }
  out["rows"] = std::move(rows);
  out["allocation"] = allocation_to_json(m.allocation, display_scale);
  return out;
}

nlohmann::json profile_to_json(const RankedProfile& p, const std::string& title,
                               int seats) {
  nlohmann::json out;
  out["title"] = title;
  out["seats"] = seats;
  out["candidates"] = p.roster.names;
  nlohmann::json ballots = nlohmann::json::array();
  for (const auto& ballot : p.ballots) {
    ballots.push_back(
        {{"weight", ballot.weight}, {"ranking", names_of(p.roster, ballot.ranking)}});
  }
  out["ballots"] = std::move(ballots);
  return out;
}

BltProfile ranked_profile_from_json(const nlohmann::json& j) {
  BltProfile out;
  out.title = j.at("title").get<std::string>();
  out.seats = j.at("seats").get<int>();
  Roster roster;
  roster.names = j.at("candidates").get<std::vector<std::string>>();
  std::vector<RankedBallot> ballots;
  for (const auto& jb : j.at("ballots")) {
    RankedBallot ballot;
    ballot.weight = jb.at("weight").get<Weight>();
    for (const auto& name : jb.at("ranking"))
      ballot.ranking.push_back(index_of(roster, name.get<std::string>()));
    ballots.push_back(std::move(ballot));
  }
  Built<RankedBallot> built =
      build_ranked_profile(std::move(roster), std::move(ballots), Strictness::strict);
  out.profile = std::move(built.profile);
  return out;
}

nlohmann::json verdict_to_json(const Verdict& v, int display_scale) {
  nlohmann::json out;
  switch (v.status) {
    case Verdict::Status::holds: out["status"] = "holds"; break;
    case Verdict::Status::violated: out["status"] = "violated"; break;
    case Verdict::Status::not_refuted: out["status"] = "not refuted within bounds"; break;
  }
  out["search_size"] = v.search_size;
  if (!v.witness) {
    out["witness"] = nlohmann::json();
    return out;
  }
  const Witness& w = *v.witness;
  nlohmann::json jw;
  jw["before"] = profile_to_json(w.before, "", 1);
  jw["after"] = profile_to_json(w.after, "", 1);
  nlohmann::json behavior;
  behavior["approval_depths"] = w.behavior.approval_depths;
  behavior["points"] =
      w.behavior.points == Behavior::Points::plump ? "plump" : "spread";
  nlohmann::json overrides = nlohmann::json::object();
  for (const auto& [entry, alloc] : w.behavior.point_overrides)
    overrides[std::to_string(entry)] = rational_map_to_json(
        std::map<int, Rational>(alloc.begin(), alloc.end()), w.before.roster,
        display_scale);
  behavior["point_overrides"] = std::move(overrides);
  jw["behavior"] = std::move(behavior);
  jw["winners_before"] = names_of(
      w.before.roster, std::vector<int>(w.winners_before.begin(), w.winners_before.end()));
  jw["winners_after"] = names_of(
      w.before.roster, std::vector<int>(w.winners_after.begin(), w.winners_after.end()));
  jw["note"] = w.note;
  out["witness"] = std::move(jw);
  return out;
}

std::string serialize(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace ballotworks
