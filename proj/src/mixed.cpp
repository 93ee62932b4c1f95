#include "ballotworks/mixed.hpp"

#include <algorithm>

#include "ballotworks/errors.hpp"

namespace ballotworks {

SeatAllocation apportion(const PartyVotes& votes, long long house,
                         const ApportionSpec& spec) {
  if (spec.method == ApportionSpec::Method::largest_remainder)
    return largest_remainder(votes, house, spec.quota, spec.threshold, spec.tie,
                             spec.quota_votes);
  return highest_averages(votes, house, spec.family, spec.threshold, spec.tie);
}

long long MixedResult::seats_of(const std::string& party) const {
  for (const auto& row : rows)
    if (row.party == party) return row.total;
  return 0;
}

namespace {

void check_constituency(const std::map<std::string, long long>& seats) {
  for (const auto& [party, n] : seats)
    if (n < 0) fail(Errc::bad_argument, "negative constituency seats for " + party);
}

// Parties that won districts without appearing in the party-vote table hold
// those seats outright.
void append_constituency_only(const PartyVotes& votes,
                              const std::map<std::string, long long>& constituency,
                              MixedResult& res) {
  for (const auto& [party, n] : constituency) {
    bool listed = std::any_of(votes.entries.begin(), votes.entries.end(),
                              [&](const auto& e) { return e.first == party; });
    if (listed) continue;
    res.rows.push_back({party, n, 0, 0, n, n});
    res.house += n;
  }
}

}  // namespace

MixedResult mmp(const PartyVotes& votes,
                const std::map<std::string, long long>& constituency_seats,
                long long total_seats, const ApportionSpec& spec) {
  check_constituency(constituency_seats);
  long long claimed = 0;
  for (const auto& [party, n] : constituency_seats) claimed += n;
  if (claimed > total_seats)
    fail(Errc::bad_argument, "constituency seats exceed the house");

  MixedResult res;
  res.allocation = apportion(votes, total_seats, spec);
  for (const auto& [party, v] : votes.entries) {
    auto it = constituency_seats.find(party);
    long long direct = it == constituency_seats.end() ? 0 : it->second;
    long long target = res.allocation.seats_of(party);
    MixedRow row;
    row.party = party;
    row.constituency = direct;
    row.entitlement = target;
    row.list = std::max(0LL, target - direct);
    row.total = direct + row.list;
    row.overhang = std::max(0LL, direct - target);
    res.house += row.total;
    res.rows.push_back(std::move(row));
  }
  append_constituency_only(votes, constituency_seats, res);
  return res;
}

MixedResult parallel(const PartyVotes& votes,
                     const std::map<std::string, long long>& constituency_seats,
                     long long list_seats, const ApportionSpec& spec) {
  check_constituency(constituency_seats);
  if (list_seats < 0) fail(Errc::bad_argument, "negative list tier");

  MixedResult res;
  if (list_seats > 0)
    res.allocation = apportion(votes, list_seats, spec);
  else
    votes.validate();
  for (const auto& [party, v] : votes.entries) {
    auto it = constituency_seats.find(party);
    long long direct = it == constituency_seats.end() ? 0 : it->second;
    long long list = list_seats > 0 ? res.allocation.seats_of(party) : 0;
    res.rows.push_back({party, direct, list, list, direct + list, 0});
    res.house += direct + list;
  }
  append_constituency_only(votes, constituency_seats, res);
  return res;
}

PartyVotes aggregate_party_votes(
    const std::vector<std::pair<std::string, Rational>>& candidate_votes) {
  PartyVotes out;
  for (const auto& [party, v] : candidate_votes) {
    if (v < 0) fail(Errc::negative_votes, "negative votes for " + party);
    auto it = std::find_if(out.entries.begin(), out.entries.end(),
                           [&](const auto& e) { return e.first == party; });
    if (it == out.entries.end())
      out.entries.emplace_back(party, v);
    else
      it->second += v;
  }
  return out;
}

}  // namespace ballotworks
