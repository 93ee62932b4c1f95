#include "ballotworks/apportionment.hpp"

#include <algorithm>
#include <set>

namespace ballotworks {

Rational PartyVotes::total() const {
  Rational t = 0;
  for (const auto& [name, v] : entries) t += v;
  return t;
}

void PartyVotes::validate() const {
  std::set<std::string> seen;
  for (const auto& [name, v] : entries) {
    if (!seen.insert(name).second)
      fail(Errc::duplicate_party, "duplicate party: " + name);
    if (v < 0) fail(Errc::negative_votes, "negative votes for " + name);
  }
}

long long SeatAllocation::seats_of(const std::string& party) const {
  for (const auto& r : rows)
    if (r.party == party) return r.seats;
  return 0;
}

Rational DivisorFamily::divisor(long long i) const {
  switch (kind) {
    case Kind::dhondt: return Rational(i + 1);
    case Kind::sainte_lague: return Rational(2 * i + 1);
    case Kind::modified_sainte_lague:
      return i == 0 ? Rational(7, 5) : Rational(2 * i + 1);
    case Kind::imperiali: return Rational(i + 2);
    case Kind::danish: return Rational(3 * i + 1);
    case Kind::custom:
      if (i < 0 || i >= static_cast<long long>(custom.size()))
        fail(Errc::invalid_scheme, "custom divisor list too short for the house size");
      return custom[static_cast<size_t>(i)];
  }
  fail(Errc::invalid_scheme, "unknown divisor family");
}

namespace {

void validate_custom(const DivisorFamily& family) {
  if (family.kind != DivisorFamily::Kind::custom) return;
  if (family.custom.empty())
    fail(Errc::invalid_scheme, "custom divisor list is empty");
  for (size_t i = 0; i < family.custom.size(); ++i) {
    if (family.custom[i] <= 0)
      fail(Errc::invalid_scheme, "divisors must be positive");
    if (i > 0 && family.custom[i] <= family.custom[i - 1])
      fail(Errc::invalid_scheme, "divisors must strictly increase");
  }
}

void check_threshold(const Rational& threshold) {
  if (threshold < 0 || threshold >= 1)
    fail(Errc::bad_argument, "threshold must be a fraction in [0, 1)");
}

std::vector<size_t> included_rows(const SeatAllocation& alloc) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < alloc.rows.size(); ++i)
    if (!alloc.rows[i].excluded) idx.push_back(i);
  return idx;
}

SeatAllocation start_allocation(const PartyVotes& votes, long long house,
                                const Rational& threshold) {
  votes.validate();
  check_threshold(threshold);
  if (house < 1) fail(Errc::zero_seats, "house size must be positive");
  SeatAllocation alloc;
  alloc.house = house;
  Rational bar = threshold * votes.total();
  for (const auto& [name, v] : votes.entries) {
    PartyRow row;
    row.party = name;
    row.votes = v;
    row.excluded = v < bar;
    alloc.rows.push_back(std::move(row));
  }
  if (included_rows(alloc).empty())
    fail(Errc::bad_argument, "no party clears the threshold");
  return alloc;
}

}  // namespace

SeatAllocation highest_averages(const PartyVotes& votes, long long house,
                                const DivisorFamily& family, const Rational& threshold,
                                const TiePolicy& tie) {
  validate_custom(family);
  SeatAllocation alloc = start_allocation(votes, house, threshold);
  auto included = included_rows(alloc);

  struct Entry {
    Rational avg;
    Rational votes;
    size_t row;
    long long i;
  };
  std::vector<Entry> entries;
  for (size_t r : included) {
    auto& row = alloc.rows[r];
    for (long long i = 0; i < house; ++i) {
      row.averages.push_back(row.votes / family.divisor(i));
      entries.push_back({row.averages.back(), row.votes, r, i});
    }
  }

  auto key_less = [](const Entry& a, const Entry& b) {
    if (a.avg != b.avg) return a.avg > b.avg;
    if (a.votes != b.votes) return a.votes > b.votes;
    if (a.row != b.row) return a.row < b.row;
    return a.i < b.i;
  };
  std::sort(entries.begin(), entries.end(), key_less);

  size_t cut = static_cast<size_t>(house);
  auto same_key = [](const Entry& a, const Entry& b) {
    return a.avg == b.avg && a.votes == b.votes;
  };
  size_t lo = cut, hi = cut;
  if (cut < entries.size() && same_key(entries[cut - 1], entries[cut])) {
    // The selection boundary splits a group of equal (average, votes) keys.
    while (lo > 0 && same_key(entries[lo - 1], entries[cut - 1])) --lo;
    while (hi < entries.size() && same_key(entries[hi], entries[cut - 1])) ++hi;
  }

  std::vector<char> take(entries.size(), 0);
  for (size_t i = 0; i < lo; ++i) take[i] = 1;
  if (lo < cut) {
    TieBreaker breaker(tie, &alloc.ties);
    std::vector<size_t> group;
    for (size_t i = lo; i < hi; ++i) group.push_back(i);
    for (size_t slot = lo; slot < cut; ++slot) {
      std::vector<int> tied_rows;
      for (size_t g : group)
        if (!take[g]) tied_rows.push_back(static_cast<int>(entries[g].row));
      std::sort(tied_rows.begin(), tied_rows.end());
      tied_rows.erase(std::unique(tied_rows.begin(), tied_rows.end()), tied_rows.end());
      int pick = breaker.pick(tied_rows, {}, true, 1);
      for (size_t g : group)
        if (!take[g] && entries[g].row == static_cast<size_t>(pick)) {
          take[g] = 1;
          break;
        }
    }
  }

  for (size_t i = 0; i < entries.size(); ++i)
    if (take[i]) {
      ++alloc.rows[entries[i].row].seats;
      alloc.winning_averages.push_back(entries[i].avg);
    }
  return alloc;
}

SeatAllocation largest_remainder(const PartyVotes& votes, long long house, QuotaKind kind,
                                 const Rational& threshold, const TiePolicy& tie,
                                 std::optional<Rational> quota_votes) {
  SeatAllocation alloc = start_allocation(votes, house, threshold);
  auto included = included_rows(alloc);

  Rational base = quota_votes.value_or(votes.total());
  Rational q = Rational(quota_value(kind, base, house));
  alloc.quota = q;

  long long assigned = 0;
  for (size_t r : included) {
    auto& row = alloc.rows[r];
    row.quotient = row.votes / q;
    row.quotient_floor = floor_rat(row.quotient).convert_to<long long>();
    row.remainder = row.quotient - row.quotient_floor;
    row.seats = row.quotient_floor;
    assigned += row.quotient_floor;
  }
  if (assigned > house)
    fail(Errc::initial_seats_exceed_house,
         "quota floors alone exceed the house size");
  long long extras = house - assigned;
  if (extras > static_cast<long long>(included.size()))
    fail(Errc::more_extras_than_parties,
         "more leftover seats than parties to take them");

  std::vector<size_t> order = included;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const auto& ra = alloc.rows[a];
    const auto& rb = alloc.rows[b];
    if (ra.remainder != rb.remainder) return ra.remainder > rb.remainder;
    if (ra.votes != rb.votes) return ra.votes > rb.votes;
    return a < b;
  });

  auto same_key = [&](size_t a, size_t b) {
    return alloc.rows[a].remainder == alloc.rows[b].remainder &&
           alloc.rows[a].votes == alloc.rows[b].votes;
  };
  size_t cut = static_cast<size_t>(extras);
  size_t lo = cut, hi = cut;
  if (extras > 0 && cut < order.size() && same_key(order[cut - 1], order[cut])) {
    while (lo > 0 && same_key(order[lo - 1], order[cut - 1])) --lo;
    while (hi < order.size() && same_key(order[hi], order[cut - 1])) ++hi;
  }

  for (size_t i = 0; i < lo; ++i) alloc.rows[order[i]].extra = 1;
  if (lo < cut) {
    TieBreaker breaker(tie, &alloc.ties);
    std::vector<int> tied_rows;
    for (size_t i = lo; i < hi; ++i) tied_rows.push_back(static_cast<int>(order[i]));
    std::sort(tied_rows.begin(), tied_rows.end());
    for (size_t slot = lo; slot < cut; ++slot) {
      int pick = breaker.pick(tied_rows, {}, true, 1);
      alloc.rows[static_cast<size_t>(pick)].extra = 1;
      tied_rows.erase(std::find(tied_rows.begin(), tied_rows.end(), pick));
    }
  }

  for (auto& row : alloc.rows) row.seats += row.extra;
  return alloc;
}

std::vector<std::string> open_list_order(
    const std::vector<std::pair<std::string, Weight>>& list, long long seats,
    const TiePolicy& tie) {
  if (seats < 0) fail(Errc::bad_argument, "seats must be non-negative");
  if (seats > static_cast<long long>(list.size()))
    fail(Errc::seats_exceed_candidates, "more seats than list candidates");
  std::set<std::string> seen;
  for (const auto& [name, v] : list) {
    if (!seen.insert(name).second) fail(Errc::duplicate_party, "duplicate list name: " + name);
    if (v < 0) fail(Errc::negative_votes, "negative personal votes for " + name);
  }

  std::vector<size_t> order(list.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (list[a].second != list[b].second) return list[a].second > list[b].second;
    return a < b;
  });

  size_t cut = static_cast<size_t>(seats);
  if (cut > 0 && cut < order.size() &&
      list[order[cut - 1]].second == list[order[cut]].second) {
    size_t lo = cut, hi = cut;
    while (lo > 0 && list[order[lo - 1]].second == list[order[cut - 1]].second) --lo;
    while (hi < order.size() && list[order[hi]].second == list[order[cut - 1]].second) ++hi;
    std::vector<TieEvent> events;
    TieBreaker breaker(tie, &events);
    std::vector<int> tied;
    for (size_t i = lo; i < hi; ++i) tied.push_back(static_cast<int>(order[i]));
    std::sort(tied.begin(), tied.end());
    std::vector<size_t> chosen;
    for (size_t slot = lo; slot < cut; ++slot) {
      int pick = breaker.pick(tied, {}, false, 1);
      chosen.push_back(static_cast<size_t>(pick));
      tied.erase(std::find(tied.begin(), tied.end(), pick));
    }
    std::sort(chosen.begin(), chosen.end());
    std::copy(chosen.begin(), chosen.end(), order.begin() + static_cast<long>(lo));
  }

  std::vector<std::string> out;
  for (size_t i = 0; i < cut; ++i) out.push_back(list[order[i]].first);
  return out;
}

}  // namespace ballotworks
