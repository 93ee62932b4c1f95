#include "ballotworks/tie.hpp"

#include <algorithm>
#include <sstream>

#include "ballotworks/errors.hpp"

namespace ballotworks {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

Rational total_or_zero(const std::map<int, Rational>& totals, int c) {
  auto it = totals.find(c);
  return it == totals.end() ? Rational(0) : it->second;
}

}  // namespace

int TieBreaker::pick(const std::vector<int>& tied,
                     const std::vector<std::map<int, Rational>>& history,
                     bool keep_high, int round) {
  if (tied.empty()) fail(Errc::bad_argument, "empty tie set");
  if (tied.size() == 1) return tied.front();

  int chosen = -1;
  switch (policy_.mode) {
    case TiePolicy::Mode::error: {
      std::ostringstream msg;
      msg << "tie between candidates";
      for (int c : tied) msg << ' ' << c;
      throw ElectionError(Errc::tie_unresolved, msg.str(), -1, tied);
    }
    case TiePolicy::Mode::first_listed:
      chosen = tied.front();
      break;
    case TiePolicy::Mode::backward_then_first_listed: {
      std::vector<int> still = tied;
      for (auto it = history.rbegin(); it != history.rend() && still.size() > 1; ++it) {
        Rational best = total_or_zero(*it, still.front());
        for (int c : still) {
          Rational t = total_or_zero(*it, c);
          if (keep_high ? t > best : t < best) best = t;
        }
        std::vector<int> next;
        for (int c : still)
          if (total_or_zero(*it, c) == best) next.push_back(c);
        still = std::move(next);
      }
      chosen = still.front();
      break;
    }
    case TiePolicy::Mode::seeded_random: {
      std::uint64_t v = splitmix64(policy_.seed + 0x9e3779b97f4a7c15ULL * ++draws_);
      chosen = tied[static_cast<size_t>(v % tied.size())];
      break;
    }
    case TiePolicy::Mode::scripted: {
      if (script_pos_ >= policy_.script.size())
        throw ElectionError(Errc::tie_unresolved, "tie script exhausted", -1, tied);
      chosen = policy_.script[script_pos_++];
      if (std::find(tied.begin(), tied.end(), chosen) == tied.end())
        fail(Errc::bad_argument, "tie script names a candidate outside the tied set");
      break;
    }
  }
  if (log_) log_->push_back({round, tied, chosen});
  return chosen;
}

}  // namespace ballotworks
