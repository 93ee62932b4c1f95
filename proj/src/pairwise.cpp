#include "ballotworks/pairwise.hpp"

#include <algorithm>

namespace ballotworks {

PairwiseMatrix pairwise_matrix(const RankedProfile& p) {
  int k = p.roster.size();
  PairwiseMatrix m(k, p.total_weight);
  std::vector<int> pos(static_cast<size_t>(k));
  for (const auto& b : p.ballots) {
    // pos: 0-based rank for listed candidates, k for unlisted.
    std::fill(pos.begin(), pos.end(), k);
    for (size_t i = 0; i < b.ranking.size(); ++i)
      pos[static_cast<size_t>(b.ranking[i])] = static_cast<int>(i);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        if (pos[x] < pos[y]) m.at(x, y) += b.weight;
  }
  return m;
}

std::optional<int> condorcet_winner(const PairwiseMatrix& m) {
  for (int x = 0; x < m.k; ++x) {
    bool all = true;
    for (int y = 0; y < m.k && all; ++y)
      if (y != x && !m.beats(x, y)) all = false;
    if (all) return x;
  }
  return std::nullopt;
}

std::optional<int> condorcet_loser(const PairwiseMatrix& m) {
  for (int x = 0; x < m.k; ++x) {
    bool all = true;
    for (int y = 0; y < m.k && all; ++y)
      if (y != x && !m.beats(y, x)) all = false;
    if (all) return x;
  }
  return std::nullopt;
}

bool majority_cycle_exists(const PairwiseMatrix& m) {
  for (int x = 0; x < m.k; ++x)
    for (int y = 0; y < m.k; ++y) {
      if (y == x || !m.beats(x, y)) continue;
      for (int z = 0; z < m.k; ++z) {
        if (z == x || z == y) continue;
        if (m.beats(y, z) && !m.beats(x, z)) return true;
      }
    }
  return false;
}

}  // namespace ballotworks
