#pragma once

#include <optional>
#include <vector>

#include "ballotworks/types.hpp"

namespace ballotworks {

// d(x,y) = total weight of ballots ranking x above y. A ballot listing x but not
// y counts for (x,y); a ballot listing neither counts for nothing.
struct PairwiseMatrix {
  int k = 0;
  Weight total = 0;
  std::vector<Weight> d;

  explicit PairwiseMatrix(int k_ = 0, Weight total_ = 0)
      : k(k_), total(total_), d(static_cast<size_t>(k_) * k_, 0) {}

  Weight at(int x, int y) const { return d[static_cast<size_t>(x) * k + y]; }
  Weight& at(int x, int y) { return d[static_cast<size_t>(x) * k + y]; }
  bool beats(int x, int y) const { return at(x, y) > at(y, x); }
  bool operator==(const PairwiseMatrix&) const = default;
};

PairwiseMatrix pairwise_matrix(const RankedProfile& p);

// Candidate beating every other head to head, if any.
std::optional<int> condorcet_winner(const PairwiseMatrix& m);

// Candidate beaten by every other head to head, if any.
std::optional<int> condorcet_loser(const PairwiseMatrix& m);

// True when the strict majority relation fails transitivity on some ordered
// triple (x beats y, y beats z, x does not beat z).
bool majority_cycle_exists(const PairwiseMatrix& m);

}  // namespace ballotworks
