#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ballotworks {

enum class Errc {
  empty_roster,
  duplicate_candidate_in_ballot,
  unknown_candidate,
  invalid_ballot,
  over_budget,
  over_cap,
  score_out_of_range,
  tie_unresolved,
  mark_limit_violation,
  non_finalist_mark,
  mark_for_eliminated_candidate,
  incomplete_ranking,
  insufficient_rounds,
  invalid_scheme,
  seats_exceed_candidates,
  zero_seats,
  invalid_quota,
  initial_seats_exceed_house,
  more_extras_than_parties,
  duplicate_party,
  negative_votes,
  syntax_error,
  candidate_index_out_of_range,
  missing_terminator,
  bad_argument,
};

const char* errc_name(Errc c);

class ElectionError : public std::runtime_error {
 public:
  ElectionError(Errc code, const std::string& what, int line = -1,
                std::vector<int> tied = {})
      : std::runtime_error(what), code_(code), line_(line), tied_(std::move(tied)) {}

  Errc code() const { return code_; }
  // 1-based source line for file errors, -1 elsewhere.
  int line() const { return line_; }
  // Candidate (or row) indices for tie_unresolved.
  const std::vector<int>& tied() const { return tied_; }

 private:
  Errc code_;
  int line_;
  std::vector<int> tied_;
};

[[noreturn]] void fail(Errc code, const std::string& what, int line = -1,
                       std::vector<int> tied = {});

}  // namespace ballotworks
