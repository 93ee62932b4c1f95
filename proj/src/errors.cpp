#include "ballotworks/errors.hpp"

namespace ballotworks {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_roster: return "empty_roster";
    case Errc::duplicate_candidate_in_ballot: return "duplicate_candidate_in_ballot";
    case Errc::unknown_candidate: return "unknown_candidate";
    case Errc::invalid_ballot: return "invalid_ballot";
    case Errc::over_budget: return "over_budget";
    case Errc::over_cap: return "over_cap";
    case Errc::score_out_of_range: return "score_out_of_range";
    case Errc::tie_unresolved: return "tie_unresolved";
    case Errc::mark_limit_violation: return "mark_limit_violation";
    case Errc::non_finalist_mark: return "non_finalist_mark";
    case Errc::mark_for_eliminated_candidate: return "mark_for_eliminated_candidate";
    case Errc::incomplete_ranking: return "incomplete_ranking";
    case Errc::insufficient_rounds: return "insufficient_rounds";
    case Errc::invalid_scheme: return "invalid_scheme";
    case Errc::seats_exceed_candidates: return "seats_exceed_candidates";
    case Errc::zero_seats: return "zero_seats";
    case Errc::invalid_quota: return "invalid_quota";
    case Errc::initial_seats_exceed_house: return "initial_seats_exceed_house";
    case Errc::more_extras_than_parties: return "more_extras_than_parties";
    case Errc::duplicate_party: return "duplicate_party";
    case Errc::negative_votes: return "negative_votes";
    case Errc::syntax_error: return "syntax_error";
    case Errc::candidate_index_out_of_range: return "candidate_index_out_of_range";
    case Errc::missing_terminator: return "missing_terminator";
    case Errc::bad_argument: return "bad_argument";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what, int line, std::vector<int> tied) {
  std::string msg = what;
  if (line >= 1) msg += " (line " + std::to_string(line) + ")";
  throw ElectionError(code, msg, line, std::move(tied));
}

}  // namespace ballotworks
