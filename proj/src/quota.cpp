#include "ballotworks/quota.hpp"

#include "ballotworks/errors.hpp"

namespace ballotworks {

const char* quota_kind_name(QuotaKind k) {
  switch (k) {
    case QuotaKind::hare: return "hare";
    case QuotaKind::droop: return "droop";
    case QuotaKind::hagenbach_bischoff: return "hagenbach-bischoff";
    case QuotaKind::imperiali: return "imperiali";
  }
  return "unknown";
}

BigInt quota_value(QuotaKind kind, const Rational& votes, long long seats) {
  if (seats < 1) fail(Errc::zero_seats, "seats must be positive");
  if (votes < 0) fail(Errc::negative_votes, "vote total must be non-negative");
  BigInt q;
  switch (kind) {
    case QuotaKind::hare:
      q = floor_rat(votes / seats);
      break;
    case QuotaKind::droop:
      q = 1 + floor_rat(votes / (seats + 1));
      break;
    case QuotaKind::hagenbach_bischoff:
      q = floor_rat(votes / (seats + 1));
      break;
    case QuotaKind::imperiali:
      q = floor_rat(votes / (seats + 2));
      break;
  }
  if (q < 1)
    fail(Errc::invalid_quota, std::string(quota_kind_name(kind)) +
                                  " quota is not positive for this vote total");
  return q;
}

}  // namespace ballotworks
