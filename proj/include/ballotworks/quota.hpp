#pragma once

#include "ballotworks/rational.hpp"

namespace ballotworks {

enum class QuotaKind { hare, droop, hagenbach_bischoff, imperiali };

const char* quota_kind_name(QuotaKind k);

// hare:               floor(V / S)
// droop:              1 + floor(V / (S + 1))
// hagenbach_bischoff: floor(V / (S + 1))        (droop - 1)
// imperiali:          floor(V / (S + 2))
// Throws zero_seats for S < 1 and invalid_quota when the result is < 1.
BigInt quota_value(QuotaKind kind, const Rational& votes, long long seats);

}  // namespace ballotworks
