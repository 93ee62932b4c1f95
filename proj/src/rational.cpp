#include "ballotworks/rational.hpp"

namespace ballotworks {

BigInt floor_rat(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);  // den > 0 by canonical form
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::string format_scaled(const Rational& r, int scale) {
  BigInt num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = whole.str();
  bool nonzero = whole != 0;
  if (rem != 0 && scale > 0) {
    out += '.';
    for (int i = 0; i < scale; ++i) {
      rem *= 10;
      BigInt digit = rem / den;
      rem %= den;
      out += static_cast<char>('0' + digit.convert_to<int>());
      if (digit != 0) nonzero = true;
    }
  }
  if (neg && nonzero) out.insert(out.begin(), '-');
  return out;
}

}  // namespace ballotworks
