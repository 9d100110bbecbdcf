#include "cutcx/bigint.hpp"

#include <limits>
#include <string>

#include "cutcx/errors.hpp"

namespace cutcx {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw InvalidArgument("combinatorial binomial needs a >= 0, got a=" + std::to_string(a));
  }
  if (b < 0 || b > a) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::int64_t to_int64(const BigInt& value) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (value < lo || value > hi) {
    throw CapacityError("integer " + value.get_str() + " does not fit in 64 bits");
  }
  return std::stoll(value.get_str());
}

}  // namespace cutcx
