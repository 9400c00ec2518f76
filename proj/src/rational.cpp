#include "pdef/rational.hpp"

namespace pdef {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= b;
    }
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational inverse_power(std::uint64_t p, std::uint64_t k) {
  return Rational(BigInt(1), big_pow(p, k));
}

}  // namespace pdef
