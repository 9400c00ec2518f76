#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdef {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den" in lowest terms, e.g. "0/1", "-3/2".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

// p^{-k} as an exact rational.
Rational inverse_power(std::uint64_t p, std::uint64_t k);

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace pdef
