#pragma once

// Free group words in run-length form, roots and p-valuations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdef/rational.hpp"

namespace pdef {

struct Run {
  std::uint32_t generator;
  std::int64_t exponent;

  friend bool operator==(const Run&, const Run&) = default;
};

// A freely reduced word over generators 0..alphabet_size()-1.  Adjacent runs
// always carry distinct generators and nonzero exponents; the empty run list
// is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t alphabet_size) : alphabet_(alphabet_size) {}

  // Free reduction of an arbitrary run sequence.  Zero exponents are allowed
  // on input and skipped.  Throws Error on an out-of-range generator.
  static Word reduce(std::size_t alphabet_size, std::span<const Run> runs);
  static Word generator(std::size_t alphabet_size, std::uint32_t g,
                        std::int64_t exponent = 1);

  std::size_t alphabet_size() const noexcept { return alphabet_; }
  std::span<const Run> runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }
  // Number of letters.
  std::uint64_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  // g * this * g^-1
  Word conjugated_by(const Word& g) const;

  // One run of exponent +-1 per letter.
  std::vector<Run> letters() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Run r);

  std::size_t alphabet_ = 0;
  std::vector<Run> runs_;
};

// Shortlex with letter order x1 < x1^-1 < x2 < x2^-1 < ...
bool shortlex_less(const Word& a, const Word& b);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

CyclicDecomposition cyclic_reduction(const Word& w);

// w = conjugator * root^exponent * conjugator^-1, root cyclically reduced and
// not a proper power.  The root generates the centralizer of w.
struct RootDecomposition {
  Word conjugator;
  Word root;
  std::uint64_t exponent = 1;

  Word root_element() const;  // conjugator * root * conjugator^-1
  Word reassemble() const;
};

RootDecomposition maximal_root(const Word& w);

// A finite valuation or +infinity (the identity, the zero vector).
class Valuation {
 public:
  Valuation() = default;  // infinite
  explicit Valuation(std::uint64_t k) : value_(k) {}

  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  std::uint64_t value() const;
  // p^{-k}, and 0 for the infinite valuation.
  Rational weight(std::uint64_t p) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  // Infinite compares greater than every finite value.
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  std::optional<std::uint64_t> value_;
};

bool is_prime(std::uint64_t n);
// Throws Error unless p is prime.
void require_prime(std::uint64_t p);

// Largest k with p^k | n.  Throws on n == 0.
std::uint64_t nu_p_int(std::int64_t n, std::uint64_t p);
std::uint64_t nu_p_int(const BigInt& n, std::uint64_t p);

// Largest k such that w is a p^k-th power in the free group.
Valuation nu_p(const Word& w, std::uint64_t p);

struct PrimeRoot {
  Word root;
  std::uint64_t exponent;  // coprime to p, root^exponent == w
};

// Shortest v with v^n = w and p not dividing n.
PrimeRoot p_prime_root(const Word& w, std::uint64_t p);

}  // namespace pdef
