#pragma once

// Cocompact orientable Fuchsian signatures (s; e_1, ..., e_r).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/rational.hpp"

namespace pdef {

class FuchsianSignature {
 public:
  // Throws Error unless every period is >= 2 and the volume is positive.
  FuchsianSignature(std::uint64_t genus, std::vector<std::uint64_t> periods);

  std::uint64_t genus() const noexcept { return genus_; }
  // Ascending.
  const std::vector<std::uint64_t>& periods() const noexcept {
    return periods_;
  }
  std::string to_string() const;

  friend bool operator==(const FuchsianSignature&,
                         const FuchsianSignature&) = default;

 private:
  std::uint64_t genus_;
  std::vector<std::uint64_t> periods_;
};

// "(0; 6,12,12)", "(2)", "(2;)".
FuchsianSignature parse_signature(std::string_view text);

// Generators x1..xr, u1, v1, ..., us, vs; relators x_i^{e_i} and
// x1...xr [u1,v1]...[us,vs].
FinitePresentation standard_presentation(const FuchsianSignature& sig);

// 2s - 2 + sum (1 - 1/e_i)
Rational volume(const FuchsianSignature& sig);
// 2s - 2 + sum (1 - p^{-nu_p(e_i)})
Rational de_standard(const FuchsianSignature& sig, std::uint64_t p);
// 2s - 1 + sum_{i >= 2} (1 - p^{-nu_p(e_i)}), periods sorted by nu_p
// descending.
Rational de_upper(const FuchsianSignature& sig, std::uint64_t p);

enum class FuchsianCase { a, b, c, d, none };
std::string to_string(FuchsianCase c);

FuchsianCase classify(const FuchsianSignature& sig, std::uint64_t p);

struct DeExact {
  FuchsianCase fuchsian_case = FuchsianCase::none;
  // Set when the case is a..d: the p-deficiency of the group.
  std::optional<Rational> value;
  // Otherwise the group value is negative and lies in [lower, upper].
  Rational lower;
  Rational upper;
};

DeExact de_exact(const FuchsianSignature& sig, std::uint64_t p);

// A transitive action of the standard generators on {1..degree}: elliptic[i]
// for x_i, hyperbolic[2j], hyperbolic[2j+1] for u_j, v_j.
struct EllipticAction {
  std::size_t degree = 0;
  std::vector<Permutation> elliptic;
  std::vector<Permutation> hyperbolic;

  std::vector<Permutation> generator_images() const;
  std::string to_string(const FinitePresentation& standard) const;
};

// Throws Error if the action does not fit the signature, is intransitive,
// violates a relation, or yields a non-integral genus.
void validate_action(const FuchsianSignature& sig, const EllipticAction& act);

// Signature of the point stabilizer of the action.
FuchsianSignature singerman_transfer(const FuchsianSignature& sig,
                                     const EllipticAction& act);

// The action as a finite quotient of the standard presentation; for the
// regular actions built below its kernel is the point stabilizer.
FiniteQuotient action_quotient(const FuchsianSignature& sig,
                               const EllipticAction& act);

struct KernelConstruction {
  FuchsianCase fuchsian_case = FuchsianCase::none;
  EllipticAction action;
  FuchsianSignature result;
  std::size_t index = 0;
};

// Case a: onto C_2^2 killing the elliptic generators.  Cases b-d: onto C_p
// with x_i -> 1 and x_j -> -1 for two suitable periods.  Throws Error if the
// case does not apply.
KernelConstruction kernel_construction(const FuchsianSignature& sig,
                                       std::uint64_t p, FuchsianCase which);

// p = 2, genus 0, no case applies, exactly three even periods: the index-2
// kernel sending the two periods that are 2 mod 4 to the generator of C_2.
// Its signature has genus 0 and exactly two even periods.
KernelConstruction descent_construction(const FuchsianSignature& sig);

}  // namespace pdef
