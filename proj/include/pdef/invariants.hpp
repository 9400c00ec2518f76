#pragma once

// Searches over kernels of finite quotients: p-Euler characteristic
// estimates, d_p gradient windows, d_p after adding normal generators, and
// power-relator witnesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/rational.hpp"
#include "pdef/rewrite.hpp"
#include "pdef/words.hpp"

namespace pdef {

struct SubgroupSample {
  FiniteQuotient quotient;
  std::size_t index = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  Rational de;     // p-deficiency of the rewritten presentation
  Rational ratio;  // de / index
};

struct ChiEstimate {
  // max de / index over the examined kernels; -best_ratio bounds chi_p from
  // above.
  Rational best_ratio;
  std::size_t best_sample = 0;
  std::vector<SubgroupSample> samples;
  std::uint64_t assignments_examined = 0;
  bool budget_exhausted = false;
};

ChiEstimate chi_p_estimate(const FinitePresentation& p, std::uint64_t prime,
                           const GroupCatalog& catalog,
                           const SearchBudget& budget);

struct GradientSample {
  std::size_t index = 0;
  std::size_t d_p = 0;
  Rational ratio;  // d_p / index
  FiniteQuotient quotient;
};

// Finite window only: min and max over the examined kernels, never limits.
struct GradientWindow {
  std::vector<GradientSample> samples;
  Rational min_ratio;
  Rational max_ratio;
  std::vector<std::size_t> indices;  // distinct, ascending
  std::uint64_t assignments_examined = 0;
  bool budget_exhausted = false;
};

GradientWindow gradient_window(const FinitePresentation& p,
                               std::uint64_t prime,
                               const GroupCatalog& catalog,
                               const SearchBudget& budget);

struct DpDrop {
  std::size_t d_before = 0;
  std::size_t d_after = 0;
  std::size_t ell = 0;  // normal generators that are not p-th powers
  bool holds = false;   // d_after >= d_before - ell
};

DpDrop quotient_dp_drop(const FinitePresentation& sub,
                        const std::vector<Word>& normal_generators,
                        std::uint64_t prime);

struct PowerWitness {
  std::size_t relator_index = 0;
  Word relator;
  Word root;               // r = root^exponent
  std::uint64_t exponent;  // coprime to p
  FiniteQuotient quotient;
  SupermultiplicityReport report;
};

// The relator-level check for one quotient: the first relator whose
// primitive p'-root survives in q, with the exact kernel report.
std::optional<PowerWitness> power_witness_for(const FinitePresentation& p,
                                              std::uint64_t prime,
                                              const FiniteQuotient& q);

// Requires p_deficiency(p, prime) == 0.  The first catalog quotient with a
// witness whose kernel presentation has positive p-deficiency.
std::optional<PowerWitness> lemma_power_witness(const FinitePresentation& p,
                                                std::uint64_t prime,
                                                const GroupCatalog& catalog,
                                                const SearchBudget& budget);

// For <x, y | w^p = v_1^q = ... = v_m^q = 1> with distinct primes p, q and
// m < q(1 - 1/p): the map F -> F_q^2 -> C_q that kills w and none of the
// v_i.  Throws Error if the hypotheses fail.
FiniteQuotient index_q_quotient(const Word& w, const std::vector<Word>& vs,
                                std::uint64_t p, std::uint64_t q);

}  // namespace pdef
