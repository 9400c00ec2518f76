#pragma once

// Reidemeister-Schreier rewriting for kernels of finite quotients, together
// with the conjugacy-class splitting and p-size bookkeeping used to compare
// p-deficiency of a group and a normal subgroup of finite index.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/rational.hpp"
#include "pdef/words.hpp"

namespace pdef {

// Right action of the free group on cosets 0..degree-1, base coset 0.
struct CosetTable {
  std::size_t degree = 0;
  std::vector<Permutation> generator_actions;
};

// Cosets of the kernel are the elements of the image group, numbered as in
// FiniteQuotient::elements(); a generator acts by right multiplication.
CosetTable coset_table(const FiniteQuotient& q, const FinitePresentation& p);

struct SchreierData {
  CosetTable table;
  // Shortlex-minimal representative of each coset; prefix closed.
  std::vector<Word> transversal;
  // Schreier generator t_c * x * t_{c.x}^-1 for every non-tree edge (c, x),
  // ordered by generator, then coset.
  std::vector<Word> basis;
  // basis_index[x][c] is the basis letter of edge (c, x), if not a tree edge.
  std::vector<std::vector<std::optional<std::uint32_t>>> basis_index;

  std::size_t index() const noexcept { return table.degree; }
  std::size_t coset_of(const Word& w) const;
  std::vector<std::string> basis_names() const;
};

// Throws Error if the table is not transitive.
SchreierData schreier(const CosetTable& table);

// w, which must fix the base coset, as a word in the Schreier basis.
Word rewrite_word(const SchreierData& sd, const Word& w);
// Substitutes the basis words back; inverse of rewrite_word.
Word expand_word(const SchreierData& sd, const Word& basis_word);

// k = (C_F(g) : C_K(g)) for the kernel K; the order of the image of the
// maximal root of g.
std::uint64_t centralizer_index(const FiniteQuotient& q, const Word& g);

// For g in the kernel, the conjugates t g t^-1 over transversal words t that
// represent the K-conjugacy classes into which the F-class of g splits; there
// are index/k of them.
std::vector<Word> conjugate_class_reps(const FiniteQuotient& q, const Word& g);
std::vector<Word> conjugate_class_reps(const FiniteQuotient& q,
                                       const SchreierData& sd, const Word& g);

enum class RelatorMode {
  class_representatives,  // index/k conjugates per relator
  all_conjugates,         // every t r t^-1, plain Reidemeister-Schreier
};

// Presentation of the kernel image in the Schreier basis (generators s1..sN).
FinitePresentation subgroup_presentation(
    const FinitePresentation& p, const FiniteQuotient& q,
    RelatorMode mode = RelatorMode::class_representatives);

struct RelatorContribution {
  std::uint64_t centralizer_index;  // k_i
  std::size_t classes;              // d / k_i
  std::uint64_t nu_relator;         // nu_{p,F}(r_i)
  std::uint64_t nu_index;           // nu_p(k_i)
  Rational bound_term;              // (d/k_i) p^{-nu_{p,F}(r_i) + nu_p(k_i)}
  Rational exact_term;              // sum over rewritten class representatives
};

struct SizeBound {
  std::size_t index = 0;
  Rational value;         // sum of bound_term
  Rational exact;         // sum of exact_term
  Rational naive;         // d * sum_i p^{-nu_{p,F}(r_i)}
  std::vector<RelatorContribution> relators;
};

SizeBound p_size_bound(const FinitePresentation& p, const FiniteQuotient& q,
                       std::uint64_t prime);

struct SupermultiplicityReport {
  std::size_t index = 0;
  Rational de_subgroup;   // p-deficiency of the subgroup presentation
  Rational de_original;   // p-deficiency of p
  Rational scaled;        // index * de_original
  bool holds = false;     // de_subgroup >= scaled
};

SupermultiplicityReport supermultiplicity_check(const FinitePresentation& p,
                                                const FiniteQuotient& q,
                                                std::uint64_t prime);

}  // namespace pdef
