#pragma once

// Slow reference implementations used to cross-check the library.  None of
// them calls into the code they check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "pdef/abelian.hpp"
#include "pdef/fuchsian.hpp"
#include "pdef/presentation.hpp"
#include "pdef/rational.hpp"
#include "pdef/rewrite.hpp"
#include "pdef/words.hpp"

namespace pdef::oracle {

// Letters are +-(g+1).
using Letters = std::vector<int>;

Letters free_reduce(const Letters& w);
// Equal exactly for conjugate words: cyclic core, least rotation.
Letters conjugacy_key(const Letters& w);
Letters letters_of(const Word& w);
Word word_of(std::size_t alphabet, const Letters& w);

// Every freely reduced word of length <= max_length, identity included.
std::vector<Letters> all_reduced_words(std::size_t alphabet,
                                       std::size_t max_length);

// For every word w of length <= max_length that is v^{p^k} with k >= 1, the
// largest such k, found by powering every short word.
std::map<Letters, std::uint64_t> power_table(std::size_t alphabet,
                                             std::size_t max_length,
                                             std::uint64_t p);

// Shortest v with v^n = w, p not dividing n, by trying every word no longer
// than w.
Letters shortest_p_prime_root(const Letters& w, std::uint64_t p);

// Cofactor expansion.
BigInt laplace_determinant(const IntMatrix& m);
// gcd of all k x k minors; 0 if all vanish.
BigInt gcd_of_minors(const IntMatrix& m, std::size_t k);

// log_p of the number of homomorphisms to C_p, by trying every assignment.
std::size_t count_homs_to_cp(const FinitePresentation& p, std::uint64_t prime);
// The same for Z^rank + sum C_{d_i}.
std::size_t count_homs_to_cp(const AbelianInvariants& inv,
                             std::uint64_t prime);

// Number of conjugacy classes of the subgroup met by the conjugates t r t^-1,
// t in the transversal: each is rewritten and compared as a cyclic word.
std::size_t subgroup_class_count(const SchreierData& sd, const Word& r);

// Theorem conditions checked on every ordering of the periods.
FuchsianCase classify_by_labelings(const FuchsianSignature& sig,
                                   std::uint64_t p);

}  // namespace pdef::oracle
