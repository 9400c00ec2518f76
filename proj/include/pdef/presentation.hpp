#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdef/rational.hpp"
#include "pdef/words.hpp"

namespace pdef {

// <X | R> with named generators.  Relators are freely reduced and never the
// identity.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  FinitePresentation(std::vector<std::string> generator_names,
                     std::vector<Word> relators);

  // Free group on the given generators.
  static FinitePresentation free(std::vector<std::string> generator_names);
  // Generators x1..xn (or x,y,z for n <= 3).
  static FinitePresentation with_default_names(std::size_t n,
                                               std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept {
    return names_;
  }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  // Index of a generator name, or throws Error.
  std::uint32_t generator_index(std::string_view name) const;

  // Same generators, extra relators appended.
  FinitePresentation with_relators(const std::vector<Word>& extra) const;

  friend bool operator==(const FinitePresentation&,
                         const FinitePresentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// Grammar:
//   presentation = "<" names "|" relations ">"
//   relations    = (chain ("," | ";"))* chain?
//   chain        = word ("=" word)*
//   word         = factor ("*"? factor)*
//   factor       = (ident | "(" word ")" | "[" word "," word "]" | "1")
//                  ("^" integer)?
// A chain ending in the literal 1 contributes each of its other members as a
// relator; any other chain w1=w2=...=wk contributes w_i * w_{i+1}^-1.
// [a,b] is the commutator a*b*a^-1*b^-1.
FinitePresentation parse_presentation(std::string_view text);

// A single word over the given generator names.
Word parse_word(std::string_view text,
                const std::vector<std::string>& generator_names);

std::string format_word(const Word& w,
                        const std::vector<std::string>& generator_names);
// Canonical text; parse_presentation(format_presentation(P)) == P.
std::string format_presentation(const FinitePresentation& p);

// |X| - 1 - sum_r p^{-nu_p(r)}
Rational p_deficiency(const FinitePresentation& p, std::uint64_t prime);

// Relators r replaced by r^n, n >= 2.
FinitePresentation power_up(const FinitePresentation& p, std::int64_t n);

// Relators replaced by their primitive p'-roots.
FinitePresentation p_prime_root_presentation(const FinitePresentation& p,
                                             std::uint64_t prime);

}  // namespace pdef
