#pragma once

// Finite quotients of free groups given by permutation images.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/words.hpp"

namespace pdef {

// A permutation of {0, ..., degree-1}; printed 1-based in cycle notation.
// Composition is left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint32_t> images);

  // "(1 2)(3 4 5)", "()"; commas inside cycles are accepted.  The degree is
  // the largest point mentioned or min_degree, whichever is larger.
  static Permutation parse(std::string_view text, std::size_t min_degree = 0);
  static Permutation cycle(std::size_t degree,
                           const std::vector<std::uint32_t>& points_1_based);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t n) const;
  std::uint64_t order() const;
  // Cycle lengths including fixed points, in order of smallest point.
  std::vector<std::size_t> cycle_lengths() const;
  Permutation extended(std::size_t degree) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultMaxOrder = 100;

// A homomorphism from the free group on generator_count() letters onto the
// permutation group generated by the images.  The closure is enumerated by
// breadth-first search with letter order x1 < x1^-1 < x2 < ..., so element i
// is also the i-th coset of the kernel in shortlex order of its
// representative; the right-multiplication table in that numbering is a
// complete invariant of the kernel.
class FiniteQuotient {
 public:
  explicit FiniteQuotient(std::vector<Permutation> generator_images,
                          std::size_t max_order = kDefaultMaxOrder,
                          std::size_t degree = 0);

  std::size_t generator_count() const noexcept { return images_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Permutation& image(std::uint32_t generator) const {
    return images_.at(generator);
  }
  const std::vector<Permutation>& images() const noexcept { return images_; }
  const std::vector<Permutation>& elements() const noexcept {
    return elements_;
  }
  // Throws Error when p is not in the closure.
  std::size_t element_index(const Permutation& p) const;

  // Index of elements()[element] * image(generator)^(inverse ? -1 : 1).
  std::uint32_t act(std::size_t element, std::uint32_t generator,
                    bool inverse = false) const;

  // Right-multiplication table, generator-major.
  const std::vector<std::uint32_t>& kernel_key() const noexcept {
    return table_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Permutation> images_;
  std::size_t degree_ = 1;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_table_;
};

Permutation evaluate(const FiniteQuotient& q, const Word& w);
bool is_quotient_of(const FiniteQuotient& q, const FinitePresentation& p);
std::uint64_t order_of_image(const FiniteQuotient& q, const Word& w);
// Index of the kernel; throws unless every relator is killed.
std::size_t kernel_index(const FiniteQuotient& q, const FinitePresentation& p);

// C_n acting regularly, generator i mapped to the shift by exponents[i].
FiniteQuotient cyclic_quotient(std::uint32_t n,
                               const std::vector<std::int64_t>& exponents);

// "x:(1 2),y:(1 2 3 4 5)"; generators not mentioned map to the identity.
// All images are extended to a common degree.
std::vector<Permutation> parse_generator_images(
    std::string_view text, const std::vector<std::string>& names,
    std::size_t degree = 0);
FiniteQuotient parse_quotient_spec(std::string_view text,
                                   const std::vector<std::string>& names,
                                   std::size_t degree = 0,
                                   std::size_t max_order = kDefaultMaxOrder);

struct CatalogGroup {
  std::string name;
  std::vector<Permutation> generators;
  std::size_t order = 0;
};

class GroupCatalog {
 public:
  GroupCatalog() = default;
  explicit GroupCatalog(std::vector<CatalogGroup> groups);

  // C2..C12, C2xC2, C3xC3, C5xC5, D4, D5, S3, S4, A4.
  static GroupCatalog default_catalog();
  // One group per line: "name degree perm1 perm2 ...", '#' comments.
  static GroupCatalog parse_manifest(std::string_view text);

  const std::vector<CatalogGroup>& groups() const noexcept { return groups_; }
  // Only the groups of order <= max_order, catalog order kept.
  GroupCatalog restricted(std::size_t max_order) const;
  // Only the named groups.
  GroupCatalog subset(const std::vector<std::string>& names) const;

 private:
  std::vector<CatalogGroup> groups_;
};

struct SearchBudget {
  std::size_t max_order = 24;
  std::uint64_t max_assignments = 1'000'000;
};

struct QuotientSearch {
  std::vector<FiniteQuotient> quotients;
  std::uint64_t assignments_examined = 0;
  bool budget_exhausted = false;
};

// Every assignment of catalog-group elements to generators that kills all
// relators, one quotient per distinct kernel, in catalog then assignment
// order.  The trivial quotient comes first.  The visitor returns false to
// stop early.
QuotientSearch for_each_quotient(
    const FinitePresentation& p, const GroupCatalog& catalog,
    const SearchBudget& budget,
    const std::function<bool(const FiniteQuotient&)>& visit);

QuotientSearch enumerate_quotients(const FinitePresentation& p,
                                   const GroupCatalog& catalog,
                                   const SearchBudget& budget);

}  // namespace pdef
