#pragma once

// Smith normal form over Z and the abelian side of p-deficiency.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/rational.hpp"
#include "pdef/words.hpp"

namespace pdef {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

// S = U * A * V with U, V unimodular, S diagonal with nonnegative entries
// d_1 | d_2 | ... (zeros last).
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Z^rank + C_{d_1} + ... + C_{d_s}, d_1 | ... | d_s, every d_i >= 2.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> divisors;

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

// Column j is the exponent-sum vector of relator j.
IntMatrix exponent_matrix(const FinitePresentation& p);
// Exponent sums of one word.
std::vector<BigInt> exponent_vector(const Word& w);

AbelianInvariants abelian_invariants(const FinitePresentation& p);
// Invariants from a relation matrix with one column per relation.
AbelianInvariants invariants_from_relation_matrix(const IntMatrix& m);

// Largest k with p^k dividing every coordinate; infinite for the zero vector.
Valuation nu_p_vector(const std::vector<BigInt>& v, std::uint64_t p);

// |X| - 1 - sum_r p^{-nu_{p,Z^X}(r)}
Rational abelian_p_deficiency_presentation(const FinitePresentation& p,
                                           std::uint64_t prime);
// rank - 1 + sum_i (1 - p^{-nu_p(d_i)})
Rational abelian_p_deficiency_group(const AbelianInvariants& inv,
                                    std::uint64_t prime);
// Upper bound for the p-deficiency of the group presented by p.
Rational upper_bound_de(const FinitePresentation& p, std::uint64_t prime);

// dim over F_p of G / G^p for G with the given invariants.
std::size_t d_p(const AbelianInvariants& inv, std::uint64_t prime);

std::string format_invariants(const AbelianInvariants& inv);

}  // namespace pdef
