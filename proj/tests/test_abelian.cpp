#include "doctest.h"
#include "pdef/abelian.hpp"
#include "pdef/oracles.hpp"
#include "pdef/presentation.hpp"
#include "support.hpp"

using namespace pdef;

namespace {

IntMatrix matrix(std::size_t r, std::size_t c, std::vector<int> entries) {
  std::vector<BigInt> big(entries.begin(), entries.end());
  return IntMatrix(r, c, big);
}

AbelianInvariants inv(std::size_t rank, std::vector<int> divisors) {
  AbelianInvariants out;
  out.rank = rank;
  for (int d : divisors) {
    out.divisors.push_back(d);
  }
  return out;
}

void check_snf(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  CHECK(snf.U * a * snf.V == snf.S);
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.V)) == 1);
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < snf.S.rows(); ++i) {
    for (std::size_t j = 0; j < snf.S.cols(); ++j) {
      if (i != j) {
        CHECK(snf.S(i, j) == 0);
      }
    }
  }
  BigInt product = 1;
  for (std::size_t k = 1; k <= d.size(); ++k) {
    CHECK(d[k - 1] >= 0);
    if (k < d.size() && d[k - 1] != 0) {
      CHECK(d[k] % d[k - 1] == 0);
    }
    product *= d[k - 1];
    CHECK(product == oracle::gcd_of_minors(a, k));
  }
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto snf = smith_normal_form(matrix(2, 2, {4, 0, 0, 2}));
  CHECK(snf.diagonal() == std::vector<BigInt>{2, 4});
  snf = smith_normal_form(matrix(2, 2, {2, 4, 2, 0}));
  CHECK(snf.diagonal() == std::vector<BigInt>{2, 4});
  snf = smith_normal_form(IntMatrix(2, 3));
  CHECK(snf.S == IntMatrix(2, 3));
  CHECK(snf.U == IntMatrix::identity(2));
  CHECK(snf.V == IntMatrix::identity(3));
}

TEST_CASE("Smith normal form against gcd of minors") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < 400; ++i) {
    const auto r = static_cast<std::size_t>(dim(rng));
    const auto c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 0; y < c; ++y) {
        a(x, y) = entry(rng);
      }
    }
    check_snf(a);
  }
}

TEST_CASE("exponent matrix examples") {
  auto m = exponent_matrix(parse_presentation("< x, y | x^2*y^2, x^4 >"));
  CHECK(m == matrix(2, 2, {2, 4, 2, 0}));
  m = exponent_matrix(parse_presentation("< x, y | x*y*x^-1*y^-1 >"));
  CHECK(m == IntMatrix(2, 1));
  m = exponent_matrix(parse_presentation("< x, y, z | x*y*z >"));
  CHECK(m == matrix(3, 1, {1, 1, 1}));
}

TEST_CASE("abelian invariants examples") {
  CHECK(abelian_invariants(parse_presentation("< x, y | x^2*y^2, x^4 >")) ==
        inv(0, {2, 4}));
  CHECK(abelian_invariants(parse_presentation("< x, y | >")) == inv(2, {}));
  CHECK(abelian_invariants(
            parse_presentation("< x, y | x^2, y^5, (x*y)^5 >")) ==
        inv(0, {5}));
  CHECK(abelian_invariants(
            parse_presentation("< x,y,z | x^2, y^4, z^4, x*y*z >")) ==
        inv(0, {2, 4}));
  CHECK(format_invariants(inv(1, {2, 4})) == "C2 + C4 + Z");
}

TEST_CASE("vector valuation examples") {
  CHECK(nu_p_vector({4, 8}, 2) == Valuation(2));
  CHECK(nu_p_vector({0, 0}, 2).is_infinite());
  CHECK(nu_p_vector({0, 0}, 7).weight(7) == 0);
  CHECK(nu_p_vector({6, 9}, 3) == Valuation(1));
}

TEST_CASE("abelian p-deficiency examples") {
  CHECK(abelian_p_deficiency_presentation(
            parse_presentation("< x, y | x*y*x^-1*y^-1 >"), 2) == 1);
  CHECK(abelian_p_deficiency_presentation(parse_presentation("< x | x^4 >"),
                                          2) == Rational(-1, 4));
  CHECK(abelian_p_deficiency_presentation(
            parse_presentation("< x, y | x^2, y^5, (x*y)^5 >"), 2) ==
        Rational(-3, 2));

  CHECK(abelian_p_deficiency_group(inv(1, {6}), 2) == Rational(1, 2));
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(abelian_p_deficiency_group(inv(r, {}), 3) ==
          static_cast<std::int64_t>(r) - 1);
  }
  CHECK(abelian_p_deficiency_group(inv(0, {5}), 2) == -1);
}

TEST_CASE("abelian upper bound examples") {
  CHECK(upper_bound_de(parse_presentation("< x, y | x^2, y^5, (x*y)^5 >"),
                       2) == -1);
  CHECK(upper_bound_de(parse_presentation("< x, y | >"), 5) == 1);
  // C2 + C4 by the minors oracle: -1 + 1/2 + 3/4.
  const auto tri = parse_presentation("< x,y,z | x^2, y^4, z^4, x*y*z >");
  const auto m = exponent_matrix(tri);
  CHECK(oracle::gcd_of_minors(m, 1) == 1);
  CHECK(oracle::gcd_of_minors(m, 2) == 2);
  CHECK(oracle::gcd_of_minors(m, 3) == 8);
  CHECK(upper_bound_de(tri, 2) == Rational(1, 4));
  CHECK(upper_bound_de(tri, 2) >= p_deficiency(tri, 2));
}

TEST_CASE("d_p examples") {
  CHECK(d_p(inv(1, {2, 4}), 2) == 3);
  CHECK(oracle::count_homs_to_cp(inv(1, {2, 4}), 2) == 3);
  CHECK(d_p(inv(3, {}), 5) == 3);
  CHECK(d_p(inv(0, {5}), 2) == 0);
}

TEST_CASE("abelian bounds dominate the presentation value") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_presentation(rng, 3, 4);
    for (std::uint64_t prime : {2u, 3u}) {
      const Rational pres = p_deficiency(p, prime);
      const Rational ab_pres = abelian_p_deficiency_presentation(p, prime);
      const Rational ab_group =
          abelian_p_deficiency_group(abelian_invariants(p), prime);
      CHECK(ab_pres >= pres);
      CHECK(ab_group >= ab_pres);
    }
  }
}

TEST_CASE("d_p agrees with homomorphism counting") {
  for (std::uint64_t prime : {2u, 3u}) {
    for (std::size_t rank = 0; rank <= 2; ++rank) {
      for (int a = 1; a <= 12; ++a) {
        for (int b = a; b <= 12; b += a) {
          const auto i = inv(rank, {a, b});
          AbelianInvariants clean = i;
          std::erase(clean.divisors, BigInt(1));
          CHECK(d_p(clean, prime) == oracle::count_homs_to_cp(clean, prime));
        }
      }
    }
  }
}

TEST_CASE("d_p of a presentation matches its homomorphisms") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_presentation(rng, 3, 3);
    for (std::uint64_t prime : {2u, 3u}) {
      CHECK(d_p(abelian_invariants(p), prime) ==
            oracle::count_homs_to_cp(p, prime));
    }
  }
}
