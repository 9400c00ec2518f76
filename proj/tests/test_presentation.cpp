#include "doctest.h"
#include "pdef/error.hpp"
#include "pdef/presentation.hpp"
#include "support.hpp"

using namespace pdef;

TEST_CASE("parse presentations") {
  auto p = parse_presentation("< x, y | x^2, y^5, (x*y)^5 >");
  CHECK(p.generator_count() == 2);
  CHECK(p.relators().size() == 3);

  p = parse_presentation("< x | >");
  CHECK(p.generator_count() == 1);
  CHECK(p.relators().empty());

  p = parse_presentation("< x,y,z | x^2=y^4=z^4=x*y*z=1 >");
  const auto& n = p.generator_names();
  REQUIRE(p.relators().size() == 4);
  CHECK(p.relators()[0] == parse_word("x^2", n));
  CHECK(p.relators()[1] == parse_word("y^4", n));
  CHECK(p.relators()[2] == parse_word("z^4", n));
  CHECK(p.relators()[3] == parse_word("x*y*z", n));
}

TEST_CASE("chains without a trailing 1 give pairwise relators") {
  const auto p = parse_presentation("< x, y | x^2 = y^3 >");
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == parse_word("x^2*y^-3", p.generator_names()));
}

TEST_CASE("whitespace and separators") {
  const auto a = parse_presentation("<x,y|x^2;y^3,x y>");
  const auto b = parse_presentation("  <  x , y |  x ^ 2 , y^3 ; x*y  > ");
  CHECK(a == b);
  const auto c = parse_presentation("< a1, b2 | a1 b2 a1^-1 b2^-1 >");
  CHECK(c.generator_names() == std::vector<std::string>{"a1", "b2"});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("< x | y >"), Error);
  CHECK_THROWS_AS(parse_presentation("< x | x*x^-1 >"), Error);
  CHECK_THROWS_AS(parse_presentation("< x | x^2"), Error);
  CHECK_THROWS_AS(parse_presentation("< x, x | >"), Error);
  CHECK_THROWS_AS(parse_presentation("< 1x | >"), Error);
  CHECK_THROWS_AS(parse_presentation("< x | x^ >"), Error);
}

TEST_CASE("p-deficiency examples") {
  CHECK(p_deficiency(parse_presentation("< x,y,z | x^2,y^4,z^4,x*y*z >"), 2) ==
        0);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    CHECK(p_deficiency(parse_presentation("< x, y | >"), p) == 1);
  }
  CHECK(p_deficiency(parse_presentation("< x,y | x^2, y^5, (x*y)^5 >"), 2) ==
        Rational(-3, 2));
}

TEST_CASE("power up examples") {
  auto p = power_up(parse_presentation("< x | x^2 >"), 3);
  CHECK(p == parse_presentation("< x | x^6 >"));
  p = power_up(parse_presentation("< x, y | x*y >"), 2);
  CHECK(p == parse_presentation("< x, y | (x*y)^2 >"));
  p = power_up(parse_presentation("< x,y,z | x^2,y^4,z^4,x*y*z >"), 2);
  CHECK(p_deficiency(p, 2) == 1);
  CHECK_THROWS_AS(power_up(parse_presentation("< x | x^2 >"), 1), Error);
  CHECK_THROWS_AS(power_up(parse_presentation("< x | >"), 2), Error);
}

TEST_CASE("p'-root presentation examples") {
  auto p = p_prime_root_presentation(parse_presentation("< x | x^6 >"), 2);
  CHECK(p == parse_presentation("< x | x^2 >"));
  p = p_prime_root_presentation(parse_presentation("< x | x^4 >"), 2);
  CHECK(p == parse_presentation("< x | x^4 >"));
  const auto xy9 = parse_presentation("< x, y | (x*y)^9 >");
  CHECK(p_prime_root_presentation(xy9, 3) == xy9);
  CHECK(p_prime_root_presentation(xy9, 2) ==
        parse_presentation("< x, y | x*y >"));
}

TEST_CASE("power up raises p-deficiency exactly when p divides n") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto p = testing::random_presentation(rng, 2, 3);
    if (p.relators().empty()) {
      continue;
    }
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 8);
    for (std::uint64_t prime : {2u, 3u}) {
      const Rational before = p_deficiency(p, prime);
      const Rational after = p_deficiency(power_up(p, n), prime);
      CHECK(after >= before);
      CHECK((after > before) == (n % static_cast<std::int64_t>(prime) == 0));
    }
  }
}

TEST_CASE("p-deficiency ignores relator conjugation and inversion") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_presentation(rng, 3, 4);
    std::vector<Word> moved;
    for (const Word& r : p.relators()) {
      const Word g = testing::random_word(rng, 3, 3, 2);
      moved.push_back(rng() % 2 ? r.inverse().conjugated_by(g)
                                : r.conjugated_by(g));
    }
    const auto q = FinitePresentation::with_default_names(3, moved);
    for (std::uint64_t prime : {2u, 3u, 5u}) {
      CHECK(p_deficiency(p, prime) == p_deficiency(q, prime));
    }
  }
}

TEST_CASE("parse of print is the identity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_presentation(rng, 3, 4);
    CHECK(parse_presentation(format_presentation(p)) == p);
  }
}
