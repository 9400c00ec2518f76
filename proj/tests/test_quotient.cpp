#include <set>

#include "doctest.h"
#include "pdef/error.hpp"
#include "pdef/invariants.hpp"
#include "pdef/oracles.hpp"
#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "support.hpp"

using namespace pdef;

namespace {

const std::vector<std::string> kXY{"x", "y"};

FiniteQuotient spec(const char* text,
                    const std::vector<std::string>& names = kXY) {
  return parse_quotient_spec(text, names);
}

}  // namespace

TEST_CASE("permutation parsing and composition") {
  const auto p = Permutation::parse("(1 2 3)");
  CHECK(p.degree() == 3);
  CHECK(p.order() == 3);
  CHECK(p.to_string() == "(1 2 3)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::parse("()").is_identity());
  CHECK(Permutation::parse("(1 2)(3 4 5)").cycle_lengths() ==
        std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)"), Error);
  CHECK_THROWS_AS(Permutation::parse("(1 0)"), Error);
}

TEST_CASE("evaluate examples") {
  auto q = spec("x:(1 2),y:()");
  CHECK(evaluate(q, parse_word("x^2", kXY)).is_identity());
  q = cyclic_quotient(5, {1, 1});
  CHECK(evaluate(q, parse_word("(x*y)^5", kXY)).is_identity());
  q = spec("x:(1 2),y:(2 3)");
  CHECK(evaluate(q, parse_word("x*y*x", kXY)) ==
        Permutation::parse("(1 3)"));
  CHECK_THROWS_AS(evaluate(q, Word::generator(3, 2)), Error);
}

TEST_CASE("is_quotient_of examples") {
  const auto x2 = parse_presentation("< x | x^2 >");
  CHECK(is_quotient_of(spec("x:(1 2)", {"x"}), x2));
  CHECK_FALSE(is_quotient_of(spec("x:(1 2 3)", {"x"}), x2));
  const auto tri = parse_presentation("< x, y | x^2, y^5, (x*y)^5 >");
  // x^2 = y^5 = (xy)^5 with w = x, v = (y, xy).
  const auto rho = index_q_quotient(parse_word("x", kXY),
                                    {parse_word("y", kXY),
                                     parse_word("x*y", kXY)},
                                    2, 5);
  CHECK(is_quotient_of(rho, tri));
  CHECK(kernel_index(rho, tri) == 5);
}

TEST_CASE("order_of_image examples") {
  CHECK(order_of_image(spec("x:(1 2),y:()"), parse_word("x", kXY)) == 2);
  CHECK(order_of_image(cyclic_quotient(5, {1, 1}), parse_word("x*y", kXY)) ==
        5);
  CHECK(order_of_image(spec("x:(1 2 3),y:(1 2)"), Word(2)) == 1);
}

TEST_CASE("kernel_index examples") {
  CHECK(kernel_index(spec("x:(1 2),y:()"), parse_presentation("< x, y | >")) ==
        2);
  CHECK(kernel_index(spec("x:(1 2),y:(1 2)"),
                     parse_presentation("< x, y | x^2, y^2 >")) == 2);
  CHECK_THROWS_AS(kernel_index(spec("x:(1 2 3),y:()"),
                               parse_presentation("< x, y | x^2 >")),
                  Error);
}

TEST_CASE("cyclic quotient and spec parsing") {
  const auto q = cyclic_quotient(4, {1, 2});
  CHECK(q.order() == 4);
  CHECK(q.to_string(kXY) == "x:(1 2 3 4),y:(1 3)(2 4)");
  CHECK(spec("x:(1 2), y:(3 4)").degree() == 4);
  CHECK(spec("x:(1 2)").image(1).is_identity());
  CHECK_THROWS_AS(spec("x:(1 2),x:(1 2)"), Error);
  CHECK_THROWS_AS(spec("x:(1 2),z:(1 2)"), Error);
}

TEST_CASE("catalog closure orders match") {
  const auto catalog = GroupCatalog::default_catalog();
  for (const auto& g : catalog.groups()) {
    CHECK(FiniteQuotient(g.generators, g.order + 1).order() == g.order);
  }
  CHECK_THROWS_AS(GroupCatalog::parse_manifest("C3 2 (1 2 3)"), Error);
  const auto c = GroupCatalog::parse_manifest("# two groups\nC3 3 (1 2 3)\nV 4 (1 2)(3 4) (1 3)(2 4)\n");
  REQUIRE(c.groups().size() == 2);
  CHECK(c.groups()[1].order == 4);
}

TEST_CASE("enumerate quotients examples") {
  const auto c2 = GroupCatalog::default_catalog().subset({"C2"});
  auto s = enumerate_quotients(parse_presentation("< x | x^2 >"), c2, {});
  CHECK(s.quotients.size() == 2);
  s = enumerate_quotients(parse_presentation("< x, y | >"), c2, {});
  CHECK(s.quotients.size() == 4);
  const auto c5 = GroupCatalog::default_catalog().subset({"C5"});
  const auto tri = parse_presentation("< x, y | x^2, y^5, (x*y)^5 >");
  s = enumerate_quotients(tri, c5, {});
  bool moves_y = false;
  for (const auto& q : s.quotients) {
    moves_y = moves_y || !q.image(1).is_identity();
  }
  CHECK(moves_y);
}

TEST_CASE("budget exhaustion is reported") {
  const auto s = enumerate_quotients(parse_presentation("< x, y | >"),
                                     GroupCatalog::default_catalog(), {24, 50});
  CHECK(s.budget_exhausted);
  CHECK(s.assignments_examined == 50);
}

TEST_CASE("evaluate is a homomorphism and image orders divide the order") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t degree = 1 + rng() % 4;
    const FiniteQuotient q({testing::random_permutation(rng, degree),
                            testing::random_permutation(rng, degree)});
    const Word a = testing::random_word(rng, 2, 5, 3);
    const Word b = testing::random_word(rng, 2, 5, 3);
    CHECK(evaluate(q, a * b) == evaluate(q, a) * evaluate(q, b));
    CHECK(q.order() % order_of_image(q, a) == 0);
  }
}

TEST_CASE("enumerated quotients kill relators and have distinct kernels") {
  const auto catalog = GroupCatalog::default_catalog().restricted(8);
  const auto words = oracle::all_reduced_words(2, 7);
  for (const char* text :
       {"< x, y | >", "< x, y | x^2, y^2 >", "< x, y | x^2, y^4, (x*y)^4 >"}) {
    const auto p = parse_presentation(text);
    const auto s = enumerate_quotients(p, catalog, {8, 1'000'000});
    std::set<std::vector<bool>> partitions;
    for (const auto& q : s.quotients) {
      CHECK(is_quotient_of(q, p));
      std::vector<bool> in_kernel;
      for (const auto& w : words) {
        in_kernel.push_back(evaluate(q, oracle::word_of(2, w)).is_identity());
      }
      CHECK(partitions.insert(in_kernel).second);
    }
  }
}
