#include <set>

#include "doctest.h"
#include "pdef/error.hpp"
#include "pdef/invariants.hpp"
#include "pdef/oracles.hpp"
#include "pdef/presentation.hpp"
#include "pdef/rewrite.hpp"
#include "support.hpp"

using namespace pdef;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Word w(const char* text) { return parse_word(text, kXY); }

const FinitePresentation& dinf() {
  static const auto p = parse_presentation("< x, y | x^2, y^2 >");
  return p;
}

FiniteQuotient swap_both() {
  return parse_quotient_spec("x:(1 2),y:(1 2)", kXY);
}

FiniteQuotient index5() {
  return index_q_quotient(w("x"), {w("y"), w("x*y")}, 2, 5);
}

const FinitePresentation& tri25() {
  static const auto p = parse_presentation("< x, y | x^2, y^5, (x*y)^5 >");
  return p;
}

// A random quotient of F_2 of degree <= 4 and a presentation whose relators
// are conjugates of powers that it kills.
struct Instance {
  FinitePresentation pres;
  FiniteQuotient quotient;
};

Instance random_instance(std::mt19937_64& rng) {
  const std::size_t degree = 1 + rng() % 4;
  FiniteQuotient q({testing::random_permutation(rng, degree),
                    testing::random_permutation(rng, degree)});
  std::vector<Word> rels;
  const std::size_t n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    const Word base = testing::random_word(rng, 2, 3, 2);
    const auto m = static_cast<std::int64_t>(order_of_image(q, base));
    const auto extra = static_cast<std::int64_t>(1 + rng() % 2);
    const Word g = rng() % 2 ? testing::random_word(rng, 2, 2, 1) : Word(2);
    rels.push_back(base.pow(m * extra).conjugated_by(g));
  }
  return {FinitePresentation::with_default_names(2, rels), q};
}

}  // namespace

TEST_CASE("coset table examples") {
  auto ct = coset_table(swap_both(), dinf());
  CHECK(ct.degree == 2);
  CHECK(ct.generator_actions[0] == Permutation::parse("(1 2)"));
  CHECK(ct.generator_actions[1] == Permutation::parse("(1 2)"));

  ct = coset_table(parse_quotient_spec("x:(1 2)", {"x"}),
                   parse_presentation("< x | x^4 >"));
  CHECK(ct.degree == 2);

  ct = coset_table(index5(), tri25());
  CHECK(ct.degree == 5);
  CHECK(ct.generator_actions[1].order() == 5);
  CHECK(ct.generator_actions[1].cycle_lengths() ==
        std::vector<std::size_t>{5});

  CHECK_THROWS_AS(coset_table(parse_quotient_spec("x:(1 2 3)", {"x"}),
                              parse_presentation("< x | x^2 >")),
                  Error);
}

TEST_CASE("Schreier basis examples") {
  auto sd = schreier(coset_table(parse_quotient_spec("x:(1 2),y:()", kXY),
                                 FinitePresentation::free(kXY)));
  CHECK(sd.basis.size() == 3);

  sd = schreier(coset_table(parse_quotient_spec("x:(1 2)", {"x"}),
                            FinitePresentation::free({"x"})));
  REQUIRE(sd.basis.size() == 1);
  CHECK(sd.basis[0] == Word::generator(1, 0, 2));

  sd = schreier(coset_table(swap_both(), dinf()));
  CHECK(sd.transversal == std::vector<Word>{Word(2), w("x")});
  CHECK(sd.basis == std::vector<Word>{w("x^2"), w("y*x^-1"), w("x*y")});

  CosetTable split{2, {Permutation(2), Permutation(2)}};
  CHECK_THROWS_AS(schreier(split), Error);
}

TEST_CASE("rewriting examples") {
  const auto sd = schreier(coset_table(swap_both(), dinf()));
  CHECK(rewrite_word(sd, w("x^2")) == Word::generator(3, 0));
  CHECK(rewrite_word(sd, w("y^2")) ==
        Word::generator(3, 1) * Word::generator(3, 2));
  CHECK(rewrite_word(sd, Word(2)).is_identity());
  CHECK_THROWS_AS(rewrite_word(sd, w("x")), Error);
}

TEST_CASE("centralizer index examples") {
  CHECK(centralizer_index(swap_both(), w("x^2")) == 2);
  CHECK(centralizer_index(parse_quotient_spec("x:(1 2),y:(1 2)", kXY),
                          w("(x*y)^3")) == 1);
  CHECK(centralizer_index(index5(), w("y^5")) == 5);
  CHECK_THROWS_AS(centralizer_index(swap_both(), Word(2)), Error);
}

TEST_CASE("conjugate class representative examples") {
  CHECK(conjugate_class_reps(swap_both(), w("x^2")).size() == 1);
  const auto reps =
      conjugate_class_reps(parse_quotient_spec("x:(1 2),y:()", kXY), w("y"));
  CHECK(std::set<std::string>{format_word(reps.at(0), kXY),
                              format_word(reps.at(1), kXY)} ==
        std::set<std::string>{"y", "x*y*x^-1"});
  CHECK(reps.size() == 2);
  CHECK(conjugate_class_reps(index5(), w("y^5")).size() == 1);
  CHECK_THROWS_AS(conjugate_class_reps(swap_both(), w("x")), Error);
}

TEST_CASE("subgroup presentation examples") {
  auto sub = subgroup_presentation(dinf(), swap_both());
  CHECK(format_presentation(sub) == "< s1, s2, s3 | s1, s2*s3 >");

  sub = subgroup_presentation(parse_presentation("< x | x^4 >"),
                              parse_quotient_spec("x:(1 2)", {"x"}));
  CHECK(format_presentation(sub) == "< s1 | s1^2 >");

  sub = subgroup_presentation(tri25(), index5());
  CHECK(sub.generator_count() == 6);
  CHECK(p_size_bound(tri25(), index5(), 2).exact < 5);

  const auto naive =
      subgroup_presentation(dinf(), swap_both(), RelatorMode::all_conjugates);
  CHECK(naive.relators().size() == 4);
}

TEST_CASE("p-size bound examples") {
  auto b = p_size_bound(tri25(), index5(), 2);
  CHECK(b.index == 5);
  CHECK(b.value == Rational(9, 2));
  CHECK(b.exact == Rational(9, 2));
  CHECK(b.naive == Rational(25, 2));

  b = p_size_bound(parse_presentation("< x | x^2 >"),
                   parse_quotient_spec("x:(1 2)", {"x"}), 2);
  REQUIRE(b.relators.size() == 1);
  CHECK(b.relators[0].centralizer_index == 2);
  CHECK(b.relators[0].bound_term == 1);

  b = p_size_bound(dinf(), swap_both(), 2);
  CHECK(b.exact == 2);
}

TEST_CASE("supermultiplicity examples") {
  auto r = supermultiplicity_check(dinf(), swap_both(), 2);
  CHECK(r.de_subgroup == 0);
  CHECK(r.scaled == 0);
  CHECK(r.holds);

  // 2 * (1 - 1 - 1/4) is -1/2.
  r = supermultiplicity_check(parse_presentation("< x | x^4 >"),
                              parse_quotient_spec("x:(1 2)", {"x"}), 2);
  CHECK(r.de_subgroup == Rational(-1, 2));
  CHECK(r.de_original == Rational(-1, 4));
  CHECK(r.scaled == Rational(-1, 2));
  CHECK(r.holds);

  r = supermultiplicity_check(tri25(), index5(), 2);
  CHECK(r.de_subgroup >= Rational(1, 2));
  CHECK(r.de_original == Rational(-3, 2));
  CHECK(r.holds);
}

TEST_CASE("Nielsen-Schreier rank and rewriting round trip") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(rng);
    const auto sd = schreier(coset_table(inst.quotient, inst.pres));
    const std::size_t d = sd.index();
    CHECK(d == inst.quotient.order());
    CHECK(sd.basis.size() == 1 + d);
    for (std::size_t c = 0; c < d; ++c) {
      CHECK(sd.coset_of(sd.transversal[c]) == c);
    }
    for (const Word& r : inst.pres.relators()) {
      for (const Word& t : sd.transversal) {
        const Word conj = r.conjugated_by(t);
        CHECK(expand_word(sd, rewrite_word(sd, conj)) == conj);
      }
    }
  }
}

TEST_CASE("class count and valuation drop against brute force") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 150; ++i) {
    const auto inst = random_instance(rng);
    const auto sd = schreier(coset_table(inst.quotient, inst.pres));
    for (const Word& r : inst.pres.relators()) {
      const std::uint64_t k = centralizer_index(inst.quotient, r);
      const auto reps = conjugate_class_reps(inst.quotient, sd, r);
      CHECK(reps.size() * k == sd.index());
      CHECK(reps.size() == oracle::subgroup_class_count(sd, r));
      for (std::uint64_t p : {2u, 3u}) {
        const std::uint64_t nu_f = nu_p(r, p).value();
        const std::uint64_t nu_k = nu_p_int(static_cast<std::int64_t>(k), p);
        for (const Word& g : reps) {
          const auto nu_sub = nu_p(rewrite_word(sd, g), p).value();
          CHECK(nu_sub + nu_k >= nu_f);
        }
      }
    }
  }
}

TEST_CASE("size bound chain and supermultiplicity on random kernels") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(rng);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const auto b = p_size_bound(inst.pres, inst.quotient, p);
      CHECK(b.exact <= b.value);
      CHECK(b.value <= b.naive);
      Rational sum = 0;
      for (const auto& c : b.relators) {
        sum += c.bound_term;
      }
      CHECK(sum == b.value);
      const auto r = supermultiplicity_check(inst.pres, inst.quotient, p);
      CHECK(r.holds);
      CHECK(r.de_subgroup >= r.scaled);
      const auto naive = subgroup_presentation(inst.pres, inst.quotient,
                                               RelatorMode::all_conjugates);
      CHECK(p_deficiency(naive, p) <= r.de_subgroup);
    }
  }
}
