#include "doctest.h"
#include "pdef/abelian.hpp"
#include "pdef/error.hpp"
#include "pdef/fuchsian.hpp"
#include "pdef/invariants.hpp"
#include "pdef/oracles.hpp"
#include "pdef/presentation.hpp"
#include "pdef/rewrite.hpp"
#include "support.hpp"

using namespace pdef;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Word w(const char* text) { return parse_word(text, kXY); }

const SearchBudget kSmall{8, 200'000};

}  // namespace

TEST_CASE("chi estimate examples") {
  const auto catalog = GroupCatalog::default_catalog();
  const auto f2 = parse_presentation("< x, y | >");
  auto est = chi_p_estimate(f2, 2, catalog, kSmall);
  CHECK(est.best_ratio == 1);
  for (const auto& s : est.samples) {
    CHECK(s.ratio == 1);
    CHECK(s.generators == s.index + 1);
  }

  const auto genus2 = standard_presentation(parse_signature("(2)"));
  est = chi_p_estimate(genus2, 3, catalog, {4, 200'000});
  CHECK(est.best_ratio == 2);
  CHECK(est.samples.at(0).index == 1);
  CHECK(est.samples.at(0).ratio == 2);

  const auto tri = parse_presentation("< x,y,z | x^2, y^4, z^4, x*y*z >");
  est = chi_p_estimate(tri, 2, catalog, kSmall);
  CHECK(est.best_ratio >= 0);
  CHECK(est.samples.at(0).de == 0);
}

TEST_CASE("gradient window examples") {
  const auto catalog = GroupCatalog::default_catalog();
  const auto f2 = parse_presentation("< x, y | >");
  const auto win = gradient_window(f2, 2, catalog, kSmall);
  for (const auto& s : win.samples) {
    CHECK(s.d_p == s.index + 1);
    CHECK(s.ratio == Rational(static_cast<std::int64_t>(s.index) + 1,
                              static_cast<std::int64_t>(s.index)));
  }
  CHECK(win.max_ratio == 2);
  CHECK(std::is_sorted(win.indices.begin(), win.indices.end()));

  const auto dinf = parse_presentation("< x, y | x^2, y^2 >");
  const auto d2 = gradient_window(dinf, 2, catalog.subset({"C2"}), kSmall);
  bool seen = false;
  for (const auto& s : d2.samples) {
    if (s.quotient.to_string(kXY) == "x:(1 2),y:(1 2)") {
      CHECK(s.d_p == 1);
      CHECK(s.ratio == Rational(1, 2));
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("d_p drop examples") {
  const auto f2 = FinitePresentation::free(kXY);
  auto d = quotient_dp_drop(f2, {w("x^2")}, 2);
  CHECK(d.d_before == 2);
  CHECK(d.d_after == 2);
  CHECK(d.ell == 0);
  CHECK(d.holds);
  d = quotient_dp_drop(f2, {w("x^4")}, 2);
  CHECK(d.ell == 0);
  CHECK(d.d_after == d.d_before);
  d = quotient_dp_drop(f2, {w("x"), w("y")}, 3);
  CHECK(d.d_before == 2);
  CHECK(d.d_after == 0);
  CHECK(d.ell == 2);
  CHECK(d.holds);
  d = quotient_dp_drop(f2, {w("x^3")}, 2);
  CHECK(d.ell == 1);
  CHECK(d.d_after == 1);
}

TEST_CASE("power witness examples") {
  const auto catalog = GroupCatalog::default_catalog();
  const auto p = parse_presentation("< x, y | x^6, y^12, (x*y)^12 >");
  CHECK(p_deficiency(p, 2) == 0);
  const auto wit = power_witness_for(p, 2, cyclic_quotient(3, {1, 0}));
  REQUIRE(wit);
  CHECK(wit->relator == w("x^6"));
  CHECK(wit->root == w("x^2"));
  CHECK(wit->exponent == 3);
  CHECK(wit->report.index == 3);
  CHECK(wit->report.de_subgroup > 0);

  const auto searched = lemma_power_witness(p, 2, catalog, {});
  REQUIRE(searched);
  CHECK(searched->report.de_subgroup > 0);
  CHECK(searched->exponent % 2 == 1);

  const auto tri = parse_presentation("< x,y,z | x^2, y^4, z^4, x*y*z >");
  CHECK_FALSE(lemma_power_witness(tri, 2, catalog, {}));

  const auto cubed = power_up(tri, 3);
  CHECK(p_deficiency(cubed, 2) == 0);
  const auto c = lemma_power_witness(cubed, 2, catalog, {});
  REQUIRE(c);
  CHECK(c->exponent == 3);
  CHECK(c->report.de_subgroup > 0);

  CHECK_THROWS_AS(
      lemma_power_witness(parse_presentation("< x, y | >"), 2, catalog, {}),
      Error);
}

TEST_CASE("index-q quotient of the power construction") {
  const auto p = parse_presentation("< x, y | x^2, y^5, (x*y)^5 >");
  const auto q = index_q_quotient(w("x"), {w("y"), w("x*y")}, 2, 5);
  CHECK(is_quotient_of(q, p));
  CHECK(q.order() == 5);
  CHECK_FALSE(evaluate(q, w("y")).is_identity());
  CHECK_FALSE(evaluate(q, w("x*y")).is_identity());
  CHECK_THROWS_AS(index_q_quotient(w("x"), {w("y"), w("x*y")}, 2, 3), Error);
  CHECK_THROWS_AS(index_q_quotient(w("x"), {w("y")}, 5, 5), Error);
}

TEST_CASE("chi estimate includes index 1 and grows with the budget") {
  std::mt19937_64 rng(71);
  const auto catalog = GroupCatalog::default_catalog();
  for (int i = 0; i < 25; ++i) {
    const auto p = testing::random_presentation(rng, 2, 3);
    for (std::uint64_t prime : {2u, 3u}) {
      const auto small = chi_p_estimate(p, prime, catalog, {4, 5'000});
      const auto large = chi_p_estimate(p, prime, catalog, {8, 50'000});
      CHECK(small.best_ratio >= p_deficiency(p, prime));
      CHECK(large.best_ratio >= small.best_ratio);
      for (const auto& s : large.samples) {
        CHECK(s.ratio * static_cast<std::int64_t>(s.index) == s.de);
      }
    }
  }
}

TEST_CASE("chi ratios of Fuchsian groups stay below the volume") {
  const auto catalog = GroupCatalog::default_catalog();
  for (const char* text : {"(0; 4,4,4)", "(0; 2,4,6)", "(0; 6,12,12)",
                           "(1; 2)", "(0; 2,2,2,3)"}) {
    const auto s = parse_signature(text);
    for (std::uint64_t prime : {2u, 3u}) {
      const auto est =
          chi_p_estimate(standard_presentation(s), prime, catalog, kSmall);
      for (const auto& sample : est.samples) {
        CHECK(sample.ratio <= volume(s));
      }
    }
  }
}

TEST_CASE("chi of a finite index free subgroup scales by the index") {
  const auto catalog = GroupCatalog::default_catalog();
  const auto f2 = parse_presentation("< x, y | >");
  const auto base = chi_p_estimate(f2, 2, catalog, {4, 50'000});
  for (const char* spec : {"x:(1 2),y:()", "x:(1 2 3),y:(1 3 2)"}) {
    const auto q = parse_quotient_spec(spec, kXY);
    const auto sub = subgroup_presentation(f2, q);
    const auto est = chi_p_estimate(sub, 2, catalog, {4, 50'000});
    CHECK(est.best_ratio ==
          static_cast<std::int64_t>(q.order()) * base.best_ratio);
  }
}

TEST_CASE("d_p drop inequality on random instances") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 300; ++i) {
    const auto sub = testing::random_presentation(rng, 3, 2);
    std::vector<Word> gens;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(testing::random_word(rng, 3, 3, 4));
    }
    for (std::uint64_t prime : {2u, 3u}) {
      const auto d = quotient_dp_drop(sub, gens, prime);
      CHECK(d.holds);
      CHECK(d.d_after + d.ell >= d.d_before);
      CHECK(d.d_before == oracle::count_homs_to_cp(sub, prime));
      CHECK(d.d_after ==
            oracle::count_homs_to_cp(sub.with_relators(gens), prime));
    }
  }
}
