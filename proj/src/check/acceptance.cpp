#include "pdef/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "pdef/abelian.hpp"
#include "pdef/error.hpp"
#include "pdef/fuchsian.hpp"
#include "pdef/invariants.hpp"
#include "pdef/oracles.hpp"
#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/rewrite.hpp"

namespace pdef::acceptance {

namespace {

using Rng = std::mt19937_64;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) {
        failed_ << (failures_ > 1 ? "; " : "") << what;
      }
    }
  }
  void note(const std::string& text) {
    notes_ << (notes_.tellp() > 0 ? "; " : "") << text;
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    std::string out = notes_.str();
    if (failures_ > 0) {
      out += (out.empty() ? "" : " | ") + std::to_string(failures_) +
             " failure(s): " + failed_.str();
    }
    return out;
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream failed_;
  std::ostringstream notes_;
};

std::string str(const Rational& q) { return to_string(q); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word random_word(Rng& rng, std::size_t alphabet, std::size_t min_len,
                 std::size_t max_len) {
  const std::size_t len = uniform(rng, min_len, max_len);
  oracle::Letters w;
  while (w.size() < len) {
    const int g = static_cast<int>(uniform(rng, 1, alphabet));
    const int c = uniform(rng, 0, 1) ? g : -g;
    if (!w.empty() && w.back() == -c) {
      continue;
    }
    w.push_back(c);
  }
  return oracle::word_of(alphabet, w);
}

// Either a random word or a power of a short one, never the identity.
Word random_relator(Rng& rng, std::size_t alphabet, std::size_t max_len) {
  if (uniform(rng, 0, 1) == 0) {
    return random_word(rng, alphabet, 1, max_len);
  }
  const std::size_t base_len = uniform(rng, 1, std::min<std::size_t>(4, max_len));
  const Word base = random_word(rng, alphabet, base_len, base_len);
  const std::size_t max_pow = std::max<std::size_t>(1, max_len / base_len);
  return base.pow(static_cast<std::int64_t>(uniform(rng, 1, max_pow)));
}

FinitePresentation random_presentation(Rng& rng, std::size_t max_gens,
                                       std::size_t max_rels,
                                       std::size_t max_len) {
  const std::size_t n = uniform(rng, 1, max_gens);
  const std::size_t m = uniform(rng, 0, max_rels);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < m; ++i) {
    rels.push_back(random_relator(rng, n, max_len));
  }
  return FinitePresentation::with_default_names(n, std::move(rels));
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

// Random quotients of p: every kernel of a catalog group up to max_order,
// then a few picked at random with the nontrivial ones preferred.
std::vector<FiniteQuotient> random_quotients(Rng& rng,
                                             const FinitePresentation& p,
                                             std::size_t max_order,
                                             std::size_t count) {
  SearchBudget budget;
  budget.max_order = max_order;
  budget.max_assignments = 200'000;
  const auto all = enumerate_quotients(p, GroupCatalog::default_catalog(),
                                       budget)
                       .quotients;
  std::vector<FiniteQuotient> nontrivial;
  for (const auto& q : all) {
    if (q.order() > 1) {
      nontrivial.push_back(q);
    }
  }
  std::vector<FiniteQuotient> out;
  const auto& pool = nontrivial.empty() ? all : nontrivial;
  for (std::size_t i = 0; i < count && i < pool.size(); ++i) {
    out.push_back(pick(rng, pool));
  }
  return out;
}

std::int64_t signed_nu(const Valuation& v) {
  return static_cast<std::int64_t>(v.value());
}

// 1
void intro(Check& c) {
  const auto dinf = parse_presentation("< x, y | x^2, y^2 >");
  const auto tri = parse_presentation("< x,y,z | x^2=y^4=z^4=x*y*z=1 >");
  const Rational d1 = p_deficiency(dinf, 2);
  const Rational d2 = p_deficiency(tri, 2);
  const Rational u1 = upper_bound_de(dinf, 2);
  const Rational u2 = upper_bound_de(tri, 2);
  c.note("de_2<x,y|x^2,y^2> = " + str(d1) + " <= group <= " + str(u1));
  c.note("de_2<x,y,z|x^2,y^4,z^4,xyz> = " + str(d2) + " <= group <= " +
         str(u2) + " (abelianisation " +
         format_invariants(abelian_invariants(tri)) + ")");
  c.expect(d1 == 0, "D_inf presentation value is " + str(d1));
  c.expect(d2 == 0, "(2,4,4) presentation value is " + str(d2));
  c.expect(u1 == 0, "D_inf abelian upper bound is " + str(u1));
  c.expect(u2 == 0, "(2,4,4) abelian upper bound is " + str(u2) + ", not 0");
}

// 2
void free_products(Check& c) {
  Rng rng(0x5eed0002);
  const std::uint64_t primes[] = {2, 3, 5};
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t s = uniform(rng, 0, 4);
    const std::size_t r = uniform(rng, s == 0 ? 1 : 0, 3);
    const std::size_t n = s + r;
    std::vector<Word> rels;
    std::vector<std::uint64_t> periods;
    for (std::size_t i = 0; i < s; ++i) {
      periods.push_back(uniform(rng, 2, 36));
      rels.push_back(Word::generator(n, static_cast<std::uint32_t>(i),
                                     static_cast<std::int64_t>(periods[i])));
    }
    const auto p = primes[uniform(rng, 0, 2)];
    const auto pres = FinitePresentation::with_default_names(n, rels);
    const Rational lower = p_deficiency(pres, p);
    const Rational group = abelian_p_deficiency_group(abelian_invariants(pres), p);
    std::ostringstream what;
    what << "periods";
    for (auto e : periods) {
      what << " " << e;
    }
    what << ", rank " << r << ", p = " << p << ": " << str(lower) << " vs "
         << str(group);
    c.expect(lower == group, what.str());
    ++checked;
  }
  c.note(std::to_string(checked) + " free products of cyclic groups");
}

// 3
void supermultiplicity(Check& c) {
  Rng rng(0x5eed0003);
  std::size_t instances = 0;
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto pres = random_presentation(rng, 3, 4, 12);
    for (const auto& q : random_quotients(rng, pres, 12, 3)) {
      for (std::uint64_t p : {2, 3}) {
        const auto rep = supermultiplicity_check(pres, q, p);
        c.expect(rep.holds, format_presentation(pres) + " at index " +
                                std::to_string(rep.index) + ", p = " +
                                std::to_string(p) + ": " +
                                str(rep.de_subgroup) + " < " +
                                str(rep.scaled));
        ++instances;
        nontrivial += rep.index > 1 ? 1 : 0;
      }
    }
  }
  c.note(std::to_string(instances) + " checks, " + std::to_string(nontrivial) +
         " with index > 1");
  c.expect(nontrivial > 0, "no nontrivial quotient was examined");
}

// 4
void conjugate_splitting(Check& c) {
  Rng rng(0x5eed0004);
  const auto catalog = GroupCatalog::default_catalog().restricted(6);
  std::size_t instances = 0;
  std::size_t split = 0;
  std::size_t valuations = 0;
  while (instances < 150) {
    const auto& group = pick(rng, catalog.groups());
    const std::size_t n = uniform(rng, 1, 2);
    std::vector<Permutation> images;
    {
      const FiniteQuotient closure(group.generators, kDefaultMaxOrder);
      for (std::size_t i = 0; i < n; ++i) {
        images.push_back(pick(rng, closure.elements()));
      }
    }
    const FiniteQuotient q(images, kDefaultMaxOrder,
                           group.generators.front().degree());
    std::optional<Word> r;
    for (int attempt = 0; attempt < 400 && !r; ++attempt) {
      Word cand(n);
      if (uniform(rng, 0, 1) == 0) {
        cand = random_word(rng, n, 1, 8);
      } else {
        const Word u = random_word(rng, n, 1, 4);
        const std::uint64_t k = order_of_image(q, u);
        cand = u.pow(static_cast<std::int64_t>(k * uniform(rng, 1, 2)));
      }
      if (!cand.is_identity() && cand.length() <= 8 &&
          evaluate(q, cand).is_identity()) {
        r = cand;
      }
    }
    if (!r) {
      continue;
    }
    const auto free_group = FinitePresentation::with_default_names(n, {});
    const SchreierData sd = schreier(coset_table(q, free_group));
    const std::size_t d = q.order();
    const std::uint64_t k = centralizer_index(q, *r);
    const auto reps = conjugate_class_reps(q, sd, *r);
    const std::size_t classes = oracle::subgroup_class_count(sd, *r);
    const std::string label = format_word(*r, free_group.generator_names()) +
                              " in " + q.to_string(free_group.generator_names());
    c.expect(d % k == 0, label + ": k does not divide d");
    c.expect(classes == d / k, label + ": oracle counts " +
                                   std::to_string(classes) + " classes, d/k = " +
                                   std::to_string(d / k));
    c.expect(reps.size() == d / k, label + ": " + std::to_string(reps.size()) +
                                       " representatives");
    std::set<oracle::Letters> keys;
    for (const Word& rep : reps) {
      keys.insert(oracle::conjugacy_key(oracle::letters_of(rewrite_word(sd, rep))));
    }
    c.expect(keys.size() == reps.size(),
             label + ": two representatives are conjugate in the subgroup");
    for (std::uint64_t p : {2, 3}) {
      const std::int64_t bound =
          signed_nu(nu_p(*r, p)) -
          static_cast<std::int64_t>(nu_p_int(static_cast<std::int64_t>(k), p));
      for (const Word& rep : reps) {
        const std::int64_t nu_sub = signed_nu(nu_p(rewrite_word(sd, rep), p));
        c.expect(nu_sub >= bound, label + ": valuation " +
                                      std::to_string(nu_sub) + " < " +
                                      std::to_string(bound));
        ++valuations;
      }
    }
    ++instances;
    split += d / k > 1 ? 1 : 0;
  }
  c.note(std::to_string(instances) + " relators, " + std::to_string(split) +
         " with more than one class, " + std::to_string(valuations) +
         " valuation comparisons");
}

// 5
void smith(Check& c) {
  Rng rng(0x5eed0005);
  std::size_t matrices = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = uniform(rng, 1, 4);
    const std::size_t cols = uniform(rng, 1, 4);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        a(i, j) = static_cast<int>(uniform(rng, 0, 18)) - 9;
      }
    }
    const auto snf = smith_normal_form(a);
    const auto diag = snf.diagonal();
    const std::string label = "matrix #" + std::to_string(trial);
    c.expect(snf.U * a * snf.V == snf.S, label + ": U A V != S");
    c.expect(abs(oracle::laplace_determinant(snf.U)) == 1,
             label + ": U not unimodular");
    c.expect(abs(oracle::laplace_determinant(snf.V)) == 1,
             label + ": V not unimodular");
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) {
          c.expect(snf.S(i, j) == 0, label + ": S not diagonal");
        }
      }
    }
    BigInt product = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      c.expect(diag[k - 1] >= 0, label + ": negative diagonal entry");
      if (k >= 2) {
        const bool divides = diag[k - 2] == 0 ? diag[k - 1] == 0
                                              : diag[k - 1] % diag[k - 2] == 0;
        c.expect(divides, label + ": divisibility chain broken");
      }
      product *= diag[k - 1];
      c.expect(oracle::gcd_of_minors(a, k) == product,
               label + ": gcd of " + std::to_string(k) + "-minors is " +
                   to_string(oracle::gcd_of_minors(a, k)) + ", product is " +
                   to_string(product));
    }
    ++matrices;
  }
  c.note(std::to_string(matrices) + " matrices");
}

// 6
void valuations(Check& c) {
  const auto words = oracle::all_reduced_words(2, 10);
  for (std::uint64_t p : {2, 3}) {
    const auto table = oracle::power_table(2, 10, p);
    std::size_t powers = 0;
    for (const auto& w : words) {
      const Valuation v = nu_p(oracle::word_of(2, w), p);
      if (w.empty()) {
        c.expect(v.is_infinite(), "identity has a finite valuation");
        continue;
      }
      const auto it = table.find(w);
      const std::uint64_t expected = it == table.end() ? 0 : it->second;
      powers += expected > 0 ? 1 : 0;
      c.expect(!v.is_infinite() && v.value() == expected,
               "nu_" + std::to_string(p) + " of " +
                   format_word(oracle::word_of(2, w), {"x", "y"}) +
                   " should be " + std::to_string(expected));
    }
    c.note("p = " + std::to_string(p) + ": " + std::to_string(words.size()) +
           " words, " + std::to_string(powers) + " proper p-powers");
  }
}

// 7
void triangle(Check& c) {
  const auto sig = parse_signature("(0; 6,12,12)");
  const auto pres = standard_presentation(sig);
  for (std::uint64_t p : {2, 3}) {
    const auto de = de_exact(sig, p);
    const auto expected = p == 2 ? FuchsianCase::d : FuchsianCase::b;
    c.note("p = " + std::to_string(p) + ": case " +
           to_string(de.fuchsian_case) + ", de = " +
           (de.value ? str(*de.value) : "negative"));
    c.expect(de.fuchsian_case == expected,
             "p = " + std::to_string(p) + " classified as " +
                 to_string(de.fuchsian_case));
    c.expect(de.value && *de.value == 0, "p = " + std::to_string(p) +
                                             " value is not 0");
    c.expect(p_deficiency(pres, p) == 0,
             "standard presentation disagrees with the formula");
  }
}

// 8
void singerman(Check& c) {
  struct Case {
    const char* sig;
    FuchsianCase which;
    std::uint64_t p;
    const char* expected;
  };
  const Case cases[] = {
      {"(1; 2,3)", FuchsianCase::a, 2, "(1; 2,2,2,2,3,3,3,3)"},
      {"(1; 2,3)", FuchsianCase::a, 3, "(1; 2,2,2,2,3,3,3,3)"},
      {"(0; 4,4,4)", FuchsianCase::d, 2, "(0; 2,2,4,4)"},
  };
  for (const auto& cs : cases) {
    const auto sig = parse_signature(cs.sig);
    const auto k = kernel_construction(sig, cs.p, cs.which);
    const auto idx = Rational(static_cast<std::int64_t>(k.index));
    const std::string label = std::string(cs.sig) + " case " +
                              to_string(cs.which) + " p = " +
                              std::to_string(cs.p);
    c.note(label + " -> " + k.result.to_string() + " at index " +
           std::to_string(k.index) + ", de " + str(de_standard(sig, cs.p)) +
           " -> " + str(de_standard(k.result, cs.p)));
    c.expect(k.result == parse_signature(cs.expected),
             label + " gave " + k.result.to_string());
    c.expect(volume(k.result) == idx * volume(sig), label + ": volume");
    c.expect(de_standard(k.result, cs.p) == idx * de_standard(sig, cs.p),
             label + ": de_standard");
    if (cs.which == FuchsianCase::a) {
      c.expect(k.result.genus() == 4 * sig.genus() - 3, label + ": genus");
    }
    const auto rs = subgroup_presentation(standard_presentation(sig),
                                          action_quotient(sig, k.action));
    c.expect(p_deficiency(rs, cs.p) >= de_standard(k.result, cs.p),
             label + ": rewritten presentation below the transferred value");
  }
}

// 9
void index_five(Check& c) {
  const auto pres = parse_presentation("< x, y | x^2 = y^5 = (x*y)^5 = 1 >");
  const Word x = Word::generator(2, 0);
  const Word y = Word::generator(2, 1);
  const auto q = index_q_quotient(x, {y, x * y}, 2, 5);
  c.expect(is_quotient_of(q, pres), "map does not kill the relators");
  const auto bound = p_size_bound(pres, q, 2);
  const auto rep = supermultiplicity_check(pres, q, 2);
  const Rational upper = upper_bound_de(pres, 2);
  c.note("quotient " + q.to_string(pres.generator_names()) + ", index " +
         std::to_string(bound.index));
  c.note("size bound " + str(bound.value) + ", exact " + str(bound.exact));
  c.note("de_2 kernel " + str(rep.de_subgroup) + ", original " +
         str(rep.de_original) + ", abelian bound " + str(upper));
  c.expect(bound.index == 5, "index is not 5");
  c.expect(bound.value <= Rational(9, 2), "bound exceeds 9/2");
  c.expect(bound.value < 5, "bound is not below 5");
  c.expect(bound.exact <= bound.value, "exact size above the bound");
  c.expect(rep.de_subgroup >= Rational(1, 2), "kernel de_2 below 1/2");
  c.expect(rep.de_original == Rational(-3, 2), "original de_2 is not -3/2");
  c.expect(upper == -1, "abelian upper bound is not -1");
}

// 10
void chi(Check& c) {
  const auto catalog = GroupCatalog::default_catalog();
  const SearchBudget budget;
  const auto f2 = FinitePresentation::free({"x", "y"});
  const auto est = chi_p_estimate(f2, 2, catalog, budget);
  for (const auto& s : est.samples) {
    c.expect(s.ratio == 1, "F_2 kernel of index " + std::to_string(s.index) +
                               " has ratio " + str(s.ratio));
  }
  c.note("F_2: " + std::to_string(est.samples.size()) + " kernels, best " +
         str(est.best_ratio));

  const auto surface = standard_presentation(FuchsianSignature(2, {}));
  const auto est2 = chi_p_estimate(surface, 2, catalog, budget);
  c.expect(!est2.samples.empty() && est2.samples.front().index == 1 &&
               est2.samples.front().ratio == 2,
           "genus 2: index-1 ratio is not 2");
  for (const auto& s : est2.samples) {
    c.expect(s.ratio <= 2, "genus 2 kernel of index " +
                               std::to_string(s.index) + " has ratio " +
                               str(s.ratio));
  }
  c.note("genus 2: " + std::to_string(est2.samples.size()) +
         " kernels, best " + str(est2.best_ratio));

  const auto half = parse_quotient_spec("x:(1 2)", f2.generator_names());
  const auto sub = subgroup_presentation(f2, half);
  const auto est3 = chi_p_estimate(sub, 2, catalog, budget);
  c.note("index-2 kernel of F_2: " + std::to_string(est3.samples.size()) +
         " kernels, best " + str(est3.best_ratio));
  c.expect(est3.best_ratio == 2 * est.best_ratio,
           "multiplicativity: " + str(est3.best_ratio) + " vs 2 * " +
               str(est.best_ratio));
}

// 11
void power_witness(Check& c) {
  const auto pres = parse_presentation("< x, y | x^6 = y^12 = (x*y)^12 = 1 >");
  const auto q = cyclic_quotient(3, {1, 0});
  const Rational de = p_deficiency(pres, 2);
  c.expect(de == 0, "presentation de_2 is " + str(de));
  const auto w = power_witness_for(pres, 2, q);
  c.expect(w.has_value(), "no relator root survives in C_3");
  if (w) {
    c.note("r = " + format_word(w->relator, pres.generator_names()) +
           " = (" + format_word(w->root, pres.generator_names()) + ")^" +
           std::to_string(w->exponent) + ", kernel index " +
           std::to_string(w->report.index) + ", de_2 " +
           str(w->report.de_subgroup));
    c.expect(w->report.index == 3, "kernel index is not 3");
    c.expect(w->report.de_subgroup > 0, "kernel de_2 is not positive");
    c.expect(w->exponent % 2 == 1, "witness exponent is even");
  }
}

// 12
void dp_drop(Check& c) {
  Rng rng(0x5eed000c);
  const std::uint64_t primes[] = {2, 3, 5};
  std::size_t instances = 0;
  std::size_t strict = 0;
  while (instances < 200) {
    const auto pres = random_presentation(rng, 3, 3, 8);
    const auto qs = random_quotients(rng, pres, 6, 1);
    if (qs.empty()) {
      continue;
    }
    const auto sub = subgroup_presentation(pres, qs.front());
    const std::uint64_t p = primes[uniform(rng, 0, 2)];
    std::vector<Word> gens;
    const std::size_t count = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < count; ++i) {
      Word g = random_word(rng, sub.generator_count(), 1, 6);
      if (uniform(rng, 0, 2) == 0) {
        g = g.pow(static_cast<std::int64_t>(p));
      }
      gens.push_back(g);
    }
    const auto drop = quotient_dp_drop(sub, gens, p);
    c.expect(drop.holds, format_presentation(sub) + ": " +
                             std::to_string(drop.d_after) + " < " +
                             std::to_string(drop.d_before) + " - " +
                             std::to_string(drop.ell));
    c.expect(drop.d_after <= drop.d_before,
             "adding relators increased d_p");
    strict += drop.d_after < drop.d_before ? 1 : 0;
    ++instances;
  }
  c.note(std::to_string(instances) + " instances, " + std::to_string(strict) +
         " with a strict drop");
}

using Runner = void (*)(Check&);

struct Entry {
  Criterion criterion;
  Runner runner;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{1, "intro", "zero 2-deficiency of D_inf and the (2,4,4) triangle group"},
       intro},
      {{2, "freeprod", "free products of cyclic groups meet the abelian bound"},
       free_products},
      {{3, "supermult", "supermultiplicity on random kernels"},
       supermultiplicity},
      {{4, "conjsplit", "conjugacy class splitting and valuation drop"},
       conjugate_splitting},
      {{5, "snf", "Smith normal form against gcd of minors"}, smith},
      {{6, "valuation", "nu_p against exhaustive powering"}, valuations},
      {{7, "triangle", "Delta(6,12,12) has zero 2- and 3-deficiency"},
       triangle},
      {{8, "singerman", "kernel constructions and Riemann-Hurwitz"}, singerman},
      {{9, "index5", "index-5 kernel of <x,y|x^2,y^5,(xy)^5> at p = 2"},
       index_five},
      {{10, "chi", "p-Euler characteristic windows"}, chi},
      {{11, "powerwitness", "power relator witness for <x,y|x^6,y^12,(xy)^12>"},
       power_witness},
      {{12, "dpdrop", "d_p after adding normal generators"}, dp_drop},
  };
  return list;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = [] {
    std::vector<Criterion> out;
    for (const auto& e : entries()) {
      out.push_back(e.criterion);
    }
    return out;
  }();
  return list;
}

std::vector<CriterionResult> run(const std::vector<std::string>& only) {
  std::set<int> wanted;
  for (const auto& key : only) {
    bool found = false;
    for (const auto& e : entries()) {
      if (e.criterion.key == key ||
          std::to_string(e.criterion.id) == key) {
        wanted.insert(e.criterion.id);
        found = true;
      }
    }
    if (!found) {
      throw Error("unknown check '" + key + "'");
    }
  }
  std::vector<CriterionResult> results;
  for (const auto& e : entries()) {
    if (!wanted.empty() && !wanted.count(e.criterion.id)) {
      continue;
    }
    Check check;
    CriterionResult res;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.runner(check);
    } catch (const std::exception& ex) {
      check.expect(false, std::string("exception: ") + ex.what());
    }
    res.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    res.id = e.criterion.id;
    res.key = e.criterion.key;
    res.title = e.criterion.title;
    res.passed = check.passed();
    res.detail = check.detail();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace pdef::acceptance
