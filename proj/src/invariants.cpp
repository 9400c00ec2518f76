#include "pdef/invariants.hpp"

#include <algorithm>
#include <set>

#include "pdef/abelian.hpp"
#include "pdef/error.hpp"

namespace pdef {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t q) {
  const std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

// Image of w in F_q^2 under x -> (1,0), y -> (0,1).
std::pair<std::int64_t, std::int64_t> plane_image(const Word& w,
                                                  std::int64_t q) {
  const auto v = exponent_vector(w);
  const BigInt a = v[0] % q;
  const BigInt b = v[1] % q;
  return {mod(a.convert_to<std::int64_t>(), q),
          mod(b.convert_to<std::int64_t>(), q)};
}

bool on_line(std::pair<std::int64_t, std::int64_t> v,
             std::pair<std::int64_t, std::int64_t> dir, std::int64_t q) {
  return mod(dir.first * v.second - dir.second * v.first, q) == 0;
}

}  // namespace

ChiEstimate chi_p_estimate(const FinitePresentation& p, std::uint64_t prime,
                           const GroupCatalog& catalog,
                           const SearchBudget& budget) {
  require_prime(prime);
  ChiEstimate out;
  const auto search =
      for_each_quotient(p, catalog, budget, [&](const FiniteQuotient& q) {
        const FinitePresentation sub = subgroup_presentation(p, q);
        const Rational de = p_deficiency(sub, prime);
        const Rational ratio =
            de / Rational(static_cast<std::int64_t>(q.order()));
        if (out.samples.empty() || ratio > out.best_ratio) {
          out.best_ratio = ratio;
          out.best_sample = out.samples.size();
        }
        out.samples.push_back(SubgroupSample{q, q.order(),
                                             sub.generator_count(),
                                             sub.relators().size(), de,
                                             ratio});
        return true;
      });
  out.assignments_examined = search.assignments_examined;
  out.budget_exhausted = search.budget_exhausted;
  return out;
}

GradientWindow gradient_window(const FinitePresentation& p,
                               std::uint64_t prime,
                               const GroupCatalog& catalog,
                               const SearchBudget& budget) {
  require_prime(prime);
  GradientWindow out;
  std::set<std::size_t> indices;
  const auto search =
      for_each_quotient(p, catalog, budget, [&](const FiniteQuotient& q) {
        const auto inv = abelian_invariants(subgroup_presentation(p, q));
        const std::size_t dp = d_p(inv, prime);
        const Rational ratio = Rational(static_cast<std::int64_t>(dp)) /
                               static_cast<std::int64_t>(q.order());
        if (out.samples.empty() || ratio < out.min_ratio) {
          out.min_ratio = ratio;
        }
        if (out.samples.empty() || ratio > out.max_ratio) {
          out.max_ratio = ratio;
        }
        indices.insert(q.order());
        out.samples.push_back(GradientSample{q.order(), dp, ratio, q});
        return true;
      });
  out.indices.assign(indices.begin(), indices.end());
  out.assignments_examined = search.assignments_examined;
  out.budget_exhausted = search.budget_exhausted;
  return out;
}

DpDrop quotient_dp_drop(const FinitePresentation& sub,
                        const std::vector<Word>& normal_generators,
                        std::uint64_t prime) {
  require_prime(prime);
  DpDrop out;
  out.d_before = d_p(abelian_invariants(sub), prime);
  std::vector<Word> extra;
  for (const Word& g : normal_generators) {
    if (g.alphabet_size() != sub.generator_count()) {
      throw Error("normal generator over the wrong alphabet");
    }
    if (g.is_identity()) {
      continue;
    }
    if (nu_p(g, prime) == Valuation(0)) {
      ++out.ell;
    }
    extra.push_back(g);
  }
  out.d_after = d_p(abelian_invariants(sub.with_relators(extra)), prime);
  out.holds = out.d_after + out.ell >= out.d_before;
  return out;
}

std::optional<PowerWitness> power_witness_for(const FinitePresentation& p,
                                              std::uint64_t prime,
                                              const FiniteQuotient& q) {
  require_prime(prime);
  if (!is_quotient_of(q, p)) {
    throw Error("the map does not kill every relator");
  }
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Word& r = p.relators()[i];
    const PrimeRoot root = p_prime_root(r, prime);
    if (evaluate(q, root.root).is_identity()) {
      continue;
    }
    return PowerWitness{i, r, root.root, root.exponent, q,
                        supermultiplicity_check(p, q, prime)};
  }
  return std::nullopt;
}

std::optional<PowerWitness> lemma_power_witness(const FinitePresentation& p,
                                                std::uint64_t prime,
                                                const GroupCatalog& catalog,
                                                const SearchBudget& budget) {
  if (p_deficiency(p, prime) != 0) {
    throw Error("the presentation must have p-deficiency 0, it has " +
                to_string(p_deficiency(p, prime)));
  }
  // With e = 1 the root is the relator itself, which every quotient kills.
  const bool has_proper_root =
      std::any_of(p.relators().begin(), p.relators().end(),
                  [&](const Word& r) { return p_prime_root(r, prime).exponent > 1; });
  if (!has_proper_root) {
    return std::nullopt;
  }
  std::optional<PowerWitness> found;
  for_each_quotient(p, catalog, budget, [&](const FiniteQuotient& q) {
    auto w = power_witness_for(p, prime, q);
    if (w && w->report.de_subgroup > 0) {
      found = std::move(w);
      return false;
    }
    return true;
  });
  return found;
}

FiniteQuotient index_q_quotient(const Word& w, const std::vector<Word>& vs,
                                std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_prime(q);
  if (p == q) {
    throw Error("p and q must be distinct");
  }
  if (w.alphabet_size() != 2) {
    throw Error("the construction needs a free group of rank 2");
  }
  const auto m = static_cast<std::int64_t>(vs.size());
  const auto qi = static_cast<std::int64_t>(q);
  const auto pi = static_cast<std::int64_t>(p);
  // m < q(1 - 1/p)  <=>  m p < q (p - 1)
  if (m * pi >= qi * (pi - 1)) {
    throw Error("too many words for this q");
  }
  const auto wv = plane_image(w, qi);
  std::vector<std::pair<std::int64_t, std::int64_t>> images;
  for (const Word& v : vs) {
    if (v.alphabet_size() != 2) {
      throw Error("the construction needs a free group of rank 2");
    }
    images.push_back(plane_image(v, qi));
    if (on_line(images.back(), wv, qi) &&
        (wv != std::pair<std::int64_t, std::int64_t>{0, 0} ||
         images.back() == wv)) {
      throw Error("some v_i maps to a multiple of the image of w");
    }
  }
  std::pair<std::int64_t, std::int64_t> dir = wv;
  if (dir == std::pair<std::int64_t, std::int64_t>{0, 0}) {
    std::vector<std::pair<std::int64_t, std::int64_t>> lines{{0, 1}};
    for (std::int64_t t = 0; t < qi; ++t) {
      lines.push_back({1, t});
    }
    const auto it = std::find_if(lines.begin(), lines.end(), [&](auto line) {
      return std::none_of(images.begin(), images.end(), [&](auto v) {
        return on_line(v, line, qi);
      });
    });
    if (it == lines.end()) {
      throw Error("no line avoids every v_i");
    }
    dir = *it;
  }
  // rho(a, b) = dir.second * a - dir.first * b vanishes on the line.
  return cyclic_quotient(static_cast<std::uint32_t>(q),
                         {mod(dir.second, qi), mod(-dir.first, qi)});
}

}  // namespace pdef
