#include "pdef/rewrite.hpp"

#include <string>

#include "pdef/error.hpp"

namespace pdef {

namespace {

void require_quotient(const FiniteQuotient& q, const FinitePresentation& p) {
  if (!is_quotient_of(q, p)) {
    throw Error("the map does not kill every relator");
  }
}

}  // namespace

CosetTable coset_table(const FiniteQuotient& q, const FinitePresentation& p) {
  require_quotient(q, p);
  CosetTable ct;
  ct.degree = q.order();
  for (std::uint32_t g = 0; g < q.generator_count(); ++g) {
    std::vector<std::uint32_t> images(ct.degree);
    for (std::size_t c = 0; c < ct.degree; ++c) {
      images[c] = q.act(c, g);
    }
    ct.generator_actions.emplace_back(std::move(images));
  }
  return ct;
}

std::size_t SchreierData::coset_of(const Word& w) const {
  std::size_t c = 0;
  for (const Run& r : w.runs()) {
    const auto& act = table.generator_actions.at(r.generator);
    const Permutation step = r.exponent > 0 ? act : act.inverse();
    const std::int64_t n = r.exponent > 0 ? r.exponent : -r.exponent;
    for (std::int64_t i = 0; i < n; ++i) {
      c = step[c];
    }
  }
  return c;
}

std::vector<std::string> SchreierData::basis_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    names.push_back("s" + std::to_string(i));
  }
  return names;
}

SchreierData schreier(const CosetTable& table) {
  const std::size_t d = table.degree;
  const std::size_t ngens = table.generator_actions.size();
  if (d == 0) {
    throw Error("empty coset table");
  }
  std::vector<Permutation> inverses;
  for (const auto& a : table.generator_actions) {
    if (a.degree() != d) {
      throw Error("coset table action has the wrong degree");
    }
    inverses.push_back(a.inverse());
  }

  SchreierData sd;
  sd.table = table;
  sd.transversal.assign(d, Word(ngens));
  std::vector<bool> reached(d, false);
  // tree[x][c]: edge c --x--> c.x belongs to the spanning tree.
  std::vector<std::vector<bool>> tree(ngens, std::vector<bool>(d, false));
  std::vector<std::size_t> queue{0};
  reached[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t c = queue[head];
    for (std::uint32_t x = 0; x < ngens; ++x) {
      for (const std::int64_t sign : {1, -1}) {
        const std::size_t next =
            sign > 0 ? table.generator_actions[x][c] : inverses[x][c];
        if (reached[next]) {
          continue;
        }
        reached[next] = true;
        sd.transversal[next] =
            sd.transversal[c] * Word::generator(ngens, x, sign);
        if (sign > 0) {
          tree[x][c] = true;
        } else {
          tree[x][next] = true;
        }
        queue.push_back(next);
      }
    }
  }
  if (queue.size() != d) {
    throw Error("coset table is not transitive");
  }

  sd.basis_index.assign(ngens,
                        std::vector<std::optional<std::uint32_t>>(d));
  for (std::uint32_t x = 0; x < ngens; ++x) {
    for (std::size_t c = 0; c < d; ++c) {
      if (tree[x][c]) {
        continue;
      }
      const std::size_t target = table.generator_actions[x][c];
      sd.basis_index[x][c] = static_cast<std::uint32_t>(sd.basis.size());
      sd.basis.push_back(sd.transversal[c] * Word::generator(ngens, x) *
                         sd.transversal[target].inverse());
    }
  }
  return sd;
}

Word rewrite_word(const SchreierData& sd, const Word& w) {
  const std::size_t rank = sd.basis.size();
  std::vector<Run> out;
  std::size_t c = 0;
  for (const Run& r : w.runs()) {
    const auto& act = sd.table.generator_actions.at(r.generator);
    const auto& index = sd.basis_index[r.generator];
    if (r.exponent > 0) {
      for (std::int64_t i = 0; i < r.exponent; ++i) {
        if (index[c]) {
          out.push_back({*index[c], 1});
        }
        c = act[c];
      }
    } else {
      const Permutation back = act.inverse();
      for (std::int64_t i = 0; i < -r.exponent; ++i) {
        c = back[c];
        if (index[c]) {
          out.push_back({*index[c], -1});
        }
      }
    }
  }
  if (c != 0) {
    throw Error("word does not lie in the subgroup");
  }
  return Word::reduce(rank, out);
}

Word expand_word(const SchreierData& sd, const Word& basis_word) {
  const std::size_t ngens = sd.table.generator_actions.size();
  Word w(ngens);
  for (const Run& r : basis_word.runs()) {
    w = w * sd.basis.at(r.generator).pow(r.exponent);
  }
  return w;
}

std::uint64_t centralizer_index(const FiniteQuotient& q, const Word& g) {
  if (g.is_identity()) {
    throw Error("centralizer index of the identity is not finite");
  }
  return order_of_image(q, maximal_root(g).root_element());
}

std::vector<Word> conjugate_class_reps(const FiniteQuotient& q,
                                       const SchreierData& sd, const Word& g) {
  if (g.is_identity()) {
    throw Error("class representatives of the identity are not defined");
  }
  if (!evaluate(q, g).is_identity()) {
    throw Error("word does not lie in the kernel");
  }
  const Permutation root_image = evaluate(q, maximal_root(g).root_element());
  const std::size_t d = q.order();
  std::vector<bool> covered(d, false);
  std::vector<Word> reps;
  // t g t^-1 and t' g t'^-1 are conjugate in the kernel iff the images of t
  // and t' lie in the same left coset of the image of the root.
  for (std::size_t c = 0; c < d; ++c) {
    if (covered[c]) {
      continue;
    }
    Permutation h = q.elements()[c];
    for (;;) {
      const std::size_t idx = q.element_index(h);
      if (covered[idx]) {
        break;
      }
      covered[idx] = true;
      h = h * root_image;
    }
    reps.push_back(g.conjugated_by(sd.transversal[c]));
  }
  return reps;
}

std::vector<Word> conjugate_class_reps(const FiniteQuotient& q, const Word& g) {
  if (g.alphabet_size() != q.generator_count()) {
    throw Error("word and quotient have different alphabets");
  }
  const FinitePresentation free_group = FinitePresentation::with_default_names(
      q.generator_count(), {});
  return conjugate_class_reps(q, schreier(coset_table(q, free_group)), g);
}

FinitePresentation subgroup_presentation(const FinitePresentation& p,
                                         const FiniteQuotient& q,
                                         RelatorMode mode) {
  const SchreierData sd = schreier(coset_table(q, p));
  std::vector<Word> relators;
  for (const Word& r : p.relators()) {
    if (mode == RelatorMode::class_representatives) {
      for (const Word& rep : conjugate_class_reps(q, sd, r)) {
        relators.push_back(rewrite_word(sd, rep));
      }
    } else {
      for (const Word& t : sd.transversal) {
        relators.push_back(rewrite_word(sd, r.conjugated_by(t)));
      }
    }
  }
  return FinitePresentation(sd.basis_names(), std::move(relators));
}

SizeBound p_size_bound(const FinitePresentation& p, const FiniteQuotient& q,
                       std::uint64_t prime) {
  require_prime(prime);
  const SchreierData sd = schreier(coset_table(q, p));
  SizeBound out;
  out.index = sd.index();
  const auto d = static_cast<std::int64_t>(out.index);
  for (const Word& r : p.relators()) {
    RelatorContribution c;
    c.centralizer_index = centralizer_index(q, r);
    c.classes = out.index / c.centralizer_index;
    c.nu_relator = nu_p(r, prime).value();
    c.nu_index = nu_p_int(static_cast<std::int64_t>(c.centralizer_index), prime);
    c.bound_term = Rational(static_cast<std::int64_t>(c.classes)) *
                   inverse_power(prime, c.nu_relator) *
                   Rational(big_pow(prime, c.nu_index));
    for (const Word& rep : conjugate_class_reps(q, sd, r)) {
      c.exact_term += nu_p(rewrite_word(sd, rep), prime).weight(prime);
    }
    out.value += c.bound_term;
    out.exact += c.exact_term;
    out.naive += Rational(d) * inverse_power(prime, c.nu_relator);
    out.relators.push_back(std::move(c));
  }
  return out;
}

SupermultiplicityReport supermultiplicity_check(const FinitePresentation& p,
                                                const FiniteQuotient& q,
                                                std::uint64_t prime) {
  SupermultiplicityReport rep;
  const FinitePresentation sub = subgroup_presentation(p, q);
  rep.index = q.order();
  rep.de_subgroup = p_deficiency(sub, prime);
  rep.de_original = p_deficiency(p, prime);
  rep.scaled = Rational(static_cast<std::int64_t>(rep.index)) * rep.de_original;
  rep.holds = rep.de_subgroup >= rep.scaled;
  return rep;
}

}  // namespace pdef
