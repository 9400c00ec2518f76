#include "pdef/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "pdef/error.hpp"

namespace pdef::oracle {

namespace {

Letters concat_power(const Letters& v, std::uint64_t n) {
  Letters out;
  for (std::uint64_t i = 0; i < n; ++i) {
    out.insert(out.end(), v.begin(), v.end());
  }
  return free_reduce(out);
}

void subsets(std::size_t n, std::size_t k, std::size_t start,
             std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Letters cyclic_core(const Letters& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Letters(w.begin() + static_cast<std::ptrdiff_t>(lo),
                 w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Letters min_rotation(const Letters& w) {
  Letters best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Letters rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    rot.insert(rot.end(), w.begin(),
               w.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, rot);
  }
  return best;
}

}  // namespace

Letters conjugacy_key(const Letters& w) {
  return min_rotation(cyclic_core(free_reduce(w)));
}

Letters free_reduce(const Letters& w) {
  Letters out;
  for (int c : w) {
    if (!out.empty() && out.back() == -c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Letters letters_of(const Word& w) {
  Letters out;
  for (const Run& r : w.runs()) {
    const int c = static_cast<int>(r.generator) + 1;
    const std::int64_t n = r.exponent > 0 ? r.exponent : -r.exponent;
    for (std::int64_t i = 0; i < n; ++i) {
      out.push_back(r.exponent > 0 ? c : -c);
    }
  }
  return out;
}

Word word_of(std::size_t alphabet, const Letters& w) {
  std::vector<Run> runs;
  for (int c : w) {
    runs.push_back({static_cast<std::uint32_t>(std::abs(c) - 1),
                    c > 0 ? 1 : -1});
  }
  return Word::reduce(alphabet, runs);
}

std::vector<Letters> all_reduced_words(std::size_t alphabet,
                                       std::size_t max_length) {
  std::vector<Letters> out{{}};
  std::size_t layer_start = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      for (int g = 1; g <= static_cast<int>(alphabet); ++g) {
        for (int c : {g, -g}) {
          if (!out[i].empty() && out[i].back() == -c) {
            continue;
          }
          Letters next = out[i];
          next.push_back(c);
          out.push_back(std::move(next));
        }
      }
    }
    layer_start = layer_end;
  }
  return out;
}

std::map<Letters, std::uint64_t> power_table(std::size_t alphabet,
                                             std::size_t max_length,
                                             std::uint64_t p) {
  std::map<Letters, std::uint64_t> table;
  for (const Letters& v : all_reduced_words(alphabet, max_length)) {
    if (v.empty()) {
      continue;
    }
    Letters w = v;
    for (std::uint64_t k = 1;; ++k) {
      w = concat_power(w, p);
      if (w.size() > max_length) {
        break;
      }
      auto& best = table[w];
      best = std::max(best, k);
    }
  }
  return table;
}

Letters shortest_p_prime_root(const Letters& w, std::uint64_t p) {
  if (w.empty()) {
    throw Error("no root of trivial word");
  }
  int alphabet = 0;
  for (int c : w) {
    alphabet = std::max(alphabet, std::abs(c));
  }
  for (const Letters& v :
       all_reduced_words(static_cast<std::size_t>(alphabet), w.size())) {
    if (v.empty()) {
      continue;
    }
    for (std::uint64_t n = 1; n <= w.size(); ++n) {
      if (n % p != 0 && concat_power(v, n) == w) {
        return v;
      }
    }
  }
  throw Error("word is not a power of anything shorter than itself");
}

BigInt laplace_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) {
    throw Error("determinant of a non-square matrix");
  }
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m(0, 0);
  }
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) {
      continue;
    }
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) {
          minor(r - 1, cc++) = m(r, c);
        }
      }
    }
    const BigInt term = m(0, j) * laplace_determinant(minor);
    det += j % 2 == 0 ? term : BigInt(-term);
  }
  return det;
}

BigInt gcd_of_minors(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rows);
  subsets(m.cols(), k, 0, cur, cols);
  BigInt g = 0;
  for (const auto& rs : rows) {
    for (const auto& cs : cols) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          sub(i, j) = m(rs[i], cs[j]);
        }
      }
      g = gcd(g, abs(laplace_determinant(sub)));
    }
  }
  return g;
}

std::size_t count_homs_to_cp(const FinitePresentation& pres,
                             std::uint64_t prime) {
  const std::size_t n = pres.generator_count();
  std::vector<std::uint64_t> images(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const Word& r : pres.relators()) {
      std::int64_t sum = 0;
      for (int c : letters_of(r)) {
        const auto img = static_cast<std::int64_t>(images[std::abs(c) - 1]);
        sum += c > 0 ? img : -img;
      }
      if (sum % static_cast<std::int64_t>(prime) != 0) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < n && ++images[i] == prime) {
      images[i++] = 0;
    }
    if (i == n) {
      break;
    }
  }
  std::size_t log = 0;
  while (count > 1) {
    if (count % prime != 0) {
      throw Error("homomorphism count is not a power of p");
    }
    count /= prime;
    ++log;
  }
  return log;
}

std::size_t count_homs_to_cp(const AbelianInvariants& inv,
                             std::uint64_t prime) {
  const std::size_t n = inv.rank + inv.divisors.size();
  std::vector<Word> relators;
  for (std::size_t i = 0; i < inv.divisors.size(); ++i) {
    relators.push_back(Word::generator(
        n, static_cast<std::uint32_t>(i),
        inv.divisors[i].convert_to<std::int64_t>()));
  }
  return count_homs_to_cp(FinitePresentation::with_default_names(n, relators),
                          prime);
}

std::size_t subgroup_class_count(const SchreierData& sd, const Word& r) {
  std::set<Letters> classes;
  for (const Word& t : sd.transversal) {
    const Word rewritten = rewrite_word(sd, r.conjugated_by(t));
    classes.insert(conjugacy_key(letters_of(rewritten)));
  }
  return classes.size();
}

FuchsianCase classify_by_labelings(const FuchsianSignature& sig,
                                   std::uint64_t p) {
  if (sig.genus() >= 1) {
    return FuchsianCase::a;
  }
  std::vector<std::uint64_t> e = sig.periods();
  std::sort(e.begin(), e.end());
  bool b = false;
  bool c = false;
  bool d = false;
  do {
    const auto div = [&](std::size_t i, std::uint64_t m) {
      return i < e.size() && e[i] % m == 0;
    };
    b = b || (p >= 3 && div(0, p) && div(1, p) && div(2, p));
    c = c || (p == 2 && div(0, 2) && div(1, 2) && div(2, 2) && div(3, 2));
    d = d || (p == 2 && div(0, 4) && div(1, 4) && div(2, 2));
  } while (std::next_permutation(e.begin(), e.end()));
  if (b) {
    return FuchsianCase::b;
  }
  if (c) {
    return FuchsianCase::c;
  }
  if (d) {
    return FuchsianCase::d;
  }
  return FuchsianCase::none;
}

}  // namespace pdef::oracle
