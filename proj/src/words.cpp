#include "pdef/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pdef/error.hpp"

namespace pdef {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error("word exponent overflow");
  }
  return out;
}

std::uint64_t magnitude(std::int64_t e) {
  return e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
               : static_cast<std::uint64_t>(e);
}

std::uint32_t letter_key(const Run& letter) {
  return 2 * letter.generator + (letter.exponent < 0 ? 1 : 0);
}

}  // namespace

void Word::push(Run r) {
  if (r.exponent == 0) {
    return;
  }
  if (!runs_.empty() && runs_.back().generator == r.generator) {
    runs_.back().exponent += r.exponent;
    if (runs_.back().exponent == 0) {
      runs_.pop_back();
    }
    return;
  }
  runs_.push_back(r);
}

Word Word::reduce(std::size_t alphabet_size, std::span<const Run> runs) {
  Word w(alphabet_size);
  for (const Run& r : runs) {
    if (r.generator >= alphabet_size) {
      throw Error("generator index " + std::to_string(r.generator) +
                  " outside alphabet of size " +
                  std::to_string(alphabet_size));
    }
    w.push(r);
  }
  return w;
}

Word Word::generator(std::size_t alphabet_size, std::uint32_t g,
                     std::int64_t exponent) {
  const Run r{g, exponent};
  return reduce(alphabet_size, std::span<const Run>(&r, 1));
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const Run& r : runs_) {
    n += magnitude(r.exponent);
  }
  return n;
}

Word Word::inverse() const {
  Word w(alphabet_);
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
    w.runs_.push_back({it->generator, -it->exponent});
  }
  return w;
}

Word operator*(const Word& a, const Word& b) {
  if (a.alphabet_ != b.alphabet_) {
    throw Error("cannot multiply words over alphabets of size " +
                std::to_string(a.alphabet_) + " and " +
                std::to_string(b.alphabet_));
  }
  Word w = a;
  for (const Run& r : b.runs_) {
    w.push(r);
  }
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) {
    return Word(alphabet_);
  }
  if (n < 0) {
    return inverse().pow(checked_mul(n, -1));
  }
  const CyclicDecomposition cd = cyclic_reduction(*this);
  Word core(alphabet_);
  const auto core_runs = cd.core.runs();
  if (core_runs.size() == 1) {
    core.push({core_runs[0].generator, checked_mul(core_runs[0].exponent, n)});
  } else {
    core.runs_.reserve(core_runs.size() * static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      for (const Run& r : core_runs) {
        core.push(r);
      }
    }
  }
  return cd.conjugator * core * cd.conjugator.inverse();
}

Word Word::conjugated_by(const Word& g) const {
  return g * *this * g.inverse();
}

std::vector<Run> Word::letters() const {
  std::vector<Run> out;
  out.reserve(length());
  for (const Run& r : runs_) {
    const std::int64_t sign = r.exponent < 0 ? -1 : 1;
    for (std::uint64_t i = 0; i < magnitude(r.exponent); ++i) {
      out.push_back({r.generator, sign});
    }
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  const auto la = a.length();
  const auto lb = b.length();
  if (la != lb) {
    return la < lb;
  }
  const auto xs = a.letters();
  const auto ys = b.letters();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto kx = letter_key(xs[i]);
    const auto ky = letter_key(ys[i]);
    if (kx != ky) {
      return kx < ky;
    }
  }
  return false;
}

CyclicDecomposition cyclic_reduction(const Word& w) {
  std::vector<Run> r(w.runs().begin(), w.runs().end());
  std::vector<Run> conj;
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].generator == r[hi - 1].generator) {
    const std::int64_t a = r[lo].exponent;
    const std::int64_t b = r[hi - 1].exponent;
    if ((a > 0) == (b > 0)) {
      break;
    }
    const std::int64_t sign = a > 0 ? 1 : -1;
    const std::int64_t m =
        static_cast<std::int64_t>(std::min(magnitude(a), magnitude(b)));
    conj.push_back({r[lo].generator, sign * m});
    r[lo].exponent -= sign * m;
    r[hi - 1].exponent += sign * m;
    if (r[hi - 1].exponent == 0) {
      --hi;
    }
    if (r[lo].exponent == 0) {
      ++lo;
    }
  }
  CyclicDecomposition cd;
  cd.conjugator = Word::reduce(w.alphabet_size(), conj);
  cd.core = Word::reduce(
      w.alphabet_size(),
      std::span<const Run>(r.data() + lo, r.data() + hi));
  return cd;
}

Word RootDecomposition::root_element() const {
  return conjugator * root * conjugator.inverse();
}

Word RootDecomposition::reassemble() const {
  return conjugator * root.pow(static_cast<std::int64_t>(exponent)) *
         conjugator.inverse();
}

RootDecomposition maximal_root(const Word& w) {
  if (w.is_identity()) {
    throw Error("no root of trivial word");
  }
  const std::size_t n = w.alphabet_size();
  CyclicDecomposition cd = cyclic_reduction(w);
  std::vector<Run> core(cd.core.runs().begin(), cd.core.runs().end());

  RootDecomposition out;
  if (core.size() == 1) {
    const std::int64_t e = core[0].exponent;
    out.conjugator = cd.conjugator;
    out.root = Word::generator(n, core[0].generator, e < 0 ? -1 : 1);
    out.exponent = magnitude(e);
    return out;
  }

  // Rotate so that the first and last runs carry different generators; then
  // the core is a proper power exactly when its run sequence is periodic.
  Word conj = cd.conjugator;
  if (core.front().generator == core.back().generator) {
    const Run last = core.back();
    core.pop_back();
    core.front().exponent += last.exponent;
    conj = conj * Word::generator(n, last.generator, -last.exponent);
  }

  const std::size_t k = core.size();
  std::size_t period = k;
  for (std::size_t d = 1; d < k; ++d) {
    if (k % d != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = 0; i + d < k && periodic; ++i) {
      periodic = core[i] == core[i + d];
    }
    if (periodic) {
      period = d;
      break;
    }
  }
  out.conjugator = conj;
  out.root = Word::reduce(
      n, std::span<const Run>(core.data(), core.data() + period));
  out.exponent = k / period;
  return out;
}

std::uint64_t Valuation::value() const {
  if (!value_) {
    throw Error("infinite valuation has no finite value");
  }
  return *value_;
}

Rational Valuation::weight(std::uint64_t p) const {
  if (!value_) {
    return Rational(0);
  }
  return inverse_power(p, *value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return *a.value_ <=> *b.value_;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(std::to_string(p) + " is not prime");
  }
}

std::uint64_t nu_p_int(std::int64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) {
    throw Error("p-valuation of 0 is undefined");
  }
  std::uint64_t m = magnitude(n);
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

std::uint64_t nu_p_int(const BigInt& n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) {
    throw Error("p-valuation of 0 is undefined");
  }
  BigInt m = abs(n);
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

Valuation nu_p(const Word& w, std::uint64_t p) {
  require_prime(p);
  if (w.is_identity()) {
    return Valuation::infinite();
  }
  const auto m = maximal_root(w).exponent;
  return Valuation(nu_p_int(static_cast<std::int64_t>(m), p));
}

PrimeRoot p_prime_root(const Word& w, std::uint64_t p) {
  require_prime(p);
  if (w.is_identity()) {
    throw Error("no root of trivial word");
  }
  const RootDecomposition rd = maximal_root(w);
  std::uint64_t n = rd.exponent;
  std::uint64_t p_part = 1;
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  PrimeRoot out;
  out.root = rd.root.pow(static_cast<std::int64_t>(p_part))
                 .conjugated_by(rd.conjugator);
  out.exponent = n;
  return out;
}

}  // namespace pdef
