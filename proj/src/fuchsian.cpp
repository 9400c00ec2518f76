#include "pdef/fuchsian.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pdef/error.hpp"

namespace pdef {

namespace {

Rational period_term(std::uint64_t e) {
  return Rational(1) - Rational(1, static_cast<std::int64_t>(e));
}

Rational p_term(std::uint64_t e, std::uint64_t p) {
  return Rational(1) -
         inverse_power(p, nu_p_int(static_cast<std::int64_t>(e), p));
}

Rational volume_of(std::uint64_t genus,
                   const std::vector<std::uint64_t>& periods) {
  Rational mu = 2 * static_cast<std::int64_t>(genus) - 2;
  for (auto e : periods) {
    mu += period_term(e);
  }
  return mu;
}

std::size_t count_divisible(const FuchsianSignature& sig, std::uint64_t m) {
  return static_cast<std::size_t>(
      std::count_if(sig.periods().begin(), sig.periods().end(),
                    [m](std::uint64_t e) { return e % m == 0; }));
}

// Positions of the first `count` periods satisfying pred.
template <typename Pred>
std::vector<std::size_t> pick(const FuchsianSignature& sig, std::size_t count,
                              Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sig.periods().size() && out.size() < count;
       ++i) {
    if (pred(sig.periods()[i])) {
      out.push_back(i);
    }
  }
  return out;
}

std::uint64_t parse_number(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw ParseError("expected a number", 0);
  }
  text = text.substr(first, last - first + 1);
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "'", first);
  }
  return v;
}

// C_n as an n-cycle with x_a -> sigma, x_b -> sigma^-1.
KernelConstruction cyclic_construction(const FuchsianSignature& sig,
                                       std::uint64_t n, std::size_t a,
                                       std::size_t b, FuchsianCase which) {
  std::vector<std::uint32_t> points(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    points[i] = i + 1;
  }
  const Permutation sigma = Permutation::cycle(n, points);
  EllipticAction act;
  act.degree = n;
  act.elliptic.assign(sig.periods().size(), Permutation(n));
  act.hyperbolic.assign(2 * sig.genus(), Permutation(n));
  act.elliptic[a] = sigma;
  act.elliptic[b] = sigma.inverse();
  return KernelConstruction{which, act, singerman_transfer(sig, act), n};
}

}  // namespace

FuchsianSignature::FuchsianSignature(std::uint64_t genus,
                                     std::vector<std::uint64_t> periods)
    : genus_(genus), periods_(std::move(periods)) {
  for (auto e : periods_) {
    if (e < 2) {
      throw Error("periods must be at least 2");
    }
  }
  std::sort(periods_.begin(), periods_.end());
  if (volume_of(genus_, periods_) <= 0) {
    throw Error("signature " + to_string() + " is not hyperbolic");
  }
}

std::string FuchsianSignature::to_string() const {
  std::ostringstream out;
  out << "(" << genus_;
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    out << (i == 0 ? "; " : ",") << periods_[i];
  }
  out << ")";
  return out.str();
}

FuchsianSignature parse_signature(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open) {
    throw ParseError("signature must look like (s; e1,e2,...)", 0);
  }
  if (text.find_first_not_of(" \t\n") != open ||
      text.find_last_not_of(" \t\n") != close) {
    throw ParseError("unexpected text around signature", 0);
  }
  const std::string_view body = text.substr(open + 1, close - open - 1);
  const auto semi = body.find(';');
  const std::uint64_t genus = parse_number(body.substr(0, semi));
  std::vector<std::uint64_t> periods;
  if (semi != std::string_view::npos) {
    std::string_view rest = body.substr(semi + 1);
    if (rest.find_first_not_of(" \t") != std::string_view::npos) {
      for (;;) {
        const auto comma = rest.find(',');
        periods.push_back(parse_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
          break;
        }
        rest = rest.substr(comma + 1);
      }
    }
  }
  return FuchsianSignature(genus, std::move(periods));
}

FinitePresentation standard_presentation(const FuchsianSignature& sig) {
  const std::size_t r = sig.periods().size();
  const std::size_t s = sig.genus();
  const std::size_t n = r + 2 * s;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= s; ++j) {
    names.push_back("u" + std::to_string(j));
    names.push_back("v" + std::to_string(j));
  }
  std::vector<Word> relators;
  Word longrel(n);
  for (std::uint32_t i = 0; i < r; ++i) {
    relators.push_back(Word::generator(
        n, i, static_cast<std::int64_t>(sig.periods()[i])));
    longrel = longrel * Word::generator(n, i);
  }
  for (std::uint32_t j = 0; j < s; ++j) {
    const Word u = Word::generator(n, static_cast<std::uint32_t>(r + 2 * j));
    const Word v =
        Word::generator(n, static_cast<std::uint32_t>(r + 2 * j + 1));
    longrel = longrel * u * v * u.inverse() * v.inverse();
  }
  relators.push_back(longrel);
  return FinitePresentation(std::move(names), std::move(relators));
}

Rational volume(const FuchsianSignature& sig) {
  return volume_of(sig.genus(), sig.periods());
}

Rational de_standard(const FuchsianSignature& sig, std::uint64_t p) {
  require_prime(p);
  Rational de = 2 * static_cast<std::int64_t>(sig.genus()) - 2;
  for (auto e : sig.periods()) {
    de += p_term(e, p);
  }
  return de;
}

Rational de_upper(const FuchsianSignature& sig, std::uint64_t p) {
  require_prime(p);
  std::vector<std::uint64_t> sorted = sig.periods();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [p](std::uint64_t a, std::uint64_t b) {
                     return nu_p_int(static_cast<std::int64_t>(a), p) >
                            nu_p_int(static_cast<std::int64_t>(b), p);
                   });
  Rational de = 2 * static_cast<std::int64_t>(sig.genus()) - 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    de += p_term(sorted[i], p);
  }
  return de;
}

std::string to_string(FuchsianCase c) {
  switch (c) {
    case FuchsianCase::a: return "a";
    case FuchsianCase::b: return "b";
    case FuchsianCase::c: return "c";
    case FuchsianCase::d: return "d";
    case FuchsianCase::none: return "none";
  }
  return "none";
}

FuchsianCase classify(const FuchsianSignature& sig, std::uint64_t p) {
  require_prime(p);
  if (sig.genus() >= 1) {
    return FuchsianCase::a;
  }
  if (p >= 3 && count_divisible(sig, p) >= 3) {
    return FuchsianCase::b;
  }
  if (p == 2) {
    const std::size_t even = count_divisible(sig, 2);
    if (even >= 4) {
      return FuchsianCase::c;
    }
    if (count_divisible(sig, 4) >= 2 && even >= 3) {
      return FuchsianCase::d;
    }
  }
  return FuchsianCase::none;
}

DeExact de_exact(const FuchsianSignature& sig, std::uint64_t p) {
  DeExact out;
  out.fuchsian_case = classify(sig, p);
  out.lower = de_standard(sig, p);
  out.upper = de_upper(sig, p);
  if (out.fuchsian_case != FuchsianCase::none) {
    out.value = out.lower;
  }
  return out;
}

std::vector<Permutation> EllipticAction::generator_images() const {
  std::vector<Permutation> images = elliptic;
  images.insert(images.end(), hyperbolic.begin(), hyperbolic.end());
  for (auto& im : images) {
    im = im.extended(degree);
  }
  return images;
}

std::string EllipticAction::to_string(
    const FinitePresentation& standard) const {
  const auto images = generator_images();
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    out += (i ? "," : "") + standard.generator_names()[i] + ":" +
           images[i].to_string();
  }
  return out;
}

void validate_action(const FuchsianSignature& sig, const EllipticAction& act) {
  if (act.elliptic.size() != sig.periods().size() ||
      act.hyperbolic.size() != 2 * sig.genus()) {
    throw Error("action has the wrong number of generator images");
  }
  if (act.degree == 0) {
    throw Error("action on the empty set");
  }
  const auto images = act.generator_images();
  for (const auto& im : images) {
    if (im.degree() != act.degree) {
      throw Error("permutation moves points beyond the action degree");
    }
  }
  const FinitePresentation standard = standard_presentation(sig);
  for (const Word& r : standard.relators()) {
    Permutation value(act.degree);
    for (const Run& run : r.runs()) {
      value = value * images[run.generator].pow(run.exponent);
    }
    if (!value.is_identity()) {
      throw Error("action does not satisfy the relations of the signature");
    }
  }
  std::vector<bool> seen(act.degree, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t pt = stack.back();
    stack.pop_back();
    for (const auto& im : images) {
      const std::uint32_t next = im[pt];
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  if (reached != act.degree) {
    throw Error("action is not transitive");
  }
}

FuchsianSignature singerman_transfer(const FuchsianSignature& sig,
                                     const EllipticAction& act) {
  validate_action(sig, act);
  std::vector<std::uint64_t> periods;
  for (std::size_t i = 0; i < sig.periods().size(); ++i) {
    const std::uint64_t e = sig.periods()[i];
    for (std::size_t len : act.elliptic[i].extended(act.degree)
                               .cycle_lengths()) {
      if (len < e) {
        periods.push_back(e / len);
      }
    }
  }
  Rational twice_genus =
      Rational(static_cast<std::int64_t>(act.degree)) * volume(sig) + 2;
  for (auto f : periods) {
    twice_genus -= period_term(f);
  }
  if (twice_genus < 0 ||
      boost::multiprecision::denominator(twice_genus) != 1 ||
      boost::multiprecision::numerator(twice_genus) % 2 != 0) {
    throw Error("Riemann-Hurwitz gives no integral genus for this action");
  }
  const BigInt genus = boost::multiprecision::numerator(twice_genus) / 2;
  return FuchsianSignature(genus.convert_to<std::uint64_t>(),
                           std::move(periods));
}

FiniteQuotient action_quotient(const FuchsianSignature& sig,
                               const EllipticAction& act) {
  validate_action(sig, act);
  return FiniteQuotient(act.generator_images(), kDefaultMaxOrder,
                        act.degree);
}

KernelConstruction kernel_construction(const FuchsianSignature& sig,
                                       std::uint64_t p, FuchsianCase which) {
  require_prime(p);
  const FuchsianCase actual = classify(sig, p);
  bool applies = false;
  switch (which) {
    case FuchsianCase::a:
      applies = sig.genus() >= 1;
      break;
    case FuchsianCase::b:
      applies = p >= 3 && count_divisible(sig, p) >= 3;
      break;
    case FuchsianCase::c:
      applies = p == 2 && count_divisible(sig, 2) >= 4;
      break;
    case FuchsianCase::d:
      applies = p == 2 && count_divisible(sig, 4) >= 2 &&
                count_divisible(sig, 2) >= 3;
      break;
    case FuchsianCase::none:
      break;
  }
  if (!applies) {
    throw Error("case " + to_string(which) + " does not apply to " +
                sig.to_string() + " at p = " + std::to_string(p) +
                " (classified as " + to_string(actual) + ")");
  }
  if (which == FuchsianCase::a) {
    EllipticAction act;
    act.degree = 4;
    act.elliptic.assign(sig.periods().size(), Permutation(4));
    act.hyperbolic.assign(2 * sig.genus(), Permutation(4));
    act.hyperbolic[0] = Permutation::parse("(1 2)(3 4)", 4);
    act.hyperbolic[1] = Permutation::parse("(1 3)(2 4)", 4);
    return KernelConstruction{which, act, singerman_transfer(sig, act), 4};
  }
  const std::uint64_t m = which == FuchsianCase::d ? 4 : p;
  const auto chosen =
      pick(sig, 2, [m](std::uint64_t e) { return e % m == 0; });
  return cyclic_construction(sig, p, chosen[0], chosen[1], which);
}

KernelConstruction descent_construction(const FuchsianSignature& sig) {
  if (sig.genus() != 0 || classify(sig, 2) != FuchsianCase::none ||
      count_divisible(sig, 2) != 3) {
    throw Error("descent needs genus 0, no applicable case at p = 2 and "
                "exactly three even periods");
  }
  auto chosen =
      pick(sig, 2, [](std::uint64_t e) { return e % 4 == 2; });
  return cyclic_construction(sig, 2, chosen[0], chosen[1],
                             FuchsianCase::none);
}

}  // namespace pdef
