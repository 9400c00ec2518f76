#include "pdef/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "pdef/error.hpp"

namespace pdef {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (const auto i : images_) {
    if (i >= images_.size() || hit[i]) {
      throw Error("image list is not a permutation");
    }
    hit[i] = true;
  }
}

Permutation Permutation::cycle(std::size_t degree,
                               const std::vector<std::uint32_t>& points) {
  Permutation p(degree);
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto a = points[i];
    if (a < 1 || a > degree || !seen.insert(a).second) {
      throw Error("bad point " + std::to_string(a) + " in cycle");
    }
    p.images_[a - 1] = points[(i + 1) % points.size()] - 1;
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t pos = 0;
  std::size_t degree = min_degree;
  std::set<std::uint32_t> used;
  auto skip = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip();
  if (pos == text.size()) {
    throw ParseError("empty permutation", pos);
  }
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' in cycle notation", pos);
    }
    ++pos;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected point in cycle", pos);
      }
      std::uint32_t v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint32_t>(text[pos] - '0');
        if (v > 100000) {
          throw ParseError("point too large", pos);
        }
        ++pos;
      }
      if (v == 0) {
        throw ParseError("points are numbered from 1", pos);
      }
      if (!used.insert(v).second) {
        throw ParseError("point " + std::to_string(v) + " appears twice", pos);
      }
      degree = std::max<std::size_t>(degree, v);
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  Permutation p(std::max<std::size_t>(degree, 1));
  for (const auto& cyc : cycles) {
    if (cyc.size() > 1) {
      p = p * cycle(p.degree(), cyc);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  const Permutation& x = a.degree() == n ? a : a.extended(n);
  const Permutation& y = b.degree() == n ? b : b.extended(n);
  Permutation c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.images_[i] = y.images_[x.images_[i]];
  }
  return c;
}

Permutation Permutation::pow(std::int64_t n) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t e = n % ord;
  if (e < 0) {
    e += ord;
  }
  Permutation result(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto len : cycle_lengths()) {
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) {
    throw Error("cannot shrink a permutation");
  }
  Permutation p(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      out << (first ? "" : " ") << j + 1;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (const auto i : p.images()) {
    h = h * 1000003U ^ i;
  }
  return h;
}

FiniteQuotient::FiniteQuotient(std::vector<Permutation> generator_images,
                               std::size_t max_order, std::size_t degree)
    : images_(std::move(generator_images)) {
  degree_ = std::max<std::size_t>(degree, 1);
  for (const auto& p : images_) {
    degree_ = std::max(degree_, p.degree());
  }
  for (auto& p : images_) {
    if (p.degree() < degree_) {
      p = p.extended(degree_);
    }
  }
  std::vector<Permutation> inverses;
  inverses.reserve(images_.size());
  for (const auto& p : images_) {
    inverses.push_back(p.inverse());
  }

  const std::size_t ngens = images_.size();
  elements_.push_back(Permutation(degree_));
  index_.emplace(elements_.front(), 0);
  std::vector<std::vector<std::uint32_t>> fwd(ngens);
  std::vector<std::vector<std::uint32_t>> bwd(ngens);
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    for (std::size_t g = 0; g < ngens; ++g) {
      for (int side = 0; side < 2; ++side) {
        Permutation next = elements_[e] * (side == 0 ? images_[g] : inverses[g]);
        auto [it, inserted] = index_.emplace(next, elements_.size());
        if (inserted) {
          if (elements_.size() >= max_order) {
            throw Error("image group exceeds the order bound " +
                        std::to_string(max_order));
          }
          elements_.push_back(std::move(next));
        }
        auto& row = side == 0 ? fwd[g] : bwd[g];
        if (row.size() <= e) {
          row.resize(e + 1);
        }
        row[e] = static_cast<std::uint32_t>(it->second);
      }
    }
  }
  table_.reserve(ngens * elements_.size());
  inverse_table_.reserve(ngens * elements_.size());
  for (std::size_t g = 0; g < ngens; ++g) {
    table_.insert(table_.end(), fwd[g].begin(), fwd[g].end());
    inverse_table_.insert(inverse_table_.end(), bwd[g].begin(), bwd[g].end());
  }
}

std::size_t FiniteQuotient::element_index(const Permutation& p) const {
  const Permutation& key = p.degree() < degree_ ? p.extended(degree_) : p;
  const auto it = index_.find(key);
  if (it == index_.end()) {
    throw Error("permutation " + p.to_string() + " is not in the image group");
  }
  return it->second;
}

std::uint32_t FiniteQuotient::act(std::size_t element, std::uint32_t generator,
                                  bool inverse) const {
  const auto& t = inverse ? inverse_table_ : table_;
  return t[generator * elements_.size() + element];
}

std::string FiniteQuotient::to_string(
    const std::vector<std::string>& names) const {
  std::ostringstream out;
  for (std::size_t g = 0; g < images_.size(); ++g) {
    out << (g ? "," : "") << (g < names.size() ? names[g] : "?") << ":"
        << images_[g].to_string();
  }
  return out.str();
}

namespace {

void check_alphabet(const FiniteQuotient& q, std::size_t alphabet) {
  if (alphabet != q.generator_count()) {
    throw Error("word over " + std::to_string(alphabet) +
                " generators evaluated in a quotient of " +
                std::to_string(q.generator_count()) + " generators");
  }
}

}  // namespace

Permutation evaluate(const FiniteQuotient& q, const Word& w) {
  check_alphabet(q, w.alphabet_size());
  Permutation result(q.degree());
  for (const Run& r : w.runs()) {
    result = result * q.image(r.generator).pow(r.exponent);
  }
  return result;
}

bool is_quotient_of(const FiniteQuotient& q, const FinitePresentation& p) {
  check_alphabet(q, p.generator_count());
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return evaluate(q, r).is_identity(); });
}

std::uint64_t order_of_image(const FiniteQuotient& q, const Word& w) {
  return evaluate(q, w).order();
}

std::size_t kernel_index(const FiniteQuotient& q, const FinitePresentation& p) {
  if (!is_quotient_of(q, p)) {
    throw Error("the map does not kill every relator");
  }
  return q.order();
}

FiniteQuotient cyclic_quotient(std::uint32_t n,
                               const std::vector<std::int64_t>& exponents) {
  if (n == 0) {
    throw Error("cyclic quotient of order 0");
  }
  std::vector<std::uint32_t> shift(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    shift[i] = (i + 1) % n;
  }
  const Permutation s(shift);
  std::vector<Permutation> images;
  images.reserve(exponents.size());
  for (const auto e : exponents) {
    images.push_back(s.pow(e));
  }
  return FiniteQuotient(std::move(images), std::max<std::size_t>(n, kDefaultMaxOrder), n);
}

namespace {

// Splits on sep outside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (const char c : text) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    }
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
    ++a;
  }
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
    --b;
  }
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::vector<Permutation> parse_generator_images(
    std::string_view text, const std::vector<std::string>& names,
    std::size_t degree) {
  std::vector<std::string> cycles(names.size(), "()");
  std::vector<bool> given(names.size(), false);
  for (const auto& part : split_top_level(text, ',')) {
    const std::string item = trim(part);
    if (item.empty()) {
      continue;
    }
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error("expected 'generator:(cycles)' in quotient spec, got '" +
                  item + "'");
    }
    const std::string name = trim(item.substr(0, colon));
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw Error("unknown generator '" + name + "' in quotient spec");
    }
    const auto g = static_cast<std::size_t>(it - names.begin());
    if (given[g]) {
      throw Error("generator '" + name + "' assigned twice");
    }
    given[g] = true;
    cycles[g] = trim(item.substr(colon + 1));
  }
  std::vector<Permutation> images;
  for (const auto& c : cycles) {
    images.push_back(Permutation::parse(c));
    degree = std::max(degree, images.back().degree());
  }
  for (auto& im : images) {
    im = im.extended(degree);
  }
  return images;
}

FiniteQuotient parse_quotient_spec(std::string_view text,
                                   const std::vector<std::string>& names,
                                   std::size_t degree, std::size_t max_order) {
  auto images = parse_generator_images(text, names, degree);
  degree = images.empty() ? std::max<std::size_t>(degree, 1)
                          : images.front().degree();
  return FiniteQuotient(std::move(images), max_order, degree);
}

namespace {
constexpr std::size_t kCatalogOrderLimit = 100000;
}  // namespace

GroupCatalog::GroupCatalog(std::vector<CatalogGroup> groups)
    : groups_(std::move(groups)) {
  for (auto& g : groups_) {
    const FiniteQuotient closure(g.generators, kCatalogOrderLimit);
    if (g.order == 0) {
      g.order = closure.order();
    } else if (g.order != closure.order()) {
      throw Error("catalog group " + g.name + " declares order " +
                  std::to_string(g.order) + " but generates " +
                  std::to_string(closure.order()) + " elements");
    }
  }
}

GroupCatalog GroupCatalog::default_catalog() {
  std::vector<CatalogGroup> groups;
  auto add = [&](std::string name, std::size_t degree,
                 const std::vector<std::string>& gens, std::size_t order) {
    std::vector<Permutation> perms;
    for (const auto& g : gens) {
      perms.push_back(Permutation::parse(g, degree));
    }
    groups.push_back({std::move(name), std::move(perms), order});
  };
  for (std::uint32_t n = 2; n <= 12; ++n) {
    std::string cyc = "(";
    for (std::uint32_t i = 1; i <= n; ++i) {
      cyc += std::to_string(i) + (i == n ? ")" : " ");
    }
    add("C" + std::to_string(n), n, {cyc}, n);
  }
  add("C2xC2", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  add("C3xC3", 6, {"(1 2 3)", "(4 5 6)"}, 9);
  add("C5xC5", 10, {"(1 2 3 4 5)", "(6 7 8 9 10)"}, 25);
  add("D4", 4, {"(1 2 3 4)", "(1 3)"}, 8);
  add("D5", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}, 10);
  add("S3", 3, {"(1 2)", "(1 2 3)"}, 6);
  add("S4", 4, {"(1 2)", "(1 2 3 4)"}, 24);
  add("A4", 4, {"(1 2 3)", "(1 2)(3 4)"}, 12);
  return GroupCatalog(std::move(groups));
}

GroupCatalog GroupCatalog::parse_manifest(std::string_view text) {
  std::vector<CatalogGroup> groups;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string body = trim(line);
    if (body.empty()) {
      continue;
    }
    std::istringstream fields(body);
    CatalogGroup g;
    std::size_t degree = 0;
    if (!(fields >> g.name >> degree) || degree == 0) {
      throw Error("catalog line " + std::to_string(line_no) +
                  ": expected 'name degree perm ...'");
    }
    std::string rest;
    std::getline(fields, rest);
    for (const auto& perm : split_top_level(trim(rest), ' ')) {
      const std::string t = trim(perm);
      if (t.empty()) {
        continue;
      }
      Permutation p = Permutation::parse(t, degree);
      if (p.degree() > degree) {
        throw Error("catalog line " + std::to_string(line_no) +
                    ": point beyond declared degree");
      }
      g.generators.push_back(std::move(p));
    }
    groups.push_back(std::move(g));
  }
  return GroupCatalog(std::move(groups));
}

GroupCatalog GroupCatalog::restricted(std::size_t max_order) const {
  GroupCatalog out;
  for (const auto& g : groups_) {
    if (g.order <= max_order) {
      out.groups_.push_back(g);
    }
  }
  return out;
}

GroupCatalog GroupCatalog::subset(const std::vector<std::string>& names) const {
  GroupCatalog out;
  for (const auto& n : names) {
    const auto it = std::find_if(groups_.begin(), groups_.end(),
                                 [&](const CatalogGroup& g) { return g.name == n; });
    if (it == groups_.end()) {
      throw Error("no catalog group named '" + n + "'");
    }
    out.groups_.push_back(*it);
  }
  return out;
}

namespace {

// Odometer over assignments, last generator fastest.
bool next_assignment(std::vector<std::size_t>& choice,
                     std::vector<Permutation>& images,
                     const std::vector<Permutation>& elems) {
  for (std::size_t g = choice.size(); g-- > 0;) {
    if (++choice[g] < elems.size()) {
      images[g] = elems[choice[g]];
      return true;
    }
    choice[g] = 0;
    images[g] = elems[0];
  }
  return false;
}

}  // namespace

QuotientSearch for_each_quotient(
    const FinitePresentation& p, const GroupCatalog& catalog,
    const SearchBudget& budget,
    const std::function<bool(const FiniteQuotient&)>& visit) {
  QuotientSearch result;
  const std::size_t ngens = p.generator_count();
  std::set<std::vector<std::uint32_t>> seen;

  auto offer = [&](std::vector<Permutation> images, std::size_t degree) {
    FiniteQuotient q(std::move(images), budget.max_order, degree);
    if (!seen.insert(q.kernel_key()).second) {
      return true;
    }
    return visit(q);
  };

  if (!offer(std::vector<Permutation>(ngens, Permutation(1)), 1)) {
    return result;
  }

  for (const auto& group : catalog.groups()) {
    if (group.order > budget.max_order) {
      continue;
    }
    const FiniteQuotient whole(group.generators, group.order);
    const auto& elems = whole.elements();
    const std::size_t degree = whole.degree();
    std::vector<std::size_t> choice(ngens, 0);
    std::vector<Permutation> images(ngens, elems[0]);
    for (;;) {
      if (result.assignments_examined >= budget.max_assignments) {
        result.budget_exhausted = true;
        return result;
      }
      ++result.assignments_examined;
      bool killed = true;
      for (const Word& r : p.relators()) {
        Permutation acc(degree);
        for (const Run& run : r.runs()) {
          acc = acc * images[run.generator].pow(run.exponent);
        }
        if (!acc.is_identity()) {
          killed = false;
          break;
        }
      }
      if (killed && !offer(images, degree)) {
        return result;
      }
      if (!next_assignment(choice, images, elems)) {
        break;
      }
    }
  }
  return result;
}

QuotientSearch enumerate_quotients(const FinitePresentation& p,
                                   const GroupCatalog& catalog,
                                   const SearchBudget& budget) {
  std::vector<FiniteQuotient> found;
  QuotientSearch result =
      for_each_quotient(p, catalog, budget, [&](const FiniteQuotient& q) {
        found.push_back(q);
        return true;
      });
  result.quotients = std::move(found);
  return result;
}

}  // namespace pdef
