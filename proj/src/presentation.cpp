#include "pdef/presentation.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "pdef/error.hpp"

namespace pdef {

FinitePresentation::FinitePresentation(std::vector<std::string> generator_names,
                                       std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw Error("duplicate generator name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].alphabet_size() != names_.size()) {
      throw Error("relator " + std::to_string(i + 1) +
                  " is over the wrong alphabet");
    }
    if (relators_[i].is_identity()) {
      throw Error("relator " + std::to_string(i + 1) +
                  " freely reduces to the identity");
    }
  }
}

FinitePresentation FinitePresentation::free(
    std::vector<std::string> generator_names) {
  return FinitePresentation(std::move(generator_names), {});
}

FinitePresentation FinitePresentation::with_default_names(
    std::size_t n, std::vector<Word> relators) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* const short_names[] = {"x", "y", "z"};
    names.assign(short_names, short_names + n);
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("x" + std::to_string(i));
    }
  }
  return FinitePresentation(std::move(names), std::move(relators));
}

std::uint32_t FinitePresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<std::uint32_t>(i);
    }
  }
  throw Error("unknown generator '" + std::string(name) + "'");
}

FinitePresentation FinitePresentation::with_relators(
    const std::vector<Word>& extra) const {
  auto rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return FinitePresentation(names_, std::move(rels));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FinitePresentation presentation() {
    expect('<');
    std::vector<std::string> names;
    skip_space();
    if (peek() != '|') {
      names.push_back(identifier());
      while (accept(',')) {
        names.push_back(identifier());
      }
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) {
        throw ParseError("duplicate generator '" + n + "'", pos_);
      }
    }
    names_ = &names;
    expect('|');
    std::vector<Word> relators;
    skip_space();
    while (peek() != '>') {
      chain(relators);
      if (!accept(',') && !accept(';')) {
        break;
      }
      skip_space();
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input", pos_);
    }
    return FinitePresentation(std::move(names), std::move(relators));
  }

  Word lone_word(const std::vector<std::string>& names) {
    names_ = &names;
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input", pos_);
    }
    return w;
  }

 private:
  struct Term {
    Word word;
    bool literal_one = false;
    std::size_t position = 0;
  };

  void chain(std::vector<Word>& out) {
    std::vector<Term> terms;
    terms.push_back(term());
    while (accept('=')) {
      terms.push_back(term());
    }
    auto add = [&](Word w, std::size_t position) {
      if (w.is_identity()) {
        throw ParseError("trivial relator", position);
      }
      out.push_back(std::move(w));
    };
    if (terms.size() > 1 && terms.back().literal_one) {
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        add(terms[i].word, terms[i].position);
      }
    } else if (terms.size() == 1) {
      add(terms[0].word, terms[0].position);
    } else {
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        add(terms[i].word * terms[i + 1].word.inverse(), terms[i].position);
      }
    }
  }

  Term term() {
    skip_space();
    Term t;
    t.position = pos_;
    const std::size_t before = pos_;
    if (peek() == '1') {
      ++pos_;
      skip_space();
      const char c = peek();
      if (c == '=' || c == ',' || c == ';' || c == '>' || c == '\0') {
        t.word = Word(names_->size());
        t.literal_one = true;
        return t;
      }
      pos_ = before;
    }
    t.word = word();
    return t;
  }

  Word word() {
    Word w = factor();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        w = w * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
                 c == '[' || c == '1') {
        w = w * factor();
      } else {
        return w;
      }
    }
  }

  Word factor() {
    skip_space();
    const std::size_t start = pos_;
    Word base(names_->size());
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = word();
      expect(')');
    } else if (c == '[') {
      ++pos_;
      const Word a = word();
      expect(',');
      const Word b = word();
      expect(']');
      base = a * b * a.inverse() * b.inverse();
    } else if (c == '1') {
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      std::uint32_t index = 0;
      bool found = false;
      for (std::size_t i = 0; i < names_->size(); ++i) {
        if ((*names_)[i] == name) {
          index = static_cast<std::uint32_t>(i);
          found = true;
        }
      }
      if (!found) {
        throw ParseError("unknown generator '" + name + "'", start);
      }
      base = Word::generator(names_->size(), index);
    } else {
      throw ParseError(c == '\0' ? "unexpected end of input"
                                 : std::string("unexpected '") + c + "'",
                       pos_);
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') {
      ++pos_;
    }
    while (std::isdigit(static_cast<unsigned char>(raw()))) {
      ++pos_;
    }
    std::string digits(text_.substr(start, pos_ - start));
    if (!digits.empty() && digits[0] == '+') {
      digits.erase(0, 1);
    }
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    const auto res = std::from_chars(first, last, value);
    if (digits.empty() || res.ec != std::errc() || res.ptr != last) {
      throw ParseError("expected integer exponent", start);
    }
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected identifier", pos_);
    }
    while (std::isalnum(static_cast<unsigned char>(raw())) || raw() == '_') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      throw ParseError(std::string("expected '") + c + "'" +
                           (got == '\0' ? " before end of input"
                                        : std::string(", found '") + got + "'"),
                       pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* names_ = nullptr;
};

void format_runs(std::ostringstream& out, std::span<const Run> runs,
                 const std::vector<std::string>& names) {
  bool first = true;
  for (const Run& r : runs) {
    if (!first) {
      out << '*';
    }
    first = false;
    out << names.at(r.generator);
    if (r.exponent != 1) {
      out << '^' << r.exponent;
    }
  }
}

}  // namespace

FinitePresentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(std::string_view text,
                const std::vector<std::string>& generator_names) {
  return Parser(text).lone_word(generator_names);
}

std::string format_word(const Word& w,
                        const std::vector<std::string>& generator_names) {
  if (w.is_identity()) {
    return "1";
  }
  std::ostringstream out;
  // Print plain powers of multi-run words as (u)^m.
  const RootDecomposition rd = maximal_root(w);
  if (rd.conjugator.is_identity() && rd.exponent > 1 &&
      rd.root.runs().size() > 1) {
    out << '(';
    format_runs(out, rd.root.runs(), generator_names);
    out << ")^" << rd.exponent;
    return out.str();
  }
  format_runs(out, w.runs(), generator_names);
  return out.str();
}

std::string format_presentation(const FinitePresentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out << (i ? ", " : "") << p.generator_names()[i];
  }
  out << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out << (i ? ", " : " ") << format_word(p.relators()[i], p.generator_names());
  }
  out << " >";
  return out.str();
}

Rational p_deficiency(const FinitePresentation& p, std::uint64_t prime) {
  require_prime(prime);
  Rational de = static_cast<std::int64_t>(p.generator_count()) - 1;
  for (const Word& r : p.relators()) {
    de -= nu_p(r, prime).weight(prime);
  }
  return de;
}

FinitePresentation power_up(const FinitePresentation& p, std::int64_t n) {
  if (n < 2) {
    throw Error("power_up needs an exponent of at least 2");
  }
  if (p.relators().empty()) {
    throw Error("power_up needs at least one relator");
  }
  std::vector<Word> rels;
  rels.reserve(p.relators().size());
  for (const Word& r : p.relators()) {
    rels.push_back(r.pow(n));
  }
  return FinitePresentation(p.generator_names(), std::move(rels));
}

FinitePresentation p_prime_root_presentation(const FinitePresentation& p,
                                             std::uint64_t prime) {
  std::vector<Word> rels;
  rels.reserve(p.relators().size());
  for (const Word& r : p.relators()) {
    rels.push_back(p_prime_root(r, prime).root);
  }
  return FinitePresentation(p.generator_names(), std::move(rels));
}

}  // namespace pdef
