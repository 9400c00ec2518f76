#include "pdef/abelian.hpp"

#include <sstream>
#include <utility>

#include "pdef/error.hpp"

namespace pdef {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error("matrix entry count does not match its shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error("matrix shapes do not compose");
  }
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) {
    d.push_back(S(i, i));
  }
  return d;
}

namespace {

class SnfWork {
 public:
  explicit SnfWork(const IntMatrix& a)
      : s_(a), u_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())) {}

  SnfResult run() {
    const std::size_t m = s_.rows();
    const std::size_t n = s_.cols();
    for (std::size_t t = 0; t < m && t < n; ++t) {
      if (!move_smallest_to(t, t, m, t, n)) {
        break;
      }
      for (;;) {
        if (!clear_cross(t)) {
          move_smallest_in_cross(t);
          continue;
        }
        if (!fix_divisibility(t)) {
          break;
        }
      }
      if (s_(t, t) < 0) {
        negate_row(t);
      }
    }
    return {std::move(s_), std::move(u_), std::move(v_)};
  }

 private:
  // Smallest nonzero |entry| in rows [r0,r1) x cols [c0,c1) moved to (t,t).
  bool move_smallest_to(std::size_t t, std::size_t r0, std::size_t r1,
                        std::size_t c0, std::size_t c1) {
    bool found = false;
    std::size_t bi = 0;
    std::size_t bj = 0;
    BigInt best;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        if (s_(i, j) != 0 && (!found || abs(s_(i, j)) < best)) {
          found = true;
          best = abs(s_(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (found) {
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    return found;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t bi = t;
    std::size_t bj = t;
    BigInt best = abs(s_(t, t));
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (s_(i, t) != 0 && abs(s_(i, t)) < best) {
        best = abs(s_(i, t));
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (s_(t, j) != 0 && abs(s_(t, j)) < best) {
        best = abs(s_(t, j));
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // Reduces row t and column t modulo the pivot.  True when both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (s_(i, t) != 0) {
        const BigInt q = s_(i, t) / s_(t, t);
        add_row_multiple(i, t, -q);
        clear = clear && s_(i, t) == 0;
      }
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (s_(t, j) != 0) {
        const BigInt q = s_(t, j) / s_(t, t);
        add_col_multiple(j, t, -q);
        clear = clear && s_(t, j) == 0;
      }
    }
    return clear;
  }

  // If some later entry is not divisible by the pivot, fold its row into row
  // t and report that more work is needed.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(i, j) % s_(t, t) != 0) {
          add_row_multiple(t, i, 1);
          return true;
        }
      }
    }
    return false;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < s_.cols(); ++j) {
      std::swap(s_(a, j), s_(b, j));
    }
    for (std::size_t j = 0; j < u_.cols(); ++j) {
      std::swap(u_(a, j), u_(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < s_.rows(); ++i) {
      std::swap(s_(i, a), s_(i, b));
    }
    for (std::size_t i = 0; i < v_.rows(); ++i) {
      std::swap(v_(i, a), v_(i, b));
    }
  }

  // row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < s_.cols(); ++j) {
      s_(dst, j) += q * s_(src, j);
    }
    for (std::size_t j = 0; j < u_.cols(); ++j) {
      u_(dst, j) += q * u_(src, j);
    }
  }

  // col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < s_.rows(); ++i) {
      s_(i, dst) += q * s_(i, src);
    }
    for (std::size_t i = 0; i < v_.rows(); ++i) {
      v_(i, dst) += q * v_(i, src);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < s_.cols(); ++j) {
      s_(r, j) = -s_(r, j);
    }
    for (std::size_t j = 0; j < u_.cols(); ++j) {
      u_(r, j) = -u_(r, j);
    }
  }

  IntMatrix s_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) { return SnfWork(a).run(); }

std::vector<BigInt> exponent_vector(const Word& w) {
  std::vector<BigInt> v(w.alphabet_size());
  for (const Run& r : w.runs()) {
    v[r.generator] += r.exponent;
  }
  return v;
}

IntMatrix exponent_matrix(const FinitePresentation& p) {
  IntMatrix m(p.generator_count(), p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const auto v = exponent_vector(p.relators()[j]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      m(i, j) = v[i];
    }
  }
  return m;
}

AbelianInvariants invariants_from_relation_matrix(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const BigInt& d : snf.diagonal()) {
    if (d != 0) {
      ++nonzero;
      if (d > 1) {
        inv.divisors.push_back(d);
      }
    }
  }
  inv.rank = m.rows() - nonzero;
  return inv;
}

AbelianInvariants abelian_invariants(const FinitePresentation& p) {
  return invariants_from_relation_matrix(exponent_matrix(p));
}

Valuation nu_p_vector(const std::vector<BigInt>& v, std::uint64_t p) {
  require_prime(p);
  bool any = false;
  std::uint64_t best = 0;
  for (const BigInt& x : v) {
    if (x == 0) {
      continue;
    }
    const auto k = nu_p_int(x, p);
    if (!any || k < best) {
      best = k;
    }
    any = true;
  }
  return any ? Valuation(best) : Valuation::infinite();
}

Rational abelian_p_deficiency_presentation(const FinitePresentation& p,
                                           std::uint64_t prime) {
  require_prime(prime);
  Rational de = static_cast<std::int64_t>(p.generator_count()) - 1;
  for (const Word& r : p.relators()) {
    de -= nu_p_vector(exponent_vector(r), prime).weight(prime);
  }
  return de;
}

Rational abelian_p_deficiency_group(const AbelianInvariants& inv,
                                    std::uint64_t prime) {
  require_prime(prime);
  Rational de = static_cast<std::int64_t>(inv.rank) - 1;
  for (const BigInt& d : inv.divisors) {
    de += 1 - inverse_power(prime, nu_p_int(d, prime));
  }
  return de;
}

Rational upper_bound_de(const FinitePresentation& p, std::uint64_t prime) {
  return abelian_p_deficiency_group(abelian_invariants(p), prime);
}

std::size_t d_p(const AbelianInvariants& inv, std::uint64_t prime) {
  require_prime(prime);
  std::size_t n = inv.rank;
  for (const BigInt& d : inv.divisors) {
    if (d % prime == 0) {
      ++n;
    }
  }
  return n;
}

std::string format_invariants(const AbelianInvariants& inv) {
  std::ostringstream out;
  bool first = true;
  for (const BigInt& d : inv.divisors) {
    out << (first ? "" : " + ") << "C" << d;
    first = false;
  }
  if (inv.rank > 0) {
    out << (first ? "" : " + ") << "Z";
    if (inv.rank > 1) {
      out << "^" << inv.rank;
    }
    first = false;
  }
  if (first) {
    out << "1";
  }
  return out.str();
}

}  // namespace pdef
