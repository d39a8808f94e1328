#pragma once

// Exact linear algebra over Z. Matrices act on column vectors: the image of
// the i-th basis vector is column i.

#include "relfree/arith.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace relfree {

using IntVector = std::vector<Integer>;

inline IntVector to_integers(const ExponentVector& v) { return IntVector(v.begin(), v.end()); }

/// Square n×n integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("matrix must be square");
      std::size_t j = 0;
      for (long long x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix diagonal(const IntVector& d) {
    IntMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Companion matrix of a monic polynomial: ones on the subdiagonal, last
  /// column -c_0..-c_{n-1}. Its characteristic polynomial is p.
  static IntMatrix companion(const IntPolynomial& p) {
    if (p.degree() < 1 || p.leading() != 1) throw std::domain_error("companion matrix needs a monic polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(p.degree());
    IntMatrix m(n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coefficient(i);
    return m;
  }
  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IntMatrix m(n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(off + i, off + j) = b(i, j);
      off += b.size();
    }
    return m;
  }

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  IntMatrix transposed() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    a.check_same(b);
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
    if (v.size() != a.n_) throw std::invalid_argument("vector length does not match matrix size");
    IntVector out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Row-semicolon form `0,-1;1,3`.
  std::string to_compact() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) os << ';';
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) os << ',';
        os << (*this)(i, j);
      }
    }
    return os.str();
  }

  /// Parses the row-semicolon form; whitespace around entries is ignored.
  static IntMatrix parse_compact(std::string_view text) {
    std::vector<IntVector> rows;
    std::size_t pos = 0;
    while (true) {
      std::size_t end = text.find(';', pos);
      std::string_view row = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      IntVector r;
      std::size_t p = 0;
      while (true) {
        std::size_t comma = row.find(',', p);
        std::string cell(row.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p));
        auto b = cell.find_first_not_of(" \t");
        auto e = cell.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty matrix entry in \"" + std::string(text) + "\"");
        cell = cell.substr(b, e - b + 1);
        std::size_t digits = (cell[0] == '-' || cell[0] == '+') ? 1 : 0;
        if (digits == cell.size() || cell.find_first_not_of("0123456789", digits) != std::string::npos)
          throw std::invalid_argument("bad matrix entry \"" + cell + "\"");
        r.emplace_back(cell[0] == '+' ? cell.substr(1) : cell);
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
      rows.push_back(std::move(r));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    for (const auto& r : rows)
      if (r.size() != rows.size()) throw std::invalid_argument("matrix must be square");
    return from_rows(rows);
  }

 private:
  void check_same(const IntMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix sizes differ");
  }

  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << '[' << m.to_compact() << ']'; }

namespace detail {
inline IntMatrix power_nonnegative(IntMatrix base, std::uint64_t e) {
  IntMatrix result = IntMatrix::identity(base.size());
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}
}  // namespace detail

/// Exact determinant by Bareiss fraction-free elimination.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// det(x·I - M) by Faddeev–LeVerrier; every division is exact over Z.
inline IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix work(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * work;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    work = std::move(next);
    Integer t = (m * work).trace();
    if (t % k != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
    c[n - k] = -t / k;
  }
  return IntPolynomial(std::move(c));
}

/// U·M·V = S with U, V unimodular and S diagonal.
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  IntVector invariant_factors() const {
    IntVector d(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) d[i] = S(i, i);
    return d;
  }
};

/// Smith normal form by gcd-driven row/column reduction. The pivot is always
/// an entry of minimal absolute value in the active block.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(i, c), a(j, c));
      std::swap(u(i, c), u(j, c));
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a(r, i), a(r, j));
      std::swap(v(r, i), v(r, j));
    }
  };
  // row i -= q·row j
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) {
      a(i, c) -= q * a(j, c);
      u(i, c) -= q * u(j, c);
    }
  };
  // col i -= q·col j
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < n; ++r) {
      a(r, i) -= q * a(r, j);
      v(r, i) -= q * v(r, j);
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // minimal nonzero entry of the active block
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) best = {i, j};
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < n && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(t, *bad_row, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) {
        a(t, c) = -a(t, c);
        u(t, c) = -u(t, c);
      }
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

/// Index of a sublattice of Z^n: a positive integer or infinite.
class LatticeIndex {
 public:
  static LatticeIndex infinite() { return LatticeIndex(); }
  static LatticeIndex finite(Integer value) {
    if (value <= 0) throw std::domain_error("finite lattice index must be positive");
    return LatticeIndex(std::move(value));
  }

  bool is_finite() const { return value_.has_value(); }
  const Integer& value() const {
    if (!value_) throw std::domain_error("lattice index is infinite");
    return *value_;
  }
  std::string to_string() const { return value_ ? value_->str() : std::string("INFINITE"); }

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;

 private:
  LatticeIndex() = default;
  explicit LatticeIndex(Integer v) : value_(std::move(v)) {}

  std::optional<Integer> value_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticeIndex& idx) { return os << idx.to_string(); }

/// Index of the column span of M in Z^n, cross-checked between |det M| and
/// the product of invariant factors.
inline LatticeIndex lattice_index(const IntMatrix& m) {
  const Integer det = determinant(m);
  const SmithDecomposition snf = smith_normal_form(m);
  Integer product = 1;
  for (const auto& d : snf.invariant_factors()) product *= d;
  if (product != abs(det)) throw std::logic_error("lattice index: invariant factors disagree with determinant");
  if (det == 0) return LatticeIndex::infinite();
  return LatticeIndex::finite(abs(det));
}

// ---------------------------------------------------------------------------
// Elementary decomposition of unimodular matrices.

struct AddRowMove {
  std::size_t target;  // row i
  std::size_t source;  // row j
  Integer factor;      // c
  friend bool operator==(const AddRowMove&, const AddRowMove&) = default;
};
struct SwapRowsMove {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const SwapRowsMove&, const SwapRowsMove&) = default;
};
struct NegateRowMove {
  std::size_t row;
  friend bool operator==(const NegateRowMove&, const NegateRowMove&) = default;
};

/// Elementary move; row indices are 0-based.
using ElementaryMove = std::variant<AddRowMove, SwapRowsMove, NegateRowMove>;

/// The elementary matrix of a move: I + c·e_ij, a transposition, or diag(..,-1,..).
inline IntMatrix elementary_matrix(std::size_t n, const ElementaryMove& move) {
  IntMatrix e = IntMatrix::identity(n);
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, AddRowMove>) {
          e(mv.target, mv.source) = mv.factor;
        } else if constexpr (std::is_same_v<T, SwapRowsMove>) {
          e(mv.first, mv.first) = 0;
          e(mv.second, mv.second) = 0;
          e(mv.first, mv.second) = 1;
          e(mv.second, mv.first) = 1;
        } else {
          e(mv.row, mv.row) = -1;
        }
      },
      move);
  return e;
}

inline ElementaryMove inverse_move(const ElementaryMove& move) {
  if (const auto* add = std::get_if<AddRowMove>(&move)) return AddRowMove{add->target, add->source, -add->factor};
  return move;
}

inline std::string to_string(const ElementaryMove& move) {
  std::ostringstream os;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, AddRowMove>)
          os << "add " << mv.factor << " x row" << mv.source + 1 << " to row" << mv.target + 1;
        else if constexpr (std::is_same_v<T, SwapRowsMove>)
          os << "swap row" << mv.first + 1 << " row" << mv.second + 1;
        else
          os << "negate row" << mv.row + 1;
      },
      move);
  return os.str();
}

/// Ordered moves whose elementary matrices multiply, left to right, to the source.
struct ElementarySequence {
  std::size_t n = 0;
  std::vector<ElementaryMove> moves;

  IntMatrix product() const {
    IntMatrix p = IntMatrix::identity(n);
    for (const auto& mv : moves) p = p * elementary_matrix(n, mv);
    return p;
  }
};

namespace detail {

/// Row-reduces a unimodular matrix to the identity with Euclidean steps,
/// reporting every applied row operation in order.
template <class OnMove>
void reduce_unimodular_to_identity(IntMatrix a, OnMove&& on_move) {
  const std::size_t n = a.size();
  auto apply = [&](const ElementaryMove& mv) {
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, AddRowMove>) {
            for (std::size_t c = 0; c < n; ++c) a(m.target, c) += m.factor * a(m.source, c);
          } else if constexpr (std::is_same_v<T, SwapRowsMove>) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(m.first, c), a(m.second, c));
          } else {
            for (std::size_t c = 0; c < n; ++c) a(m.row, c) = -a(m.row, c);
          }
        },
        mv);
    on_move(mv);
  };
  // nearest-integer quotient keeps the factors small
  auto round_div = [](const Integer& x, const Integer& y) {
    Integer q = floor_div(x, y);
    if (abs(x - (q + 1) * y) < abs(x - q * y)) ++q;
    return q;
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::optional<std::size_t> pivot;
      std::size_t nonzero = 0;
      for (std::size_t i = t; i < n; ++i) {
        if (a(i, t) == 0) continue;
        ++nonzero;
        if (!pivot || abs(a(i, t)) < abs(a(*pivot, t))) pivot = i;
      }
      if (!pivot) throw std::logic_error("elementary decomposition: singular column");
      if (nonzero == 1) {
        if (*pivot != t) apply(SwapRowsMove{t, *pivot});
        break;
      }
      for (std::size_t i = t; i < n; ++i) {
        if (i == *pivot || a(i, t) == 0) continue;
        apply(AddRowMove{i, *pivot, -round_div(a(i, t), a(*pivot, t))});
      }
    }
    if (abs(a(t, t)) != 1) throw std::logic_error("elementary decomposition: pivot is not a unit");
  }
  for (std::size_t t = 0; t < n; ++t)
    if (a(t, t) == -1) apply(NegateRowMove{t});
  for (std::size_t t = n; t-- > 0;)
    for (std::size_t i = 0; i < t; ++i)
      if (a(i, t) != 0) apply(AddRowMove{i, t, -a(i, t)});
}

inline void require_unimodular(const IntMatrix& m, const char* what) {
  Integer det = determinant(m);
  if (abs(det) != 1)
    throw std::domain_error(std::string(what) + ": matrix is not unimodular (|det| = " + abs(det).str() + ")");
}

}  // namespace detail

/// Writes a unimodular M as a product of elementary matrices. The result is
/// not canonical; only product() == M is guaranteed.
inline ElementarySequence elementary_decomposition(const IntMatrix& m) {
  detail::require_unimodular(m, "elementary_decomposition");
  // E_r···E_1·M = I, hence M = E_1^-1···E_r^-1
  ElementarySequence seq{m.size(), {}};
  detail::reduce_unimodular_to_identity(m, [&](const ElementaryMove& mv) { seq.moves.push_back(inverse_move(mv)); });
  if (seq.product() != m) throw std::logic_error("elementary decomposition does not reproduce its input");
  return seq;
}

/// Inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  detail::require_unimodular(m, "unimodular_inverse");
  const std::size_t n = m.size();
  IntMatrix inv = IntMatrix::identity(n);
  detail::reduce_unimodular_to_identity(m, [&](const ElementaryMove& mv) { inv = elementary_matrix(n, mv) * inv; });
  return inv;
}

/// M^e for any integer e; negative powers need |det M| = 1.
inline IntMatrix matrix_power(const IntMatrix& m, std::int64_t e) {
  if (e >= 0) return detail::power_nonnegative(m, static_cast<std::uint64_t>(e));
  return detail::power_nonnegative(unimodular_inverse(m), static_cast<std::uint64_t>(-e));
}

}  // namespace relfree
