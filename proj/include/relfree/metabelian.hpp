#pragma once

// Magnus representation of the free metabelian group M_n = F_n/F_n'' and of
// M_{k,n} = F_n/(F_n')^k F_n''. An element is the pair (abelianization, Fox
// derivatives evaluated in Z[A_n] or Z_k[A_n]); two words are equal in the
// group iff their pairs are equal.

#include "relfree/arith.hpp"
#include "relfree/words.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace relfree {

namespace detail {
inline void require_group_modulus(std::int64_t modulus) {
  if (modulus < 0) throw std::domain_error("modulus must be nonnegative");
  if (modulus == 1) throw std::domain_error("modulus 1 collapses M_{k,n} to A_n; use 0 or k >= 2");
}
}  // namespace detail

/// Fox derivatives ∂w/∂x_1..∂w/∂x_n pushed into the group ring of A_n,
/// reduced mod k when k >= 2.
inline std::vector<LaurentPolynomial> fox_derivatives(const Word& w, std::int64_t modulus) {
  detail::require_group_modulus(modulus);
  const std::size_t n = w.rank();
  std::vector<LaurentPolynomial> fox(n, LaurentPolynomial(n, modulus));
  ExponentVector prefix(n, 0);
  for (const Letter& l : w.letters()) {
    const std::size_t i = l.generator - 1;
    if (l.sign > 0) {
      fox[i].add_term(prefix, 1);
      prefix[i] += 1;
    } else {
      // ∂(u x_i^-1)/∂x_i = ∂u/∂x_i - ū t_i^-1
      prefix[i] -= 1;
      fox[i].add_term(prefix, -1);
    }
  }
  return fox;
}

class MagnusElement {
 public:
  MagnusElement(std::size_t rank, std::int64_t modulus)
      : rank_(rank), modulus_(modulus), ab_(rank, 0), fox_(rank, LaurentPolynomial(rank, modulus)) {
    detail::require_group_modulus(modulus);
  }
  MagnusElement(ExponentVector ab, std::vector<LaurentPolynomial> fox, std::int64_t modulus)
      : rank_(ab.size()), modulus_(modulus), ab_(std::move(ab)), fox_(std::move(fox)) {
    detail::require_group_modulus(modulus);
    if (fox_.size() != rank_) throw std::invalid_argument("Fox vector length does not match rank");
    for (const auto& f : fox_)
      if (f.rank() != rank_ || f.modulus() != modulus_)
        throw std::invalid_argument("Fox coordinate has wrong rank or modulus");
  }

  static MagnusElement identity(std::size_t rank, std::int64_t modulus) { return MagnusElement(rank, modulus); }

  std::size_t rank() const { return rank_; }
  std::int64_t modulus() const { return modulus_; }
  const ExponentVector& ab() const { return ab_; }
  const std::vector<LaurentPolynomial>& fox() const { return fox_; }

  bool is_identity() const {
    for (auto e : ab_)
      if (e != 0) return false;
    for (const auto& f : fox_)
      if (!f.is_zero()) return false;
    return true;
  }

  /// (a, f)(a', f') = (a + a', f + t^a·f')
  friend MagnusElement operator*(const MagnusElement& x, const MagnusElement& y) {
    if (x.rank_ != y.rank_ || x.modulus_ != y.modulus_)
      throw std::invalid_argument("Magnus elements from different groups");
    MagnusElement z(x);
    for (std::size_t i = 0; i < x.rank_; ++i) {
      z.ab_[i] += y.ab_[i];
      z.fox_[i] += y.fox_[i].shifted(x.ab_);
    }
    return z;
  }

  MagnusElement inverse() const {
    ExponentVector neg(rank_);
    for (std::size_t i = 0; i < rank_; ++i) neg[i] = -ab_[i];
    std::vector<LaurentPolynomial> fox;
    fox.reserve(rank_);
    for (const auto& f : fox_) fox.push_back(-f.shifted(neg));
    return MagnusElement(std::move(neg), std::move(fox), modulus_);
  }

  /// Σ_i fox_i·(t_i - 1) == t^ab - 1
  bool satisfies_fox_identity() const {
    LaurentPolynomial lhs(rank_, modulus_);
    const auto one = LaurentPolynomial::constant(rank_, 1, modulus_);
    for (std::size_t i = 0; i < rank_; ++i)
      lhs += fox_[i] * (LaurentPolynomial::variable(rank_, i + 1, modulus_) - one);
    return lhs == LaurentPolynomial::monomial(ab_, 1, modulus_) - one;
  }

  friend bool operator==(const MagnusElement&, const MagnusElement&) = default;

 private:
  std::size_t rank_;
  std::int64_t modulus_;
  ExponentVector ab_;
  std::vector<LaurentPolynomial> fox_;
};

/// Canonical form of the image of w in M_n (modulus 0) or M_{k,n}.
inline MagnusElement magnus(const Word& w, std::int64_t modulus) {
  return MagnusElement(abelianize(w), fox_derivatives(w, modulus), modulus);
}

struct VerbalVerdict {
  bool in_subgroup = true;
  /// abelianization is nonzero
  bool abelianization_nonzero = false;
  /// first generator (1-based) whose Fox coordinate survives
  std::optional<std::uint32_t> failing_coordinate;
};

/// Whether w lies in F_n'' (modulus 0) or in (F_n')^k F_n'' (modulus k), i.e.
/// whether w is trivial in M_n resp. M_{k,n}.
inline VerbalVerdict is_trivial(const Word& w, std::int64_t modulus) {
  const MagnusElement e = magnus(w, modulus);
  VerbalVerdict v;
  for (auto a : e.ab())
    if (a != 0) v.abelianization_nonzero = true;
  for (std::size_t i = 0; i < e.rank(); ++i)
    if (!e.fox()[i].is_zero()) {
      v.failing_coordinate = static_cast<std::uint32_t>(i + 1);
      break;
    }
  v.in_subgroup = !v.abelianization_nonzero && !v.failing_coordinate;
  return v;
}

/// Some generator x_i with [w, x_i] != 1 in M_n; exists since Z(M_n) = 1 for n >= 2.
inline std::uint32_t center_witness(const Word& w) {
  const std::size_t n = w.rank();
  if (n < 2) throw std::domain_error("center_witness: M_1 = Z is abelian");
  if (is_trivial(w, 0).in_subgroup) throw std::domain_error("center_witness: word is trivial in M_n");
  for (std::uint32_t i = 1; i <= n; ++i)
    if (!is_trivial(commutator(w, Word::generator(n, i)), 0).in_subgroup) return i;
  throw std::logic_error("center_witness: nontrivial central element found in M_n");
}

}  // namespace relfree
