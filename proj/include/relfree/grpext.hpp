#pragma once

// Element arithmetic in Z_k wr Z and in B_φ = Z^n ⋊_φ Z.
//
// Wreath product law: (f, s)(g, t) = (f + g(· - s), s + t), so a shift by s
// moves the support of g up by s. Commutators are [u, v] = u^-1 v^-1 u v
// throughout, matching the word grammar.

#include "relfree/arith.hpp"
#include "relfree/intlinalg.hpp"
#include "relfree/words.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace relfree {

class WreathElement {
 public:
  using Support = std::map<std::int64_t, std::int64_t>;

  explicit WreathElement(std::int64_t k) : k_(k) {
    if (k < 2) throw std::domain_error("wreath product base exponent must be at least 2");
  }
  WreathElement(std::int64_t k, const Support& support, std::int64_t shift) : WreathElement(k) {
    for (const auto& [p, r] : support) add_at(p, r);
    shift_ = shift;
  }

  static WreathElement identity(std::int64_t k) { return WreathElement(k); }
  /// a = (δ_0, 0), the generator of the base at position 0.
  static WreathElement base_generator(std::int64_t k) { return WreathElement(k, {{0, 1}}, 0); }
  /// b = (0, 1), the generator of the top group.
  static WreathElement shift_generator(std::int64_t k) { return WreathElement(k, {}, 1); }

  std::int64_t k() const { return k_; }
  std::int64_t shift() const { return shift_; }
  /// Nonzero residues in [1, k-1] by position.
  const Support& support() const { return support_; }
  bool is_identity() const { return shift_ == 0 && support_.empty(); }

  friend WreathElement operator*(const WreathElement& x, const WreathElement& y) {
    if (x.k_ != y.k_) throw std::invalid_argument("wreath elements with different base exponents");
    WreathElement z(x);
    for (const auto& [p, r] : y.support_) z.add_at(p + x.shift_, r);
    z.shift_ += y.shift_;
    return z;
  }

  /// (f, s)^-1 = (-f(· + s), -s)
  WreathElement inverse() const {
    WreathElement z(k_);
    for (const auto& [p, r] : support_) z.add_at(p - shift_, -r);
    z.shift_ = -shift_;
    return z;
  }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  void add_at(std::int64_t pos, std::int64_t r) {
    std::int64_t& slot = support_[pos];
    slot = ((slot + r) % k_ + k_) % k_;
    if (slot == 0) support_.erase(pos);
  }

  std::int64_t k_;
  Support support_;
  std::int64_t shift_ = 0;
};

inline WreathElement wreath_mul(const WreathElement& a, const WreathElement& b) { return a * b; }

inline WreathElement commutator(const WreathElement& u, const WreathElement& v) {
  return u.inverse() * v.inverse() * u * v;
}

/// c_1 = a, c_{j+1} = [c_j, b]. Every intermediate term is checked to be
/// nontrivial, witnessing that the lower central series of Z_k wr Z does not
/// reach 1 within `depth` steps.
inline WreathElement lcs_witness(std::int64_t k, std::int64_t depth) {
  if (depth < 1) throw std::domain_error("lcs_witness: depth must be positive");
  const WreathElement b = WreathElement::shift_generator(k);
  WreathElement c = WreathElement::base_generator(k);
  for (std::int64_t j = 1; j < depth; ++j) {
    c = commutator(c, b);
    if (c.is_identity()) throw std::logic_error("lcs_witness: iterated commutator became trivial");
  }
  return c;
}

/// Image of w under x1 -> a, x2 -> b, x_i -> 1 (i >= 3). Factors through M_{k,n}.
inline WreathElement eval_in_wreath(const Word& w, std::int64_t k) {
  if (w.rank() < 2) throw std::domain_error("eval_in_wreath: word rank must be at least 2");
  const WreathElement a = WreathElement::base_generator(k);
  const WreathElement b = WreathElement::shift_generator(k);
  const WreathElement images[2][2] = {{a.inverse(), a}, {b.inverse(), b}};
  WreathElement out = WreathElement::identity(k);
  for (const Letter& l : w.letters()) {
    if (l.generator > 2) continue;
    out = out * images[l.generator - 1][l.sign > 0 ? 1 : 0];
  }
  return out;
}

/// Element (v, φ^i) of Z^n ⋊ ⟨φ⟩ with law (v, i)(w, j) = (v + φ^i w, i + j).
class SemidirectElement {
 public:
  SemidirectElement(std::shared_ptr<const IntMatrix> phi, IntVector v, std::int64_t power)
      : phi_(std::move(phi)), v_(std::move(v)), power_(power) {
    if (!phi_) throw std::invalid_argument("semidirect element needs an automorphism");
    if (v_.size() != phi_->size()) throw std::invalid_argument("vector length does not match automorphism size");
  }
  SemidirectElement(const IntMatrix& phi, IntVector v, std::int64_t power)
      : SemidirectElement(make_automorphism(phi), std::move(v), power) {}

  /// Shares a validated (unimodular) automorphism between elements.
  static std::shared_ptr<const IntMatrix> make_automorphism(const IntMatrix& phi) {
    detail::require_unimodular(phi, "semidirect product");
    return std::make_shared<const IntMatrix>(phi);
  }
  static SemidirectElement identity(std::shared_ptr<const IntMatrix> phi) {
    const std::size_t n = phi->size();
    return SemidirectElement(std::move(phi), IntVector(n), 0);
  }

  const IntMatrix& matrix() const { return *phi_; }
  const std::shared_ptr<const IntMatrix>& automorphism() const { return phi_; }
  const IntVector& vector() const { return v_; }
  std::int64_t power() const { return power_; }
  bool is_identity() const {
    if (power_ != 0) return false;
    for (const auto& x : v_)
      if (x != 0) return false;
    return true;
  }

  friend SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y) {
    x.check_same(y);
    IntVector moved = matrix_power(*x.phi_, x.power_) * std::span<const Integer>(y.v_);
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += x.v_[i];
    return SemidirectElement(x.phi_, std::move(moved), x.power_ + y.power_);
  }

  /// (v, i)^-1 = (-φ^-i v, -i)
  SemidirectElement inverse() const {
    IntVector w = matrix_power(*phi_, -power_) * std::span<const Integer>(v_);
    for (auto& x : w) x = -x;
    return SemidirectElement(phi_, std::move(w), -power_);
  }

  friend bool operator==(const SemidirectElement& x, const SemidirectElement& y) {
    return *x.phi_ == *y.phi_ && x.v_ == y.v_ && x.power_ == y.power_;
  }

 private:
  void check_same(const SemidirectElement& o) const {
    if (phi_ != o.phi_ && !(*phi_ == *o.phi_))
      throw std::invalid_argument("semidirect elements over different automorphisms");
  }

  std::shared_ptr<const IntMatrix> phi_;
  IntVector v_;
  std::int64_t power_;
};

inline SemidirectElement semidirect_mul(const SemidirectElement& a, const SemidirectElement& b) { return a * b; }

inline SemidirectElement semidirect_commutator(const SemidirectElement& a, const SemidirectElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Index in Z^n of the lattice spanned by the group commutators
/// [(m·e_i, 0), (0, k)] = ((φ^-k - I)·m·e_i, 0), i = 1..n.
inline LatticeIndex commutator_lattice_index(const IntMatrix& phi, std::int64_t m, std::int64_t k) {
  if (m <= 0 || k <= 0) throw std::domain_error("commutator_lattice_index: m and k must be positive");
  auto aut = SemidirectElement::make_automorphism(phi);
  const std::size_t n = phi.size();
  const SemidirectElement top(aut, IntVector(n), k);
  IntMatrix gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = m;
    const SemidirectElement c = semidirect_commutator(SemidirectElement(aut, std::move(v), 0), top);
    if (c.power() != 0) throw std::logic_error("commutator left the base group");
    for (std::size_t r = 0; r < n; ++r) gens(r, i) = c.vector()[r];
  }
  return lattice_index(gens);
}

}  // namespace relfree
