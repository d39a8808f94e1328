#pragma once

// Lifting automorphisms of A_n = Z^n to automorphisms of F_n through Nielsen
// moves. Under the column convention an elementary matrix I + c·e_ij has
// column j equal to e_j + c·e_i, so it lifts to x_j -> x_j x_i^c.

#include "relfree/intlinalg.hpp"
#include "relfree/words.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relfree {

/// Endomorphism of F_n given by the images of x_1..x_n.
struct EndomorphismWords {
  std::size_t rank = 0;
  std::vector<Word> images;

  static EndomorphismWords identity(std::size_t n) {
    EndomorphismWords e{n, {}};
    for (std::uint32_t i = 1; i <= n; ++i) e.images.push_back(Word::generator(n, i));
    return e;
  }

  /// Column i is abelianize(images[i]).
  IntMatrix abelianization_matrix() const {
    IntMatrix m(rank);
    for (std::size_t j = 0; j < rank; ++j) {
      const ExponentVector col = abelianize(images[j]);
      for (std::size_t i = 0; i < rank; ++i) m(i, j) = col[i];
    }
    return m;
  }
};

/// Substitutes images[i] for x_i and reduces.
inline Word apply_endomorphism(const EndomorphismWords& e, const Word& w) {
  if (e.rank != w.rank()) throw std::invalid_argument("apply_endomorphism: rank mismatch");
  std::vector<Word> inverses;
  inverses.reserve(e.images.size());
  for (const auto& img : e.images) inverses.push_back(img.inverse());
  Word out(e.rank);
  for (const Letter& l : w.letters()) out *= l.sign > 0 ? e.images[l.generator - 1] : inverses[l.generator - 1];
  return out;
}

/// outer ∘ inner: x_i -> outer(inner(x_i)).
inline EndomorphismWords compose(const EndomorphismWords& outer, const EndomorphismWords& inner) {
  if (outer.rank != inner.rank) throw std::invalid_argument("compose: rank mismatch");
  EndomorphismWords out{outer.rank, {}};
  out.images.reserve(inner.images.size());
  for (const auto& img : inner.images) out.images.push_back(apply_endomorphism(outer, img));
  return out;
}

/// An automorphism of F_n whose abelianization is M. M must be unimodular.
inline EndomorphismWords lift_matrix(const IntMatrix& m) {
  const ElementarySequence seq = elementary_decomposition(m);
  const std::size_t n = m.size();
  // M = E_1···E_r, so the lift is α_1 ∘ ··· ∘ α_r; compose on the right.
  EndomorphismWords acc = EndomorphismWords::identity(n);
  for (const ElementaryMove& move : seq.moves) {
    std::visit(
        [&](const auto& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, AddRowMove>) {
            // x_j -> x_j x_i^c
            const auto c = static_cast<std::int64_t>(mv.factor);
            acc.images[mv.source] = acc.images[mv.source] * acc.images[mv.target].pow(c);
          } else if constexpr (std::is_same_v<T, SwapRowsMove>) {
            std::swap(acc.images[mv.first], acc.images[mv.second]);
          } else {
            acc.images[mv.row] = acc.images[mv.row].inverse();
          }
        },
        move);
  }
  if (acc.abelianization_matrix() != m) throw std::logic_error("lift_matrix: abelianization does not reproduce the matrix");
  return acc;
}

}  // namespace relfree
