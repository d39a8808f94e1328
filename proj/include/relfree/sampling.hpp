#pragma once

// Deterministic random inputs: words, kernel words and unimodular matrices.
// Draws use only the raw mt19937_64 stream so results are identical across
// standard library implementations.

#include "relfree/intlinalg.hpp"
#include "relfree/words.hpp"

#include <cstdint>
#include <random>

namespace relfree {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }
  bool coin() { return (rng_() >> 63) != 0; }

  /// Random freely reduced word of length at most max_length.
  Word word(std::size_t rank, std::size_t max_length) {
    const auto len = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_length)));
    std::vector<Letter> letters;
    letters.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      letters.push_back({static_cast<std::uint32_t>(uniform(1, static_cast<std::int64_t>(rank))), coin() ? 1 : -1});
    return Word(rank, letters);
  }

  /// Random element of (F')^k F'' (k >= 2) or F'' (k = 0): a product of
  /// conjugates of [u,v]^k and [[u,v],[s,t]].
  Word kernel_word(std::size_t rank, std::int64_t k, std::size_t factors = 3, std::size_t part_length = 4) {
    Word w(rank);
    for (std::size_t f = 0; f < factors; ++f) {
      Word relator(rank);
      if (k >= 2 && coin()) {
        relator = commutator(word(rank, part_length), word(rank, part_length)).pow(k);
      } else {
        relator = commutator(commutator(word(rank, part_length), word(rank, part_length)),
                             commutator(word(rank, part_length), word(rank, part_length)));
      }
      if (coin()) relator = relator.inverse();
      const Word g = word(rank, part_length);
      w *= g.inverse() * relator * g;
    }
    return w;
  }

  /// Product of `moves` random elementary matrices (factors in [-max_factor, max_factor]).
  IntMatrix unimodular(std::size_t n, std::size_t moves, std::int64_t max_factor = 2) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t s = 0; s < moves; ++s) {
      const std::int64_t kind = n == 1 ? 2 : uniform(0, 5);
      ElementaryMove mv = NegateRowMove{static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1))};
      if (kind <= 3 && n > 1) {
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) ++j;
        std::int64_t c = uniform(1, max_factor);
        if (coin()) c = -c;
        mv = AddRowMove{i, j, c};
      } else if (kind == 4 && n > 1) {
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) ++j;
        mv = SwapRowsMove{i, j};
      }
      m = m * elementary_matrix(n, mv);
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace relfree
