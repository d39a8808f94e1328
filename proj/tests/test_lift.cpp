#include "relfree/lift.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/sampling.hpp"
#include "relfree/serialize.hpp"

#include <gtest/gtest.h>

using namespace relfree;

TEST(Lift, Identity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const EndomorphismWords e = lift_matrix(IntMatrix::identity(n));
    for (std::uint32_t i = 1; i <= n; ++i) EXPECT_EQ(e.images[i - 1], Word::generator(n, i));
  }
}

TEST(Lift, DiagonalSignFlip) {
  const EndomorphismWords e = lift_matrix(IntMatrix{{-1, 0}, {0, 1}});
  EXPECT_EQ(e.images[0], parse_word("x1^-1", 2));
  EXPECT_EQ(e.images[1], parse_word("x2", 2));
}

TEST(Lift, CanonicalBlock) {
  const IntMatrix b2{{0, -1}, {1, 3}};
  const EndomorphismWords e = lift_matrix(b2);
  EXPECT_EQ(e.abelianization_matrix(), b2);
  // column convention: x1 -> (0,1), x2 -> (-1,3)
  EXPECT_EQ(abelianize(e.images[0]), (ExponentVector{0, 1}));
  EXPECT_EQ(abelianize(e.images[1]), (ExponentVector{-1, 3}));
}

TEST(Lift, ElementaryShearIsNielsenMove) {
  // I + e_12 has column 2 = e_2 + e_1, lifting to x2 -> x2 x1
  const EndomorphismWords e = lift_matrix(IntMatrix{{1, 1}, {0, 1}});
  EXPECT_EQ(e.images[0], parse_word("x1", 2));
  EXPECT_EQ(e.images[1], parse_word("x2 x1", 2));
}

TEST(Lift, RejectsNonUnimodular) {
  EXPECT_THROW(lift_matrix(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
  EXPECT_THROW(lift_matrix(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(ApplyEndomorphism, Examples) {
  const EndomorphismWords id = EndomorphismWords::identity(2);
  EXPECT_EQ(apply_endomorphism(id, parse_word("x1 x2^-1 x1", 2)), parse_word("x1 x2^-1 x1", 2));
  const EndomorphismWords e{2, {parse_word("x1 x2", 2), parse_word("x2", 2)}};
  EXPECT_EQ(apply_endomorphism(e, parse_word("x1^2", 2)), parse_word("x1 x2 x1 x2", 2));
  EXPECT_EQ(apply_endomorphism(e, parse_word("x1^-1", 2)), parse_word("x2^-1 x1^-1", 2));
  EXPECT_THROW(apply_endomorphism(e, parse_word("x1", 3)), std::invalid_argument);
}

TEST(Lift, Functoriality) {
  Sampler s(113);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform(1, 5));
    const IntMatrix m = s.unimodular(n, static_cast<std::size_t>(s.uniform(0, 20)));
    const EndomorphismWords e = lift_matrix(m);
    ASSERT_EQ(e.abelianization_matrix(), m);
    for (int j = 0; j < 10; ++j) {
      const Word w = s.word(n, 12);
      ASSERT_EQ(to_integers(abelianize(apply_endomorphism(e, w))), m * std::span<const Integer>(to_integers(abelianize(w))));
    }
  }
}

TEST(Lift, Composition) {
  Sampler s(127);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform(1, 4));
    const IntMatrix a = s.unimodular(n, 8), b = s.unimodular(n, 8);
    const EndomorphismWords la = lift_matrix(a), lb = lift_matrix(b);
    const EndomorphismWords ab = compose(la, lb);
    EXPECT_EQ(ab.abelianization_matrix(), a * b);
    const Word w = s.word(n, 10);
    EXPECT_EQ(apply_endomorphism(ab, w), apply_endomorphism(la, apply_endomorphism(lb, w)));
  }
}

TEST(Lift, PreservesKernels) {
  Sampler s(131);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform(2, 4));
    const EndomorphismWords e = lift_matrix(s.unimodular(n, 10));
    for (std::int64_t k : {0, 2, 3}) {
      const Word w = s.kernel_word(n, k, 2, 3);
      ASSERT_TRUE(is_trivial(w, k).in_subgroup);
      ASSERT_TRUE(is_trivial(apply_endomorphism(e, w), k).in_subgroup);
    }
  }
}

TEST(Lift, InducesInjectiveMapOnMetabelianSample) {
  // a lifted automorphism never sends a nontrivial element of M_n to 1
  Sampler s(137);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform(2, 3));
    const EndomorphismWords e = lift_matrix(s.unimodular(n, 6));
    const Word w = commutator(s.word(n, 4), s.word(n, 4));
    EXPECT_EQ(is_trivial(w, 0).in_subgroup, is_trivial(apply_endomorphism(e, w), 0).in_subgroup);
  }
}

TEST(Lift, JsonRoundTrip) {
  const EndomorphismWords e = lift_matrix(IntMatrix{{0, -1}, {1, 3}});
  const Json j = to_json(e);
  EXPECT_EQ(j.at("rank"), 2);
  const EndomorphismWords back = endomorphism_from_json(j);
  EXPECT_EQ(back.images, e.images);
}
