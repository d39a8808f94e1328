#include "oracles.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/sampling.hpp"

#include <gtest/gtest.h>

using namespace relfree;

namespace {

LaurentPolynomial poly(std::size_t rank, std::initializer_list<std::pair<ExponentVector, long long>> terms,
                       std::int64_t modulus = 0) {
  LaurentPolynomial p(rank, modulus);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST(Fox, Examples) {
  // ∂(x1 x2)/∂x1 = 1, ∂(x1 x2)/∂x2 = x1 -> t1
  const auto d = fox_derivatives(parse_word("x1 x2", 2), 0);
  EXPECT_EQ(d[0], LaurentPolynomial::constant(2, 1));
  EXPECT_EQ(d[1], LaurentPolynomial::variable(2, 1));

  const auto inv = fox_derivatives(parse_word("x1^-1", 2), 0);
  EXPECT_EQ(inv[0], poly(2, {{{-1, 0}, -1}}));
  EXPECT_TRUE(inv[1].is_zero());

  for (const auto& p : fox_derivatives(Word(3), 0)) EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(fox_derivatives(Word(2), 1), std::domain_error);
}

TEST(Fox, CommutatorByHand) {
  // [x1,x2] = x1^-1 x2^-1 x1 x2
  // ∂/∂x1 = -t1^-1 + t1^-1 t2^-1,  ∂/∂x2 = -t1^-1 t2^-1 + t2^-1
  const MagnusElement e = magnus(parse_word("[x1,x2]", 2), 0);
  EXPECT_EQ(e.ab(), (ExponentVector{0, 0}));
  EXPECT_EQ(e.fox()[0], poly(2, {{{-1, 0}, -1}, {{-1, -1}, 1}}));
  EXPECT_EQ(e.fox()[1], poly(2, {{{-1, -1}, -1}, {{0, -1}, 1}}));
  EXPECT_EQ(e.fox()[0].to_string(), "-t1^-1 + t1^-1*t2^-1");
}

TEST(Fox, MatchesNaiveRecursiveOracle) {
  Sampler s(71);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto rank = static_cast<std::size_t>(s.uniform(1, 4));
    const Word w = s.word(rank, 30);
    const auto got = fox_derivatives(w, 0);
    const auto want = oracle::naive_fox(w);
    for (std::size_t i = 0; i < rank; ++i) {
      ASSERT_EQ(got[i].term_count(), want.d[i].size());
      for (const auto& [e, c] : want.d[i]) {
        ExponentVector ev(e.begin(), e.end());
        ASSERT_EQ(got[i].coefficient(ev), c);
      }
    }
  }
}

TEST(Magnus, IdentityAndInverse) {
  EXPECT_TRUE(magnus(Word(2), 0).is_identity());
  EXPECT_EQ(magnus(Word(2), 3), MagnusElement::identity(2, 3));
  Sampler s(73);
  for (std::int64_t k : {0, 2, 3, 5}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Word u = s.word(3, 15);
      EXPECT_TRUE((magnus(u, k) * magnus(u.inverse(), k)).is_identity());
      EXPECT_EQ(magnus(u, k).inverse(), magnus(u.inverse(), k));
    }
  }
}

TEST(Magnus, HomomorphismAndFoxIdentity) {
  Sampler s(79);
  for (std::int64_t k : {0, 2, 3, 5}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto rank = static_cast<std::size_t>(s.uniform(1, 4));
      const Word u = s.word(rank, 20), v = s.word(rank, 20);
      const MagnusElement mu = magnus(u, k), mv = magnus(v, k);
      ASSERT_EQ(magnus(u * v, k), mu * mv);
      ASSERT_TRUE(mu.satisfies_fox_identity());
      ASSERT_TRUE((mu * mv).satisfies_fox_identity());
    }
  }
}

TEST(Magnus, FreeReductionInvariance) {
  Sampler s(83);
  for (int trial = 0; trial < 500; ++trial) {
    // unreduced letter sequence with inserted cancelling pairs
    std::vector<Letter> raw;
    for (int i = 0, len = static_cast<int>(s.uniform(0, 10)); i < len; ++i) {
      const Letter l{static_cast<std::uint32_t>(s.uniform(1, 3)), s.coin() ? 1 : -1};
      raw.push_back(l);
      if (s.coin()) {
        raw.push_back(l.inverse());
        raw.push_back(l);
      }
    }
    const Word reduced(3, raw);
    // Fox calculus applied letter by letter to the raw sequence
    const auto naive = oracle::naive_fox(raw, 3, 0, raw.size());
    const auto fox = fox_derivatives(reduced, 0);
    for (std::size_t i = 0; i < 3; ++i) {
      ASSERT_EQ(fox[i].term_count(), naive.d[i].size());
      for (const auto& [e, c] : naive.d[i]) ASSERT_EQ(fox[i].coefficient(ExponentVector(e.begin(), e.end())), c);
    }
  }
}

TEST(IsTrivial, Examples) {
  EXPECT_TRUE(is_trivial(parse_word("[[x1,x2],[x1,x2^-1]]", 2), 0).in_subgroup);
  const VerbalVerdict c = is_trivial(parse_word("[x1,x2]", 2), 0);
  EXPECT_FALSE(c.in_subgroup);
  EXPECT_FALSE(c.abelianization_nonzero);
  EXPECT_EQ(c.failing_coordinate, 1u);
  EXPECT_TRUE(is_trivial(parse_word("[x1,x2]^3", 2), 3).in_subgroup);
  EXPECT_FALSE(is_trivial(parse_word("[x1,x2]^3", 2), 0).in_subgroup);
  EXPECT_FALSE(is_trivial(parse_word("[x1,x2]^3", 2), 2).in_subgroup);
  const VerbalVerdict ab = is_trivial(parse_word("x1^2", 2), 2);
  EXPECT_FALSE(ab.in_subgroup);
  EXPECT_TRUE(ab.abelianization_nonzero);
  EXPECT_THROW(is_trivial(Word(2), 1), std::domain_error);
}

TEST(IsTrivial, VarietyLaws) {
  Sampler s(89);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rank = static_cast<std::size_t>(s.uniform(2, 4));
    const Word a = s.word(rank, 12), b = s.word(rank, 12), c = s.word(rank, 12), d = s.word(rank, 12);
    ASSERT_TRUE(is_trivial(commutator(commutator(a, b), commutator(c, d)), 0).in_subgroup);
    for (std::int64_t k : {2, 3, 5}) {
      const Word w = commutator(a, b).pow(k) * commutator(commutator(c, d), commutator(a, c));
      ASSERT_TRUE(is_trivial(w, k).in_subgroup);
    }
  }
}

TEST(IsTrivial, ConjugationInvariance) {
  Sampler s(97);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = s.coin() ? s.kernel_word(3, 0, 1, 3) : s.word(3, 10);
    const Word g = s.word(3, 10);
    for (std::int64_t k : {0, 3})
      ASSERT_EQ(is_trivial(w, k).in_subgroup, is_trivial(g.inverse() * w * g, k).in_subgroup);
  }
}

TEST(CenterWitness, Examples) {
  // [x1,x2] is nontrivial, so x1 is not central: witness 2
  EXPECT_EQ(center_witness(parse_word("x1", 2)), 2u);
  EXPECT_EQ(center_witness(parse_word("x2", 2)), 1u);
  // [[x1,x2],x1] has Fox coordinate ≠ 0, so the search stops at i = 1
  EXPECT_FALSE(is_trivial(commutator(parse_word("[x1,x2]", 2), parse_word("x1", 2)), 0).in_subgroup);
  EXPECT_EQ(center_witness(parse_word("[x1,x2]", 2)), 1u);
}

TEST(CenterWitness, Errors) {
  EXPECT_THROW(center_witness(parse_word("[[x1,x2],[x1,x2^-1]]", 2)), std::domain_error);
  EXPECT_THROW(center_witness(parse_word("x1", 1)), std::domain_error);
}
