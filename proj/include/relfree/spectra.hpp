#pragma once

// Exact root-of-unity eigenvalue detection via cyclotomic gcds, canonical
// unimodular matrices without such eigenvalues, and the index of the
// commutator lattice m·(M^k - I)·Z^n.

#include "relfree/arith.hpp"
#include "relfree/intlinalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace relfree {

/// Euler's totient by trial division.
inline std::uint64_t euler_totient(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

/// All k >= 1 with totient(k) <= n. These are the only orders a root-of-unity
/// eigenvalue of an n×n integer matrix can have. Searched up to 2n², which
/// suffices because totient(k) >= sqrt(k/2).
inline std::vector<std::uint64_t> totient_bounded_orders(std::uint64_t n) {
  if (n < 1) throw std::domain_error("totient_bounded_orders: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= 2 * n * n; ++k)
    if (euler_totient(k) <= n) out.push_back(k);
  return out;
}

/// The k-th cyclotomic polynomial, by dividing x^k - 1 by Φ_d for every
/// proper divisor d of k.
inline IntPolynomial cyclotomic(std::uint64_t k) {
  if (k < 1) throw std::domain_error("cyclotomic: order must be positive");
  static thread_local std::map<std::uint64_t, IntPolynomial> cache;
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  IntPolynomial p = IntPolynomial::monomial(k) - IntPolynomial::constant(1);
  for (std::uint64_t d = 1; d < k; ++d)
    if (k % d == 0) p = p.exact_divide(cyclotomic(d));
  cache.emplace(k, p);
  return p;
}

struct SpectrumWitness {
  std::uint64_t order;
  IntPolynomial gcd;
};

struct SpectrumReport {
  bool quasi_unipotent = false;
  std::vector<SpectrumWitness> witnesses;
};

/// Decides whether some eigenvalue of M is a root of unity.
inline SpectrumReport is_quasi_unipotent(const IntMatrix& m) {
  const IntPolynomial cp = char_poly(m);
  SpectrumReport report;
  for (std::uint64_t k : totient_bounded_orders(m.size())) {
    IntPolynomial g = poly_gcd(cp, cyclotomic(k));
    if (g.degree() > 0) report.witnesses.push_back({k, std::move(g)});
  }
  report.quasi_unipotent = !report.witnesses.empty();
  return report;
}

/// companion(x² - 3x + 1)
inline IntMatrix spectrum_free_block2() { return IntMatrix::companion(IntPolynomial{1, -3, 1}); }
/// companion(x³ - x² - x - 1)
inline IntMatrix spectrum_free_block3() { return IntMatrix::companion(IntPolynomial{-1, -1, -1, 1}); }

/// A unimodular n×n matrix none of whose eigenvalues is a root of unity:
/// n/2 copies of the 2×2 block for even n, (n-3)/2 copies followed by the
/// 3×3 block for odd n.
inline IntMatrix spectrum_free_automorphism(std::int64_t n) {
  if (n < 2) throw std::domain_error("spectrum_free_automorphism: n must be at least 2 (for n = 1, A_1 = Z has only ±1)");
  std::vector<IntMatrix> blocks(static_cast<std::size_t>(n % 2 == 0 ? n / 2 : (n - 3) / 2), spectrum_free_block2());
  if (n % 2 == 1) blocks.push_back(spectrum_free_block3());
  return IntMatrix::block_diagonal(blocks);
}

/// Index of [m·Z^n, M^k] = m·(M^k - I)·Z^n in Z^n.
inline LatticeIndex lemma22_index(const IntMatrix& m, std::int64_t scale, std::int64_t power) {
  if (scale <= 0) throw std::domain_error("lemma22_index: m must be positive");
  if (power <= 0) throw std::domain_error("lemma22_index: k must be positive");
  detail::require_unimodular(m, "lemma22_index");
  IntMatrix gens = Integer(scale) * (matrix_power(m, power) - IntMatrix::identity(m.size()));
  return lattice_index(gens);
}

}  // namespace relfree
