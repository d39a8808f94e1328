#pragma once

// Coefficient layer: arbitrary-precision integers, dense univariate integer
// polynomials and sparse multivariate Laurent polynomials over Z or Z/kZ.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relfree {

using Integer = boost::multiprecision::cpp_int;

/// Exponent-sum vector of a group element; also the exponent of a Laurent monomial.
using ExponentVector = std::vector<std::int64_t>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division; cpp_int's operator/ truncates toward zero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a modulo k in [0, k).
inline Integer mod_floor(const Integer& a, const Integer& k) {
  Integer r = a % k;
  if (r < 0) r += k;
  return r;
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Dense polynomial in Z[x], coefficients stored lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }
  IntPolynomial(std::initializer_list<long long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }
  /// c·x^d
  static IntPolynomial monomial(std::size_t degree, Integer c = 1) {
    std::vector<Integer> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  /// Primitive part with positive leading coefficient; zero stays zero.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    std::vector<Integer> v(coeffs_);
    for (auto& x : v) x /= c;
    return IntPolynomial(std::move(v));
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  IntPolynomial operator-() const {
    std::vector<Integer> v(coeffs_);
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Quotient of an exact division in Z[x]; throws if the divisor does not divide.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Integer> rem(coeffs_);
    const auto dd = static_cast<std::size_t>(divisor.degree());
    if (rem.size() < dd + 1) {
      if (is_zero()) return {};
      throw std::domain_error("polynomial division is not exact");
    }
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
      const Integer& top = rem[i + dd];
      if (top % divisor.leading() != 0) throw std::domain_error("polynomial division is not exact");
      quot[i] = top / divisor.leading();
      for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= quot[i] * divisor.coeffs_[j];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::domain_error("polynomial division is not exact");
    return IntPolynomial(std::move(quot));
  }

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1)·a mod b, computed in Z[x].
  IntPolynomial pseudo_remainder(const IntPolynomial& b) const {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    std::vector<Integer> r(coeffs_);
    const auto db = static_cast<std::size_t>(b.degree());
    while (r.size() >= db + 1 && !r.empty()) {
      const Integer lead = r.back();
      const std::size_t shift = r.size() - 1 - db;
      for (auto& x : r) x *= b.leading();
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lead * b.coeffs_[j];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPolynomial(std::move(r));
  }

  /// Human form in the variable `var`, highest degree first: `x^2 - 3*x + 1`.
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Primitive gcd in Z[x] with positive leading coefficient, by the primitive
/// pseudo-remainder sequence. gcd(0, 0) = 0.
inline IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial a = f.primitive_part();
  IntPolynomial b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_remainder(b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

/// Sparse Laurent polynomial in t_1..t_rank with coefficients in Z (modulus 0)
/// or Z/kZ (modulus k >= 2). Terms are kept in descending lexicographic order
/// of exponent vectors, which is also the printing order.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Integer, std::greater<>>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::size_t rank, std::int64_t modulus = 0) : rank_(rank), modulus_(modulus) {
    check_modulus(modulus);
  }

  static LaurentPolynomial constant(std::size_t rank, Integer c, std::int64_t modulus = 0) {
    return monomial(ExponentVector(rank, 0), std::move(c), modulus);
  }
  /// c·t^exponent
  static LaurentPolynomial monomial(ExponentVector exponent, Integer c = 1, std::int64_t modulus = 0) {
    LaurentPolynomial p(exponent.size(), modulus);
    p.add_term(std::move(exponent), std::move(c));
    return p;
  }
  /// The generator t_i, 1-based.
  static LaurentPolynomial variable(std::size_t rank, std::size_t i, std::int64_t modulus = 0) {
    ExponentVector e(rank, 0);
    e.at(i - 1) = 1;
    return monomial(std::move(e), 1, modulus);
  }

  std::size_t rank() const { return rank_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Accumulates c·t^e in place.
  void add_term(ExponentVector e, Integer c) {
    if (e.size() != rank_) throw std::invalid_argument("exponent vector length does not match rank");
    if (modulus_ >= 2) c = mod_floor(c, modulus_);
    if (c == 0) return;
    // try_emplace leaves c untouched when the key already exists
    auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
    if (inserted) return;
    it->second += c;
    if (modulus_ >= 2) it->second = mod_floor(it->second, modulus_);
    if (it->second == 0) terms_.erase(it);
  }

  /// Product with the monomial t^shift.
  LaurentPolynomial shifted(const ExponentVector& shift) const {
    check_rank(shift.size());
    LaurentPolynomial out(rank_, modulus_);
    for (const auto& [e, c] : terms_) {
      ExponentVector f(e);
      for (std::size_t i = 0; i < rank_; ++i) f[i] += shift[i];
      out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  LaurentPolynomial operator-() const {
    LaurentPolynomial out(rank_, modulus_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_compatible(b);
    LaurentPolynomial out(a.rank_, a.modulus_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        ExponentVector e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  friend LaurentPolynomial operator*(const Integer& s, const LaurentPolynomial& p) {
    LaurentPolynomial out(p.rank_, p.modulus_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Image under Z -> Z/kZ. k = 0 is the identity; k = 1 is rejected.
  LaurentPolynomial reduce_mod(std::int64_t k) const {
    if (modulus_ != 0) throw std::domain_error("reduce_mod expects a polynomial over Z");
    check_modulus(k);
    if (k == 0) return *this;
    LaurentPolynomial out(rank_, k);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  /// `1 - 2*t1^-1*t2`; descending lexicographic term order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool constant = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
      if (constant) {
        os << mag;
        continue;
      }
      bool need_star = false;
      if (mag != 1) {
        os << mag;
        need_star = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << '*';
        os << 't' << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  static void check_modulus(std::int64_t k) {
    if (k < 0) throw std::domain_error("modulus must be nonnegative");
    if (k == 1) throw std::domain_error("modulus 1 gives the zero ring");
  }
  void check_rank(std::size_t r) const {
    if (r != rank_) throw std::invalid_argument("exponent vector length does not match rank");
  }
  void check_compatible(const LaurentPolynomial& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("Laurent polynomials of different rank");
    if (o.modulus_ != modulus_) throw std::invalid_argument("Laurent polynomials over different coefficient rings");
  }

  std::size_t rank_ = 0;
  std::int64_t modulus_ = 0;
  TermMap terms_;
};

inline LaurentPolynomial laurent_reduce_mod(const LaurentPolynomial& p, std::int64_t k) { return p.reduce_mod(k); }

}  // namespace relfree
