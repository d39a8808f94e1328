#pragma once

// Words in the free group F_n on x1..xn.
//
// Grammar accepted by parse_word:
//   expr   := factor+            (empty text is the identity)
//   factor := atom | group | comm
//   atom   := 'x' INT ('^' SINT)?
//   group  := '(' expr ')' ('^' SINT)?
//   comm   := '[' expr ',' expr ']' ('^' SINT)?
// Factors are separated by whitespace or '*'. [u,v] = u^-1 v^-1 u v.

#include "relfree/arith.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relfree {

/// Generator index (1-based) with sign +1 or -1.
struct Letter {
  std::uint32_t generator;
  int sign;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Cancels adjacent inverse pairs; the result is freely reduced.
inline std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A freely reduced word of F_n.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw std::invalid_argument("word rank must be positive");
  }
  Word(std::size_t rank, const std::vector<Letter>& letters) : Word(rank) {
    for (const Letter& l : letters) check_letter(l);
    letters_ = free_reduce(letters);
  }

  static Word generator(std::size_t rank, std::uint32_t i, int exponent = 1) {
    Word w(rank);
    w.check_letter({i, 1});
    const int sign = exponent < 0 ? -1 : 1;
    for (int e = 0; e < (exponent < 0 ? -exponent : exponent); ++e) w.letters_.push_back({i, sign});
    return w;
  }

  std::size_t rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    u.check_rank(v);
    Word w(u.rank_);
    w.letters_ = u.letters_;
    for (const Letter& l : v.letters_) {
      if (!w.letters_.empty() && w.letters_.back() == l.inverse())
        w.letters_.pop_back();
      else
        w.letters_.push_back(l);
    }
    return w;
  }
  Word& operator*=(const Word& v) { return *this = *this * v; }

  Word pow(std::int64_t e) const {
    Word base = e < 0 ? inverse() : *this;
    Word acc(rank_);
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
    return acc;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Letters with runs collapsed into powers: `x1^2 x2^-1`. Identity prints as "".
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      if (i) os << ' ';
      os << 'x' << letters_[i].generator;
      const auto run = static_cast<std::int64_t>(j - i) * letters_[i].sign;
      if (run != 1) os << '^' << run;
      i = j;
    }
    return os.str();
  }

 private:
  void check_letter(const Letter& l) const {
    if (l.generator < 1 || l.generator > rank_)
      throw std::out_of_range("generator x" + std::to_string(l.generator) + " outside rank " + std::to_string(rank_));
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
  void check_rank(const Word& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("words of different rank");
  }

  std::size_t rank_ = 1;
  std::vector<Letter> letters_;
};

/// [u,v] = u^-1 v^-1 u v
inline Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

/// Exponent-sum vector: the image of w in A_n = Z^n.
inline ExponentVector abelianize(const Word& w) {
  ExponentVector v(w.rank(), 0);
  for (const Letter& l : w.letters()) v[l.generator - 1] += l.sign;
  return v;
}

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {}

  Word parse() {
    skip_separators();
    if (at_end()) return Word(rank_);
    Word w = expr();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    skip_space();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return negative ? -v : v;
  }

  std::int64_t optional_exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    return integer(true);
  }

  bool starts_factor() {
    skip_space();
    char c = peek();
    return c == 'x' || c == '(' || c == '[';
  }

  Word expr() {
    Word w(rank_);
    if (!starts_factor()) fail("expected a factor");
    do {
      w *= factor();
      skip_separators();
    } while (starts_factor());
    return w;
  }

  Word factor() {
    skip_space();
    switch (peek()) {
      case 'x': {
        const std::size_t start = pos_++;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected generator index after 'x'");
        const std::int64_t i = integer(false);
        if (i < 1 || static_cast<std::size_t>(i) > rank_) {
          pos_ = start;
          fail("generator x" + std::to_string(i) + " outside rank " + std::to_string(rank_));
        }
        return Word::generator(rank_, static_cast<std::uint32_t>(i)).pow(optional_exponent());
      }
      case '(': {
        ++pos_;
        Word inner = expr();
        expect(')');
        return inner.pow(optional_exponent());
      }
      case '[': {
        ++pos_;
        Word u = expr();
        expect(',');
        Word v = expr();
        expect(']');
        return commutator(u, v).pow(optional_exponent());
      }
      default:
        fail("expected a factor");
    }
  }

  std::string_view text_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the word grammar above into a freely reduced Word.
inline Word parse_word(std::string_view text, std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("word rank must be positive");
  return detail::WordParser(text, rank).parse();
}

}  // namespace relfree
