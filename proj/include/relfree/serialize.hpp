#pragma once

// JSON forms of the library's values. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings. Readers accept both.

#include "relfree/arith.hpp"
#include "relfree/grpext.hpp"
#include "relfree/intlinalg.hpp"
#include "relfree/lift.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/spectra.hpp"
#include "relfree/words.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace relfree {

using Json = nlohmann::json;

inline Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw std::invalid_argument("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline Json vector_to_json(const ExponentVector& v) { return Json(v); }

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Matrix from a JSON array of arrays of integers.
inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

inline IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("matrix file " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

inline Json polynomial_to_json(const IntPolynomial& p) {
  return Json{{"text", p.to_string()}, {"coefficients", vector_to_json(p.coefficients())}};
}

inline Json to_json(const SmithDecomposition& d) {
  return Json{{"S", matrix_to_json(d.S)},
              {"U", matrix_to_json(d.U)},
              {"V", matrix_to_json(d.V)},
              {"invariant_factors", vector_to_json(d.invariant_factors())}};
}

inline Json to_json(const LatticeIndex& idx) {
  return idx.is_finite() ? integer_to_json(idx.value()) : Json("INFINITE");
}

inline Json to_json(const SpectrumReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{{"order", x.order}, {"gcd", x.gcd.to_string()}});
  return Json{{"quasi_unipotent", r.quasi_unipotent}, {"witnesses", std::move(w)}};
}

/// {rank, modulus, ab:[...], fox:["<laurent>", ...]}
inline Json to_json(const MagnusElement& e) {
  Json fox = Json::array();
  for (const auto& f : e.fox()) fox.push_back(f.to_string());
  return Json{{"rank", e.rank()}, {"modulus", e.modulus()}, {"ab", e.ab()}, {"fox", std::move(fox)}};
}

inline Json to_json(const VerbalVerdict& v) {
  Json j{{"in_subgroup", v.in_subgroup}, {"abelianization_nonzero", v.abelianization_nonzero}};
  j["failing_coordinate"] = v.failing_coordinate ? Json(*v.failing_coordinate) : Json(nullptr);
  return j;
}

/// {k, shift, support: {"<pos>": residue}}
inline Json to_json(const WreathElement& w) {
  Json support = Json::object();
  for (const auto& [p, r] : w.support()) support[std::to_string(p)] = r;
  return Json{{"k", w.k()}, {"shift", w.shift()}, {"support", std::move(support)}};
}

/// {matrix, vector, power}
inline Json to_json(const SemidirectElement& s) {
  return Json{{"matrix", matrix_to_json(s.matrix())}, {"vector", vector_to_json(s.vector())}, {"power", s.power()}};
}

/// {rank, images: ["<word>", ...]}
inline Json to_json(const EndomorphismWords& e) {
  Json images = Json::array();
  for (const auto& w : e.images) images.push_back(w.to_string());
  return Json{{"rank", e.rank}, {"images", std::move(images)}};
}

inline EndomorphismWords endomorphism_from_json(const Json& j) {
  EndomorphismWords e{j.at("rank").get<std::size_t>(), {}};
  for (const auto& img : j.at("images")) e.images.push_back(parse_word(img.get<std::string>(), e.rank));
  if (e.images.size() != e.rank) throw std::invalid_argument("endomorphism needs one image per generator");
  return e;
}

inline Json to_json(const ElementarySequence& seq) {
  Json moves = Json::array();
  for (const auto& mv : seq.moves) {
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, AddRowMove>)
            moves.push_back(Json{{"op", "add"}, {"target", m.target + 1}, {"source", m.source + 1},
                                 {"factor", integer_to_json(m.factor)}});
          else if constexpr (std::is_same_v<T, SwapRowsMove>)
            moves.push_back(Json{{"op", "swap"}, {"rows", {m.first + 1, m.second + 1}}});
          else
            moves.push_back(Json{{"op", "negate"}, {"row", m.row + 1}});
        },
        mv);
  }
  return Json{{"n", seq.n}, {"moves", std::move(moves)}};
}

}  // namespace relfree
