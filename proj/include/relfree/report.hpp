#pragma once

// End-to-end proof-skeleton report. Every section recomputes its values and
// derives its own PASS/FAIL verdict.

#include "relfree/grpext.hpp"
#include "relfree/intlinalg.hpp"
#include "relfree/lift.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/sampling.hpp"
#include "relfree/serialize.hpp"
#include "relfree/spectra.hpp"
#include "relfree/words.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relfree {

struct ReportParams {
  std::int64_t n = 2;
  std::int64_t p = 2;
  std::int64_t depth = 10;
  std::int64_t m_max = 3;
  std::int64_t k_max = 6;
  /// words sampled for the lift and kernel-consistency sections
  std::size_t samples = 50;
  std::uint64_t seed = 20090101;
};

struct ReportSection {
  std::string name;
  bool pass = false;
  Json data;
  std::vector<std::string> lines;
};

struct SkeletonReport {
  ReportParams params;
  std::vector<ReportSection> sections;

  bool pass() const {
    for (const auto& s : sections)
      if (!s.pass) return false;
    return true;
  }

  Json to_json() const {
    Json secs = Json::array();
    for (const auto& s : sections)
      secs.push_back(Json{{"name", s.name}, {"verdict", s.pass ? "PASS" : "FAIL"}, {"data", s.data}});
    return Json{{"parameters",
                 {{"n", params.n},
                  {"p", params.p},
                  {"depth", params.depth},
                  {"m_max", params.m_max},
                  {"k_max", params.k_max},
                  {"samples", params.samples},
                  {"seed", params.seed}}},
                {"sections", std::move(secs)},
                {"verdict", pass() ? "PASS" : "FAIL"}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "proof skeleton: n=" << params.n << " p=" << params.p << " depth=" << params.depth << " m<=" << params.m_max
       << " k<=" << params.k_max << '\n';
    for (const auto& s : sections) {
      os << "\n[" << (s.pass ? "PASS" : "FAIL") << "] " << s.name << '\n';
      for (const auto& l : s.lines) os << "  " << l << '\n';
    }
    os << "\noverall: " << (pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
  }
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline ReportSection phi_section(const IntMatrix& phi) {
  ReportSection s{"automorphism of A_n without root-of-unity eigenvalues", false, {}, {}};
  const Integer det = determinant(phi);
  const IntPolynomial cp = char_poly(phi);
  const SpectrumReport spec = is_quasi_unipotent(phi);
  s.pass = abs(det) == 1 && !spec.quasi_unipotent;
  s.data = Json{{"matrix", matrix_to_json(phi)},
                {"determinant", integer_to_json(det)},
                {"char_poly", cp.to_string()},
                {"spectrum", relfree::to_json(spec)}};
  s.lines.push_back("matrix: " + phi.to_compact());
  s.lines.push_back("det = " + det.str());
  s.lines.push_back("char poly: " + cp.to_string());
  s.lines.push_back(std::string("root-of-unity eigenvalue: ") + (spec.quasi_unipotent ? "yes" : "no"));
  return s;
}

inline ReportSection lemma22_section(const IntMatrix& phi, const ReportParams& p) {
  ReportSection s{"index of [m A_n, phi^k] in A_n", true, {}, {}};
  Json table = Json::array();
  const auto n = static_cast<unsigned>(phi.size());
  for (std::int64_t m = 1; m <= p.m_max; ++m) {
    for (std::int64_t k = 1; k <= p.k_max; ++k) {
      const LatticeIndex idx = lemma22_index(phi, m, k);
      const Integer formula = pow(Integer(m), n) * abs(determinant(matrix_power(phi, k) - IntMatrix::identity(phi.size())));
      const LatticeIndex group_idx = commutator_lattice_index(phi, m, k);
      const bool ok = idx.is_finite() && idx.value() == formula && group_idx == idx;
      s.pass = s.pass && ok;
      table.push_back(Json{{"m", m},
                           {"k", k},
                           {"index", relfree::to_json(idx)},
                           {"m^n|det(phi^k-I)|", integer_to_json(formula)},
                           {"group_commutator_index", relfree::to_json(group_idx)},
                           {"ok", ok}});
      s.lines.push_back("m=" + std::to_string(m) + " k=" + std::to_string(k) + "  index=" + idx.to_string() +
                        (ok ? "" : "  MISMATCH"));
    }
  }
  s.data = Json{{"entries", std::move(table)}};
  return s;
}

inline ReportSection lift_section(const IntMatrix& phi, const ReportParams& p) {
  ReportSection s{"lift of phi to Aut(F_n), inducing Aut(M_n) and Aut(M_{p,n})", false, {}, {}};
  const std::size_t n = phi.size();
  const EndomorphismWords lifted = lift_matrix(phi);
  const bool matrix_ok = lifted.abelianization_matrix() == phi;

  Sampler sampler(p.seed ^ 0x11f7);
  std::size_t functorial = 0;
  std::size_t preserved = 0;
  std::size_t kernel_checks = 0;
  for (std::size_t i = 0; i < p.samples; ++i) {
    const Word w = sampler.word(n, 12);
    const Word image = apply_endomorphism(lifted, w);
    if (to_integers(abelianize(image)) == phi * std::span<const Integer>(to_integers(abelianize(w)))) ++functorial;
    for (std::int64_t modulus : {std::int64_t{0}, p.p}) {
      const Word kernel = sampler.kernel_word(n, modulus, 2, 3);
      ++kernel_checks;
      if (is_trivial(kernel, modulus).in_subgroup && is_trivial(apply_endomorphism(lifted, kernel), modulus).in_subgroup)
        ++preserved;
    }
  }
  s.pass = matrix_ok && functorial == p.samples && preserved == kernel_checks;
  Json images = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(lifted.images[i].to_string());
    s.lines.push_back("x" + std::to_string(i + 1) + " -> " + lifted.images[i].to_string());
  }
  s.data = Json{{"images", std::move(images)},
                {"abelianization_matches", matrix_ok},
                {"functoriality", {{"sampled", p.samples}, {"passed", functorial}}},
                {"kernel_preservation", {{"sampled", kernel_checks}, {"passed", preserved}}}};
  s.lines.push_back("abelianization equals phi: " + std::string(matrix_ok ? "yes" : "no"));
  s.lines.push_back("ab(phi(w)) = phi ab(w): " + std::to_string(functorial) + "/" + std::to_string(p.samples));
  s.lines.push_back("kernel words kept trivial (moduli 0, " + std::to_string(p.p) + "): " + std::to_string(preserved) +
                    "/" + std::to_string(kernel_checks));
  return s;
}

inline ReportSection wreath_section(const ReportParams& p) {
  ReportSection s{"lower central series of Z_p wr Z", true, {}, {}};
  Json list = Json::array();
  const WreathElement b = WreathElement::shift_generator(p.p);
  WreathElement c = WreathElement::base_generator(p.p);
  for (std::int64_t j = 1; j <= p.depth; ++j) {
    if (j > 1) c = commutator(c, b);
    const bool ok = !c.is_identity();
    s.pass = s.pass && ok;
    list.push_back(Json{{"depth", j}, {"support_size", c.support().size()}, {"non_identity", ok}});
    s.lines.push_back("gamma_" + std::to_string(j) + " witness: support size " + std::to_string(c.support().size()) +
                      (ok ? "" : "  IDENTITY"));
  }
  s.data = Json{{"k", p.p}, {"witnesses", std::move(list)}};
  return s;
}

inline ReportSection kernel_section(const ReportParams& p) {
  ReportSection s{"M_{p,2} -> Z_p wr Z kernel consistency", false, {}, {}};
  Sampler sampler(p.seed ^ 0x5eed);
  std::size_t trivial = 0;
  std::size_t identity = 0;
  for (std::size_t i = 0; i < p.samples; ++i) {
    const Word w = sampler.kernel_word(2, p.p);
    if (is_trivial(w, p.p).in_subgroup) ++trivial;
    if (eval_in_wreath(w, p.p).is_identity()) ++identity;
  }
  // [x1,x2] survives in both
  const Word control = parse_word("[x1,x2]", 2);
  const bool control_ok = !is_trivial(control, p.p).in_subgroup && !eval_in_wreath(control, p.p).is_identity();
  s.pass = trivial == p.samples && identity == p.samples && control_ok;
  s.data = Json{{"sampled", p.samples},
                {"trivial_in_M_pn", trivial},
                {"identity_in_wreath", identity},
                {"control_nontrivial", control_ok}};
  s.lines.push_back("kernel words trivial in M_{p,2}: " + std::to_string(trivial) + "/" + std::to_string(p.samples));
  s.lines.push_back("kernel words trivial in Z_p wr Z: " + std::to_string(identity) + "/" + std::to_string(p.samples));
  s.lines.push_back(std::string("[x1,x2] nontrivial in both: ") + (control_ok ? "yes" : "no"));
  return s;
}

}  // namespace detail

inline SkeletonReport report(const ReportParams& params) {
  if (params.n < 2) throw std::domain_error("n must be at least 2: for n = 1 there is nothing to prove (M_1 = Z)");
  if (!is_prime(params.p)) throw std::domain_error("p must be prime, got " + std::to_string(params.p));
  if (params.depth < 1) throw std::domain_error("depth must be positive");
  if (params.m_max < 1 || params.k_max < 1) throw std::domain_error("m and k ranges must be nonempty");

  SkeletonReport r{params, {}};
  const IntMatrix phi = spectrum_free_automorphism(params.n);
  r.sections.push_back(detail::phi_section(phi));
  r.sections.push_back(detail::lemma22_section(phi, params));
  r.sections.push_back(detail::lift_section(phi, params));
  r.sections.push_back(detail::wreath_section(params));
  r.sections.push_back(detail::kernel_section(params));
  return r;
}

}  // namespace relfree
