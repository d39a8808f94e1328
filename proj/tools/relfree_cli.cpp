// relfree: command-line front end.
//
// Exit status: 0 success, 1 bad input, 2 a checked property failed.

#include "relfree/relfree.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace relfree;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kPropertyViolation = 2;

struct PropertyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t output_width() {
  for (const char* var : {"RELFREE_WIDTH", "COLUMNS"}) {
    if (const char* v = std::getenv(var)) {
      char* end = nullptr;
      long w = std::strtol(v, &end, 10);
      if (end != v && *end == '\0' && w >= 20) return static_cast<std::size_t>(w);
    }
  }
  return 100;
}

/// Breaks `text` at spaces so that no line (after `indent`) exceeds the width.
std::string wrap(const std::string& text, std::size_t indent) {
  const std::size_t width = output_width();
  if (indent + text.size() <= width) return text;
  std::ostringstream os;
  std::istringstream words(text);
  std::string w;
  std::size_t col = indent;
  bool first = true;
  while (words >> w) {
    if (!first && col + 1 + w.size() > width) {
      os << '\n' << std::string(indent, ' ');
      col = indent;
    } else if (!first) {
      os << ' ';
      ++col;
    }
    os << w;
    col += w.size();
    first = false;
  }
  return os.str();
}

std::string show_word(const Word& w) { return w.is_identity() ? "1" : w.to_string(); }

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent = "  ") {
  std::vector<std::string> cells;
  std::size_t wmax = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      cells.push_back(m(i, j).str());
      wmax = std::max(wmax, cells.back().size());
    }
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::string& c = cells[i * m.size() + j];
      os << (j ? " " : "") << std::string(wmax - c.size(), ' ') << c;
    }
    os << "]\n";
  }
}

struct MatrixInput {
  std::string compact;
  std::string file;
  std::int64_t n = 0;

  void add_to(CLI::App* cmd, bool allow_canonical) {
    auto* m = cmd->add_option("--matrix", compact, "matrix in row-semicolon form, e.g. \"0,-1;1,3\"");
    auto* f = cmd->add_option("--matrix-file", file, "JSON file holding an array of integer rows");
    m->excludes(f);
    if (allow_canonical) {
      auto* nn = cmd->add_option("--n", n, "use the canonical spectrum-free automorphism of rank n");
      nn->excludes(m)->excludes(f);
    }
  }

  IntMatrix get() const {
    if (!compact.empty()) return IntMatrix::parse_compact(compact);
    if (!file.empty()) return read_matrix_file(file);
    if (n != 0) return spectrum_free_automorphism(n);
    throw std::invalid_argument("a matrix is required (--matrix or --matrix-file)");
  }
};

void emit(bool json, const Json& doc, const std::string& text) {
  if (json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relfree: exact computations in free abelian, free metabelian and related groups"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single JSON document");

  MatrixInput snf_in, cp_in, qu_in, l22_in, lift_in;
  std::int64_t n = 0, m = 1, k = 1, rank = 2, modulus = 0, depth = 1;
  std::string word_text;
  bool center = false;
  ReportParams rp;

  auto* snf = app.add_subcommand("snf", "Smith normal form U*M*V = S");
  snf_in.add_to(snf, false);
  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial det(xI - M)");
  cp_in.add_to(cp, false);
  auto* qu = app.add_subcommand("quasi-unipotent", "decide whether M has a root-of-unity eigenvalue");
  qu_in.add_to(qu, false);
  auto* sf = app.add_subcommand("specfree-auto", "canonical unimodular matrix without root-of-unity eigenvalues");
  sf->add_option("--n", n, "rank (>= 2)")->required();
  auto* l22 = app.add_subcommand("lemma22", "index of m(M^k - I) Z^n in Z^n");
  l22_in.add_to(l22, true);
  l22->add_option("--m", m, "scale m >= 1")->capture_default_str();
  l22->add_option("--k", k, "power k >= 1")->capture_default_str();
  auto* wd = app.add_subcommand("word", "parse, reduce and abelianize a word");
  wd->add_option("--rank", rank, "free rank")->capture_default_str();
  wd->add_option("--word", word_text, "word, e.g. \"[x1,x2]^2 x3\"")->required();
  auto* mb = app.add_subcommand("metabelian", "word problem in M_n (--mod 0) or M_{k,n} (--mod k)");
  mb->add_option("--rank", rank, "free rank")->capture_default_str();
  mb->add_option("--mod", modulus, "0 for M_n, k >= 2 for M_{k,n}")->capture_default_str();
  mb->add_option("--word", word_text, "word")->required();
  mb->add_flag("--center", center, "also find x_i with [w, x_i] != 1 in M_n");
  auto* wr = app.add_subcommand("wreath", "lower central series witnesses in Z_k wr Z, or evaluate a word there");
  wr->add_option("--k", k, "base exponent k >= 2")->required();
  wr->add_option("--depth", depth, "iterated commutator depth")->capture_default_str();
  wr->add_option("--word", word_text, "evaluate this word under x1 -> a, x2 -> b");
  wr->add_option("--rank", rank, "rank of --word")->capture_default_str();
  auto* lf = app.add_subcommand("lift", "lift a unimodular matrix to an automorphism of F_n");
  lift_in.add_to(lf, true);
  lf->add_option("--word", word_text, "apply the lift to this word");
  auto* rep = app.add_subcommand("report", "proof skeleton report");
  rep->add_option("--n", rp.n, "rank n >= 2")->required();
  rep->add_option("--p", rp.p, "prime p")->capture_default_str();
  rep->add_option("--depth", rp.depth, "lower central series depth")->capture_default_str();
  rep->add_option("--m-max", rp.m_max, "largest m in the index table")->capture_default_str();
  rep->add_option("--k-max", rp.k_max, "largest k in the index table")->capture_default_str();
  rep->add_option("--samples", rp.samples, "sampled words per check")->capture_default_str();
  rep->add_option("--seed", rp.seed, "sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kBadInput;
  }

  try {
    std::ostringstream out;
    Json doc;

    if (*snf) {
      const IntMatrix mat = snf_in.get();
      const SmithDecomposition d = smith_normal_form(mat);
      doc = relfree::to_json(d);
      out << "S =\n";
      print_matrix(out, d.S);
      out << "U =\n";
      print_matrix(out, d.U);
      out << "V =\n";
      print_matrix(out, d.V);
      out << "invariant factors:";
      for (const auto& f : d.invariant_factors()) out << ' ' << f;
      out << '\n';
      if (d.U * mat * d.V != d.S) throw PropertyViolation("U*M*V != S");
    } else if (*cp) {
      const IntPolynomial p = char_poly(cp_in.get());
      doc = polynomial_to_json(p);
      out << p.to_string() << '\n';
    } else if (*qu) {
      const IntMatrix mat = qu_in.get();
      const SpectrumReport r = is_quasi_unipotent(mat);
      doc = relfree::to_json(r);
      doc["char_poly"] = char_poly(mat).to_string();
      out << "char poly: " << char_poly(mat).to_string() << '\n';
      out << "root-of-unity eigenvalue: " << (r.quasi_unipotent ? "yes" : "no") << '\n';
      for (const auto& w : r.witnesses) out << "  order " << w.order << ": gcd = " << w.gcd.to_string() << '\n';
    } else if (*sf) {
      const IntMatrix mat = spectrum_free_automorphism(n);
      const Integer det = determinant(mat);
      const SpectrumReport r = is_quasi_unipotent(mat);
      doc = Json{{"n", n},
                 {"matrix", matrix_to_json(mat)},
                 {"determinant", integer_to_json(det)},
                 {"char_poly", char_poly(mat).to_string()},
                 {"quasi_unipotent", r.quasi_unipotent}};
      print_matrix(out, mat, "");
      out << "det = " << det << "\nchar poly: " << char_poly(mat).to_string()
          << "\nroot-of-unity eigenvalue: " << (r.quasi_unipotent ? "yes" : "no") << '\n';
      if (abs(det) != 1 || r.quasi_unipotent) throw PropertyViolation("constructed matrix is not spectrum-free");
    } else if (*l22) {
      const IntMatrix mat = l22_in.get();
      const LatticeIndex idx = lemma22_index(mat, m, k);
      doc = Json{{"matrix", matrix_to_json(mat)}, {"m", m}, {"k", k}, {"index", relfree::to_json(idx)}};
      out << "index of " << m << "(M^" << k << " - I) Z^" << mat.size() << ": " << idx << '\n';
    } else if (*wd) {
      const Word w = parse_word(word_text, static_cast<std::size_t>(rank));
      const ExponentVector ab = abelianize(w);
      doc = Json{{"rank", rank}, {"word", w.to_string()}, {"length", w.length()}, {"abelianization", ab}};
      out << "reduced: " << wrap(show_word(w), 9) << "\nlength: " << w.length() << "\nabelianization: (";
      for (std::size_t i = 0; i < ab.size(); ++i) out << (i ? "," : "") << ab[i];
      out << ")\n";
    } else if (*mb) {
      const Word w = parse_word(word_text, static_cast<std::size_t>(rank));
      const MagnusElement e = magnus(w, modulus);
      const VerbalVerdict v = is_trivial(w, modulus);
      doc = Json{{"trivial", v.in_subgroup}, {"verdict", relfree::to_json(v)}, {"canonical_form", relfree::to_json(e)}};
      out << "trivial: " << (v.in_subgroup ? "true" : "false") << '\n';
      out << "abelianization: (";
      for (std::size_t i = 0; i < e.ab().size(); ++i) out << (i ? "," : "") << e.ab()[i];
      out << ")\n";
      for (std::size_t i = 0; i < e.fox().size(); ++i)
        out << "d/dx" << i + 1 << ": " << wrap(e.fox()[i].to_string(), 7) << '\n';
      if (center) {
        if (modulus != 0) throw std::invalid_argument("--center applies to M_n only (use --mod 0)");
        const auto i = center_witness(w);
        doc["center_witness"] = i;
        out << "[w, x" << i << "] != 1 in M_" << rank << '\n';
      }
      if (!e.satisfies_fox_identity()) throw PropertyViolation("fundamental Fox identity fails");
    } else if (*wr) {
      if (!word_text.empty()) {
        const Word w = parse_word(word_text, static_cast<std::size_t>(rank));
        const WreathElement e = eval_in_wreath(w, k);
        doc = relfree::to_json(e);
        doc["identity"] = e.is_identity();
        out << "identity: " << (e.is_identity() ? "true" : "false") << "\nshift: " << e.shift() << "\nsupport:";
        for (const auto& [pos, r] : e.support()) out << ' ' << pos << ':' << r;
        out << '\n';
      } else {
        const WreathElement e = lcs_witness(k, depth);
        doc = relfree::to_json(e);
        doc["depth"] = depth;
        doc["non_identity"] = !e.is_identity();
        out << "c_" << depth << " in Z_" << k << " wr Z: shift " << e.shift() << ", support";
        for (const auto& [pos, r] : e.support()) out << ' ' << pos << ':' << r;
        out << "\nnon-identity: " << (e.is_identity() ? "no" : "yes") << '\n';
      }
    } else if (*lf) {
      const IntMatrix mat = lift_in.get();
      const EndomorphismWords e = lift_matrix(mat);
      doc = relfree::to_json(e);
      for (std::size_t i = 0; i < e.rank; ++i)
        out << "x" << i + 1 << " -> " << wrap(show_word(e.images[i]), 6) << '\n';
      if (!word_text.empty()) {
        const Word w = parse_word(word_text, mat.size());
        const Word img = apply_endomorphism(e, w);
        doc["applied"] = Json{{"word", w.to_string()}, {"image", img.to_string()}};
        out << "image of " << show_word(w) << ": " << wrap(show_word(img), 12) << '\n';
      }
    } else if (*rep) {
      const SkeletonReport r = report(rp);
      emit(json, r.to_json(), r.to_text());
      return r.pass() ? kOk : kPropertyViolation;
    }

    emit(json, doc, out.str());
    return kOk;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violation: " << e.what() << '\n';
    return kPropertyViolation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "property violation: " << e.what() << '\n';
    return kPropertyViolation;
  }
}
