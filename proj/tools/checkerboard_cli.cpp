// Command-line surface for the generalized checkerboard lattice library.
// Every command is deterministic: the same inputs give byte-identical output.
//
// Exit codes: 0 success, 2 invalid parameters, 3 unsatisfied precondition,
// 4 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "checkerboard/checkerboard.hpp"
#include "checkerboard/io.hpp"

namespace cb = checkerboard;
using cb::Int;
using cb::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct VerificationFailure {
  std::string detail;
};

enum class Format { markdown, json, csv };

Format parse_format(const std::string& s) {
  if (s == "markdown" || s == "md") return Format::markdown;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + s);
}

void emit_pairs(Format fmt, const std::vector<std::pair<std::string, std::string>>& pairs,
                const Json& as_json) {
  switch (fmt) {
    case Format::json:
      std::cout << as_json.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "key,value\n";
      for (const auto& [k, v] : pairs) std::cout << k << "," << v << "\n";
      break;
    case Format::markdown:
      for (const auto& [k, v] : pairs) std::cout << "- " << k << ": " << v << "\n";
      break;
  }
}

std::string signature_str(const cb::Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
         std::to_string(s.zero) + ")";
}

std::vector<std::string> identification_notes(const cb::LatticeParams& normalized) {
  std::vector<std::string> notes;
  const Int& k = normalized.k;
  const Int& m = normalized.m;
  const int n = normalized.n;
  if (k == 1 && m == 1) notes.push_back("Z^" + std::to_string(n));
  if (m == 2 * k - 1 && Int(n) == 4 * k && cb::det_lattice(normalized) == 1) {
    notes.push_back("D+_" + std::to_string(n));
    if (n == 24) notes.push_back("Niemeier lattice N(D_24)");
  }
  if (m == k + 1 && Int(n) == k * k + 2 * k && n == 24) {
    notes.push_back("Niemeier lattice N(A_24)");
  }
  return notes;
}

int cmd_info(std::int64_t k, std::int64_t m, std::int64_t n, bool normalize, Format fmt) {
  cb::LatticeParams p(Int(k), Int(m), static_cast<int>(n));
  if (normalize) p = cb::normalize_params(p);
  cb::LatticeParams norm = cb::normalize_params(p);
  Int det = cb::det_lattice(p);
  cb::Signature sig = cb::signature(p);
  cb::RootLatticeLabel label = cb::classify_root_lattice(p);
  bool even = p.k % 2 == 0;
  bool unimodular = det == 1 || det == -1;
  std::optional<cb::DetWitness> witness;
  if (norm.m >= 1 && norm.m <= norm.n - 1) witness = cb::unimodular_witness(norm);
  std::vector<std::string> notes = identification_notes(norm);

  Json j;
  j["k"] = cb::json_int(p.k);
  j["m"] = cb::json_int(p.m);
  j["n"] = p.n;
  j["det"] = cb::json_int(det);
  j["signature"] = {sig.positive, sig.negative, sig.zero};
  j["normalized"] = {{"k", cb::json_int(norm.k)}, {"m", cb::json_int(norm.m)}, {"n", norm.n}};
  j["root_lattice"] = label.name();
  if (!label.note.empty()) j["root_lattice_note"] = label.note;
  j["even"] = even;
  j["unimodular"] = unimodular;
  if (witness) {
    j["unimodular_witness"] = {{"p", cb::json_int(witness->p)}, {"q", cb::json_int(witness->q)}};
  }
  j["notes"] = notes;

  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.emplace_back("lattice", p.str());
  pairs.emplace_back("det", det.str());
  pairs.emplace_back("signature", signature_str(sig));
  pairs.emplace_back("normalized", norm.str());
  std::string label_str = label.name();
  if (!label.note.empty()) label_str += " (" + label.note + ")";
  pairs.emplace_back("root lattice", label_str);
  pairs.emplace_back("even", even ? "yes" : "no");
  std::string uni = unimodular ? "yes" : "no";
  if (witness) uni += " (p=" + witness->p.str() + ", q=" + witness->q.str() + ")";
  pairs.emplace_back("unimodular", uni);
  for (const std::string& note : notes) pairs.emplace_back("note", note);
  emit_pairs(fmt, pairs, j);
  return kExitOk;
}

int cmd_roots(std::int64_t k, std::int64_t m, std::int64_t n, bool list,
              std::optional<std::int64_t> bound, Format fmt) {
  cb::LatticeParams p(Int(k), Int(m), static_cast<int>(n));
  std::optional<Int> shell_bound;
  if (bound) shell_bound = Int(*bound);
  if (list) {
    std::vector<cb::LatticeVector> roots = cb::enumerate_roots(p, shell_bound);
    if (fmt == Format::json) {
      Json vecs = Json::array();
      for (const auto& r : roots) {
        Json row = Json::array();
        for (const Int& c : r.coords()) row.push_back(cb::json_int(c));
        vecs.push_back(row);
      }
      std::cout << Json{{"count", roots.size()}, {"vectors", vecs}}.dump(2) << "\n";
    } else {
      for (const auto& r : roots) {
        for (int i = 0; i < p.n; ++i) {
          if (i) std::cout << ' ';
          std::cout << r[i];
        }
        std::cout << "\n";
      }
      std::cout << "# count: " << roots.size() << "\n";
    }
    return kExitOk;
  }
  cb::ShellTable table = cb::root_table(p, shell_bound);
  switch (fmt) {
    case Format::json:
      std::cout << cb::io::shell_table_to_json(table).dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << cb::io::shell_table_to_csv(table);
      break;
    case Format::markdown:
      std::cout << cb::io::shell_table_to_markdown(table);
      break;
  }
  return kExitOk;
}

int cmd_weyl(std::int64_t k, std::int64_t m, std::int64_t n, Format fmt) {
  cb::LatticeParams p(Int(k), Int(m), static_cast<int>(n));
  cb::WeylOrder w = cb::weyl_order(p);
  Json chain = Json::array();
  std::string chain_str;
  for (const auto& [rank, c] : w.chain) {
    chain.push_back({{"c", cb::json_int(c)}, {"rank", rank}});
    if (!chain_str.empty()) chain_str += ' ';
    chain_str += "c_" + std::to_string(rank) + "=" + c.str();
  }
  Json j{{"chain", chain},
         {"family", w.family},
         {"order", cb::json_int(w.order)},
         {"seed", cb::json_int(w.seed)},
         {"seed_rank", w.seed_rank}};
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.emplace_back("family", w.family);
  pairs.emplace_back("order", w.order.str());
  pairs.emplace_back("chain", chain_str.empty() ? "(seed only)" : chain_str);
  pairs.emplace_back("seed", "|W| = " + w.seed.str() + " at rank " + std::to_string(w.seed_rank));
  emit_pairs(fmt, pairs, j);
  return kExitOk;
}

cb::Frame build_frame(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto arg = [&]() -> int {
    if (colon == std::string::npos) {
      throw std::invalid_argument("design spec " + name + " needs an argument, e.g. " + name +
                                  ":2");
    }
    return std::stoi(spec.substr(colon + 1));
  };
  if (name == "fano") return cb::frame_from_design(cb::fano());
  if (name == "hadamard-sylvester") {
    return cb::frame_from_design(cb::design_from_hadamard(cb::sylvester_hadamard(arg())));
  }
  if (name == "hadamard-paley") {
    return cb::frame_from_design(cb::design_from_hadamard(cb::paley_hadamard(arg())));
  }
  if (name == "dplus") return cb::dplus_frame(arg());
  if (name == "dn") return cb::dn_frame(arg());
  if (name == "e8") return cb::e8_frame();
  throw std::invalid_argument("unknown design spec: " + spec);
}

int cmd_frame(const std::string& design, const std::string& design_file,
              const std::string& out_prefix, const std::string& check_file,
              std::vector<std::int64_t> lattice, std::optional<std::int64_t> norm, Format fmt) {
  cb::Frame frame = [&]() {
    if (!check_file.empty()) {
      if (lattice.size() != 3) {
        throw std::invalid_argument("--check requires --lattice k m n");
      }
      cb::LatticeParams p{Int(lattice[0]), Int(lattice[1]), static_cast<int>(lattice[2])};
      std::optional<Int> want_norm;
      if (norm) want_norm = Int(*norm);
      return cb::io::read_frame_file(check_file, p, want_norm);
    }
    if (!design_file.empty()) {
      std::ifstream in(design_file);
      if (!in) throw std::invalid_argument("cannot open " + design_file);
      Json j = Json::parse(in);
      return cb::frame_from_design(cb::io::design_from_json(j));
    }
    return build_frame(design);
  }();
  cb::FrameCheck check = cb::verify_frame(frame);
  if (!out_prefix.empty() && check.ok) cb::io::write_frame_files(out_prefix, frame);
  if (fmt == Format::json) {
    Json j{{"lattice",
            {{"k", cb::json_int(frame.params.k)},
             {"m", cb::json_int(frame.params.m)},
             {"n", frame.params.n}}},
           {"norm", cb::json_int(frame.norm)},
           {"vectors", frame.vectors.size()},
           {"verified", check.ok}};
    if (!check.ok) j["detail"] = check.detail;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lattice: " << frame.params.str() << "\n";
    std::cout << "vectors: " << frame.vectors.size() << " of squared norm " << frame.norm
              << "\n";
    std::cout << "verified: " << (check.ok ? "yes" : ("no (" + check.detail + ")")) << "\n";
  }
  if (!check.ok) throw VerificationFailure{check.detail};
  return kExitOk;
}

int cmd_solve_det(std::int64_t d, std::int64_t k, int max_n, Format fmt) {
  auto sols = cb::solve_det_equation(Int(d), Int(k), max_n);
  if (fmt == Format::json) {
    Json rows = Json::array();
    for (const auto& s : sols) {
      rows.push_back({{"m", cb::json_int(s.m)},
                      {"n", s.n},
                      {"p", cb::json_int(s.witness.p)},
                      {"q", cb::json_int(s.witness.q)}});
    }
    std::cout << Json{{"count", sols.size()}, {"solutions", rows}}.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "m,n,p,q\n";
    for (const auto& s : sols) {
      std::cout << s.m << "," << s.n << "," << s.witness.p << "," << s.witness.q << "\n";
    }
  } else {
    std::cout << "| m | n | p | q |\n|---:|---:|---:|---:|\n";
    for (const auto& s : sols) {
      std::cout << "| " << s.m << " | " << s.n << " | " << s.witness.p << " | " << s.witness.q
                << " |\n";
    }
    std::cout << "count: " << sols.size() << "\n";
  }
  return kExitOk;
}

int cmd_unimodular(std::int64_t n, bool even, Format fmt) {
  auto params = cb::enumerate_unimodular(static_cast<int>(n), even);
  if (fmt == Format::json) {
    Json rows = Json::array();
    for (const auto& p : params) {
      rows.push_back({{"k", cb::json_int(p.k)}, {"m", cb::json_int(p.m)}, {"n", p.n}});
    }
    std::cout << Json{{"count", params.size()}, {"lattices", rows}}.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "k,m,n\n";
    for (const auto& p : params) std::cout << p.k << "," << p.m << "," << p.n << "\n";
  } else {
    std::cout << "| k | m | n |\n|---:|---:|---:|\n";
    for (const auto& p : params) {
      std::cout << "| " << p.k << " | " << p.m << " | " << p.n << " |\n";
    }
    std::cout << "count: " << params.size() << "\n";
  }
  return kExitOk;
}

int cmd_recognize(const std::string& gram_file, const std::string& sub_file, bool normalize) {
  cb::AbstractLattice lattice(cb::io::read_gram_file(gram_file));
  cb::IntMatrix rows = cb::io::read_rows_file(sub_file);
  cb::SublatticeEmbedding sub{rows};
  cb::RecognitionResult r = cb::recognize(lattice, sub);
  if (!cb::certify(lattice, sub, r)) {
    throw VerificationFailure{"recognition result failed certification"};
  }
  Json u = Json::array();
  for (std::size_t i = 0; i < r.transform.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.transform.cols(); ++j) {
      row.push_back(cb::json_int(r.transform(i, j)));
    }
    u.push_back(row);
  }
  Json j{{"U", u}, {"k", cb::json_int(r.k)}, {"m", r.m}};
  if (normalize) {
    cb::LatticeParams norm =
        cb::normalize_params(cb::LatticeParams(r.k, Int(r.m), lattice.rank()));
    j["normalized"] = {{"k", cb::json_int(norm.k)}, {"m", cb::json_int(norm.m)}, {"n", norm.n}};
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for the generalized checkerboard lattices L(k,m,n)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "markdown";
  app.add_option("--format", format, "Output format: markdown, json, or csv")
      ->capture_default_str();

  std::int64_t k = 0, m = 0, n = 0, d = 0;
  bool normalize = false, list = false, even = false;
  std::optional<std::int64_t> bound, norm;
  int max_n = 40;
  std::string design, design_file, out_prefix, check_file, gram_file, sub_file;
  std::vector<std::int64_t> lattice_args;

  CLI::App* info = app.add_subcommand("info", "Determinant, signature, and classification");
  info->add_option("k", k)->required();
  info->add_option("m", m)->required();
  info->add_option("n", n)->required();
  info->add_flag("--normalize", normalize, "Report on the normalized parameters");

  CLI::App* roots = app.add_subcommand("roots", "Norm-2 vectors by latitude shell and shape");
  roots->add_option("k", k)->required();
  roots->add_option("m", m)->required();
  roots->add_option("n", n)->required();
  roots->add_flag("--list", list, "List the vectors instead of the shell table");
  roots->add_option("--bound", bound, "Latitude shell bound |h| (required when indefinite)");

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group order via the orbit recursion");
  weyl->add_option("k", k)->required();
  weyl->add_option("m", m)->required();
  weyl->add_option("n", n)->required();

  CLI::App* frame = app.add_subcommand("frame", "Construct or re-check orthogonal frames");
  frame->add_option("--design", design,
                    "fano | hadamard-sylvester:t | hadamard-paley:q | dplus:k | dn:n | e8");
  frame->add_option("--design-file", design_file, "Symmetric design as JSON {\"n\":, \"blocks\": [[..]]}");
  frame->add_option("--out", out_prefix, "Write <prefix>.gram.txt and <prefix>.vectors.txt");
  frame->add_option("--check", check_file, "Re-verify a saved frame vector file");
  frame->add_option("--lattice", lattice_args, "k m n of the checked frame")->expected(3);
  frame->add_option("--norm", norm, "Expected squared norm of the checked frame");

  CLI::App* solve = app.add_subcommand("solve-det", "All (m,n) with det L(k,m,n) = d");
  solve->add_option("d", d)->required();
  solve->add_option("k", k)->required();
  solve->add_option("--max-n", max_n, "Largest rank to report")->capture_default_str();

  CLI::App* uni = app.add_subcommand("unimodular",
                                     "Positive-definite unimodular parameters of rank n");
  uni->add_option("n", n)->required();
  uni->add_flag("--even", even, "Only even lattices (k even)");

  CLI::App* rec = app.add_subcommand("recognize",
                                     "Recognize L(k,m,n) from a Gram matrix and an A_{n-1} "
                                     "sublattice");
  rec->add_option("--gram", gram_file, "Gram-matrix text file")->required();
  rec->add_option("--sub", sub_file, "Sublattice file: n-1 rows of n integers")->required();
  rec->add_flag("--normalize", normalize, "Also report normalized parameters");

  try {
    app.parse(argc, argv);
    Format fmt = parse_format(format);
    if (info->parsed()) return cmd_info(k, m, n, normalize, fmt);
    if (roots->parsed()) return cmd_roots(k, m, n, list, bound, fmt);
    if (weyl->parsed()) return cmd_weyl(k, m, n, fmt);
    if (frame->parsed()) {
      if (design.empty() && design_file.empty() && check_file.empty()) {
        throw std::invalid_argument("frame requires --design, --design-file, or --check");
      }
      return cmd_frame(design, design_file, out_prefix, check_file, lattice_args, norm, fmt);
    }
    if (solve->parsed()) return cmd_solve_det(d, k, max_n, fmt);
    if (uni->parsed()) return cmd_unimodular(n, even, fmt);
    if (rec->parsed()) return cmd_recognize(gram_file, sub_file, normalize);
    return kExitInvalidParams;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidParams;
  } catch (const VerificationFailure& v) {
    std::cerr << "verification failed: " << v.detail << "\n";
    return kExitVerification;
  } catch (const cb::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const cb::PreconditionError& e) {
    std::cerr << "precondition not satisfied: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  }
}
