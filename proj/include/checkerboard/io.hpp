#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "checkerboard/designs.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/numeric.hpp"
#include "checkerboard/roots.hpp"

#include "json.hpp"

namespace checkerboard {

using Json = nlohmann::json;  // std::map-backed: object keys come out sorted

/// JSON value for an exact integer: a number when it fits 64 bits, otherwise
/// a decimal string.
inline Json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

namespace io {

inline std::vector<std::vector<Int>> read_integer_rows(std::istream& in) {
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

/// Gram-matrix text format: first value n, then n rows of n integers;
/// '#' starts a comment.
inline IntMatrix read_gram(std::istream& in) {
  auto rows = read_integer_rows(in);
  if (rows.empty() || rows.front().size() != 1) {
    throw std::invalid_argument("gram file must start with the order n on its own line");
  }
  const int n = static_cast<int>(rows.front().front());
  if (n < 1) throw std::invalid_argument("gram order must be positive");
  IntMatrix g(n, n);
  // Accept the n*n entries row-major regardless of line breaks after line 1.
  std::vector<Int> flat;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  if (static_cast<int>(flat.size()) != n * n) {
    throw std::invalid_argument("gram file must contain n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = flat[i * n + j];
  }
  return g;
}

inline IntMatrix read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_gram(in);
}

inline void write_gram(std::ostream& out, const IntMatrix& g) {
  out << g.rows() << '\n' << g;
}

inline void write_gram_file(const std::string& path, const IntMatrix& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  write_gram(out, g);
}

/// Free-form integer matrix (one row per line), e.g. the sublattice file.
inline IntMatrix read_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  auto rows = read_integer_rows(in);
  if (rows.empty()) throw std::invalid_argument(path + " contains no rows");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw std::invalid_argument(path + " has ragged rows");
    }
  }
  return from_rows(rows);
}

inline Json design_to_json(const SymmetricDesign& d) {
  Json j;
  j["n"] = d.n;
  j["blocks"] = Json::array();
  for (const auto& b : d.blocks) j["blocks"].push_back(b);
  return j;
}

inline SymmetricDesign design_from_json(const Json& j) {
  SymmetricDesign d;
  d.n = j.at("n").get<int>();
  for (const auto& b : j.at("blocks")) {
    d.blocks.push_back(b.get<std::vector<int>>());
  }
  return d;
}

inline Json shell_table_to_json(const ShellTable& t) {
  Json rows = Json::array();
  for (const ShellRow& r : t.rows) {
    Json shape;
    for (const auto& [j, d] : r.shape.counts) shape[std::to_string(j)] = d;
    rows.push_back(Json{{"count", json_int(r.count)},
                        {"latitude", json_int(r.latitude)},
                        {"shape", shape}});
  }
  return Json{{"rows", rows}, {"total", json_int(t.total)}};
}

/// Markdown table: latitude, shape, number, with a trailing total row.
inline std::string shell_table_to_markdown(const ShellTable& t) {
  std::ostringstream out;
  out << "| latitude | shape | number |\n";
  out << "|---:|:---|---:|\n";
  for (const ShellRow& r : t.rows) {
    out << "| " << r.latitude << " | " << r.shape.str() << " | " << r.count << " |\n";
  }
  out << "| | total | " << t.total << " |\n";
  return out.str();
}

inline std::string shell_table_to_csv(const ShellTable& t) {
  std::ostringstream out;
  out << "latitude,shape,count\n";
  for (const ShellRow& r : t.rows) {
    out << r.latitude << "," << r.shape.str() << "," << r.count << "\n";
  }
  out << "total,," << t.total << "\n";
  return out.str();
}

inline void write_frame_files(const std::string& prefix, const Frame& f) {
  const int n = f.params.n;
  IntMatrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gram(i, j) = inner_int(f.params, f.vectors[i], f.vectors[j]);
  }
  write_gram_file(prefix + ".gram.txt", gram);
  std::ofstream out(prefix + ".vectors.txt");
  if (!out) throw std::invalid_argument("cannot open " + prefix + ".vectors.txt for writing");
  for (const LatticeVector& v : f.vectors) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << v[j];
    }
    out << '\n';
  }
}

/// Reads a frame back from its vector list for re-verification.
inline Frame read_frame_file(const std::string& path, const LatticeParams& params,
                             std::optional<Int> norm = std::nullopt) {
  IntMatrix rows = read_rows_file(path);
  if (static_cast<int>(rows.cols()) != params.n) {
    throw std::invalid_argument("frame vectors have dimension " + std::to_string(rows.cols()) +
                                ", expected " + std::to_string(params.n));
  }
  Frame f{params, Int(0), {}};
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    f.vectors.push_back(LatticeVector(rows.row(i)));
  }
  if (norm) {
    f.norm = *norm;
  } else if (!f.vectors.empty()) {
    Rat first = inner(params, f.vectors.front(), f.vectors.front());
    f.norm = is_integer(first) ? numerator(first) : Int(0);
  }
  return f;
}

}  // namespace io
}  // namespace checkerboard
