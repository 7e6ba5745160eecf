#include "attralign/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "attralign/errors.hpp"

namespace attralign {

namespace {

std::vector<std::string> split_tokens(const std::string& line, bool comma_only) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    const bool sep = comma_only ? (c == ',') : (c == ',' || c == ' ' || c == '\t' || c == '\r');
    if (sep) {
      if (comma_only || !cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (comma_only || !cur.empty()) tokens.push_back(cur);
  return tokens;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

bool parse_int(const std::string& s, long& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtol(t.c_str(), &end, 10);
  return end == t.c_str() + t.size();
}

}  // namespace

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  std::vector<Edge> edges;
  int max_node = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto tokens = split_tokens(t, /*comma_only=*/false);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 'i j [w]', got '" + t + "'");
    }
    long i = 0, j = 0;
    if (!parse_int(tokens[0], i) || !parse_int(tokens[1], j) || i < 0 || j < 0) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": node ids must be nonnegative integers");
    }
    double w = 1.0;
    if (tokens.size() == 3 && !parse_double(tokens[2], w)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad weight '" +
                       tokens[2] + "'");
    }
    if (i == j) {
      throw ValidationError(path + ":" + std::to_string(line_no) +
                            ": self-loop at node " + std::to_string(i));
    }
    if (w < 0.0) {
      throw ValidationError(path + ":" + std::to_string(line_no) +
                            ": negative edge weight");
    }
    edges.push_back({static_cast<int>(i), static_cast<int>(j), w});
    max_node = std::max(max_node, static_cast<int>(std::max(i, j)));
  }
  return Graph::from_edges(max_node + 1, edges);
}

void save_edge_list(const Graph& g, const std::string& path,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list: " + path);
  for (const auto& c : comments) out << "# " << c << "\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
    out << e.i << " " << e.j << " " << buf << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

AttributeMatrix load_attributes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open attribute CSV: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  int n_cols = -1;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_tokens(line, /*comma_only=*/true);
    std::vector<double> row(cells.size());
    int bad_col = -1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_double(cells[c], row[c])) {
        bad_col = static_cast<int>(c);
        break;
      }
    }
    if (first_content_row && bad_col == 0 && cells.size() >= 1) {
      // All-non-numeric first row is a header.
      bool all_non_numeric = true;
      double tmp;
      for (const auto& cell : cells) {
        if (parse_double(cell, tmp)) {
          all_non_numeric = false;
          break;
        }
      }
      if (all_non_numeric) {
        first_content_row = false;
        continue;
      }
    }
    first_content_row = false;
    if (bad_col >= 0) {
      throw ParseError(path + ": non-numeric cell at row " +
                       std::to_string(rows.size() + 1) + " col " +
                       std::to_string(bad_col + 1));
    }
    if (n_cols < 0) {
      n_cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != n_cols) {
      throw ParseError(path + ": ragged row " + std::to_string(rows.size() + 1) +
                       " has " + std::to_string(row.size()) + " cells, expected " +
                       std::to_string(n_cols));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError(path + ": no attribute rows");
  AttributeMatrix x(static_cast<int>(rows.size()), n_cols);
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < n_cols; ++j) x(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (double v : x.data) {
    if (!std::isfinite(v)) throw ValidationError(path + ": non-finite attribute value");
  }
  return x;
}

void save_attributes(const AttributeMatrix& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write attribute CSV: " + path);
  char buf[64];
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", x(i, j));
      out << buf << (j + 1 < x.cols() ? "," : "");
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

Partition load_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open partition file: " + path);
  std::vector<int> labels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    long v = 0;
    if (!parse_int(t, v)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad label '" + t + "'");
    }
    if (v < 0) {
      throw ValidationError(path + ":" + std::to_string(line_no) + ": negative label");
    }
    labels.push_back(static_cast<int>(v));
  }
  if (labels.empty()) throw ValidationError(path + ": no labels");
  return Partition::from_labels(std::move(labels));
}

void save_partition(const Partition& z, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write partition file: " + path);
  for (int v : z.labels) out << v << "\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace attralign
