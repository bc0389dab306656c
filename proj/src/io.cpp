#include "hyperspec/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hyperspec {

namespace {

bool content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("uhg: line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Hypergraph read_uhg(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!content_line(in, line, line_no)) {
    throw ParseError("uhg: missing header line `k n m`");
  }
  int k = 0, n = 0, m = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> k >> n >> m) || (head >> extra)) {
      fail(line_no, "expected header `k n m`");
    }
  }
  if (n < 0 || m < 0 || k < 0 || (k == 0 && m > 0)) fail(line_no, "bad header values");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!content_line(in, line, line_no)) {
      fail(line_no, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    }
    std::istringstream row(line);
    Edge e;
    int v = 0;
    while (row >> v) e.push_back(v);
    if (!row.eof()) fail(line_no, "non-integer token in edge line");
    if (static_cast<int>(e.size()) != k) {
      fail(line_no, "expected " + std::to_string(k) + " vertex indices, got " +
                        std::to_string(e.size()));
    }
    edges.push_back(std::move(e));
  }
  if (content_line(in, line, line_no)) fail(line_no, "trailing content after edge lines");
  try {
    return build(n, std::move(edges), k > 0 ? std::optional<int>(k) : std::nullopt);
  } catch (const Error& ex) {
    throw ParseError(std::string("uhg: ") + ex.what());
  }
}

Hypergraph read_uhg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("uhg: cannot open " + path);
  return read_uhg(in);
}

void write_uhg(std::ostream& out, const Hypergraph& g) {
  int k = 0;
  if (g.k) {
    k = *g.k;
  } else if (!g.edges.empty()) {
    throw NotUniform("write_uhg: non-uniform hypergraphs have no .uhg form");
  }
  out << k << " " << g.n << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges) {
    for (size_t j = 0; j < e.size(); ++j) {
      if (j) out << " ";
      out << e[j];
    }
    out << "\n";
  }
}

void write_uhg_file(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("uhg: cannot open " + path + " for writing");
  write_uhg(out, g);
}

Hypergraph hypergraph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("json: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("json: expected {\"n\": int, \"edges\": [[int,...],...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
  return build(j.at("n").get<int>(), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& g) {
  std::ostringstream out;
  out << "{\"n\":" << g.n << ",\"edges\":[";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (size_t j = 0; j < g.edges[i].size(); ++j) {
      if (j) out << ",";
      out << g.edges[i][j];
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const SpectralResult& r) {
  std::ostringstream out;
  out << "{\"rho\":" << fmt_double(r.rho) << ",\"perron\":[";
  for (size_t i = 0; i < r.perron.size(); ++i) {
    if (i) out << ",";
    out << fmt_double(r.perron[i]);
  }
  out << "],\"residual\":" << fmt_double(r.residual)
      << ",\"iterations\":" << r.iterations << "}";
  return out.str();
}

std::string to_csv(const DistanceMatrix& d) {
  std::ostringstream out;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (j) out << ",";
      out << d(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hyperspec
