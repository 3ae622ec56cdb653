#include "moufang/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace moufang {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      std::istringstream ss(text);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("unexpected end of input, expected " + what, line_ + 1);
    return tokens;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, line_); }
  [[noreturn]] static void fail(const std::string& msg, std::size_t line) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
  }

  long long integer(const std::string& token) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("'" + token + "' is not an integer");
    return value;
  }

  std::size_t count(const std::string& token) const {
    const long long v = integer(token);
    if (v < 0) fail("negative count " + token);
    return static_cast<std::size_t>(v);
  }

  double real(const std::string& token) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used == token.size()) return v;
    } catch (const std::exception&) {
    }
    fail("'" + token + "' is not a number");
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) fail("unexpected trailing content");
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

constexpr std::size_t kMaxTableOrder = 1 << 16;

Loop table_body(LineReader& reader, std::size_t n) {
  if (n == 0 || n > kMaxTableOrder) reader.fail("order " + std::to_string(n) + " out of range");
  std::vector<std::vector<long long>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tokens = reader.require("table row " + std::to_string(i));
    if (tokens.size() != n) {
      reader.fail("row " + std::to_string(i) + " has " + std::to_string(tokens.size()) + " entries, expected " +
                  std::to_string(n));
    }
    rows[i].reserve(n);
    for (const auto& t : tokens) {
      const long long v = reader.integer(t);
      if (v < 0 || static_cast<std::size_t>(v) >= n) reader.fail("entry " + t + " out of range");
      rows[i].push_back(v);
    }
  }
  return validate_table(rows);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return in;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void dot_nodes(std::ostream& out, std::size_t n, const std::vector<std::string>& names) {
  for (std::size_t v = 0; v < n; ++v) {
    out << "  " << v;
    if (!names.empty()) out << " [label=" << dot_quote(names[v]) << "]";
    out << ";\n";
  }
}

}  // namespace

void write_table(std::ostream& out, const Loop& loop) {
  const std::size_t n = loop.order();
  out << n << '\n';
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) out << (j ? " " : "") << loop.mul(i, j);
    out << '\n';
  }
}

Loop read_table(std::istream& in) {
  LineReader reader(in);
  const auto first = reader.require("order");
  if (first.size() == 9) {
    // Witness dump: skip the coordinates.
    std::size_t rows = 1;
    std::vector<std::string> tokens;
    while (true) {
      if (!reader.next(tokens)) reader.fail("witness dump has no table", reader.line() + 1);
      if (tokens.size() != 9) break;
      ++rows;
    }
    if (tokens.size() != 1) reader.fail("expected the table order");
    const std::size_t n = reader.count(tokens[0]);
    if (n != rows) reader.fail("witness lists " + std::to_string(rows) + " elements but the table has order " +
                               std::to_string(n));
    Loop loop = table_body(reader, n);
    reader.expect_end();
    return loop;
  }
  if (first.size() != 1) reader.fail("first line must hold the order");
  Loop loop = table_body(reader, reader.count(first[0]));
  reader.expect_end();
  return loop;
}

void write_table_file(const std::filesystem::path& path, const Loop& loop) {
  auto out = open_out(path);
  write_table(out, loop);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

Loop read_table_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_table(in);
}

void write_octonion_witness(std::ostream& out, const NumericLoopWitness& witness) {
  char buf[32];
  for (std::size_t i = 0; i < witness.elements.size(); ++i) {
    out << i;
    for (double c : witness.elements[i].c) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << ' ' << buf;
    }
    out << '\n';
  }
  write_table(out, witness.table);
}

NumericLoopWitness read_octonion_witness(std::istream& in) {
  LineReader reader(in);
  std::vector<Octon> elements;
  std::vector<std::string> tokens = reader.require("witness line");
  while (tokens.size() == 9) {
    if (reader.count(tokens[0]) != elements.size()) reader.fail("element index out of sequence");
    Octon o;
    for (std::size_t k = 0; k < 8; ++k) o.c[k] = reader.real(tokens[k + 1]);
    elements.push_back(o);
    tokens = reader.require("table order");
  }
  if (tokens.size() != 1) reader.fail("expected the table order");
  const std::size_t n = reader.count(tokens[0]);
  if (n != elements.size()) reader.fail("table order does not match the element count");
  Loop table = table_body(reader, n);
  reader.expect_end();
  return {std::move(elements), std::move(table)};
}

void write_edges(std::ostream& out, const Graph& graph) {
  const auto edges = graph.edges();
  out << graph.order() << ' ' << edges.size() << " 0\n";
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edges(std::ostream& out, const Digraph& digraph) {
  const auto arcs = digraph.arcs();
  out << digraph.order() << ' ' << arcs.size() << " 1\n";
  for (auto [u, v] : arcs) out << u << ' ' << v << '\n';
}

EdgeFile read_edges(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.require("header");
  if (header.size() != 3) reader.fail("header must be 'n m d'");
  const std::size_t n = reader.count(header[0]);
  const std::size_t m = reader.count(header[1]);
  const long long d = reader.integer(header[2]);
  if (d != 0 && d != 1) reader.fail("directed flag must be 0 or 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t k = 0; k < m; ++k) {
    const auto tokens = reader.require("edge " + std::to_string(k));
    if (tokens.size() != 2) reader.fail("edge line must be 'u v'");
    const std::size_t u = reader.count(tokens[0]);
    const std::size_t v = reader.count(tokens[1]);
    if (u >= n || v >= n) reader.fail("endpoint out of range");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  reader.expect_end();
  EdgeFile file;
  file.directed = d == 1;
  try {
    if (file.directed) {
      file.digraph = Digraph(n, pairs);
    } else {
      file.graph = Graph(n, pairs);
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return file;
}

EdgeFile read_edges_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edges(in);
}

void write_dot(std::ostream& out, const Graph& graph, const std::vector<std::string>& names) {
  out << "graph G {\n";
  dot_nodes(out, graph.order(), names);
  for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const Digraph& digraph, const std::vector<std::string>& names) {
  out << "digraph G {\n";
  dot_nodes(out, digraph.order(), names);
  for (auto [u, v] : digraph.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
}

std::vector<std::string> element_names(const Loop& loop) {
  std::vector<std::string> names;
  if (!loop.has_element_names()) return names;
  for (Elem x = 0; x < loop.order(); ++x) names.push_back(loop.element_name(x));
  return names;
}

std::vector<ManifestLine> write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<ManifestLine> lines;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto path = dir / (std::to_string(i) + ".tbl");
    write_table_file(path, corpus[i].loop);
    lines.push_back({corpus[i].label, corpus[i].order, path.string()});
  }
  return lines;
}

void write_manifest(std::ostream& out, const std::vector<ManifestLine>& lines) {
  for (const auto& l : lines) out << l.label << '\t' << l.order << '\t' << l.path << '\n';
}

std::vector<ManifestLine> read_manifest(std::istream& in) {
  std::vector<ManifestLine> lines;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (text.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = text.find('\t', start)) != std::string::npos; start = tab + 1)
      fields.push_back(text.substr(start, tab - start));
    fields.push_back(text.substr(start));
    if (fields.size() != 3) LineReader::fail("manifest line needs three tab-separated fields", line);
    std::size_t order = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), order);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      LineReader::fail("bad order '" + fields[1] + "'", line);
    }
    lines.push_back({fields[0], order, fields[2]});
  }
  return lines;
}

}  // namespace moufang
