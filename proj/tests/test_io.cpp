#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "moufang/io.hpp"
#include "test_util.hpp"

using namespace moufang;
using moufang::test::code_of;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Loop parse_table(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

EdgeFile parse_edges(const std::string& text) {
  std::istringstream in(text);
  return read_edges(in);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("table round trip") {
  for (const Loop& l : {cyclic(1), generalized_octonion(2), chein_double(dihedral(3), 0)}) {
    std::ostringstream out;
    write_table(out, l);
    CHECK(parse_table(out.str()) == l);
  }
  std::ostringstream z2;
  write_table(z2, cyclic(2));
  CHECK(z2.str() == "2\n0 1\n1 0\n");
}

TEST_CASE("table parse errors carry line numbers") {
  CHECK(code_of([] { parse_table(""); }) == ErrorCode::ParseError);
  CHECK(message_of([] { parse_table("2\n0 1\n1 x\n"); }).find("line 3") != std::string::npos);
  CHECK(message_of([] { parse_table("2\n0 1\n"); }).find("line 3") != std::string::npos);
  CHECK(message_of([] { parse_table("2\n0 1 1\n1 0\n"); }).find("line 2") != std::string::npos);
  CHECK(code_of([] { parse_table("-1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_table("2\n0 1\n1 1\n"); }) == ErrorCode::NotLatinSquare);
}

TEST_CASE("octonion witness round trip") {
  const NumericLoopWitness w = generate_octonion_subloop(3);
  std::ostringstream out;
  write_octonion_witness(out, w);
  std::istringstream in(out.str());
  const NumericLoopWitness back = read_octonion_witness(in);
  CHECK(back.table == w.table);
  CHECK(back.elements == w.elements);
  CHECK(parse_table(out.str()) == w.table);
}

TEST_CASE("edge files") {
  const Graph g = undirected_power_graph(cyclic(5));
  std::ostringstream out;
  write_edges(out, g);
  CHECK(out.str().rfind("5 10 0\n", 0) == 0);
  const EdgeFile back = parse_edges(out.str());
  CHECK_FALSE(back.directed);
  CHECK(back.graph == g);

  const Digraph d = directed_power_graph(cyclic(2));
  std::ostringstream dout;
  write_edges(dout, d);
  CHECK(dout.str() == "2 1 1\n1 0\n");
  const EdgeFile dback = parse_edges(dout.str());
  CHECK(dback.directed);
  CHECK(dback.digraph == d);

  CHECK(message_of([] { parse_edges("3 2 0\n0 1\n"); }).find("line 3") != std::string::npos);
  CHECK(code_of([] { parse_edges("3 1 0\n0 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edges("3 1 2\n0 1\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("dot output") {
  const Loop o16 = generalized_octonion(2);
  std::ostringstream out;
  write_dot(out, undirected_power_graph(o16), element_names(o16));
  const std::string dot = out.str();
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(count(dot, " -- ") == undirected_power_graph(o16).edge_count());
  CHECK(count(dot, "label=") == 16);
  CHECK(dot.find("\"a^2u\"") != std::string::npos);
  std::ostringstream dout;
  write_dot(dout, directed_power_graph(cyclic(3)));
  CHECK(dout.str().rfind("digraph", 0) == 0);
  CHECK(count(dout.str(), " -> ") == 4);
  CHECK(element_names(validate_table({{0, 1}, {1, 0}})).empty());
}

TEST_CASE("corpus files and manifest") {
  const auto dir = std::filesystem::temp_directory_path() / "moufang_test_io_corpus";
  std::filesystem::remove_all(dir);
  const auto corpus = build_corpus(8);
  const auto lines = write_corpus(dir, corpus);
  REQUIRE(lines.size() == corpus.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines[i].label == corpus[i].label);
    CHECK(read_table_file(lines[i].path) == corpus[i].loop);
  }
  std::ostringstream out;
  write_manifest(out, lines);
  std::istringstream in(out.str());
  const auto back = read_manifest(in);
  REQUIRE(back.size() == lines.size());
  CHECK(back[3].label == lines[3].label);
  CHECK(back[3].order == lines[3].order);
  CHECK(back[3].path == lines[3].path);
  std::filesystem::remove_all(dir);
  CHECK(code_of([&] { read_table_file(dir / "missing.tbl"); }) == ErrorCode::IoError);
}
