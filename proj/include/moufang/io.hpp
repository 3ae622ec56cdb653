#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "moufang/constructions.hpp"
#include "moufang/octonion.hpp"
#include "moufang/power_graph.hpp"

namespace moufang {

// ".tbl": line 1 is n, then n rows of n 0-based indices, row i holding i*0 .. i*(n-1).
// Parse failures throw ParseError with the offending line number; tables that
// parse but are not loops throw the core_algebra validation errors.

void write_table(std::ostream& out, const Loop& loop);
/// Also accepts an octonion witness dump and returns its table.
Loop read_table(std::istream& in);

void write_table_file(const std::filesystem::path& path, const Loop& loop);
Loop read_table_file(const std::filesystem::path& path);

/// One "index c0 .. c7" line per element (17 significant digits), then the table.
void write_octonion_witness(std::ostream& out, const NumericLoopWitness& witness);
NumericLoopWitness read_octonion_witness(std::istream& in);

// ".edg": "n m d" with d = 1 for directed, then m lines "u v".

struct EdgeFile {
  bool directed = false;
  Graph graph;      ///< set when !directed
  Digraph digraph;  ///< set when directed
};

void write_edges(std::ostream& out, const Graph& graph);
void write_edges(std::ostream& out, const Digraph& digraph);
EdgeFile read_edges(std::istream& in);
EdgeFile read_edges_file(const std::filesystem::path& path);

/// Graphviz output. Vertex v is labelled names[v] when names is non-empty.
void write_dot(std::ostream& out, const Graph& graph, const std::vector<std::string>& names = {});
void write_dot(std::ostream& out, const Digraph& digraph, const std::vector<std::string>& names = {});

/// Element names of a loop when it carries them, else empty.
std::vector<std::string> element_names(const Loop& loop);

struct ManifestLine {
  std::string label;
  std::size_t order = 0;
  std::string path;
};

/// Writes every entry to `dir/<index>.tbl` and returns the "label<TAB>order<TAB>path" lines.
std::vector<ManifestLine> write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus);
void write_manifest(std::ostream& out, const std::vector<ManifestLine>& lines);
std::vector<ManifestLine> read_manifest(std::istream& in);

}  // namespace moufang
