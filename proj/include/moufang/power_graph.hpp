#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

using Vertex = std::uint32_t;

/// Simple directed graph: no self-loops, sorted out-neighbour lists.
class Digraph {
 public:
  Digraph() = default;
  /// Builds from arcs; duplicates are merged. Throws InvalidArgument on
  /// self-loops or out-of-range endpoints.
  Digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept;
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  bool has_arc(Vertex from, Vertex to) const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
};

/// Simple undirected graph: symmetric sorted adjacency, no self-loops.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Each edge once, as (smaller, larger).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  static Graph complete(std::size_t n);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Arc x -> y (x != y) whenever y lies in <x>. Throws NotPowerAssociative.
Digraph directed_power_graph(const Loop& loop);

/// Edge x -- y whenever one is a power of the other.
Graph undirected_power_graph(const Loop& loop);

/// Forgets arc directions.
Graph underlying(const Digraph& digraph);

/// Vertices of degree n - 1.
std::vector<Vertex> universal_vertices(const Graph& graph);

/// Largest graph order accepted by max_clique.
inline constexpr std::size_t kMaxCliqueOrder = 256;

/// Exact clique number. Throws OrderTooLarge above 256 vertices.
std::size_t max_clique(const Graph& graph);

/// Classes of vertices with equal closed neighbourhoods, each sorted, ordered
/// by smallest member.
std::vector<std::vector<Vertex>> closed_twin_classes(const Graph& graph);

}  // namespace moufang
