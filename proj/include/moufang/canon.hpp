#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/power_graph.hpp"

namespace moufang {

/// Largest vertex count accepted by canonical_form.
inline constexpr std::size_t kMaxCanonOrder = 512;

/// Relabeling-invariant encoding of a graph or digraph: four bytes of vertex
/// count (big endian), one directedness byte, then the adjacency matrix of the
/// canonically relabeled graph packed MSB-first (upper triangle row by row for
/// graphs, all off-diagonal entries row by row for digraphs).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form plus the labeling producing it: vertex v sits at canonical
/// position labeling[v].
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> labeling;
};

/// Individualization-refinement search over equitable partitions, pruned by
/// automorphisms discovered along the way; keeps the least adjacency encoding.
CanonicalLabeling canonical_labeling(const Graph& graph);
CanonicalLabeling canonical_labeling(const Digraph& digraph);

inline CanonicalForm canonical_form(const Graph& graph) { return canonical_labeling(graph).form; }
inline CanonicalForm canonical_form(const Digraph& digraph) { return canonical_labeling(digraph).form; }

bool are_isomorphic(const Graph& a, const Graph& b);
bool are_isomorphic(const Digraph& a, const Digraph& b);

/// An isomorphism from `a` onto `b` mapping vertex v to result[v], if any.
std::optional<std::vector<Vertex>> graph_isomorphism(const Graph& a, const Graph& b);

/// A multiplication-preserving bijection from `a` onto `b` (result[x] is the
/// image of x), found by backtracking over images of a greedy generating set.
/// Throws OrderTooLarge above order 128.
std::optional<std::vector<Elem>> loop_isomorphic(const Loop& a, const Loop& b);

/// Greedy generating set: repeatedly adjoin the element whose closure with the
/// current set grows most (ties to the smallest index).
std::vector<Elem> greedy_generators(const Loop& loop);

/// Whether `map` is a bijection from `a` onto `b` preserving multiplication.
bool is_loop_isomorphism(const Loop& a, const Loop& b, const std::vector<Elem>& map);

}  // namespace moufang
