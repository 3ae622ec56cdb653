#include "moufang/power_graph.hpp"

#include <algorithm>
#include <bitset>
#include <map>

namespace moufang {

namespace {

void check_endpoint(std::size_t n, Vertex a, Vertex b) {
  if (a >= n || b >= n) {
    throw Error(ErrorCode::InvalidArgument,
                "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") leaves the vertex range");
  }
  if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(a));
}

void sort_unique(std::vector<std::vector<Vertex>>& lists) {
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

}  // namespace

Digraph::Digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) : out_(n) {
  for (auto [a, b] : arcs) {
    check_endpoint(n, a, b);
    out_[a].push_back(b);
  }
  sort_unique(out_);
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t m = 0;
  for (const auto& l : out_) m += l.size();
  return m;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < out_.size(); ++v)
    for (Vertex w : out_[v]) out.emplace_back(v, w);
  return out;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adj_(n) {
  for (auto [a, b] : edges) {
    check_endpoint(n, a, b);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  sort_unique(adj_);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& l : adj_) m += l.size();
  return m / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < adj_.size(); ++v)
    for (Vertex w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Digraph directed_power_graph(const Loop& loop) {
  if (!is_power_associative(loop)) {
    throw Error(ErrorCode::NotPowerAssociative, "power graphs need every <x> to be a group");
  }
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Elem x = 0; x < loop.order(); ++x) {
    const Subloop powers = subloop_closure(loop, {x});
    for (Elem y : powers.elements())
      if (y != x) arcs.emplace_back(x, y);
  }
  return Digraph(loop.order(), arcs);
}

Graph underlying(const Digraph& digraph) { return Graph(digraph.order(), digraph.arcs()); }

Graph undirected_power_graph(const Loop& loop) { return underlying(directed_power_graph(loop)); }

std::vector<Vertex> universal_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  const std::size_t n = graph.order();
  for (Vertex v = 0; v < n; ++v)
    if (graph.degree(v) + 1 == n) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> closed_twin_classes(const Graph& graph) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < graph.order(); ++v) {
    std::vector<Vertex> closed = graph.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    by_neighborhood[std::move(closed)].push_back(v);
  }
  std::vector<std::vector<Vertex>> classes;
  for (auto& [_, members] : by_neighborhood) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end());
  return classes;
}

namespace {

using Bits = std::bitset<kMaxCliqueOrder>;

// Branch and bound with a greedy colouring bound, in the style of Tomita's MCQ.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()), adj_(g.order()) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v].set(w);
  }

  std::size_t run() {
    Bits all;
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(Bits candidates, std::size_t depth) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(candidates, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (depth + bound[k] <= best_) return;
      const Vertex v = order[k];
      const Bits next = candidates & adj_[v];
      if (next.none()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(next, depth + 1);
      }
      candidates.reset(v);
    }
  }

  // Greedy colouring; bound[k] is the number of colours used up to order[k].
  void color_sort(const Bits& candidates, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bits available = uncolored;
      while (available.any()) {
        const Vertex v = static_cast<Vertex>(first_set(available));
        available.reset(v);
        available &= ~adj_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  std::size_t first_set(const Bits& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (b.test(i)) return i;
    return n_;
  }

  std::size_t n_;
  std::vector<Bits> adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t max_clique(const Graph& graph) {
  if (graph.order() > kMaxCliqueOrder) {
    throw Error(ErrorCode::OrderTooLarge, "max_clique is limited to " + std::to_string(kMaxCliqueOrder) + " vertices");
  }
  if (graph.order() == 0) return 0;
  return CliqueSearch(graph).run();
}

}  // namespace moufang
