#include "moufang/canon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace moufang {

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

struct Leaf {
  std::vector<Vertex> vertex_at;  // canonical position -> vertex
  std::vector<Vertex> path;       // individualized vertices leading here
  std::vector<std::uint8_t> cert;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(Vertex a, Vertex b) { parent_[find(a)] = find(b); }

 private:
  std::vector<Vertex> parent_;
};

class Canonizer {
 public:
  Canonizer(std::vector<std::vector<Vertex>> out, std::vector<std::vector<Vertex>> in, bool directed)
      : n_(out.size()), out_(std::move(out)), in_(std::move(in)), directed_(directed), adj_(n_ * n_, 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : out_[v]) adj_[v * n_ + w] = 1;
  }

  CanonicalLabeling run() {
    CanonicalLabeling result;
    result.form.bytes = header();
    if (n_ == 0) return result;
    Cells cells{std::vector<Vertex>(n_)};
    std::iota(cells[0].begin(), cells[0].end(), Vertex{0});
    search(std::move(cells));
    result.form.bytes.insert(result.form.bytes.end(), best_->cert.begin(), best_->cert.end());
    result.labeling.assign(n_, 0);
    for (Vertex pos = 0; pos < n_; ++pos) result.labeling[best_->vertex_at[pos]] = pos;
    return result;
  }

 private:
  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

  std::vector<std::uint8_t> header() const {
    return {static_cast<std::uint8_t>(n_ >> 24), static_cast<std::uint8_t>(n_ >> 16),
            static_cast<std::uint8_t>(n_ >> 8), static_cast<std::uint8_t>(n_), static_cast<std::uint8_t>(directed_)};
  }

  // Splits cells by neighbour counts per cell until the partition is
  // equitable. Sub-cells are ordered by signature, so the result depends only
  // on structure and cell positions, never on vertex labels.
  void refine(Cells& cells) const {
    std::vector<std::uint32_t> cell_of(n_);
    while (true) {
      for (std::uint32_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint32_t> sig;
          sig.reserve(out_[v].size() + (directed_ ? in_[v].size() + 1 : 0));
          for (Vertex w : out_[v]) sig.push_back(cell_of[w]);
          std::sort(sig.begin(), sig.end());
          if (directed_) {
            sig.push_back(std::numeric_limits<std::uint32_t>::max());
            const std::size_t mark = sig.size();
            for (Vertex w : in_[v]) sig.push_back(cell_of[w]);
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mark), sig.end());
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<Vertex> sub;
            for (std::size_t k = start; k < i; ++k) sub.push_back(keyed[k].second);
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::vector<std::uint8_t> certificate(const std::vector<Vertex>& vertex_at) const {
    std::vector<std::uint8_t> bits;
    std::uint8_t acc = 0;
    int filled = 0;
    auto push = [&](bool b) {
      acc = static_cast<std::uint8_t>((acc << 1) | (b ? 1 : 0));
      if (++filled == 8) {
        bits.push_back(acc);
        acc = 0;
        filled = 0;
      }
    };
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = directed_ ? 0 : i + 1; j < n_; ++j) {
        if (i == j) continue;
        push(adj_[vertex_at[i] * n_ + vertex_at[j]] != 0);
      }
    if (filled > 0) bits.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return bits;
  }

  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<Vertex> gamma(n_);
    for (std::size_t pos = 0; pos < n_; ++pos) gamma[from.vertex_at[pos]] = to.vertex_at[pos];
    generators_.push_back(std::move(gamma));
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Returns the level to resume at: a node at that depth continues with its
  // next candidate, shallower nodes keep unwinding. kNoJump means carry on.
  std::size_t process_leaf(const Cells& cells) {
    Leaf leaf;
    leaf.vertex_at.reserve(n_);
    for (const auto& c : cells) leaf.vertex_at.push_back(c.front());
    leaf.path = path_;
    leaf.cert = certificate(leaf.vertex_at);
    if (!first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      return kNoJump;
    }
    if (leaf.cert == first_->cert) {
      record_automorphism(*first_, leaf);
      return common_prefix(first_->path, leaf.path);
    }
    if (leaf.cert == best_->cert) {
      record_automorphism(*best_, leaf);
      return common_prefix(best_->path, leaf.path);
    }
    if (leaf.cert < best_->cert) best_ = std::move(leaf);
    return kNoJump;
  }

  std::size_t search(Cells cells) {
    refine(cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return process_leaf(cells);

    const std::size_t level = path_.size();
    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> candidates = *target;
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> explored;
    std::size_t generators_seen = 0;
    UnionFind orbits(n_);
    for (Vertex v : candidates) {
      // Automorphisms fixing the current prefix pointwise map this node to
      // itself; candidates in one orbit root equivalent subtrees.
      for (; generators_seen < generators_.size(); ++generators_seen) {
        const auto& gamma = generators_[generators_seen];
        if (!std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return gamma[p] == p; })) continue;
        for (Vertex w = 0; w < n_; ++w) orbits.unite(w, gamma[w]);
      }
      if (std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return orbits.find(e) == orbits.find(v); })) {
        continue;
      }
      Cells child = cells;
      auto& cell = child[target_index];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target_index), std::vector<Vertex>{v});
      path_.push_back(v);
      const std::size_t jump = search(std::move(child));
      path_.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  bool directed_;
  std::vector<std::uint8_t> adj_;
  std::vector<Vertex> path_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<Vertex>> generators_;
};

void check_canon_order(std::size_t n) {
  if (n > kMaxCanonOrder) {
    throw Error(ErrorCode::OrderTooLarge, "canonical forms are limited to " + std::to_string(kMaxCanonOrder) + " vertices");
  }
}

std::vector<Vertex> invert(const std::vector<Vertex>& perm) {
  std::vector<Vertex> inv(perm.size());
  for (Vertex v = 0; v < perm.size(); ++v) inv[perm[v]] = v;
  return inv;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& graph) {
  check_canon_order(graph.order());
  std::vector<std::vector<Vertex>> adj(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) adj[v] = graph.neighbors(v);
  return Canonizer(adj, adj, false).run();
}

CanonicalLabeling canonical_labeling(const Digraph& digraph) {
  check_canon_order(digraph.order());
  const std::size_t n = digraph.order();
  std::vector<std::vector<Vertex>> out(n), in(n);
  for (Vertex v = 0; v < n; ++v) {
    out[v] = digraph.out_neighbors(v);
    for (Vertex w : out[v]) in[w].push_back(v);
  }
  return Canonizer(std::move(out), std::move(in), true).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    check_canon_order(a.order());
    check_canon_order(b.order());
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) {
    check_canon_order(a.order());
    check_canon_order(b.order());
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Vertex>> graph_isomorphism(const Graph& a, const Graph& b) {
  const auto ca = canonical_labeling(a);
  const auto cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  const auto b_at = invert(cb.labeling);
  std::vector<Vertex> map(a.order());
  for (Vertex v = 0; v < a.order(); ++v) map[v] = b_at[ca.labeling[v]];
  return map;
}

}  // namespace moufang
