#include <algorithm>
#include <map>
#include <tuple>

#include "moufang/canon.hpp"

namespace moufang {

namespace {

// Isomorphism-invariant fingerprint of one element.
using ElementInvariant = std::tuple<std::uint64_t, std::uint64_t, bool, std::size_t, std::size_t>;

std::vector<ElementInvariant> element_invariants(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  const Subloop nuc = nucleus(loop);
  std::vector<std::size_t> square_roots(n, 0);
  for (Elem x = 0; x < n; ++x) ++square_roots[loop.mul(x, x)];
  std::vector<ElementInvariant> inv(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t commuting = 0;
    for (Elem y = 0; y < n; ++y)
      if (loop.mul(x, y) == loop.mul(y, x)) ++commuting;
    inv[x] = {right_power_period(loop, x), right_power_period(loop, loop.mul(x, x)), nuc.contains(x), commuting,
              square_roots[x]};
  }
  return inv;
}

class LoopMatcher {
 public:
  LoopMatcher(const Loop& a, const Loop& b)
      : a_(a), b_(b), n_(a.order()), inv_a_(element_invariants(a)), inv_b_(element_invariants(b)),
        image_(n_, kUnset), preimage_(n_, kUnset) {}

  std::optional<std::vector<Elem>> run() {
    auto sa = inv_a_;
    auto sb = inv_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    generators_ = greedy_generators(a_);
    if (!map_pair(0, 0) || !extend(0) || !assign(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  bool map_pair(Elem x, Elem y) {
    if (preimage_[y] != kUnset || inv_a_[x] != inv_b_[y]) return false;
    image_[x] = y;
    preimage_[y] = x;
    domain_.push_back(x);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (domain_.size() > mark) {
      const Elem x = domain_.back();
      domain_.pop_back();
      preimage_[image_[x]] = kUnset;
      image_[x] = kUnset;
    }
  }

  // Closes the partial map under multiplication, checking every pair of
  // mapped elements once. Returns false on the first inconsistency.
  bool extend(std::size_t from) {
    for (std::size_t k = from; k < domain_.size(); ++k) {
      const Elem x = domain_[k];
      for (std::size_t i = 0; i <= k; ++i) {
        const Elem w = domain_[i];
        for (auto [p, q] : {std::pair{a_.mul(x, w), b_.mul(image_[x], image_[w])},
                            std::pair{a_.mul(w, x), b_.mul(image_[w], image_[x])}}) {
          if (image_[p] == kUnset) {
            if (!map_pair(p, q)) return false;
          } else if (image_[p] != q) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool assign(std::size_t gen_index) {
    if (gen_index == generators_.size()) return domain_.size() == n_;
    const Elem g = generators_[gen_index];
    if (image_[g] != kUnset) return assign(gen_index + 1);
    for (Elem y = 0; y < n_; ++y) {
      const std::size_t mark = domain_.size();
      if (map_pair(g, y) && extend(mark) && assign(gen_index + 1)) return true;
      undo_to(mark);
    }
    return false;
  }

  const Loop& a_;
  const Loop& b_;
  std::size_t n_;
  std::vector<ElementInvariant> inv_a_;
  std::vector<ElementInvariant> inv_b_;
  std::vector<Elem> image_;
  std::vector<Elem> preimage_;
  std::vector<Elem> domain_;
  std::vector<Elem> generators_;
};

void check_iso_order(const Loop& loop) {
  if (loop.order() > kMaxSubloopOrder) {
    throw Error(ErrorCode::OrderTooLarge, "loop isomorphism is limited to order " + std::to_string(kMaxSubloopOrder));
  }
}

}  // namespace

std::vector<Elem> greedy_generators(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  std::vector<Elem> gens;
  std::size_t covered = 1;
  while (covered < n) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x = 1; x < n; ++x) {
      gens.push_back(x);
      const std::size_t size = subloop_closure(loop, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    covered = best_size;
  }
  return gens;
}

bool is_loop_isomorphism(const Loop& a, const Loop& b, const std::vector<Elem>& map) {
  const std::size_t n = a.order();
  if (b.order() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

std::optional<std::vector<Elem>> loop_isomorphic(const Loop& a, const Loop& b) {
  check_iso_order(a);
  check_iso_order(b);
  if (a.order() != b.order()) return std::nullopt;
  auto result = LoopMatcher(a, b).run();
  if (result && !is_loop_isomorphism(a, b, *result)) {
    throw std::logic_error("loop matcher produced a map that is not an isomorphism");
  }
  return result;
}

}  // namespace moufang
