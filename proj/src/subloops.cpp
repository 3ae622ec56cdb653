#include <algorithm>
#include <deque>
#include <set>

#include "moufang/loop.hpp"

namespace moufang {

std::vector<Subloop> subloops_up_to(const Loop& loop, std::size_t max_size) {
  const std::size_t n = loop.order();
  if (n > kMaxSubloopOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "subloop enumeration is limited to order " + std::to_string(kMaxSubloopOrder));
  }
  // Breadth-first extension: each found subloop is grown by one element and
  // closed again. Sorted element lists double as dedup keys.
  std::set<std::vector<Elem>> seen;
  std::deque<std::vector<Elem>> frontier;
  auto visit = [&](Subloop s) {
    if (s.size() > max_size) return;
    if (seen.insert(s.elements()).second) frontier.push_back(s.elements());
  };
  visit(Subloop(loop, {0}));
  while (!frontier.empty()) {
    std::vector<Elem> current = std::move(frontier.front());
    frontier.pop_front();
    if (current.size() >= max_size) continue;
    std::vector<bool> member(n, false);
    for (Elem e : current) member[e] = true;
    std::vector<Elem> gens = current;
    for (Elem x = 0; x < n; ++x) {
      // Adjoining a member reproduces the current subloop.
      if (member[x]) continue;
      gens.push_back(x);
      Subloop grown = subloop_closure(loop, gens);
      gens.pop_back();
      visit(grown);
    }
  }
  std::vector<std::vector<Elem>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subloop> out;
  out.reserve(sorted.size());
  for (auto& elems : sorted) out.emplace_back(loop, std::move(elems));
  return out;
}

std::vector<Subloop> all_subloops(const Loop& loop) { return subloops_up_to(loop, loop.order()); }

bool has_unique_subloop_of_order_p(const Loop& loop, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (loop.order() % p != 0) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " does not divide " + std::to_string(loop.order()));
  }
  const auto subs = subloops_up_to(loop, p);
  return std::count_if(subs.begin(), subs.end(), [p](const Subloop& s) { return s.size() == p; }) == 1;
}

}  // namespace moufang
