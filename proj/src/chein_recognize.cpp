#include <array>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"

namespace moufang {

namespace {

// Checks one candidate (G, u) against the doubling hypotheses: u outside G,
// u^2 in G and in the nucleus of <u^2, G>, conjugation g -> u^-1 g u mapping
// G onto G, and every product matching
//   (g1 u^a)(g2 u^b) = [t^-b(t^b(g1) t^(b-a)(g2)) g0^e] u^r
// with t the conjugation, g0 = u^2, e = (a + b) / 2 and r = a + b - 2e.
bool satisfies_doubling_formula(const Loop& loop, const Subloop& base, Elem u) {
  const std::size_t n = loop.order();
  const std::size_t half = base.size();
  if (base.contains(u)) return false;
  const Elem g0 = loop.mul(u, u);
  if (!base.contains(g0)) return false;
  // u^2 lies in G, so <u^2, G> = G.
  if (!is_nuclear_in(loop, g0, base.elements())) return false;
  Elem u_inv;
  try {
    u_inv = loop.inv(u);
  } catch (const Error&) {
    return false;
  }

  // theta[j] holds t^(j-1) on local indices of the base, j = 0, 1, 2.
  std::array<std::vector<Elem>, 3> theta;
  theta[1].resize(half);
  theta[2].resize(half);
  theta[0].assign(half, Elem{0});
  std::vector<bool> hit(half, false);
  for (Elem i = 0; i < half; ++i) {
    theta[1][i] = i;
    const auto image = base.local_index(loop.mul(loop.mul(u_inv, base.elements()[i]), u));
    if (!image || hit[*image]) return false;
    hit[*image] = true;
    theta[2][i] = *image;
  }
  for (Elem i = 0; i < half; ++i) theta[0][theta[2][i]] = i;
  auto t = [&](int power, Elem local) { return theta[static_cast<std::size_t>(power + 1)][local]; };

  // Unique expression of every element as g or g*u.
  std::vector<bool> covered(n, false);
  auto element = [&](Elem local, int alpha) {
    const Elem g = base.elements()[local];
    return alpha == 0 ? g : loop.mul(g, u);
  };
  for (Elem i = 0; i < half; ++i)
    for (int alpha : {0, 1}) {
      const Elem e = element(i, alpha);
      if (covered[e]) return false;
      covered[e] = true;
    }

  const Elem g0_local = *base.local_index(g0);
  auto mul_local = [&](Elem a, Elem b) { return *base.local_index(loop.mul(base.elements()[a], base.elements()[b])); };
  for (Elem g1 = 0; g1 < half; ++g1)
    for (Elem g2 = 0; g2 < half; ++g2)
      for (int alpha : {0, 1})
        for (int beta : {0, 1}) {
          const int eps = (alpha + beta) / 2;
          const int rho = alpha + beta - 2 * eps;
          Elem inner = t(-beta, mul_local(t(beta, g1), t(beta - alpha, g2)));
          if (eps == 1) inner = mul_local(inner, g0_local);
          if (loop.mul(element(g1, alpha), element(g2, beta)) != element(inner, rho)) return false;
        }
  return true;
}

// chein_double(G, c) maps onto `loop` by g -> g and gu -> g*u.
bool encoding_is_isomorphism(const Loop& loop, const Loop& doubled, const Subloop& base, Elem u) {
  const std::size_t half = base.size();
  std::vector<Elem> map(loop.order());
  for (Elem i = 0; i < half; ++i) {
    map[i] = base.elements()[i];
    map[half + i] = loop.mul(base.elements()[i], u);
  }
  return is_loop_isomorphism(doubled, loop, map);
}

std::optional<Loop> double_of(const Subloop& base, Elem c) {
  const Loop g = base.as_loop();
  const Elem c_local = *base.local_index(c);
  try {
    return chein_double(g, c_local);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<CheinWitness> chein_decompositions(const Loop& loop) {
  const std::size_t n = loop.order();
  std::vector<CheinWitness> out;
  if (n % 2 != 0 || n < 2) return out;
  for (const Subloop& base : subloops_up_to(loop, n / 2)) {
    if (base.size() != n / 2 || !is_associative_on(loop, base.elements())) continue;
    std::optional<Elem> fallback;
    bool found = false;
    for (Elem u = 0; u < n && !found; ++u) {
      if (!satisfies_doubling_formula(loop, base, u)) continue;
      const Elem c = loop.mul(u, u);
      const auto doubled = double_of(base, c);
      if (!doubled) continue;
      if (encoding_is_isomorphism(loop, *doubled, base, u)) {
        out.push_back({base, u, c});
        found = true;
      } else if (!fallback) {
        fallback = u;
      }
    }
    if (!found && fallback) {
      // The conjugation need not act as inversion; fall back to a full search.
      const Elem c = loop.mul(*fallback, *fallback);
      if (loop_isomorphic(*double_of(base, c), loop)) out.push_back({base, *fallback, c});
    }
  }
  return out;
}

CheinWitness chein_recognize(const Loop& loop) {
  if (loop.order() % 2 != 0) {
    throw Error(ErrorCode::NoDecomposition, "order " + std::to_string(loop.order()) + " is odd");
  }
  auto all = chein_decompositions(loop);
  if (all.empty()) throw Error(ErrorCode::NoDecomposition, "no index-2 subgroup admits a doubling witness");
  return std::move(all.front());
}

}  // namespace moufang
