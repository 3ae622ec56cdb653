#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <tuple>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"

namespace moufang {

namespace {

// Family ranks fix the order of entries of equal order, and therefore which
// label survives deduplication.
enum class Family { Cyclic = 0, Abelian, Dihedral, Quaternion, Metacyclic, Heisenberg, Octonion, Product, Chein };

struct Candidate {
  std::size_t order;
  Family family;
  std::string label;
  std::function<Loop()> build;
};

std::string z(std::size_t n) { return "Z_" + std::to_string(n); }

std::string metacyclic_label(std::size_t m, std::size_t k, std::size_t r) {
  return z(m) + ":" + z(k) + "(" + std::to_string(r) + ")";
}

// Invariant factor sequences d_1 | d_2 | ... | d_k (k >= 2, d_1 >= 2) with
// product <= max_order; each is a noncyclic abelian group.
void abelian_sequences(std::size_t max_order, std::vector<std::size_t>& current, std::size_t product,
                       std::vector<std::vector<std::size_t>>& out) {
  if (current.size() >= 2) out.push_back(current);
  const std::size_t step = current.empty() ? 1 : current.back();
  for (std::size_t d = current.empty() ? 2 : step; product * d <= max_order; d += step) {
    current.push_back(d);
    abelian_sequences(max_order, current, product * d, out);
    current.pop_back();
  }
}

struct Invariants {
  std::vector<std::uint64_t> orders;
  bool associative;
  bool commutative;
  std::size_t center_size;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants_of(const Loop& loop) {
  auto orders = element_orders(loop);
  std::sort(orders.begin(), orders.end());
  return {std::move(orders), loop.is_group(), loop.is_commutative(), center(loop).size()};
}

struct Kept {
  CorpusEntry entry;
  Family family;
  Invariants invariants;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  return std::tie(a.order, a.family, a.label) < std::tie(b.order, b.family, b.label);
}

// Builds candidates in (order, family, label) order and keeps the first of
// each isomorphism class.
std::vector<Kept> dedupe(std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end(), candidate_less);
  std::vector<Kept> kept;
  for (const Candidate& cand : candidates) {
    Loop loop = cand.build();
    if (loop.order() != cand.order) {
      throw std::logic_error("recipe " + cand.label + " produced order " + std::to_string(loop.order()));
    }
    Invariants inv = invariants_of(loop);
    bool duplicate = false;
    for (std::size_t i = 0; i < kept.size() && !duplicate; ++i) {
      if (kept[i].entry.order != cand.order || !(kept[i].invariants == inv)) continue;
      duplicate = loop_isomorphic(kept[i].entry.loop, loop).has_value();
    }
    if (!duplicate) kept.push_back({{std::move(loop), cand.label, cand.order}, cand.family, std::move(inv)});
  }
  return kept;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(std::size_t max_order, CorpusOptions options) {
  if (max_order > kMaxCorpusOrder) {
    throw Error(ErrorCode::OrderTooLarge, "corpus is limited to order " + std::to_string(kMaxCorpusOrder));
  }
  std::vector<Candidate> groups;
  for (std::size_t n = 1; n <= max_order; ++n) groups.push_back({n, Family::Cyclic, z(n), [n] { return cyclic(n); }});

  std::vector<std::vector<std::size_t>> sequences;
  std::vector<std::size_t> scratch;
  abelian_sequences(max_order, scratch, 1, sequences);
  for (const auto& seq : sequences) {
    std::size_t order = 1;
    std::string label;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      order *= *it;
      label += (label.empty() ? "" : "x") + z(*it);
    }
    groups.push_back({order, Family::Abelian, label, [seq] {
                        Loop acc = cyclic(seq.back());
                        for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) acc = direct_product(acc, cyclic(*it));
                        return acc;
                      }});
  }

  // Nonabelian groups.
  std::vector<Candidate> nonabelian;
  for (std::size_t m = 3; 2 * m <= max_order; ++m)
    nonabelian.push_back({2 * m, Family::Dihedral, "D_" + std::to_string(m), [m] { return dihedral(m); }});
  for (std::size_t m = 2; 4 * m <= max_order; ++m) {
    nonabelian.push_back(
        {4 * m, Family::Quaternion, "Q_" + std::to_string(4 * m), [m] { return generalized_quaternion(m); }});
  }
  for (std::size_t m = 3; 2 * m <= max_order; ++m)
    for (std::size_t k = 2; m * k <= max_order; ++k)
      for (std::size_t r = 2; r < m; ++r) {
        std::size_t rk = 1;
        for (std::size_t i = 0; i < k; ++i) rk = rk * r % m;
        if (rk != 1 || std::gcd(r, m) != 1) continue;
        nonabelian.push_back(
            {m * k, Family::Metacyclic, metacyclic_label(m, k, r), [m, k, r] { return metacyclic(m, k, r); }});
      }
  for (std::size_t p = 2; p * p * p <= max_order; ++p)
    nonabelian.push_back({p * p * p, Family::Heisenberg, "H_" + std::to_string(p * p * p), [p] { return heisenberg(p); }});

  // Nonabelian x cyclic products broaden the pool of bases and of power graphs.
  const std::size_t base_count = nonabelian.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    const Candidate g = nonabelian[i];
    for (std::size_t k = 2; g.order * k <= max_order; ++k) {
      nonabelian.push_back(
          {g.order * k, Family::Product, g.label + "x" + z(k), [b = g.build, k] { return direct_product(b(), cyclic(k)); }});
    }
  }
  groups.insert(groups.end(), nonabelian.begin(), nonabelian.end());
  std::vector<Kept> kept = dedupe(std::move(groups));

  // Chein doubles of each distinct nonabelian group. The doubling rules give
  // a Moufang loop only for c^2 = 1 (otherwise u(uu) = c^-1 u but (uu)u = cu),
  // so other central elements are skipped.
  std::vector<Candidate> doubles;
  for (std::size_t m = 2; 8 * m <= max_order; ++m)
    doubles.push_back({8 * m, Family::Octonion, "O_" + std::to_string(8 * m), [m] { return generalized_octonion(m); }});
  for (const Kept& g : kept) {
    const Loop& base = g.entry.loop;
    if (2 * g.entry.order > max_order || base.is_commutative()) continue;
    const Subloop zg = center(base);
    for (Elem c : zg.elements()) {
      if (options.strict_paper && c == 0) continue;
      if (base.mul(c, c) != 0) continue;
      const std::string label = "M(" + g.entry.label + ",2;c=" + base.element_name(c) + ")";
      doubles.push_back({2 * g.entry.order, Family::Chein, label, [base, c] { return chein_double(base, c); }});
    }
  }
  // Doubles of nonabelian groups are nonassociative, so they never collide
  // with a group.
  for (Kept& k : dedupe(std::move(doubles))) kept.push_back(std::move(k));

  std::stable_sort(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) {
    return std::tie(a.entry.order, a.family, a.entry.label) < std::tie(b.entry.order, b.family, b.entry.label);
  });
  std::vector<CorpusEntry> corpus;
  corpus.reserve(kept.size());
  for (Kept& k : kept) corpus.push_back(std::move(k.entry));
  return corpus;
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& recipe) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::BadRecipe, "expected a non-negative integer in '" + recipe + "', got '" + text + "'");
  }
  return value;
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

CorpusEntry build_from_recipe(const std::string& recipe, CheinOptions options) {
  auto entry = [](Loop loop, std::string label) {
    const std::size_t n = loop.order();
    return CorpusEntry{std::move(loop), std::move(label), n};
  };
  if (starts_with(recipe, "cyclic:")) {
    const std::size_t n = parse_count(recipe.substr(7), recipe);
    return entry(cyclic(n), z(n));
  }
  if (starts_with(recipe, "dihedral:")) {
    const std::size_t m = parse_count(recipe.substr(9), recipe);
    return entry(dihedral(m), "D_" + std::to_string(m));
  }
  if (starts_with(recipe, "quaternion:")) {
    const std::size_t m = parse_count(recipe.substr(11), recipe);
    return entry(generalized_quaternion(m), "Q_" + std::to_string(4 * m));
  }
  if (starts_with(recipe, "octonion:")) {
    const std::size_t m = parse_count(recipe.substr(9), recipe);
    return entry(generalized_octonion(m), "O_" + std::to_string(8 * m));
  }
  if (starts_with(recipe, "metacyclic:")) {
    const std::string args = recipe.substr(11);
    const std::size_t c1 = args.find(',');
    const std::size_t c2 = c1 == std::string::npos ? c1 : args.find(',', c1 + 1);
    if (c2 == std::string::npos) throw Error(ErrorCode::BadRecipe, "metacyclic recipe needs m,k,r: " + recipe);
    const std::size_t m = parse_count(args.substr(0, c1), recipe);
    const std::size_t k = parse_count(args.substr(c1 + 1, c2 - c1 - 1), recipe);
    const std::size_t r = parse_count(args.substr(c2 + 1), recipe);
    return entry(metacyclic(m, k, r), metacyclic_label(m, k, r));
  }
  if (starts_with(recipe, "heisenberg:")) {
    const std::size_t p = parse_count(recipe.substr(11), recipe);
    return entry(heisenberg(p), "H_" + std::to_string(p * p * p));
  }
  if (starts_with(recipe, "chein:")) {
    const std::size_t at = recipe.rfind(":c=");
    if (at == std::string::npos || at < 6) throw Error(ErrorCode::BadRecipe, "chein recipe needs ':c=<index>': " + recipe);
    const CorpusEntry base = build_from_recipe(recipe.substr(6, at - 6), options);
    const std::size_t c = parse_count(recipe.substr(at + 3), recipe);
    if (c >= base.order) throw Error(ErrorCode::BadRecipe, "multiplier index out of range in " + recipe);
    const Elem ce = static_cast<Elem>(c);
    return entry(chein_double(base.loop, ce, options),
                 "M(" + base.label + ",2;c=" + base.loop.element_name(ce) + ")");
  }
  if (starts_with(recipe, "product:")) {
    const std::string rest = recipe.substr(8);
    // Nested recipes may contain commas; take the first split where both
    // halves parse.
    for (std::size_t comma = rest.find(','); comma != std::string::npos; comma = rest.find(',', comma + 1)) {
      std::optional<CorpusEntry> left, right;
      try {
        left = build_from_recipe(rest.substr(0, comma), options);
        right = build_from_recipe(rest.substr(comma + 1), options);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BadRecipe) continue;
        throw;
      }
      return entry(direct_product(left->loop, right->loop), left->label + "x" + right->label);
    }
    throw Error(ErrorCode::BadRecipe, "product recipe needs two comma-separated recipes: " + recipe);
  }
  throw Error(ErrorCode::BadRecipe, "unknown recipe '" + recipe + "'");
}

}  // namespace moufang
