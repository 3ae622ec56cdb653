// Acceptance checks. With no argument every criterion runs; with a number
// only that one. Prints one "criterion N: PASS|FAIL ..." line per criterion
// and exits non-zero when any of them fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"
#include "moufang/octonion.hpp"
#include "moufang/power_graph.hpp"
#include "moufang/verify.hpp"
#include "oracles.hpp"

using namespace moufang;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Corpus loops are shared by several criteria.
const std::vector<CorpusEntry>& corpus32() {
  static const std::vector<CorpusEntry> c = build_corpus(32);
  return c;
}

Outcome chein_construction() {
  std::size_t pairs = 0, involutive = 0, involutive_ok = 0;
  std::vector<std::string> failures;
  for (const auto& e : corpus32()) {
    if (!e.loop.is_group()) continue;
    const Subloop z = center(e.loop);
    for (Elem c : z.elements()) {
      ++pairs;
      const Loop m = chein_double(e.loop, c);
      const bool ok = is_moufang(m) && is_associative(m) == is_commutative(e.loop);
      const bool c2_trivial = e.loop.mul(c, c) == 0;
      involutive += c2_trivial;
      involutive_ok += c2_trivial && ok;
      if (!ok) failures.push_back(e.label + ";c=" + e.loop.element_name(c));
    }
  }
  std::ostringstream d;
  d << "pairs=" << pairs << " failing=" << failures.size();
  if (!failures.empty()) {
    d << " (e.g.";
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) d << " " << failures[i];
    d << ")";
  }
  d << " c^2=1 pairs=" << involutive << " passing=" << involutive_ok;
  return {failures.empty(), d.str()};
}

Outcome octonion_structure() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t m : {2, 4, 8}) {
    const Loop o = generalized_octonion(m);
    const bool good = o.order() == 8 * m && count_involutions(o) == 1 && !is_associative(o) && is_diassociative(o) &&
                      has_inverse_property(o) && check_element_lagrange(o);
    ok = ok && good;
    d << "O_" << 8 * m << (good ? ":ok " : ":bad ");
  }
  return {ok, d.str()};
}

Outcome graph_facts() {
  const Graph o16 = undirected_power_graph(generalized_octonion(2));
  const Graph q16 = undirected_power_graph(generalized_quaternion(4));
  const Graph z16 = undirected_power_graph(cyclic(16));
  const std::size_t universal = universal_vertices(o16).size();
  const std::size_t clique_o = max_clique(o16);
  const std::size_t clique_q = max_clique(q16);
  const bool complete = z16 == Graph::complete(16);
  std::ostringstream d;
  d << "O_16 universal=" << universal << " clique=" << clique_o << " Q_16 clique=" << clique_q
    << " Z_16 complete=" << (complete ? "yes" : "no");
  return {universal == 2 && clique_o == 4 && clique_q == 8 && complete, d.str()};
}

Outcome octonion_realization() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t n : {2, 3, 4}) {
    const NumericLoopWitness w = generate_octonion_subloop(n, 1e-9);
    const bool good = w.elements.size() == 8 * n && is_moufang(w.table) &&
                      loop_isomorphic(w.table, generalized_octonion(n)).has_value();
    ok = ok && good;
    d << "n=" << n << ":" << w.elements.size() << (good ? ":ok " : ":bad ");
  }
  return {ok, d.str()};
}

Outcome main_sweep() {
  const VerificationReport r = verify_main_theorem(corpus32());
  std::size_t shared = 0;
  for (const auto& c : r.cases)
    if (c.status == CaseStatus::Pass && c.witness.rfind("size=1 ", 0) != 0) ++shared;
  std::ostringstream d;
  d << "loops=" << corpus32().size() << " classes=" << r.cases.size() << " multi-member=" << shared
    << " violations=" << r.count(CaseStatus::Fail);
  return {r.passed() && r.count(CaseStatus::Skip) == 0, d.str()};
}

Outcome classification() {
  std::size_t classified = 0, odd = 0, other = 0, odd_not_cyclic = 0;
  for (const auto& e : corpus32()) {
    const auto p = prime_power_base(e.order);
    if (!p || !e.loop.is_moufang() || !has_unique_subloop_of_order_p(e.loop, *p)) continue;
    const LoopClass k = classify_unique_p_loop(e.loop, *p);
    ++classified;
    other += k.kind == LoopClass::Kind::Other;
    if (*p != 2) {
      ++odd;
      odd_not_cyclic += k.kind != LoopClass::Kind::CyclicGroup;
    }
  }
  std::ostringstream d;
  d << "classified=" << classified << " other=" << other << " odd-p=" << odd << " odd-p-noncyclic=" << odd_not_cyclic;
  return {classified > 0 && other == 0 && odd_not_cyclic == 0, d.str()};
}

Outcome order_lemma() {
  const VerificationReport a = verify_order_lemma(generalized_octonion(2), "O_16");
  const VerificationReport b = verify_order_lemma(generalized_octonion(4), "O_32");
  std::ostringstream d;
  d << "O_16 pairs=" << a.cases.size() << " fail=" << a.count(CaseStatus::Fail) << " O_32 pairs=" << b.cases.size()
    << " fail=" << b.count(CaseStatus::Fail);
  return {a.passed() && b.passed() && a.cases.size() == 256 && b.cases.size() == 1024, d.str()};
}

Outcome reconstruction() {
  const ReconstructionIndex index(corpus32());
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& e : corpus32()) {
    bool ok = false;
    try {
      ok = are_isomorphic(reconstruct_directed(undirected_power_graph(e.loop), index), directed_power_graph(e.loop));
    } catch (const Error&) {
    }
    if (!ok && bad++ == 0) first_bad = e.label;
  }
  std::ostringstream d;
  d << "loops=" << corpus32().size() << " mismatches=" << bad;
  if (bad) d << " first=" << first_bad;
  return {bad == 0, d.str()};
}

Outcome oracle_agreement() {
  std::mt19937 rng(20240601);
  std::size_t comparisons = 0, disagreements = 0;
  auto compare = [&](const auto& a, const auto& b) {
    ++comparisons;
    if (are_isomorphic(a, b) != oracle::isomorphic(a, b)) ++disagreements;
  };
  std::vector<Graph> random;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 7;
    random.push_back(oracle::random_graph(rng, n, 0.25 + 0.5 * ((i / 7) % 3) / 2.0));
  }
  for (std::size_t i = 0; i < random.size(); ++i) {
    const Graph& g = random[i];
    compare(g, oracle::permuted(g, oracle::random_permutation(rng, g.order())));
    // Next graph of the same order: independent draw.
    if (i + 7 < random.size()) compare(g, random[i + 7]);
  }
  std::vector<Graph> undirected;
  std::vector<Digraph> directed;
  for (const auto& e : corpus32()) {
    if (e.order > 7) continue;
    undirected.push_back(undirected_power_graph(e.loop));
    directed.push_back(directed_power_graph(e.loop));
  }
  for (const Graph& a : undirected)
    for (const Graph& b : undirected) compare(a, b);
  for (const Digraph& a : directed)
    for (const Digraph& b : directed) compare(a, b);
  std::ostringstream d;
  d << "comparisons=" << comparisons << " disagreements=" << disagreements << " corpus graphs=" << undirected.size();
  return {disagreements == 0, d.str()};
}

Outcome numeric_sanity() {
  std::mt19937 rng(42);
  std::normal_distribution<double> gauss;
  auto unit = [&] {
    Octon x;
    for (double& c : x.c) c = gauss(rng);
    const double n = x.norm();
    for (double& c : x.c) c /= n;
    return x;
  };
  double worst_norm = 0, worst_left = 0, worst_right = 0;
  for (int i = 0; i < 1000; ++i) {
    const Octon x = unit();
    const Octon y = unit();
    worst_norm = std::max(worst_norm, std::abs(oct_mul(x, y).norm() - x.norm() * y.norm()));
    worst_left = std::max(worst_left, max_norm_distance(oct_mul(oct_mul(x, x), y), oct_mul(x, oct_mul(x, y))));
    worst_right = std::max(worst_right, max_norm_distance(oct_mul(oct_mul(y, x), x), oct_mul(y, oct_mul(x, x))));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "pairs=1000 max|N(xy)-N(x)N(y)|=%.2e max left=%.2e max right=%.2e", worst_norm,
                worst_left, worst_right);
  return {worst_norm <= 1e-9 && worst_left <= 1e-9 && worst_right <= 1e-9, buf};
}

const std::vector<Criterion> kCriteria{
    {1, "Chein construction", 10, chein_construction},
    {2, "generalized octonion structure", 5, octonion_structure},
    {3, "O_16 graph facts", 1, graph_facts},
    {4, "unit-octonion realization", 10, octonion_realization},
    {5, "main theorem sweep", 60, main_sweep},
    {6, "classification sweep", 30, classification},
    {7, "order lemma pairs", 1, order_lemma},
    {8, "reconstruction", 60, reconstruction},
    {9, "oracle agreement", 30, oracle_agreement},
    {10, "numeric sanity", 1, numeric_sanity},
};

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds <= c.budget_seconds;
  const bool pass = o.pass && in_time;
  std::printf("criterion %d: %s  %s  [%s] (%.3fs, budget %.0fs)\n", c.id, pass ? "PASS" : "FAIL", c.name,
              o.detail.c_str(), seconds, c.budget_seconds);
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
    return 2;
  }
  int only = 0;
  if (argc == 2) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(kCriteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
      return 2;
    }
  }
  bool all = true;
  for (const Criterion& c : kCriteria)
    if (only == 0 || c.id == only) all = run(c) && all;
  return all ? 0 : 1;
}
