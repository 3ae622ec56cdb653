#include "moufang/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "moufang/octonion.hpp"

namespace moufang {

std::size_t LoopClass::parameter() const noexcept {
  switch (kind) {
    case Kind::CyclicGroup: return order;
    case Kind::GeneralizedQuaternion: return order / 4;
    case Kind::GeneralizedOctonion: return order / 8;
    case Kind::Other: return 0;
  }
  return 0;
}

std::string LoopClass::to_string() const {
  const char* name = "Other";
  switch (kind) {
    case Kind::CyclicGroup: name = "CyclicGroup"; break;
    case Kind::GeneralizedQuaternion: name = "GeneralizedQuaternion"; break;
    case Kind::GeneralizedOctonion: name = "GeneralizedOctonion"; break;
    case Kind::Other: break;
  }
  return std::string(name) + "(" + std::to_string(order) + ")";
}

std::size_t VerificationReport::count(CaseStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [status](const CaseResult& c) { return c.status == status; }));
}

void VerificationReport::add(std::string case_id, CaseStatus status, std::string witness) {
  cases.push_back({suite, std::move(case_id), status, std::move(witness)});
}

void VerificationReport::append(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : cases) {
    const char* status = c.status == CaseStatus::Pass ? "PASS" : (c.status == CaseStatus::Fail ? "FAIL" : "SKIP");
    out << c.suite << '\t' << c.case_id << '\t' << status << '\t' << c.witness << '\n';
  }
  out << "# suite=" << suite << " total=" << cases.size() << " pass=" << count(CaseStatus::Pass)
      << " fail=" << count(CaseStatus::Fail) << " skip=" << count(CaseStatus::Skip) << '\n';
  return out.str();
}

namespace {

bool has_element_of_order(const Loop& loop, std::span<const Elem> elements, std::uint64_t order) {
  return std::any_of(elements.begin(), elements.end(),
                     [&](Elem x) { return right_power_period(loop, x) == order; });
}

bool is_commutative_on(const Loop& loop, std::span<const Elem> elements) {
  for (Elem x : elements)
    for (Elem y : elements)
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
  return true;
}

bool isomorphic_to_quaternion(const Loop& loop) {
  const std::size_t n = loop.order();
  if (n % 4 != 0 || n / 4 < 2) return false;
  return loop_isomorphic(loop, generalized_quaternion(n / 4)).has_value();
}

bool isomorphic_to_octonion(const Loop& loop) {
  const std::size_t n = loop.order();
  if (n % 8 != 0 || n / 8 < 2) return false;
  return loop_isomorphic(loop, generalized_octonion(n / 8)).has_value();
}

std::string bools(const GenOctConditions& c) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("(") + b(c.abelian_subloops_cyclic) + "," + b(c.quaternion_double) + "," +
         b(c.octonion_realization) + "," + b(c.two_loop_unique_involution) + ")";
}

// Moves `digraph` (on the vertices of `source`) onto the vertices of `target`,
// given canonical labelings of two isomorphic graphs.
Digraph transport(const Digraph& digraph, const CanonicalLabeling& source, const CanonicalLabeling& target) {
  std::vector<Vertex> target_at(target.labeling.size());
  for (Vertex v = 0; v < target.labeling.size(); ++v) target_at[target.labeling[v]] = v;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [a, b] : digraph.arcs()) arcs.emplace_back(target_at[source.labeling[a]], target_at[source.labeling[b]]);
  return Digraph(digraph.order(), arcs);
}

std::optional<Loop> build_candidate(const LoopClass& cls) {
  try {
    switch (cls.kind) {
      case LoopClass::Kind::CyclicGroup: return cyclic(cls.order);
      case LoopClass::Kind::GeneralizedQuaternion:
        if (cls.order % 4 != 0) return std::nullopt;
        return generalized_quaternion(cls.order / 4);
      case LoopClass::Kind::GeneralizedOctonion:
        if (cls.order % 8 != 0) return std::nullopt;
        return generalized_octonion(cls.order / 8);
      case LoopClass::Kind::Other: return std::nullopt;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParamTooSmall) throw;
  }
  return std::nullopt;
}

}  // namespace

LoopClass classify_unique_p_loop(const Loop& loop, std::uint64_t p) {
  const std::size_t n = loop.order();
  if (!is_prime(p) || prime_power_base(n) != p) {
    throw Error(ErrorCode::PreconditionFailed, "order " + std::to_string(n) + " is not a power of " + std::to_string(p));
  }
  if (!loop.is_moufang()) throw Error(ErrorCode::PreconditionFailed, "loop is not Moufang");
  if (!has_unique_subloop_of_order_p(loop, p)) {
    throw Error(ErrorCode::PreconditionFailed, "subloop of order " + std::to_string(p) + " is not unique");
  }
  if (loop.is_group()) {
    if (loop.is_commutative()) {
      std::vector<Elem> all(n);
      for (Elem x = 0; x < n; ++x) all[x] = x;
      return has_element_of_order(loop, all, n) ? LoopClass::cyclic_group(n) : LoopClass::other(n);
    }
    return count_involutions(loop) == 1 && isomorphic_to_quaternion(loop) ? LoopClass::quaternion(n)
                                                                          : LoopClass::other(n);
  }
  return isomorphic_to_octonion(loop) ? LoopClass::octonion(n) : LoopClass::other(n);
}

LoopClass identify_from_graph(const Graph& graph) {
  const std::size_t n = graph.order();
  if (universal_vertices(graph).size() < 2) {
    throw Error(ErrorCode::PreconditionFailed, "identification needs at least two universal vertices");
  }
  LoopClass candidate;
  const auto p = prime_power_base(n);
  const bool complete = graph.edge_count() == n * (n - 1) / 2;
  if (!p || complete) {
    candidate = LoopClass::cyclic_group(n);
  } else if (*p == 2) {
    const std::size_t clique = max_clique(graph);
    if (clique == n / 2) {
      candidate = LoopClass::quaternion(n);
    } else if (clique == n / 4) {
      candidate = LoopClass::octonion(n);
    } else {
      throw Error(ErrorCode::NotPrimePowerPattern, "clique number " + std::to_string(clique) + " on " +
                                                       std::to_string(n) + " vertices matches no known family");
    }
  } else {
    throw Error(ErrorCode::NotPrimePowerPattern,
                "incomplete graph on " + std::to_string(n) + " vertices, an odd prime power");
  }
  const auto loop = build_candidate(candidate);
  if (!loop || !are_isomorphic(undirected_power_graph(*loop), graph)) return LoopClass::other(n);
  return candidate;
}

ReconstructionIndex::ReconstructionIndex(const std::vector<CorpusEntry>& corpus) {
  entries_.reserve(corpus.size());
  for (const auto& e : corpus) {
    Graph g = undirected_power_graph(e.loop);
    CanonicalLabeling canon = canonical_labeling(g);
    entries_.push_back({e.label, e.loop, std::move(g), std::move(canon)});
  }
}

const IndexedEntry* ReconstructionIndex::find(const Graph& graph, const CanonicalLabeling& canon) const {
  for (const auto& e : entries_)
    if (e.undirected.order() == graph.order() && e.undirected_canon.form == canon.form) return &e;
  return nullptr;
}

Digraph reconstruct_directed(const Graph& graph, const ReconstructionIndex& index) {
  const CanonicalLabeling canon = canonical_labeling(graph);
  if (universal_vertices(graph).size() >= 2) {
    std::optional<LoopClass> cls;
    try {
      cls = identify_from_graph(graph);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPrimePowerPattern) throw;
    }
    if (cls && cls->kind != LoopClass::Kind::Other) {
      const Loop loop = *build_candidate(*cls);
      const Digraph directed = directed_power_graph(loop);
      return transport(directed, canonical_labeling(underlying(directed)), canon);
    }
  }
  if (const IndexedEntry* match = index.find(graph, canon)) {
    return transport(directed_power_graph(match->loop), match->undirected_canon, canon);
  }
  throw Error(ErrorCode::NotInCorpus, "no corpus loop has this undirected power graph");
}

Digraph reconstruct_directed(const Graph& graph, const std::vector<CorpusEntry>& corpus) {
  return reconstruct_directed(graph, ReconstructionIndex(corpus));
}

VerificationReport verify_main_theorem(const std::vector<CorpusEntry>& corpus) {
  VerificationReport report{"main", {}};
  struct Group {
    std::vector<std::size_t> members;
    std::vector<CanonicalForm> directed;
  };
  std::vector<Group> groups;
  std::map<CanonicalForm, std::size_t> group_of;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Loop& loop = corpus[i].loop;
    if (!loop.is_moufang()) {
      report.add(corpus[i].label, CaseStatus::Skip, "not Moufang");
      continue;
    }
    const Digraph directed = directed_power_graph(loop);
    const CanonicalForm undirected_form = canonical_form(underlying(directed));
    auto [it, fresh] = group_of.emplace(undirected_form, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].members.push_back(i);
    groups[it->second].directed.push_back(canonical_form(directed));
  }
  for (const Group& g : groups) {
    std::string members;
    for (std::size_t i : g.members) members += (members.empty() ? "" : ";") + corpus[i].label;
    std::optional<std::size_t> bad;
    for (std::size_t k = 1; k < g.members.size() && !bad; ++k)
      if (g.directed[k] != g.directed[0]) bad = k;
    const std::string id = corpus[g.members[0]].label;
    if (bad) {
      report.add(id, CaseStatus::Fail,
                 "directed power graphs differ: " + corpus[g.members[0]].label + " vs " +
                     corpus[g.members[*bad]].label + " (" + g.directed[0].hex().substr(0, 24) + " != " +
                     g.directed[*bad].hex().substr(0, 24) + ")");
    } else {
      report.add(id, CaseStatus::Pass, "size=" + std::to_string(g.members.size()) + " members=" + members);
    }
  }
  return report;
}

VerificationReport verify_order_lemma(const Loop& loop, const std::string& label) {
  if (!loop.is_moufang() || loop.is_group() || prime_power_base(loop.order()) != 2u ||
      count_involutions(loop) != 1) {
    throw Error(ErrorCode::PreconditionFailed, "needs a nonassociative Moufang 2-loop with a unique involution");
  }
  VerificationReport report{"order-lemma", {}};
  const Elem n = static_cast<Elem>(loop.order());
  const auto orders = element_orders(loop);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = loop.mul(x, y);
      std::string which;
      if (xy == loop.mul(y, x)) which += "commute,";
      if (xy == loop.mul(loop.inv(y), x) && orders[x] == 4) which += "xy=y^-1x,";
      if (xy == loop.mul(y, loop.inv(x)) && orders[y] == 4) which += "xy=yx^-1,";
      if (orders[x] == 4 && orders[y] == 4) which += "both-order-4,";
      const std::string id = label + ":(" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (which.empty()) {
        report.add(id, CaseStatus::Fail,
                   "xy=" + std::to_string(xy) + " yx=" + std::to_string(loop.mul(y, x)) + " |x|=" +
                       std::to_string(orders[x]) + " |y|=" + std::to_string(orders[y]));
      } else {
        which.pop_back();
        report.add(id, CaseStatus::Pass, which);
      }
    }
  return report;
}

GenOctConditions genoct_conditions(const Loop& loop) {
  const std::size_t n = loop.order();
  if (!loop.is_moufang() || loop.is_group() || n > 64) {
    throw Error(ErrorCode::PreconditionFailed, "needs a nonassociative Moufang loop of order <= 64");
  }
  GenOctConditions c;

  c.abelian_subloops_cyclic = true;
  for (const Subloop& s : all_subloops(loop)) {
    if (!is_commutative_on(loop, s.elements()) || !is_associative_on(loop, s.elements())) continue;
    if (!has_element_of_order(loop, s.elements(), s.size())) {
      c.abelian_subloops_cyclic = false;
      break;
    }
  }

  // c must be the involution of the quaternion base, not the identity.
  for (const CheinWitness& w : chein_decompositions(loop)) {
    if (w.c != 0 && isomorphic_to_quaternion(w.base.as_loop())) {
      c.quaternion_double = true;
      break;
    }
  }

  if (n % 8 == 0 && n / 8 >= 2) {
    const NumericLoopWitness witness = generate_octonion_subloop(n / 8);
    c.octonion_realization = loop_isomorphic(loop, witness.table).has_value();
  }

  c.two_loop_unique_involution = prime_power_base(n) == 2u && count_involutions(loop) == 1;
  return c;
}

VerificationReport verify_genoct_equivalences(const Loop& loop, const std::string& label) {
  const GenOctConditions c = genoct_conditions(loop);
  VerificationReport report{"genoct", {}};
  auto value = [](bool b) { return std::string(b ? "true" : "false"); };
  report.add(label + ":abelian-subloops-cyclic", CaseStatus::Pass, value(c.abelian_subloops_cyclic));
  report.add(label + ":quaternion-double", CaseStatus::Pass, value(c.quaternion_double));
  report.add(label + ":octonion-realization", CaseStatus::Pass, value(c.octonion_realization));
  report.add(label + ":unique-involution-2-loop", CaseStatus::Pass, value(c.two_loop_unique_involution));
  const bool agree = c.abelian_subloops_cyclic == c.quaternion_double &&
                     c.quaternion_double == c.octonion_realization &&
                     c.octonion_realization == c.two_loop_unique_involution;
  if (agree) {
    report.add(label + ":equivalent", CaseStatus::Pass, bools(c));
  } else if (prime_power_base(loop.order()) != 2u) {
    report.add(label + ":equivalent", CaseStatus::Skip,
               "scope: order " + std::to_string(loop.order()) + " is not a power of 2 " + bools(c));
  } else {
    report.add(label + ":equivalent", CaseStatus::Fail, "conditions disagree " + bools(c));
  }
  return report;
}

VerificationReport verify_unique_subloop_classification(const std::vector<CorpusEntry>& corpus) {
  VerificationReport report{"classify", {}};
  for (const CorpusEntry& e : corpus) {
    const auto p = prime_power_base(e.order);
    if (!p) {
      report.add(e.label, CaseStatus::Skip, "order not a prime power");
      continue;
    }
    if (!e.loop.is_moufang()) {
      report.add(e.label, CaseStatus::Skip, "not Moufang");
      continue;
    }
    if (!has_unique_subloop_of_order_p(e.loop, *p)) {
      report.add(e.label, CaseStatus::Skip, "subloop of order " + std::to_string(*p) + " not unique");
      continue;
    }
    const LoopClass cls = classify_unique_p_loop(e.loop, *p);
    const bool ok = cls.kind != LoopClass::Kind::Other && (*p == 2 || cls.kind == LoopClass::Kind::CyclicGroup);
    report.add(e.label, ok ? CaseStatus::Pass : CaseStatus::Fail, cls.to_string());
  }
  return report;
}

}  // namespace moufang
