#include "moufang/moufang.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>

#include "moufang/io.hpp"
#include "moufang/verify.hpp"

using namespace moufang;

struct mf_loop {
  Loop loop;
  std::string label;
};

struct mf_graph {
  bool directed = false;
  Graph graph;
  Digraph digraph;
  std::string hex;
};

struct mf_corpus {
  std::vector<CorpusEntry> entries;
  std::once_flag index_once;
  std::unique_ptr<ReconstructionIndex> index;
};

struct mf_report {
  VerificationReport report;
  std::string text;
};

struct mf_octonion_witness {
  NumericLoopWitness witness;
};

namespace {

thread_local std::string last_error;

mf_status fail(mf_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <class F>
mf_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return MF_OK;
  } catch (const Error& e) {
    return fail(static_cast<mf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MF_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MF_INTERNAL_ERROR, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

mf_graph* wrap(Graph g) {
  auto* h = new mf_graph;
  h->graph = std::move(g);
  return h;
}

mf_graph* wrap(Digraph d) {
  auto* h = new mf_graph;
  h->directed = true;
  h->digraph = std::move(d);
  return h;
}

mf_loop_class to_c(LoopClass::Kind kind) {
  switch (kind) {
    case LoopClass::Kind::CyclicGroup: return MF_CLASS_CYCLIC;
    case LoopClass::Kind::GeneralizedQuaternion: return MF_CLASS_GENERALIZED_QUATERNION;
    case LoopClass::Kind::GeneralizedOctonion: return MF_CLASS_GENERALIZED_OCTONION;
    case LoopClass::Kind::Other: break;
  }
  return MF_CLASS_OTHER;
}

bool is_order_lemma_candidate(const Loop& loop) {
  return loop.is_moufang() && !loop.is_group() && prime_power_base(loop.order()) == 2u &&
         count_involutions(loop) == 1;
}

}  // namespace

extern "C" {

const char* mf_status_string(mf_status status) {
  switch (status) {
    case MF_OK: return "Ok";
    case MF_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status >= MF_NOT_LATIN_SQUARE && status <= MF_IO_ERROR) return error_code_name(static_cast<ErrorCode>(status)).data();
  return "Unknown";
}

const char* mf_last_error(void) { return last_error.c_str(); }

mf_status mf_loop_from_table(size_t n, const uint32_t* table, mf_loop** out) {
  return guard([&] {
    require(table && out && n > 0, "table and out must be non-null and n positive");
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) rows[i][j] = table[i * n + j];
    *out = new mf_loop{validate_table(rows), ""};
  });
}

mf_status mf_loop_from_recipe(const char* recipe, int strict_paper, mf_loop** out) {
  return guard([&] {
    require(recipe && out, "recipe and out must be non-null");
    CorpusEntry e = build_from_recipe(recipe, CheinOptions{strict_paper != 0});
    *out = new mf_loop{std::move(e.loop), std::move(e.label)};
  });
}

mf_status mf_loop_read(const char* path, mf_loop** out) {
  return guard([&] {
    require(path && out, "path and out must be non-null");
    *out = new mf_loop{read_table_file(path), ""};
  });
}

mf_status mf_loop_write(const mf_loop* loop, const char* path) {
  return guard([&] {
    require(loop && path, "loop and path must be non-null");
    write_table_file(path, loop->loop);
  });
}

void mf_loop_free(mf_loop* loop) { delete loop; }

size_t mf_loop_order(const mf_loop* loop) { return loop ? loop->loop.order() : 0; }

void mf_loop_table(const mf_loop* loop, uint32_t* table) {
  if (!loop || !table) return;
  const size_t n = loop->loop.order();
  std::memcpy(table, loop->loop.table().data().data(), n * n * sizeof(uint32_t));
}

uint32_t mf_loop_mul(const mf_loop* loop, uint32_t x, uint32_t y) { return loop->loop.mul(x, y); }

const char* mf_loop_label(const mf_loop* loop) { return loop ? loop->label.c_str() : ""; }

mf_status mf_loop_element_name(const mf_loop* loop, uint32_t x, char* buf, size_t size) {
  return guard([&] {
    require(loop && buf && size > 0, "loop and buf must be non-null");
    require(x < loop->loop.order(), "element out of range");
    const std::string name = loop->loop.element_name(x);
    require(name.size() < size, "buffer too small");
    std::memcpy(buf, name.c_str(), name.size() + 1);
  });
}

mf_status mf_loop_property(const mf_loop* loop, mf_property property, int* out) {
  return guard([&] {
    require(loop && out, "loop and out must be non-null");
    const Loop& l = loop->loop;
    bool v = false;
    switch (property) {
      case MF_PROP_ASSOCIATIVE: v = l.is_group(); break;
      case MF_PROP_COMMUTATIVE: v = l.is_commutative(); break;
      case MF_PROP_MOUFANG: v = l.is_moufang(); break;
      case MF_PROP_INVERSE_PROPERTY: v = has_inverse_property(l); break;
      case MF_PROP_POWER_ASSOCIATIVE: v = is_power_associative(l); break;
      case MF_PROP_DIASSOCIATIVE: v = is_diassociative(l); break;
      case MF_PROP_ELEMENT_LAGRANGE: v = check_element_lagrange(l); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown property");
    }
    *out = v ? 1 : 0;
  });
}

mf_status mf_loop_element_orders(const mf_loop* loop, uint64_t* orders) {
  return guard([&] {
    require(loop && orders, "loop and orders must be non-null");
    const auto v = element_orders(loop->loop);
    std::copy(v.begin(), v.end(), orders);
  });
}

mf_status mf_loop_exponent(const mf_loop* loop, uint64_t* out) {
  return guard([&] {
    require(loop && out, "loop and out must be non-null");
    *out = exponent(loop->loop);
  });
}

size_t mf_loop_center_size(const mf_loop* loop) { return loop ? center(loop->loop).size() : 0; }
size_t mf_loop_nucleus_size(const mf_loop* loop) { return loop ? nucleus(loop->loop).size() : 0; }
size_t mf_loop_involutions(const mf_loop* loop) { return loop ? count_involutions(loop->loop) : 0; }

mf_status mf_loop_unique_subloop(const mf_loop* loop, uint64_t p, int* out) {
  return guard([&] {
    require(loop && out, "loop and out must be non-null");
    *out = has_unique_subloop_of_order_p(loop->loop, p) ? 1 : 0;
  });
}

mf_status mf_loop_isomorphic(const mf_loop* a, const mf_loop* b, int* out, uint32_t* map) {
  return guard([&] {
    require(a && b && out, "a, b and out must be non-null");
    const auto iso = loop_isomorphic(a->loop, b->loop);
    *out = iso ? 1 : 0;
    if (iso && map) std::copy(iso->begin(), iso->end(), map);
  });
}

mf_status mf_power_graph(const mf_loop* loop, int directed, mf_graph** out) {
  return guard([&] {
    require(loop && out, "loop and out must be non-null");
    *out = directed ? wrap(directed_power_graph(loop->loop)) : wrap(undirected_power_graph(loop->loop));
  });
}

mf_status mf_graph_from_edges(size_t n, size_t m, const uint32_t* pairs, int directed, mf_graph** out) {
  return guard([&] {
    require(out && (m == 0 || pairs), "pairs and out must be non-null");
    std::vector<std::pair<Vertex, Vertex>> list;
    for (size_t k = 0; k < m; ++k) list.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
    *out = directed ? wrap(Digraph(n, list)) : wrap(Graph(n, list));
  });
}

mf_status mf_graph_read(const char* path, mf_graph** out) {
  return guard([&] {
    require(path && out, "path and out must be non-null");
    EdgeFile f = read_edges_file(path);
    *out = f.directed ? wrap(std::move(f.digraph)) : wrap(std::move(f.graph));
  });
}

mf_status mf_graph_write_edg(const mf_graph* graph, const char* path) {
  return guard([&] {
    require(graph && path, "graph and path must be non-null");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, std::string("cannot write ") + path);
    if (graph->directed) {
      write_edges(out, graph->digraph);
    } else {
      write_edges(out, graph->graph);
    }
  });
}

mf_status mf_graph_write_dot(const mf_graph* graph, const mf_loop* names, const char* path) {
  return guard([&] {
    require(graph && path, "graph and path must be non-null");
    std::vector<std::string> labels;
    if (names) {
      require(names->loop.order() == mf_graph_order(graph), "name loop order differs from the graph order");
      labels = element_names(names->loop);
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, std::string("cannot write ") + path);
    if (graph->directed) {
      write_dot(out, graph->digraph, labels);
    } else {
      write_dot(out, graph->graph, labels);
    }
  });
}

void mf_graph_free(mf_graph* graph) { delete graph; }

size_t mf_graph_order(const mf_graph* graph) {
  if (!graph) return 0;
  return graph->directed ? graph->digraph.order() : graph->graph.order();
}

int mf_graph_directed(const mf_graph* graph) { return graph && graph->directed ? 1 : 0; }

size_t mf_graph_edge_count(const mf_graph* graph) {
  if (!graph) return 0;
  return graph->directed ? graph->digraph.arc_count() : graph->graph.edge_count();
}

mf_status mf_graph_underlying(const mf_graph* graph, mf_graph** out) {
  return guard([&] {
    require(graph && out, "graph and out must be non-null");
    *out = wrap(graph->directed ? underlying(graph->digraph) : graph->graph);
  });
}

mf_status mf_graph_universal_count(const mf_graph* graph, size_t* out) {
  return guard([&] {
    require(graph && out && !graph->directed, "needs an undirected graph");
    *out = universal_vertices(graph->graph).size();
  });
}

mf_status mf_graph_max_clique(const mf_graph* graph, size_t* out) {
  return guard([&] {
    require(graph && out && !graph->directed, "needs an undirected graph");
    *out = max_clique(graph->graph);
  });
}

mf_status mf_graph_canonical_hex(const mf_graph* graph, const char** out) {
  return guard([&] {
    require(graph && out, "graph and out must be non-null");
    auto* g = const_cast<mf_graph*>(graph);
    if (g->hex.empty()) {
      g->hex = (g->directed ? canonical_form(g->digraph) : canonical_form(g->graph)).hex();
    }
    *out = g->hex.c_str();
  });
}

mf_status mf_graph_isomorphic(const mf_graph* a, const mf_graph* b, int* out) {
  return guard([&] {
    require(a && b && out, "a, b and out must be non-null");
    if (a->directed != b->directed) {
      *out = 0;
    } else {
      *out = (a->directed ? are_isomorphic(a->digraph, b->digraph) : are_isomorphic(a->graph, b->graph)) ? 1 : 0;
    }
  });
}

mf_status mf_identify(const mf_graph* graph, mf_loop_class* kind, size_t* order) {
  return guard([&] {
    require(graph && kind && !graph->directed, "needs an undirected graph");
    const LoopClass cls = identify_from_graph(graph->graph);
    *kind = to_c(cls.kind);
    if (order) *order = cls.order;
  });
}

mf_status mf_classify_unique_p_loop(const mf_loop* loop, uint64_t p, mf_loop_class* kind) {
  return guard([&] {
    require(loop && kind, "loop and kind must be non-null");
    *kind = to_c(classify_unique_p_loop(loop->loop, p).kind);
  });
}

mf_status mf_corpus_build(size_t max_order, int strict_paper, mf_corpus** out) {
  return guard([&] {
    require(out, "out must be non-null");
    auto c = std::make_unique<mf_corpus>();
    c->entries = build_corpus(max_order, CorpusOptions{strict_paper != 0});
    *out = c.release();
  });
}

void mf_corpus_free(mf_corpus* corpus) { delete corpus; }

size_t mf_corpus_size(const mf_corpus* corpus) { return corpus ? corpus->entries.size() : 0; }

const char* mf_corpus_label(const mf_corpus* corpus, size_t i) {
  if (!corpus || i >= corpus->entries.size()) return "";
  return corpus->entries[i].label.c_str();
}

mf_status mf_corpus_loop(const mf_corpus* corpus, size_t i, mf_loop** out) {
  return guard([&] {
    require(corpus && out, "corpus and out must be non-null");
    require(i < corpus->entries.size(), "corpus index out of range");
    *out = new mf_loop{corpus->entries[i].loop, corpus->entries[i].label};
  });
}

mf_status mf_corpus_write(const mf_corpus* corpus, const char* dir) {
  return guard([&] {
    require(corpus && dir, "corpus and dir must be non-null");
    const auto lines = write_corpus(dir, corpus->entries);
    const auto path = std::filesystem::path(dir) / "manifest.tsv";
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_manifest(out, lines);
  });
}

mf_status mf_reconstruct(const mf_graph* graph, const mf_corpus* corpus, mf_graph** out) {
  return guard([&] {
    require(graph && corpus && out && !graph->directed, "needs an undirected graph and a corpus");
    auto* c = const_cast<mf_corpus*>(corpus);
    std::call_once(c->index_once, [c] { c->index = std::make_unique<ReconstructionIndex>(c->entries); });
    *out = wrap(reconstruct_directed(graph->graph, *c->index));
  });
}

mf_status mf_verify(const char* suite, const mf_corpus* corpus, mf_report** out) {
  return guard([&] {
    require(suite && corpus && out, "suite, corpus and out must be non-null");
    const std::string name = suite;
    auto r = std::make_unique<mf_report>();
    if (name == "main") {
      r->report = verify_main_theorem(corpus->entries);
    } else if (name == "classify") {
      r->report = verify_unique_subloop_classification(corpus->entries);
    } else if (name == "order-lemma") {
      r->report.suite = name;
      for (const auto& e : corpus->entries)
        if (is_order_lemma_candidate(e.loop)) r->report.append(verify_order_lemma(e.loop, e.label));
    } else if (name == "genoct") {
      r->report.suite = name;
      for (const auto& e : corpus->entries)
        if (e.loop.is_moufang() && !e.loop.is_group()) r->report.append(verify_genoct_equivalences(e.loop, e.label));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    }
    r->text = r->report.to_text();
    *out = r.release();
  });
}

void mf_report_free(mf_report* report) { delete report; }
size_t mf_report_failures(const mf_report* report) { return report ? report->report.count(CaseStatus::Fail) : 0; }
size_t mf_report_cases(const mf_report* report) { return report ? report->report.cases.size() : 0; }
const char* mf_report_text(const mf_report* report) { return report ? report->text.c_str() : ""; }

mf_status mf_octonion_generate(size_t n, double eps, mf_octonion_witness** out) {
  return guard([&] {
    require(out, "out must be non-null");
    *out = new mf_octonion_witness{generate_octonion_subloop(n, eps)};
  });
}

void mf_octonion_witness_free(mf_octonion_witness* witness) { delete witness; }

size_t mf_octonion_witness_size(const mf_octonion_witness* witness) {
  return witness ? witness->witness.elements.size() : 0;
}

mf_status mf_octonion_witness_element(const mf_octonion_witness* witness, size_t i, double* coords) {
  return guard([&] {
    require(witness && coords, "witness and coords must be non-null");
    require(i < witness->witness.elements.size(), "element out of range");
    std::copy(witness->witness.elements[i].c.begin(), witness->witness.elements[i].c.end(), coords);
  });
}

mf_status mf_octonion_witness_loop(const mf_octonion_witness* witness, mf_loop** out) {
  return guard([&] {
    require(witness && out, "witness and out must be non-null");
    *out = new mf_loop{witness->witness.table, ""};
  });
}

mf_status mf_octonion_witness_write(const mf_octonion_witness* witness, const char* path) {
  return guard([&] {
    require(witness && path, "witness and path must be non-null");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, std::string("cannot write ") + path);
    write_octonion_witness(out, witness->witness);
  });
}

}  // extern "C"
