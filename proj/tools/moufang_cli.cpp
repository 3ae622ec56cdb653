// Command-line front end over the moufang C API.
//
// Exit codes: 0 success, 1 verification failure (or NOT for iso),
// 2 usage, parse or other errors.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moufang/moufang.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CliError {
  mf_status status;
  std::string message;
};

void check(mf_status s) {
  if (s != MF_OK) throw CliError{s, mf_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using LoopPtr = std::unique_ptr<mf_loop, Deleter<mf_loop, mf_loop_free>>;
using GraphPtr = std::unique_ptr<mf_graph, Deleter<mf_graph, mf_graph_free>>;
using CorpusPtr = std::unique_ptr<mf_corpus, Deleter<mf_corpus, mf_corpus_free>>;
using ReportPtr = std::unique_ptr<mf_report, Deleter<mf_report, mf_report_free>>;
using WitnessPtr = std::unique_ptr<mf_octonion_witness, Deleter<mf_octonion_witness, mf_octonion_witness_free>>;

LoopPtr read_loop(const std::string& path) {
  mf_loop* l = nullptr;
  check(mf_loop_read(path.c_str(), &l));
  return LoopPtr(l);
}

LoopPtr recipe_loop(const std::string& recipe, bool strict) {
  mf_loop* l = nullptr;
  check(mf_loop_from_recipe(recipe.c_str(), strict, &l));
  return LoopPtr(l);
}

GraphPtr read_graph(const std::string& path) {
  mf_graph* g = nullptr;
  check(mf_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

CorpusPtr corpus(std::size_t max_order, bool strict) {
  mf_corpus* c = nullptr;
  check(mf_corpus_build(max_order, strict, &c));
  return CorpusPtr(c);
}

const char* tf(int v) { return v ? "true" : "false"; }

// Library writers take a path; "-" or an empty --out goes through a temp
// file that is then copied to stdout.
template <class Write>
void emit(const std::string& out, Write write) {
  if (!out.empty() && out != "-") {
    check(write(out.c_str()));
    return;
  }
  std::string name = (std::filesystem::temp_directory_path() / "moufang-XXXXXX").string();
  const int fd = mkstemp(name.data());
  if (fd < 0) throw CliError{MF_IO_ERROR, "IoError: cannot create a temporary file"};
  close(fd);
  const mf_status s = write(name.c_str());
  if (s == MF_OK) {
    std::ifstream in(name);
    std::cout << in.rdbuf();
    std::cout.flush();
  }
  std::filesystem::remove(name);
  check(s);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int run_gen(const std::string& recipe, const std::string& out, bool strict) {
  LoopPtr loop = recipe_loop(recipe, strict);
  emit(out, [&](const char* p) { return mf_loop_write(loop.get(), p); });
  auto& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "order=" << mf_loop_order(loop.get()) << " label=" << mf_loop_label(loop.get()) << '\n';
  return 0;
}

int run_check(const std::string& path) {
  LoopPtr loop = read_loop(path);
  const mf_loop* l = loop.get();
  const std::size_t n = mf_loop_order(l);
  auto prop = [&](mf_property p) {
    int v = 0;
    check(mf_loop_property(l, p, &v));
    return v;
  };
  std::cout << "order=" << n << " latin=true identity=true";
  std::cout << " inverse-property=" << tf(prop(MF_PROP_INVERSE_PROPERTY));
  const int pa = prop(MF_PROP_POWER_ASSOCIATIVE);
  std::cout << " power-associative=" << tf(pa);
  std::cout << " diassociative=" << tf(prop(MF_PROP_DIASSOCIATIVE));
  std::cout << " commutative=" << tf(prop(MF_PROP_COMMUTATIVE));
  if (pa) {
    std::vector<std::uint64_t> orders(n);
    check(mf_loop_element_orders(l, orders.data()));
    std::map<std::uint64_t, std::size_t> histogram;
    for (auto o : orders) ++histogram[o];
    std::string text;
    for (auto [o, k] : histogram) text += (text.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(k);
    std::uint64_t e = 0;
    check(mf_loop_exponent(l, &e));
    std::cout << " orders=" << text << " exponent=" << e;
    std::cout << " element-lagrange=" << tf(prop(MF_PROP_ELEMENT_LAGRANGE));
  } else {
    std::cout << " orders=n/a exponent=n/a";
  }
  std::cout << " center=" << mf_loop_center_size(l) << " nucleus=" << mf_loop_nucleus_size(l);
  std::cout << " moufang=" << tf(prop(MF_PROP_MOUFANG)) << " associative=" << tf(prop(MF_PROP_ASSOCIATIVE));
  for (auto p : prime_divisors(n)) {
    int unique = 0;
    const mf_status s = mf_loop_unique_subloop(l, p, &unique);
    std::cout << " unique-" << p << "-subloop=" << (s == MF_OK ? tf(unique) : "n/a");
  }
  std::cout << '\n';
  return 0;
}

int run_powergraph(const std::string& table, const std::string& recipe, bool directed, const std::string& format,
                   const std::string& out, bool strict) {
  if (table.empty() && recipe.empty()) throw CliError{MF_INVALID_ARGUMENT, "InvalidArgument: give a table file or --recipe"};
  LoopPtr loop = table.empty() ? recipe_loop(recipe, strict) : read_loop(table);
  LoopPtr names;
  if (!recipe.empty() && !table.empty()) {
    // The recipe only names elements; it must build exactly this table.
    names = recipe_loop(recipe, strict);
    const std::size_t n = mf_loop_order(loop.get());
    bool same = mf_loop_order(names.get()) == n;
    for (uint32_t i = 0; same && i < n; ++i)
      for (uint32_t j = 0; same && j < n; ++j) same = mf_loop_mul(loop.get(), i, j) == mf_loop_mul(names.get(), i, j);
    if (!same) throw CliError{MF_INVALID_ARGUMENT, "InvalidArgument: --recipe does not build the table in " + table};
  }
  const mf_loop* labels = names ? names.get() : (recipe.empty() ? nullptr : loop.get());

  mf_graph* g = nullptr;
  check(mf_power_graph(loop.get(), directed, &g));
  GraphPtr graph(g);
  if (format == "dot") {
    emit(out, [&](const char* p) { return mf_graph_write_dot(graph.get(), labels, p); });
  } else {
    emit(out, [&](const char* p) { return mf_graph_write_edg(graph.get(), p); });
  }
  auto& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "vertices=" << mf_graph_order(graph.get()) << (directed ? " arcs=" : " edges=")
      << mf_graph_edge_count(graph.get());
  if (!directed) {
    std::size_t u = 0;
    check(mf_graph_universal_count(graph.get(), &u));
    log << " universal=" << u;
  }
  log << '\n';
  return 0;
}

int run_iso(const std::string& a, const std::string& b, const std::string& mode) {
  int same = 0;
  if (mode == "loop") {
    LoopPtr x = read_loop(a), y = read_loop(b);
    check(mf_loop_isomorphic(x.get(), y.get(), &same, nullptr));
  } else {
    GraphPtr x = read_graph(a), y = read_graph(b);
    const bool want_directed = mode == "digraph";
    if (mf_graph_directed(x.get()) != want_directed || mf_graph_directed(y.get()) != want_directed) {
      throw CliError{MF_INVALID_ARGUMENT, "InvalidArgument: mode " + mode + " needs " + (want_directed ? "directed" : "undirected") +
                                              " edge lists"};
    }
    check(mf_graph_isomorphic(x.get(), y.get(), &same));
  }
  std::cout << (same ? "ISOMORPHIC" : "NOT") << '\n';
  return same ? 0 : kExitFail;
}

const char* class_name(mf_loop_class k) {
  switch (k) {
    case MF_CLASS_CYCLIC: return "CyclicGroup";
    case MF_CLASS_GENERALIZED_QUATERNION: return "GeneralizedQuaternion";
    case MF_CLASS_GENERALIZED_OCTONION: return "GeneralizedOctonion";
    case MF_CLASS_OTHER: break;
  }
  return "Other";
}

int run_identify(const std::string& path) {
  GraphPtr graph = read_graph(path);
  mf_loop_class kind = MF_CLASS_OTHER;
  std::size_t order = 0;
  check(mf_identify(graph.get(), &kind, &order));
  std::cout << class_name(kind) << "(" << order << ")\n";
  return 0;
}

int run_reconstruct(const std::string& path, std::size_t max_order, bool strict, const std::string& format,
                    const std::string& out) {
  GraphPtr graph = read_graph(path);
  CorpusPtr c = corpus(max_order, strict);
  mf_graph* d = nullptr;
  check(mf_reconstruct(graph.get(), c.get(), &d));
  GraphPtr digraph(d);
  if (format == "dot") {
    emit(out, [&](const char* p) { return mf_graph_write_dot(digraph.get(), nullptr, p); });
  } else {
    emit(out, [&](const char* p) { return mf_graph_write_edg(digraph.get(), p); });
  }
  return 0;
}

int run_verify(const std::string& suite, std::size_t max_order, bool strict, const std::string& out) {
  CorpusPtr c = corpus(max_order, strict);
  mf_report* r = nullptr;
  check(mf_verify(suite.c_str(), c.get(), &r));
  ReportPtr report(r);
  const std::string text = mf_report_text(report.get());
  if (!out.empty() && out != "-") {
    std::FILE* f = std::fopen(out.c_str(), "w");
    if (!f) throw CliError{MF_IO_ERROR, "IoError: cannot write " + out};
    std::fputs(text.c_str(), f);
    std::fclose(f);
    // Footer only.
    std::cout << text.substr(text.rfind("# suite="));
  } else {
    std::cout << text;
  }
  return mf_report_failures(report.get()) == 0 ? 0 : kExitFail;
}

int run_octonion(std::size_t n, double eps, const std::string& out) {
  mf_octonion_witness* w = nullptr;
  check(mf_octonion_generate(n, eps, &w));
  WitnessPtr witness(w);
  emit(out, [&](const char* p) { return mf_octonion_witness_write(witness.get(), p); });
  mf_loop* l = nullptr;
  check(mf_octonion_witness_loop(witness.get(), &l));
  LoopPtr loop(l);
  int moufang = 0;
  check(mf_loop_property(loop.get(), MF_PROP_MOUFANG, &moufang));
  auto& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "elements=" << mf_octonion_witness_size(witness.get()) << " moufang=" << tf(moufang) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moufang loops, power graphs and their verification"};
  app.require_subcommand(1);

  std::string out, format = "edg", recipe, mode = "loop", table, a, b, suite;
  bool directed = false, strict = false;
  double eps = 1e-9;
  std::size_t max_order = 32, n = 0;

  auto* gen = app.add_subcommand("gen", "Build a loop from a recipe and write its table");
  gen->add_option("recipe", recipe, "cyclic:n | dihedral:m | quaternion:m | octonion:m | chein:<r>:c=<i> | product:<r>,<r>")
      ->required();
  gen->add_option("--out", out, "Output .tbl (default stdout)");
  gen->add_flag("--strict-paper", strict, "Reject the multiplier c = 1");

  auto* chk = app.add_subcommand("check", "Report loop properties of a table");
  chk->add_option("table", table, "Input .tbl")->required();

  auto* pg = app.add_subcommand("powergraph", "Power graph of a loop");
  pg->add_option("table", table, "Input .tbl (optional with --recipe)");
  pg->add_option("--recipe", recipe, "Recipe used for the table; supplies DOT labels");
  pg->add_flag("--directed", directed, "Directed power graph");
  pg->add_option("--format", format, "Output format")->check(CLI::IsMember({"edg", "dot"}));
  pg->add_option("--out", out, "Output file (default stdout)");
  pg->add_flag("--strict-paper", strict, "Reject the multiplier c = 1");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two tables or edge lists");
  iso->add_option("a", a)->required();
  iso->add_option("b", b)->required();
  iso->add_option("--mode", mode, "What the files hold")->check(CLI::IsMember({"graph", "digraph", "loop"}));

  auto* ident = app.add_subcommand("identify", "Identify a loop from its undirected power graph");
  ident->add_option("graph", table, "Input .edg")->required();

  auto* rec = app.add_subcommand("reconstruct", "Directed power graph from an undirected one");
  rec->add_option("graph", table, "Input .edg")->required();
  rec->add_option("--max-order", max_order, "Corpus bound")->check(CLI::Range(1, 64));
  rec->add_option("--format", format, "Output format")->check(CLI::IsMember({"edg", "dot"}));
  rec->add_option("--out", out, "Output file (default stdout)");
  rec->add_flag("--strict-paper", strict, "Corpus without c = 1 doubles");

  auto* ver = app.add_subcommand("verify", "Run a verification suite over the corpus");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember({"main", "order-lemma", "genoct", "classify"}));
  ver->add_option("max_order,--max-order", max_order, "Corpus bound")->check(CLI::Range(1, 64));
  ver->add_option("--out", out, "Write the full report here");
  ver->add_flag("--strict-paper", strict, "Corpus without c = 1 doubles");

  auto* oct = app.add_subcommand("octonion", "Unit-octonion loop generated by exp(e2 pi/n), e3, e5");
  oct->add_option("n", n)->required();
  oct->add_option("--eps", eps, "Matching tolerance");
  oct->add_option("--out", out, "Witness dump (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen) return run_gen(recipe, out, strict);
    if (*chk) return run_check(table);
    if (*pg) return run_powergraph(table, recipe, directed, format, out, strict);
    if (*iso) return run_iso(a, b, mode);
    if (*ident) return run_identify(table);
    if (*rec) return run_reconstruct(table, max_order, strict, format, out);
    if (*ver) return run_verify(suite, max_order, strict, out);
    if (*oct) return run_octonion(n, eps, out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitError;
  }
  return kExitError;
}
