/* C interface to the moufang library. Objects are opaque handles released
 * with the matching mf_*_free function; every fallible call returns an
 * mf_status and leaves a message for mf_last_error() on failure. */
#ifndef MOUFANG_MOUFANG_H
#define MOUFANG_MOUFANG_H

#include <stddef.h>
#include <stdint.h>

#if defined(MOUFANG_BUILDING)
#define MF_API __attribute__((visibility("default")))
#else
#define MF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
  MF_OK = 0,
  MF_NOT_LATIN_SQUARE = 1,
  MF_NO_IDENTITY,
  MF_NO_TWO_SIDED_INVERSE,
  MF_NOT_POWER_ASSOCIATIVE,
  MF_ORDER_TOO_LARGE,
  MF_PARAM_TOO_SMALL,
  MF_BASE_NOT_GROUP,
  MF_NOT_CENTRAL,
  MF_NO_DECOMPOSITION,
  MF_CLOSURE_OVERFLOW,
  MF_MATCH_AMBIGUOUS,
  MF_PRECONDITION_FAILED,
  MF_NOT_PRIME_POWER_PATTERN,
  MF_NOT_IN_CORPUS,
  MF_BAD_RECIPE,
  MF_PARSE_ERROR,
  MF_INVALID_ARGUMENT,
  MF_IO_ERROR,
  MF_INTERNAL_ERROR = 100
} mf_status;

typedef struct mf_loop mf_loop;
typedef struct mf_graph mf_graph;
typedef struct mf_corpus mf_corpus;
typedef struct mf_report mf_report;
typedef struct mf_octonion_witness mf_octonion_witness;

/* Static name of a status, e.g. "NotLatinSquare". */
MF_API const char* mf_status_string(mf_status status);
/* Message of the last failed call on this thread; "" if none. */
MF_API const char* mf_last_error(void);

/* ---- loops ---- */

/* Row-major n*n table of 0-based indices; the identity is relabeled to 0. */
MF_API mf_status mf_loop_from_table(size_t n, const uint32_t* table, mf_loop** out);
/* Recipe grammar: cyclic:n | dihedral:m | quaternion:m | octonion:m |
 * chein:<recipe>:c=<index> | product:<recipe>,<recipe>. strict_paper rejects c = 1. */
MF_API mf_status mf_loop_from_recipe(const char* recipe, int strict_paper, mf_loop** out);
MF_API mf_status mf_loop_read(const char* path, mf_loop** out);
MF_API mf_status mf_loop_write(const mf_loop* loop, const char* path);
MF_API void mf_loop_free(mf_loop* loop);

MF_API size_t mf_loop_order(const mf_loop* loop);
/* Copies the n*n table into `table`, which must hold n*n entries. */
MF_API void mf_loop_table(const mf_loop* loop, uint32_t* table);
MF_API uint32_t mf_loop_mul(const mf_loop* loop, uint32_t x, uint32_t y);
/* Construction label such as "M(Q_8,2;c=a^2)", or "" for loops read from
 * tables; borrowed until the loop is freed. */
MF_API const char* mf_loop_label(const mf_loop* loop);
/* Element name from the construction ("a^2u"), or the index as text. */
MF_API mf_status mf_loop_element_name(const mf_loop* loop, uint32_t x, char* buf, size_t size);

typedef enum mf_property {
  MF_PROP_ASSOCIATIVE = 0,
  MF_PROP_COMMUTATIVE,
  MF_PROP_MOUFANG,
  MF_PROP_INVERSE_PROPERTY,
  MF_PROP_POWER_ASSOCIATIVE,
  MF_PROP_DIASSOCIATIVE,
  MF_PROP_ELEMENT_LAGRANGE
} mf_property;

/* *out is 1 or 0. */
MF_API mf_status mf_loop_property(const mf_loop* loop, mf_property property, int* out);
/* orders[x] = order of x; `orders` holds n entries. */
MF_API mf_status mf_loop_element_orders(const mf_loop* loop, uint64_t* orders);
MF_API mf_status mf_loop_exponent(const mf_loop* loop, uint64_t* out);
MF_API size_t mf_loop_center_size(const mf_loop* loop);
MF_API size_t mf_loop_nucleus_size(const mf_loop* loop);
MF_API size_t mf_loop_involutions(const mf_loop* loop);
MF_API mf_status mf_loop_unique_subloop(const mf_loop* loop, uint64_t p, int* out);
/* *out is 1 when isomorphic. When `map` is non-null and the loops are
 * isomorphic it receives the n images of a's elements in b. */
MF_API mf_status mf_loop_isomorphic(const mf_loop* a, const mf_loop* b, int* out, uint32_t* map);

/* ---- power graphs ---- */

MF_API mf_status mf_power_graph(const mf_loop* loop, int directed, mf_graph** out);
/* Edge (or arc) list; `pairs` holds 2*m entries. */
MF_API mf_status mf_graph_from_edges(size_t n, size_t m, const uint32_t* pairs, int directed, mf_graph** out);
MF_API mf_status mf_graph_read(const char* path, mf_graph** out);
MF_API mf_status mf_graph_write_edg(const mf_graph* graph, const char* path);
/* Vertex labels come from `names` when non-null. */
MF_API mf_status mf_graph_write_dot(const mf_graph* graph, const mf_loop* names, const char* path);
MF_API void mf_graph_free(mf_graph* graph);

MF_API size_t mf_graph_order(const mf_graph* graph);
MF_API int mf_graph_directed(const mf_graph* graph);
MF_API size_t mf_graph_edge_count(const mf_graph* graph);
/* Undirected view of a digraph; a copy for a graph. */
MF_API mf_status mf_graph_underlying(const mf_graph* graph, mf_graph** out);
MF_API mf_status mf_graph_universal_count(const mf_graph* graph, size_t* out);
MF_API mf_status mf_graph_max_clique(const mf_graph* graph, size_t* out);
/* Hex canonical form; borrowed until the graph is freed. */
MF_API mf_status mf_graph_canonical_hex(const mf_graph* graph, const char** out);
/* A graph and a digraph are never isomorphic. */
MF_API mf_status mf_graph_isomorphic(const mf_graph* a, const mf_graph* b, int* out);

typedef enum mf_loop_class {
  MF_CLASS_CYCLIC = 0,
  MF_CLASS_GENERALIZED_QUATERNION,
  MF_CLASS_GENERALIZED_OCTONION,
  MF_CLASS_OTHER
} mf_loop_class;

MF_API mf_status mf_identify(const mf_graph* graph, mf_loop_class* kind, size_t* order);
MF_API mf_status mf_classify_unique_p_loop(const mf_loop* loop, uint64_t p, mf_loop_class* kind);

/* ---- corpus, reconstruction, verification ---- */

MF_API mf_status mf_corpus_build(size_t max_order, int strict_paper, mf_corpus** out);
MF_API void mf_corpus_free(mf_corpus* corpus);
MF_API size_t mf_corpus_size(const mf_corpus* corpus);
/* "" when i is out of range. */
MF_API const char* mf_corpus_label(const mf_corpus* corpus, size_t i);
/* New handle to entry i. */
MF_API mf_status mf_corpus_loop(const mf_corpus* corpus, size_t i, mf_loop** out);
/* Writes each table to dir and the manifest to dir/manifest.tsv. */
MF_API mf_status mf_corpus_write(const mf_corpus* corpus, const char* dir);

MF_API mf_status mf_reconstruct(const mf_graph* graph, const mf_corpus* corpus, mf_graph** out);

/* Suites: "main", "classify" (corpus-wide) and "order-lemma", "genoct"
 * (run on each qualifying corpus loop). */
MF_API mf_status mf_verify(const char* suite, const mf_corpus* corpus, mf_report** out);
MF_API void mf_report_free(mf_report* report);
MF_API size_t mf_report_failures(const mf_report* report);
MF_API size_t mf_report_cases(const mf_report* report);
/* Report text; borrowed until the report is freed. */
MF_API const char* mf_report_text(const mf_report* report);

/* ---- octonions ---- */

MF_API mf_status mf_octonion_generate(size_t n, double eps, mf_octonion_witness** out);
MF_API void mf_octonion_witness_free(mf_octonion_witness* witness);
MF_API size_t mf_octonion_witness_size(const mf_octonion_witness* witness);
/* Eight coordinates of element i. */
MF_API mf_status mf_octonion_witness_element(const mf_octonion_witness* witness, size_t i, double* coords);
MF_API mf_status mf_octonion_witness_loop(const mf_octonion_witness* witness, mf_loop** out);
MF_API mf_status mf_octonion_witness_write(const mf_octonion_witness* witness, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MOUFANG_MOUFANG_H */
