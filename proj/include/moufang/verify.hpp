#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"
#include "moufang/power_graph.hpp"

namespace moufang {

/// Isomorphism type recognized by the classification routines.
struct LoopClass {
  enum class Kind { CyclicGroup, GeneralizedQuaternion, GeneralizedOctonion, Other };
  Kind kind = Kind::Other;
  std::size_t order = 0;

  /// The m of Q_{4m} / O_{8m}, or n for Z_n; 0 for Other.
  std::size_t parameter() const noexcept;
  /// "CyclicGroup(9)", "GeneralizedQuaternion(16)", ...
  std::string to_string() const;

  static LoopClass cyclic_group(std::size_t n) { return {Kind::CyclicGroup, n}; }
  static LoopClass quaternion(std::size_t n) { return {Kind::GeneralizedQuaternion, n}; }
  static LoopClass octonion(std::size_t n) { return {Kind::GeneralizedOctonion, n}; }
  static LoopClass other(std::size_t n) { return {Kind::Other, n}; }

  friend bool operator==(const LoopClass&, const LoopClass&) = default;
};

enum class CaseStatus { Pass, Fail, Skip };

struct CaseResult {
  std::string suite;
  std::string case_id;
  CaseStatus status = CaseStatus::Pass;
  std::string witness;  ///< "-" when there is nothing to report
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t count(CaseStatus status) const;
  bool passed() const { return count(CaseStatus::Fail) == 0; }
  void add(std::string case_id, CaseStatus status, std::string witness = "-");
  void append(const VerificationReport& other);
  /// One "suite<TAB>case<TAB>PASS|FAIL|SKIP<TAB>witness" line per case, then
  /// a "# suite=... total=... pass=... fail=... skip=..." footer.
  std::string to_text() const;
};

/// Decides the structure of a Moufang p-loop with a unique subloop of order p.
/// Throws PreconditionFailed when the loop is not such a loop.
LoopClass classify_unique_p_loop(const Loop& loop, std::uint64_t p);

/// Identifies the loop behind a power graph with at least two universal
/// vertices from its order and clique number, confirmed by rebuilding the
/// candidate and comparing power graphs.
/// Throws PreconditionFailed (< 2 universal vertices) or NotPrimePowerPattern.
LoopClass identify_from_graph(const Graph& graph);

/// A constructed loop with the power graph canonical data the reconstruction needs.
struct IndexedEntry {
  std::string label;
  Loop loop;
  Graph undirected;
  CanonicalLabeling undirected_canon;
};

/// Corpus with undirected power graphs canonized once, for repeated lookups.
class ReconstructionIndex {
 public:
  explicit ReconstructionIndex(const std::vector<CorpusEntry>& corpus);

  /// First entry whose undirected power graph is isomorphic to `graph`.
  const IndexedEntry* find(const Graph& graph, const CanonicalLabeling& canon) const;
  const std::vector<IndexedEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<IndexedEntry> entries_;
};

/// Directed power graph whose underlying graph is exactly `graph`.
///
/// Graphs with two or more universal vertices go through identify_from_graph;
/// the rest, and any identification that fails, are matched against the
/// corpus. The witness loop's directed power graph is relabeled onto the
/// vertices of `graph`. Throws NotInCorpus when nothing matches.
Digraph reconstruct_directed(const Graph& graph, const ReconstructionIndex& index);
Digraph reconstruct_directed(const Graph& graph, const std::vector<CorpusEntry>& corpus);

/// Groups the corpus by undirected power graph and checks that every group
/// shares one directed power graph.
VerificationReport verify_main_theorem(const std::vector<CorpusEntry>& corpus);

/// For every ordered pair (x, y), at least one of: xy = yx; xy = y^-1 x with
/// |x| = 4; xy = y x^-1 with |y| = 4; |x| = |y| = 4.
/// Throws PreconditionFailed unless the loop is a nonassociative Moufang 2-loop
/// with a unique involution.
VerificationReport verify_order_lemma(const Loop& loop, const std::string& label = "loop");

/// The four generalized-octonion conditions evaluated independently.
struct GenOctConditions {
  bool abelian_subloops_cyclic = false;  ///< every associative commutative subloop is cyclic
  bool quaternion_double = false;        ///< a doubling witness over a generalized quaternion base with c != 1
  bool octonion_realization = false;     ///< isomorphic to the unit-octonion subloop of the same order
  bool two_loop_unique_involution = false;
};

/// Throws PreconditionFailed unless the loop is nonassociative Moufang of order <= 64.
GenOctConditions genoct_conditions(const Loop& loop);

/// Reports the four conditions and whether they agree. When the order is not
/// a power of 2 a disagreement is recorded as a scope note (SKIP), not a failure.
VerificationReport verify_genoct_equivalences(const Loop& loop, const std::string& label = "loop");

/// Every corpus p-loop with a unique subloop of order p classifies as cyclic,
/// generalized quaternion or generalized octonion, and as cyclic for odd p.
VerificationReport verify_unique_subloop_classification(const std::vector<CorpusEntry>& corpus);

}  // namespace moufang
