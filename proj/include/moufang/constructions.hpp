#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

/// Largest order accepted by build_corpus.
inline constexpr std::size_t kMaxCorpusOrder = 64;

/// Cyclic group Z_n; element i is g^i.
Loop cyclic(std::size_t n);

/// Dihedral group of order 2m. Elements 0..m-1 are rotations r^i, elements
/// m..2m-1 are reflections s r^i.
Loop dihedral(std::size_t m);

/// Componentwise product; the pair (i, j) has index i * |b| + j.
Loop direct_product(const Loop& a, const Loop& b);

/// Generalized quaternion group Q_{4m} = <a, b | a^m = b^2, a^{2m} = 1, b^-1 a b = a^-1>.
/// Index i < 2m encodes a^i and index 2m + i encodes a^i b. Requires m >= 2.
Loop generalized_quaternion(std::size_t m);

/// Split metacyclic group Z_m : Z_k = <a, b | a^m = b^k = 1, b a b^-1 = a^r>.
/// Index i + m j encodes a^i b^j. Throws InvalidArgument unless r is a unit
/// mod m with r^k = 1.
Loop metacyclic(std::size_t m, std::size_t k, std::size_t r);

/// Unitriangular 3x3 matrices over Z_p, order p^3; exponent p for odd prime p.
Loop heisenberg(std::size_t p);

struct CheinOptions {
  /// Reject c = 1, as in the original statement of the construction.
  bool strict_paper = false;
};

/// Chein double M(G, 2) over a group G with central multiplier c:
///
///   g * h   = gh
///   g * hu  = (hg)u
///   gu * h  = (g h^-1)u
///   gu * hu = c h^-1 g
///
/// Indices [0, |G|) are G itself; index |G| + g encodes gu.
Loop chein_double(const Loop& group, Elem c, CheinOptions options = {});

/// chein_double(generalized_quaternion(m), a^m): the generalized octonion loop of order 8m.
Loop generalized_octonion(std::size_t m);

/// Witness that a loop splits as G ∪ Gu with the doubling multiplication.
struct CheinWitness {
  Subloop base;
  Elem u;
  Elem c;  ///< u*u, an element of the base
};

/// Every index-2 subgroup G of `loop` admitting a doubling witness, with the
/// smallest working u for each. Empty when the order is odd.
std::vector<CheinWitness> chein_decompositions(const Loop& loop);

/// The first entry of chein_decompositions. Throws NoDecomposition.
CheinWitness chein_recognize(const Loop& loop);

struct CorpusEntry {
  Loop loop;
  std::string label;
  std::size_t order = 0;
};

struct CorpusOptions {
  bool strict_paper = false;
};

/// Constructive corpus of loops of order <= max_order (at most 64), sorted by
/// (order, family, label) and deduplicated up to loop isomorphism.
std::vector<CorpusEntry> build_corpus(std::size_t max_order, CorpusOptions options = {});

/// Parses and builds a loop from a recipe:
///   cyclic:n | dihedral:m | quaternion:m | octonion:m | metacyclic:m,k,r
///   heisenberg:p | chein:<recipe>:c=<index> | product:<recipe>,<recipe>
/// The returned label follows the corpus naming (e.g. "M(Q_8,2;c=a^2)").
CorpusEntry build_from_recipe(const std::string& recipe, CheinOptions options = {});

}  // namespace moufang
