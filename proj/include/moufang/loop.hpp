#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moufang/error.hpp"

namespace moufang {

/// Index of a loop element. Element 0 is always the identity.
using Elem = std::uint32_t;

class Loop;

/// Largest order for which subloop enumeration and loop isomorphism run.
inline constexpr std::size_t kMaxSubloopOrder = 128;

/// Square multiplication table whose rows and columns are permutations of
/// [0, n) and whose row 0 and column 0 are the identity permutation.
/// Only `validate_table` (and the trusted constructors) can produce one.
class CayleyTable {
 public:
  std::size_t order() const noexcept { return n_; }
  Elem at(Elem x, Elem y) const noexcept { return data_[static_cast<std::size_t>(x) * n_ + y]; }
  std::span<const Elem> row(Elem x) const noexcept {
    return {data_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  const std::vector<Elem>& data() const noexcept { return data_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  friend class Loop;
  friend Loop validate_table(const std::vector<std::vector<long long>>& raw);
  CayleyTable(std::size_t n, std::vector<Elem> data) : n_(n), data_(std::move(data)) {}

  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// A finite loop backed by a shared immutable Cayley table.
///
/// Copies are cheap and share the table. Structural flags are computed on
/// first request and cached; concurrent first requests compute the same value,
/// so the racing stores are idempotent.
class Loop {
 public:
  std::size_t order() const noexcept { return table_->order(); }
  const CayleyTable& table() const noexcept { return *table_; }

  Elem mul(Elem x, Elem y) const noexcept { return table_->at(x, y); }

  /// Two-sided inverse; throws NoTwoSidedInverse when left and right inverses differ.
  Elem inv(Elem x) const;
  /// Left division solution z of z*x = 0 and right solution of x*z = 0.
  Elem left_inverse(Elem x) const noexcept;
  Elem right_inverse(Elem x) const noexcept;

  bool is_group() const;
  bool is_moufang() const;
  bool is_commutative() const;

  /// Human-readable element names (e.g. "a^2u"); falls back to the index.
  std::string element_name(Elem x) const;
  bool has_element_names() const noexcept { return names_ != nullptr; }
  /// Returns a copy of this loop carrying the given element names.
  Loop with_names(std::vector<std::string> names) const;

  /// Same table; names and caches are not compared.
  friend bool operator==(const Loop& a, const Loop& b) { return *a.table_ == *b.table_; }

  /// Builds a loop from a row-major table already known to be a normalized
  /// loop table. Used by constructions that are correct by construction;
  /// debug builds still validate.
  static Loop from_trusted(std::size_t n, std::vector<Elem> data);

 private:
  struct FlagCache {
    std::atomic<int> group{-1};
    std::atomic<int> moufang{-1};
    std::atomic<int> commutative{-1};
  };

  explicit Loop(CayleyTable table);

  std::shared_ptr<const CayleyTable> table_;
  std::shared_ptr<FlagCache> flags_;
  std::shared_ptr<const std::vector<std::string>> names_;

  friend Loop validate_table(const std::vector<std::vector<long long>>& raw);
};

/// Checks the Latin-square and identity axioms and relabels so the identity is
/// element 0 (by swapping it with the element currently at index 0).
Loop validate_table(const std::vector<std::vector<long long>>& raw);

/// A subset of a loop closed under its multiplication.
class Subloop {
 public:
  Subloop(Loop parent, std::vector<Elem> elements);

  const Loop& parent() const noexcept { return parent_; }
  /// Sorted; always begins with 0.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept;

  /// The subloop as a loop in its own right; element i of the result is
  /// elements()[i] of the parent.
  Loop as_loop() const;
  /// Position of a parent element inside elements(), if present.
  std::optional<Elem> local_index(Elem x) const noexcept;

  friend bool operator==(const Subloop& a, const Subloop& b) { return a.elements_ == b.elements_; }

 private:
  Loop parent_;
  std::vector<Elem> elements_;
};

/// Smallest subloop containing `generators` (and the identity).
Subloop subloop_closure(const Loop& loop, std::span<const Elem> generators);
inline Subloop subloop_closure(const Loop& loop, std::initializer_list<Elem> generators) {
  return subloop_closure(loop, std::span<const Elem>(generators.begin(), generators.size()));
}

/// Least k >= 1 with x^k = 1 (left-iterated powers). Throws NotPowerAssociative
/// when <x> is not a group.
std::uint64_t element_order(const Loop& loop, Elem x);

/// Cycle length of right multiplication by x starting at the identity. Defined
/// for every loop; equals element_order whenever <x> is a group.
std::uint64_t right_power_period(const Loop& loop, Elem x);

bool is_associative(const Loop& loop);
bool is_commutative(const Loop& loop);
bool is_power_associative(const Loop& loop);
bool is_diassociative(const Loop& loop);
/// True iff every triple of elements drawn from `elements` associates.
bool is_associative_on(const Loop& loop, std::span<const Elem> elements);

/// Outcome of each of the four Moufang identities, quantified over all triples:
///   z(x(zy)) = ((zx)z)y,  x(z(yz)) = ((xz)y)z,
///   (zx)(yz) = (z(xy))z,  (zx)(yz) = z((xy)z).
std::array<bool, 4> moufang_identities(const Loop& loop);
/// All four identities hold. They are equivalent laws for loops, so a
/// disagreement between them throws std::logic_error.
bool is_moufang(const Loop& loop);

bool has_inverse_property(const Loop& loop);

/// lcm of all element orders. Throws NotPowerAssociative.
std::uint64_t exponent(const Loop& loop);

/// Order of every element, indexed by element.
std::vector<std::uint64_t> element_orders(const Loop& loop);

/// Every subloop, ordered by (size, elements). Throws OrderTooLarge above 128.
std::vector<Subloop> all_subloops(const Loop& loop);
/// Subloops with at most `max_size` elements. Every subloop of size <= s is
/// reachable through a chain of closures of size <= s, so this is exactly the
/// matching slice of all_subloops.
std::vector<Subloop> subloops_up_to(const Loop& loop, std::size_t max_size);

bool has_unique_subloop_of_order_p(const Loop& loop, std::uint64_t p);

bool check_element_lagrange(const Loop& loop);

Subloop nucleus(const Loop& loop);
Subloop center(const Loop& loop);
/// Whether `a` associates with every pair drawn from `elements`, in all three positions.
bool is_nuclear_in(const Loop& loop, Elem a, std::span<const Elem> elements);

/// Number of elements x with x*x = 1, x != 1.
std::size_t count_involutions(const Loop& loop);

bool is_prime(std::uint64_t p) noexcept;
/// p when n = p^k for some k >= 1, otherwise nullopt.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace moufang
