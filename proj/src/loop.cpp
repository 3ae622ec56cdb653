#include "moufang/loop.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace moufang {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoTwoSidedInverse: return "NoTwoSidedInverse";
    case ErrorCode::NotPowerAssociative: return "NotPowerAssociative";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::ParamTooSmall: return "ParamTooSmall";
    case ErrorCode::BaseNotGroup: return "BaseNotGroup";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::MatchAmbiguous: return "MatchAmbiguous";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotPrimePowerPattern: return "NotPrimePowerPattern";
    case ErrorCode::NotInCorpus: return "NotInCorpus";
    case ErrorCode::BadRecipe: return "BadRecipe";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool is_permutation_of_range(std::span<const Elem> values) {
  std::vector<bool> seen(values.size(), false);
  for (Elem v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Validates the Latin property of a row-major table; returns a description of
// the first offending row or column.
std::optional<std::string> latin_violation(std::size_t n, const std::vector<Elem>& data) {
  std::vector<Elem> column(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_permutation_of_range({data.data() + i * n, n})) return "row " + std::to_string(i) + " repeats an entry";
    for (std::size_t j = 0; j < n; ++j) column[j] = data[j * n + i];
    if (!is_permutation_of_range(column)) return "column " + std::to_string(i) + " repeats an entry";
  }
  return std::nullopt;
}

}  // namespace

Loop::Loop(CayleyTable table)
    : table_(std::make_shared<const CayleyTable>(std::move(table))), flags_(std::make_shared<FlagCache>()) {}

Loop Loop::from_trusted(std::size_t n, std::vector<Elem> data) {
  assert(data.size() == n * n);
  assert(!latin_violation(n, data).has_value());
#ifndef NDEBUG
  for (std::size_t i = 0; i < n; ++i) assert(data[i] == i && data[i * n] == i);
#endif
  return Loop(CayleyTable(n, std::move(data)));
}

Loop validate_table(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "table must have at least one row");
  std::vector<Elem> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::InvalidArgument,
                  "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (long long v : raw[i]) {
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw Error(ErrorCode::InvalidArgument, "entry " + std::to_string(v) + " in row " + std::to_string(i) +
                                                    " is outside [0, " + std::to_string(n) + ")");
      }
      data.push_back(static_cast<Elem>(v));
    }
  }
  if (auto why = latin_violation(n, data)) throw Error(ErrorCode::NotLatinSquare, *why);

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = data[e * n + x] == x && data[x * n + e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  if (*identity != 0) {
    // Swap labels 0 and e; the transposition is its own inverse.
    const Elem e = *identity;
    auto relabel = [e](Elem x) -> Elem { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<Elem> swapped(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) swapped[relabel(x) * n + relabel(y)] = relabel(data[x * n + y]);
    data = std::move(swapped);
  }
  return Loop(CayleyTable(n, std::move(data)));
}

Elem Loop::right_inverse(Elem x) const noexcept {
  const auto r = table_->row(x);
  return static_cast<Elem>(std::find(r.begin(), r.end(), Elem{0}) - r.begin());
}

Elem Loop::left_inverse(Elem x) const noexcept {
  const std::size_t n = order();
  for (Elem z = 0; z < n; ++z)
    if (mul(z, x) == 0) return z;
  return 0;  // unreachable for a Latin square
}

Elem Loop::inv(Elem x) const {
  const Elem r = right_inverse(x);
  const Elem l = left_inverse(x);
  if (r != l) {
    throw Error(ErrorCode::NoTwoSidedInverse, "element " + std::to_string(x) + " has left inverse " +
                                                  std::to_string(l) + " but right inverse " + std::to_string(r));
  }
  return r;
}

bool Loop::is_group() const {
  int v = flags_->group.load(std::memory_order_relaxed);
  if (v < 0) {
    v = moufang::is_associative(*this) ? 1 : 0;
    flags_->group.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

bool Loop::is_moufang() const {
  int v = flags_->moufang.load(std::memory_order_relaxed);
  if (v < 0) {
    v = moufang::is_moufang(*this) ? 1 : 0;
    flags_->moufang.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

bool Loop::is_commutative() const {
  int v = flags_->commutative.load(std::memory_order_relaxed);
  if (v < 0) {
    v = moufang::is_commutative(*this) ? 1 : 0;
    flags_->commutative.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

std::string Loop::element_name(Elem x) const {
  if (names_ && x < names_->size()) return (*names_)[x];
  return std::to_string(x);
}

Loop Loop::with_names(std::vector<std::string> names) const {
  if (names.size() != order()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(order()) + " element names");
  }
  Loop copy = *this;
  copy.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return copy;
}

Subloop::Subloop(Loop parent, std::vector<Elem> elements) : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) {
    throw Error(ErrorCode::InvalidArgument, "a subloop must contain the identity");
  }
  for (Elem x : elements_)
    for (Elem y : elements_)
      if (!contains(parent_.mul(x, y))) {
        throw Error(ErrorCode::InvalidArgument, "subset is not closed under multiplication");
      }
}

bool Subloop::contains(Elem x) const noexcept { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::optional<Elem> Subloop::local_index(Elem x) const noexcept {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

Loop Subloop::as_loop() const {
  const std::size_t k = elements_.size();
  std::vector<Elem> data(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) data[i * k + j] = *local_index(parent_.mul(elements_[i], elements_[j]));
  Loop sub = Loop::from_trusted(k, std::move(data));
  if (parent_.has_element_names()) {
    std::vector<std::string> names;
    names.reserve(k);
    for (Elem x : elements_) names.push_back(parent_.element_name(x));
    sub = sub.with_names(std::move(names));
  }
  return sub;
}

Subloop subloop_closure(const Loop& loop, std::span<const Elem> generators) {
  const std::size_t n = loop.order();
  std::vector<bool> member(n, false);
  std::vector<Elem> elems{0};
  member[0] = true;
  for (Elem g : generators) {
    if (g >= n) throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(g) + " out of range");
    if (!member[g]) {
      member[g] = true;
      elems.push_back(g);
    }
  }
  // Every element at position < done has been multiplied with every element
  // at position < done, both ways.
  std::size_t done = 0;
  while (done < elems.size()) {
    const Elem z = elems[done];
    for (std::size_t i = 0; i <= done; ++i) {
      const Elem w = elems[i];
      for (Elem p : {loop.mul(z, w), loop.mul(w, z)}) {
        if (!member[p]) {
          member[p] = true;
          elems.push_back(p);
        }
      }
    }
    ++done;
  }
  return Subloop(loop, std::move(elems));
}

}  // namespace moufang
