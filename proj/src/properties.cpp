#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "moufang/loop.hpp"

namespace moufang {

bool is_associative_on(const Loop& loop, std::span<const Elem> elements) {
  for (Elem x : elements)
    for (Elem y : elements) {
      const Elem xy = loop.mul(x, y);
      for (Elem z : elements)
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
    }
  return true;
}

bool is_associative(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      const Elem xy = loop.mul(x, y);
      for (Elem z = 1; z < n; ++z)
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
    }
  return true;
}

bool is_commutative(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
  return true;
}

bool is_power_associative(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  for (Elem x = 0; x < n; ++x)
    if (!is_associative_on(loop, subloop_closure(loop, {x}).elements())) return false;
  return true;
}

bool is_diassociative(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  // Many pairs generate the same subloop; each distinct one is scanned once.
  std::unordered_set<std::string> verified;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) {
      const Subloop s = subloop_closure(loop, {x, y});
      std::string key(n, '\0');
      for (Elem e : s.elements()) key[e] = 1;
      if (verified.contains(key)) continue;
      if (!is_associative_on(loop, s.elements())) return false;
      verified.insert(std::move(key));
    }
  return true;
}

std::array<bool, 4> moufang_identities(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  std::array<bool, 4> holds{true, true, true, true};
  auto m = [&loop](Elem a, Elem b) { return loop.mul(a, b); };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (holds[0] && m(z, m(x, m(z, y))) != m(m(m(z, x), z), y)) holds[0] = false;
        if (holds[1] && m(x, m(z, m(y, z))) != m(m(m(x, z), y), z)) holds[1] = false;
        const Elem zx_yz = m(m(z, x), m(y, z));
        if (holds[2] && zx_yz != m(m(z, m(x, y)), z)) holds[2] = false;
        if (holds[3] && zx_yz != m(z, m(m(x, y), z))) holds[3] = false;
      }
  return holds;
}

bool is_moufang(const Loop& loop) {
  const auto ids = moufang_identities(loop);
  if (!std::all_of(ids.begin(), ids.end(), [&](bool b) { return b == ids[0]; })) {
    throw std::logic_error("Moufang identities disagree on a loop; they are equivalent laws");
  }
  return ids[0];
}

bool has_inverse_property(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  std::vector<Elem> inverse(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem r = loop.right_inverse(x);
    if (loop.left_inverse(x) != r) return false;
    inverse[x] = r;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (loop.mul(inverse[x], loop.mul(x, y)) != y) return false;
      if (loop.mul(loop.mul(x, y), inverse[y]) != x) return false;
    }
  return true;
}

std::uint64_t right_power_period(const Loop& loop, Elem x) {
  std::uint64_t k = 1;
  for (Elem p = x; p != 0; p = loop.mul(p, x)) ++k;
  return k;
}

std::uint64_t element_order(const Loop& loop, Elem x) {
  if (x >= loop.order()) throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " out of range");
  if (!is_associative_on(loop, subloop_closure(loop, {x}).elements())) {
    throw Error(ErrorCode::NotPowerAssociative, "<" + std::to_string(x) + "> is not a group");
  }
  return right_power_period(loop, x);
}

std::vector<std::uint64_t> element_orders(const Loop& loop) {
  std::vector<std::uint64_t> orders(loop.order());
  for (Elem x = 0; x < loop.order(); ++x) orders[x] = element_order(loop, x);
  return orders;
}

std::uint64_t exponent(const Loop& loop) {
  std::uint64_t e = 1;
  for (std::uint64_t k : element_orders(loop)) e = std::lcm(e, k);
  return e;
}

bool check_element_lagrange(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  bool all_groups = true;
  for (Elem x = 0; x < n; ++x) {
    if (!is_associative_on(loop, subloop_closure(loop, {x}).elements())) {
      all_groups = false;
      continue;
    }
    if (n % right_power_period(loop, x) != 0) return false;
  }
  if (!all_groups) throw Error(ErrorCode::NotPowerAssociative, "some <x> is not a group");
  return true;
}

bool is_nuclear_in(const Loop& loop, Elem a, std::span<const Elem> elements) {
  auto m = [&loop](Elem p, Elem q) { return loop.mul(p, q); };
  for (Elem x : elements)
    for (Elem y : elements) {
      if (m(m(a, x), y) != m(a, m(x, y))) return false;
      if (m(m(x, a), y) != m(x, m(a, y))) return false;
      if (m(m(x, y), a) != m(x, m(y, a))) return false;
    }
  return true;
}

namespace {
std::vector<Elem> all_elements(const Loop& loop) {
  std::vector<Elem> v(loop.order());
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}
}  // namespace

Subloop nucleus(const Loop& loop) {
  const auto everything = all_elements(loop);
  std::vector<Elem> nuc;
  for (Elem a : everything)
    if (is_nuclear_in(loop, a, everything)) nuc.push_back(a);
  return Subloop(loop, std::move(nuc));
}

Subloop center(const Loop& loop) {
  const Elem n = static_cast<Elem>(loop.order());
  const Subloop nuc = nucleus(loop);
  std::vector<Elem> z;
  for (Elem a : nuc.elements()) {
    bool commutes = true;
    for (Elem x = 0; x < n && commutes; ++x) commutes = loop.mul(a, x) == loop.mul(x, a);
    if (commutes) z.push_back(a);
  }
  return Subloop(loop, std::move(z));
}

std::size_t count_involutions(const Loop& loop) {
  std::size_t count = 0;
  for (Elem x = 1; x < loop.order(); ++x)
    if (loop.mul(x, x) == 0) ++count;
  return count;
}

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) noexcept {
  if (n < 2) return std::nullopt;
  const auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

}  // namespace moufang
