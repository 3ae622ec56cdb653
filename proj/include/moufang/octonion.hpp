#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

/// Real octonion on the basis e0 = 1, e1..e7.
///
/// The product is Cayley-Dickson doubling of the quaternions,
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
/// with a = e0 + e1 i + e2 j + e3 k and e4 = l, e5 = il, e6 = jl, e7 = kl.
/// So i, j, k alias e1, e2, e3.
struct Octon {
  std::array<double, 8> c{};

  static Octon basis(std::size_t i) {
    Octon o;
    o.c[i] = 1.0;
    return o;
  }

  double norm() const;
  Octon conj() const;
  friend Octon operator+(const Octon& a, const Octon& b);
  friend Octon operator-(const Octon& a, const Octon& b);
  friend bool operator==(const Octon&, const Octon&) = default;
};

Octon oct_mul(const Octon& x, const Octon& y);

/// Largest absolute coordinate difference.
double max_norm_distance(const Octon& a, const Octon& b);

/// cos(theta) e0 + sin(theta) e2.
Octon oct_exp_e2(double theta);

/// Closure of a set of unit octonions with its exact multiplication table.
struct NumericLoopWitness {
  std::vector<Octon> elements;  ///< element i embeds as elements[i]; elements[0] = e0
  Loop table;
};

/// Default matching tolerance.
inline constexpr double kDefaultOctonionEps = 1e-9;
/// Largest n accepted by generate_octonion_subloop.
inline constexpr std::size_t kMaxOctonionN = 64;

/// Closes {exp(e2 pi / n), e3, e5} under multiplication, identifying products
/// with stored elements within `eps` in max-norm, and extracts the table.
///
/// Throws ClosureOverflow once more than 16n elements appear (or the closure
/// ends above 8n), and MatchAmbiguous when a product lies within eps of two
/// stored elements or the closure collapses below 8n.
NumericLoopWitness generate_octonion_subloop(std::size_t n, double eps = kDefaultOctonionEps);

}  // namespace moufang
