#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"
#include "moufang/octonion.hpp"
#include "test_util.hpp"

using namespace moufang;
using moufang::test::code_of;

namespace {

Octon e(std::size_t i) { return Octon::basis(i); }

Octon neg(const Octon& x) { return Octon{} - x; }

}  // namespace

TEST_CASE("basis products") {
  CHECK(oct_mul(e(1), e(2)) == e(3));
  CHECK(oct_mul(oct_mul(e(1), e(2)), e(4)) == e(7));
  CHECK(oct_mul(e(1), oct_mul(e(2), e(4))) == neg(e(7)));
  for (std::size_t i = 1; i < 8; ++i) {
    CHECK(oct_mul(e(i), e(i)) == neg(e(0)));
    CHECK(oct_mul(e(0), e(i)) == e(i));
    for (std::size_t j = 1; j < 8; ++j)
      if (i != j) CHECK(oct_mul(e(i), e(j)) == neg(oct_mul(e(j), e(i))));
  }
}

TEST_CASE("norm and conjugate") {
  Octon x;
  x.c = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(x.norm() == doctest::Approx(std::sqrt(204.0)));
  const Octon xx = oct_mul(x, x.conj());
  CHECK(xx.c[0] == doctest::Approx(204.0));
  for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(xx.c[i]) < 1e-12);
  CHECK(max_norm_distance(e(1), neg(e(1))) == 2.0);
}

TEST_CASE("oct_exp_e2") {
  CHECK(oct_exp_e2(0) == e(0));
  const Octon q = oct_exp_e2(std::numbers::pi / 2);
  CHECK(max_norm_distance(q, e(2)) < 1e-15);
  const Octon h = oct_exp_e2(std::numbers::pi / 4);
  CHECK(h.c[0] == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(h.c[2] == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(h.c[1] == 0.0);
}

TEST_CASE("random unit octonions are alternative with multiplicative norm") {
  std::mt19937 rng(1);
  std::normal_distribution<double> gauss;
  auto unit = [&] {
    Octon x;
    for (double& c : x.c) c = gauss(rng);
    const double n = x.norm();
    for (double& c : x.c) c /= n;
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    const Octon x = unit();
    const Octon y = unit();
    CHECK(std::abs(oct_mul(x, y).norm() - 1.0) < 1e-12);
    CHECK(max_norm_distance(oct_mul(oct_mul(x, x), y), oct_mul(x, oct_mul(x, y))) < 1e-12);
    CHECK(max_norm_distance(oct_mul(oct_mul(y, x), x), oct_mul(y, oct_mul(x, x))) < 1e-12);
  }
}

TEST_CASE("closures realize the generalized octonion loops") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const NumericLoopWitness w = generate_octonion_subloop(n);
    CHECK(w.elements.size() == 8 * n);
    CHECK(w.table.order() == 8 * n);
    CHECK(w.elements[0] == e(0));
    CHECK(w.table.is_moufang());
    for (const Octon& x : w.elements) CHECK(std::abs(x.norm() - 1.0) < 1e-12);
    // The table is the numeric product.
    for (Elem a = 0; a < w.table.order(); ++a)
      for (Elem b = 0; b < w.table.order(); ++b)
        CHECK(max_norm_distance(oct_mul(w.elements[a], w.elements[b]), w.elements[w.table.mul(a, b)]) < 1e-9);
    if (n <= 4) CHECK(loop_isomorphic(w.table, generalized_octonion(n)).has_value());
  }
}

TEST_CASE("tighter eps gives the same table") {
  for (std::size_t n = 2; n <= 4; ++n) CHECK(generate_octonion_subloop(n, 1e-10).table == generate_octonion_subloop(n).table);
}

TEST_CASE("large eps") {
  // Elements for n = 2 are +-e_i, at max-norm distance >= 1 from each other.
  CHECK(generate_octonion_subloop(2, 0.9).elements.size() == 16);
  CHECK(code_of([] { generate_octonion_subloop(2, 1.5); }) == ErrorCode::MatchAmbiguous);
}

TEST_CASE("argument errors") {
  CHECK(code_of([] { generate_octonion_subloop(1); }) == ErrorCode::ParamTooSmall);
  CHECK(code_of([] { generate_octonion_subloop(65); }) == ErrorCode::OrderTooLarge);
  CHECK(code_of([] { generate_octonion_subloop(2, 0.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { generate_octonion_subloop(2, -1.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { generate_octonion_subloop(2, std::nan("")); }) == ErrorCode::InvalidArgument);
}
