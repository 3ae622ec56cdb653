#include <doctest.h>

#include "moufang/canon.hpp"
#include "moufang/constructions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace moufang;
using moufang::test::code_of;
using moufang::test::named;

namespace {

bool has_label(const std::vector<CorpusEntry>& c, const std::string& label) {
  return std::any_of(c.begin(), c.end(), [&](const CorpusEntry& e) { return e.label == label; });
}

}  // namespace

TEST_CASE("small constructors") {
  CHECK(cyclic(1).order() == 1);
  const Loop klein = direct_product(cyclic(2), cyclic(2));
  CHECK(klein.order() == 4);
  CHECK(exponent(klein) == 2);
  const Loop s3 = dihedral(3);
  CHECK(s3.order() == 6);
  CHECK(s3.is_group());
  CHECK_FALSE(s3.is_commutative());
  CHECK(code_of([] { cyclic(0); }) == ErrorCode::ParamTooSmall);
}

TEST_CASE("generalized quaternion groups") {
  const Loop q8 = generalized_quaternion(2);
  CHECK(q8.order() == 8);
  CHECK(q8.is_group());
  CHECK(count_involutions(q8) == 1);
  const auto orders = element_orders(q8);
  CHECK(std::count(orders.begin(), orders.end(), 4u) == 6);
  CHECK(q8.mul(named(q8, "b"), named(q8, "b")) == named(q8, "a^2"));
  const Loop q16 = generalized_quaternion(4);
  CHECK(subloop_closure(q16, {named(q16, "a")}).size() == 8);
  CHECK(code_of([] { generalized_quaternion(1); }) == ErrorCode::ParamTooSmall);
  for (std::size_t m = 2; m <= 4; ++m) {
    const Loop q = generalized_quaternion(m);
    CHECK(count_involutions(q) == 1);
    for (const Subloop& s : all_subloops(q)) {
      const Loop sl = s.as_loop();
      if (!sl.is_commutative()) continue;
      const auto o = element_orders(sl);
      CHECK(std::find(o.begin(), o.end(), sl.order()) != o.end());
    }
  }
}

TEST_CASE("chein_double rules") {
  const Loop q8 = generalized_quaternion(2);
  const Elem c = named(q8, "a^2");
  const Loop o16 = chein_double(q8, c);
  CHECK(o16.order() == 16);
  CHECK(o16.is_moufang());
  CHECK_FALSE(o16.is_group());
  CHECK(o16.mul(8, 8) == c);  // u * u = c
  // The first |G| indices form a copy of G, and (gu)^2 = c.
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) CHECK(o16.mul(x, y) == q8.mul(x, y));
    CHECK(o16.mul(8 + x, 8 + x) == c);
  }
  const Loop m12 = chein_double(dihedral(3), 0);
  CHECK(m12.order() == 12);
  CHECK(m12.is_moufang());
  CHECK_FALSE(m12.is_group());

  CHECK(code_of([&] { chein_double(o16, 0); }) == ErrorCode::BaseNotGroup);
  CHECK(code_of([&] { chein_double(q8, named(q8, "a")); }) == ErrorCode::NotCentral);
  CHECK(code_of([&] { chein_double(q8, 0, CheinOptions{true}); }) == ErrorCode::NotCentral);
  CHECK(code_of([&] { chein_double(q8, 99); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("chein_double is associative iff the base is commutative (c^2 = 1)") {
  for (const Loop& g : {cyclic(4), cyclic(6), direct_product(cyclic(2), cyclic(2)), dihedral(4), dihedral(3),
                        generalized_quaternion(3)}) {
    const Subloop z = center(g);
    for (Elem c : z.elements()) {
      if (g.mul(c, c) != 0) continue;
      const Loop m = chein_double(g, c);
      CHECK(m.is_moufang());
      CHECK(m.is_group() == g.is_commutative());
    }
  }
}

TEST_CASE("chein_double with c of order 3 is not power-associative") {
  const Loop m = chein_double(cyclic(3), 1);
  CHECK_FALSE(is_power_associative(m));
  CHECK_FALSE(m.is_moufang());
}

TEST_CASE("generalized octonion loops") {
  const Loop o16 = generalized_octonion(2);
  CHECK(o16.order() == 16);
  CHECK(count_involutions(o16) == 1);
  CHECK(has_unique_subloop_of_order_p(o16, 2));
  const Loop o24 = generalized_octonion(3);
  CHECK(o24.order() == 24);
  CHECK(exponent(o24) == 12);
  CHECK(code_of([] { generalized_octonion(1); }) == ErrorCode::ParamTooSmall);
  for (std::size_t m = 2; m <= 4; ++m) {
    const Loop o = generalized_octonion(m);
    CHECK(o.is_moufang());
    CHECK_FALSE(o.is_group());
    for (const Subloop& s : all_subloops(o)) {
      if (!is_associative_on(o, s.elements())) continue;
      const Loop sl = s.as_loop();
      if (!sl.is_commutative()) continue;
      const auto orders = element_orders(sl);
      CHECK(std::find(orders.begin(), orders.end(), sl.order()) != orders.end());
    }
  }
}

TEST_CASE("element names follow the recipes") {
  const Loop o16 = generalized_octonion(2);
  CHECK(o16.element_name(0) == "1");
  CHECK(o16.element_name(8) == "u");
  CHECK(o16.element_name(8 + 2) == "a^2u");
  CHECK(dihedral(4).element_name(5) == "sr");
}

TEST_CASE("metacyclic and Heisenberg groups") {
  const Loop g = metacyclic(4, 4, 3);
  CHECK(g.order() == 16);
  CHECK(g.is_group());
  CHECK_FALSE(g.is_commutative());
  CHECK(oracle::loops_isomorphic(metacyclic(3, 2, 2), dihedral(3)));
  CHECK(code_of([] { metacyclic(5, 2, 2); }) == ErrorCode::InvalidArgument);
  const Loop h27 = heisenberg(3);
  CHECK(h27.order() == 27);
  CHECK(h27.is_group());
  CHECK(exponent(h27) == 3);
  CHECK(center(h27).size() == 3);
  CHECK(loop_isomorphic(heisenberg(2), dihedral(4)).has_value());
}

TEST_CASE("chein_recognize") {
  for (std::size_t m = 2; m <= 8; ++m) {
    CAPTURE(m);
    const Loop o = generalized_octonion(m);
    const CheinWitness w = chein_recognize(o);
    CHECK(w.base.size() == o.order() / 2);
    CHECK(o.mul(w.u, w.u) == w.c);
    const Loop rebuilt = chein_double(w.base.as_loop(), *w.base.local_index(w.c));
    CHECK(loop_isomorphic(rebuilt, o).has_value());
  }
  const CheinWitness z4 = chein_recognize(cyclic(4));
  CHECK(z4.base.elements() == std::vector<Elem>{0, 2});
  CHECK(z4.c == 2);
  CHECK(code_of([] { chein_recognize(cyclic(3)); }) == ErrorCode::NoDecomposition);
  // Z_8 has an index-2 subgroup but no doubling that rebuilds it.
  CHECK(code_of([] { chein_recognize(cyclic(8)); }) == ErrorCode::NoDecomposition);
}

TEST_CASE("corpus contents") {
  CHECK(build_corpus(1).size() == 1);
  const auto c8 = build_corpus(8);
  for (const char* label : {"Z_8", "Z_4xZ_2", "Z_2xZ_2xZ_2", "D_4", "Q_8"}) CHECK(has_label(c8, label));
  for (const auto& e : c8) CHECK(e.order <= 8);
  const auto c16 = build_corpus(16);
  CHECK(std::count_if(c16.begin(), c16.end(), [](const CorpusEntry& e) { return e.label == "O_16"; }) == 1);
  std::size_t isomorphic_to_o16 = 0;
  for (const auto& e : c16)
    if (e.order == 16 && loop_isomorphic(e.loop, generalized_octonion(2))) ++isomorphic_to_o16;
  CHECK(isomorphic_to_o16 == 1);
  for (const auto& e : c16) {
    CHECK(e.loop.order() == e.order);
    CHECK(e.loop.is_moufang());
  }
  CHECK(code_of([] { build_corpus(65); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("corpus is deduplicated and deterministic") {
  const auto a = build_corpus(16);
  const auto b = build_corpus(16);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].loop == b[i].loop);
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i].order == a[j].order && a[i].order <= 8) CHECK_FALSE(oracle::loops_isomorphic(a[i].loop, a[j].loop));
}

TEST_CASE("strict corpus has no c = 1 doubles") {
  for (const auto& e : build_corpus(24, CorpusOptions{true})) CHECK(e.label.find(";c=1)") == std::string::npos);
}

TEST_CASE("recipes") {
  CHECK(build_from_recipe("octonion:2").label == "O_16");
  CHECK(build_from_recipe("octonion:2").loop == generalized_octonion(2));
  CHECK(build_from_recipe("cyclic:1").order == 1);
  const auto m = build_from_recipe("chein:quaternion:2:c=2");
  CHECK(m.label == "M(Q_8,2;c=a^2)");
  CHECK(m.loop == generalized_octonion(2));
  const auto p = build_from_recipe("product:dihedral:4,cyclic:2");
  CHECK(p.label == "D_4xZ_2");
  CHECK(p.order == 16);
  CHECK(build_from_recipe("product:metacyclic:4,4,3,cyclic:2").order == 32);
  CHECK(build_from_recipe("chein:product:dihedral:3,cyclic:2:c=1").order == 24);
  CHECK(build_from_recipe("heisenberg:3").label == "H_27");
  CHECK(code_of([] { build_from_recipe("quaternion:1"); }) == ErrorCode::ParamTooSmall);
  CHECK(code_of([] { build_from_recipe("cyclic:x"); }) == ErrorCode::BadRecipe);
  CHECK(code_of([] { build_from_recipe("torus:3"); }) == ErrorCode::BadRecipe);
  CHECK(code_of([] { build_from_recipe("chein:quaternion:2"); }) == ErrorCode::BadRecipe);
  CHECK(code_of([] { build_from_recipe("chein:quaternion:2:c=1", CheinOptions{}); }) == ErrorCode::NotCentral);
  CHECK(code_of([] { build_from_recipe("product:cyclic:2"); }) == ErrorCode::BadRecipe);
}
