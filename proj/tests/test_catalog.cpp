#include <doctest.h>

#include "nilharm/catalog.hpp"
#include "nilharm/error.hpp"

using namespace nilharm;

TEST_CASE("constructor dimensions") {
  auto h1c = heisenberg(1, CompositionKind::C);
  CHECK(h1c.dim() == 3);
  CHECK(h1c.center_indices().size() == 1);
  auto h2h = heisenberg(2, CompositionKind::H);
  CHECK(h2h.dim() == 11);
  CHECK(h2h.center_indices().size() == 3);
  auto h1o = heisenberg(1, CompositionKind::O);
  CHECK(h1o.dim() == 15);
  CHECK(h1o.center_indices().size() == 7);
  CHECK_THROWS_AS(heisenberg(2, CompositionKind::O), InvalidInput);
  CHECK_THROWS_AS(heisenberg(0, CompositionKind::C), InvalidInput);

  CHECK(free_two_step(3, ScalarField::R).dim() == 6);
  CHECK(free_two_step(3, ScalarField::R).center_indices().size() == 3);
  CHECK(free_two_step(2, ScalarField::R).center_indices().size() == 1);
  CHECK(free_two_step(3, ScalarField::C).dim() == 12);
  CHECK(h1c.metadata().at("hermitian_convention").find("conj") != std::string::npos);
}

TEST_CASE("octonion double") {
  auto d = octonion_double();
  CHECK(d.dim() == 14);
  auto b = d.structure(d.index_of("(0,e1)"), d.index_of("(0,e2)"));
  RationalVector expect(14);
  expect[d.index_of("(e3,0)")] = -1;
  CHECK(b == expect);
  CHECK(d.structure(d.index_of("(0,e1)"), d.index_of("(0,e1)")) == RationalVector(14));
  CHECK(center(d).rows() == 7);
  CHECK(d.orderings().count("pfaffian_order") == 1);
}

TEST_CASE("catalog rows") {
  auto r13 = get_entry("2.1", 13);
  CHECK(r13.group_K == "U(1)·Spin(9)");
  CHECK(r13.v_desc == "ℂ^16");
  CHECK(r13.z_desc == "ℝ");
  CHECK_FALSE(r13.constructible);
  CHECK_THROWS_AS(construct(r13, {}), BracketNotSpecified);
  CHECK(get_entry("2.1", 3).constructible);
  CHECK(get_entry("2.2", 16).algebra_desc == "((h_{8;ℂ})) + ((h_{8;ℂ}))");
  CHECK_THROWS_AS(get_entry("2.3", 1), InvalidInput);
  CHECK_THROWS_AS(get_entry("2.1", 99), InvalidInput);

  CHECK(list_entries().size() == 48);
  CHECK(list_entries({std::string("2.1"), false}).size() == 23);
  for (const auto& e : list_entries({std::string("2.1"), true})) CHECK((e.row == 1 || e.row == 2 || e.row == 3 || e.row == 6));
}

TEST_CASE("construct validates parameters") {
  auto row1 = get_entry("2.1", 1);
  CHECK(construct(row1, {3}).dim() == 6);
  CHECK_THROWS_AS(construct(row1, {}), InvalidInput);
  CHECK_THROWS_AS(construct(get_entry("2.1", 6), {4}), InvalidInput);
  CHECK(construct(get_entry("2.1", 3), {}).dim() == 14);
}

TEST_CASE("direct sums") {
  auto s = direct_sum({heisenberg(1, CompositionKind::C), heisenberg(1, CompositionKind::H)});
  CHECK(s.dim() == 10);
  CHECK(s.center_indices() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(sgn(jacobi_defect(s)) == 0);
  CHECK(is_two_step_split(s));
}
