#include <doctest.h>

#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/gc_analysis.hpp"
#include "gclab/interpolation.hpp"

using namespace gclab;

TEST_CASE("general position") {
  CHECK(in_general_position(std::vector<Line>{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)}));
  CHECK_FALSE(in_general_position(std::vector<Line>{Line(1, 0, 0), Line(1, 0, -1)}));           // parallel
  CHECK_FALSE(in_general_position(std::vector<Line>{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0)}));  // concurrent
  CHECK_FALSE(in_general_position(std::vector<Line>{Line(1, 2, 3), Line(2, 4, 6)}));
}

TEST_CASE("seeded line families are reproducible") {
  const auto a = random_general_lines(8, 42), b = random_general_lines(8, 42), c = random_general_lines(8, 43);
  CHECK(a.lines == b.lines);
  CHECK(a.lines != c.lines);
  CHECK(a.lines.size() == 8);
  CHECK(in_general_position(a.lines));
  CHECK(random_general_lines(0, 1).lines.empty());
}

TEST_CASE("Chung-Yao sets") {
  for (std::size_t lines = 3; lines <= 7; ++lines) {
    const auto family = random_general_lines(lines, lines);
    const NodeSet x = chung_yao(family);
    CHECK(x.size() == lines * (lines - 1) / 2);
    CHECK(x[0] == *intersect(family.lines[0], family.lines[1]));
    for (const auto& l : family.lines) CHECK(k_node_count(x, l) == lines - 1);
  }
  CHECK_THROWS_AS(chung_yao(std::vector<Line>{Line(1, 0, 0), Line(1, 0, 1), Line(0, 1, 0)}), Error);
}

TEST_CASE("principal lattice ordering") {
  const NodeSet x = principal_lattice(2);
  REQUIRE(x.size() == 6);
  CHECK(x[0] == Point{0, 0});
  CHECK(x[1] == Point{0, 1});
  CHECK(x[3] == Point{1, 0});
  CHECK(x[5] == Point{2, 0});
  CHECK(principal_lattice(0).size() == 1);
  CHECK_THROWS_AS(principal_lattice(-1), Error);
}

TEST_CASE("four-line GC_3 construction") {
  for (std::uint64_t seed : {1, 2, 3, 17}) {
    const NodeSet x = carnicer_gasca_3(seed);
    CHECK(x.size() == 10);
    CHECK(x == carnicer_gasca_3(seed));
    CHECK(is_gc_set(x, 3).has_value());
    CHECK(maximal_lines(x, 3).size() == 4);
  }
}

TEST_CASE("GC_6 with a maximal cubic") {
  const auto dec = gc6_with_maximal_cubic(1);
  CHECK(dec.nodes.size() == 28);
  CHECK(dec.cubic_part.size() == 18);
  CHECK(dec.remainder.size() == 10);
  CHECK(dec.cubic[0] < dec.cubic[1]);
  CHECK(dec.cubic[1] < dec.cubic[2]);
  const auto [on, off] = split_by_lines(dec.nodes, dec.cubic);
  CHECK(on == dec.cubic_part);
  CHECK(off == dec.remainder);
  CHECK(is_n_correct(dec.remainder, 3).correct);
}

TEST_CASE("bundled constructions") {
  const auto all = bundled_constructions(1);
  CHECK(all.size() == 13);
  for (const auto& inst : all) CHECK(inst.nodes.size() == dim_pi(inst.n));
}
