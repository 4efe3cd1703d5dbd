#include <doctest.h>

#include <set>

#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/geometry.hpp"
#include "oracles.hpp"

using namespace gclab;

namespace {

Point pt(long x, long y) { return {make_rational(x), make_rational(y)}; }

void require_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected error " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("rationals parse exactly and canonicalize") {
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("-7") == make_rational(-7));
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  for (const char* bad : {"", "1.5", "1/0", "a", "1/-2", "--1", "1/"})
    require_code(ErrorCode::ParseError, [&] { parse_rational(bad); });
}

TEST_CASE("lines are stored in canonical form") {
  CHECK(Line(2, 4, 6) == Line(1, 2, 3));
  const Line l(0, -3, 6);
  CHECK(l.a() == 0);
  CHECK(l.b() == 1);
  CHECK(l.c() == -2);
  CHECK(Line(0, 1, 0) < Line(1, 0, 0));
  require_code(ErrorCode::DegenerateLine, [] { Line(0, 0, 1); });
  CHECK(to_string(Line(2, -1, make_rational(1, 3))) == "[1, -1/2, 1/6]");
}

TEST_CASE("line_through, intersect and collinear") {
  const Line l = line_through(pt(0, 0), pt(2, 2));
  CHECK(l == Line(1, -1, 0));
  require_code(ErrorCode::EqualPoints, [] { line_through(pt(1, 1), pt(1, 1)); });

  CHECK_FALSE(intersect(Line(1, 0, 0), Line(1, 0, -1)).has_value());
  CHECK(*intersect(Line(1, 0, 0), Line(0, 1, 0)) == pt(0, 0));
  require_code(ErrorCode::SameLine, [] { intersect(Line(1, 1, 1), Line(2, 2, 2)); });

  const std::vector<Point> three{pt(0, 0), pt(1, 1), pt(5, 5)};
  CHECK(collinear(three));
  const std::vector<Point> bent{pt(0, 0), pt(1, 1), pt(5, 4)};
  CHECK_FALSE(collinear(bent));
  CHECK(collinear(std::vector<Point>{pt(3, 1), pt(3, 1), pt(2, 7)}));
}

TEST_CASE("sample points are distinct points of the line") {
  const Line l(3, -7, 2);
  const auto pts = l.sample_points(9);
  REQUIRE(pts.size() == 9);
  std::set<Point> seen(pts.begin(), pts.end());
  CHECK(seen.size() == 9);
  for (const auto& p : pts) CHECK(l.contains(p));
  for (const auto& p : Line(0, 1, 5).sample_points(3)) CHECK(p.y == -5);
}

TEST_CASE("node sets reject duplicates and keep order") {
  require_code(ErrorCode::DuplicateNode, [] { NodeSet({pt(1, 1), pt(2, 2), pt(1, 1)}); });
  const NodeSet x({pt(0, 0), pt(1, 0), pt(0, 1)});
  CHECK(*x.index_of(pt(1, 0)) == 1);
  CHECK_FALSE(x.contains(pt(5, 5)));
  const std::size_t drop[] = {0};
  const auto rest = x.without(drop);
  REQUIRE(rest.size() == 2);
  CHECK(rest[0] == pt(1, 0));
  CHECK(nodes_on_line(x, Line(0, 1, 0)).size() == 2);
  CHECK(k_node_count(x, Line(1, 1, -1)) == 2);
  CHECK(to_string(pt(-1, 2)) == "(-1, 2)");
}

TEST_CASE("spanned lines match a brute-force pair enumeration") {
  for (int n = 1; n <= 5; ++n) {
    const NodeSet x = principal_lattice(n);
    // Oracle: normalized cross product of homogeneous coordinates.
    std::set<std::tuple<oracle::Q, oracle::Q, oracle::Q>> lines;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        oracle::Q a = x[i].y - x[j].y, b = x[j].x - x[i].x, c = x[i].x * x[j].y - x[j].x * x[i].y;
        const oracle::Q lead = a != 0 ? a : b;
        lines.insert({a / lead, b / lead, c / lead});
      }
    const auto spanned = spanned_lines(x);
    CHECK(spanned.size() == lines.size());
    for (std::size_t i = 0; i + 1 < spanned.size(); ++i) CHECK(spanned[i].line < spanned[i + 1].line);
    for (const auto& inc : spanned) {
      CHECK(inc.nodes.size() >= 2);
      CHECK(inc.nodes.size() == k_node_count(x, inc.line));
    }
  }
}
