#include <doctest.h>

#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/interpolation.hpp"
#include "oracles.hpp"

using namespace gclab;

namespace {

Point pt(long x, long y) { return {make_rational(x), make_rational(y)}; }

std::vector<oracle::Pt> as_oracle(const NodeSet& x) {
  std::vector<oracle::Pt> out;
  for (const auto& p : x) out.push_back({p.x, p.y});
  return out;
}

// Closed form for the principal lattice: the node (i, j) is killed by
// x = 0..i-1, y = 0..j-1 and x + y = i+j+1..n.
Rational lattice_fundamental_at(int i, int j, int n, const Point& q) {
  Rational v = 1, at = 1;
  const Point node = pt(i, j);
  auto factor = [&](const Line& l) {
    v *= l.evaluate(q);
    at *= l.evaluate(node);
  };
  for (int k = 0; k < i; ++k) factor(Line(1, 0, -k));
  for (int k = 0; k < j; ++k) factor(Line(0, 1, -k));
  for (int m = i + j + 1; m <= n; ++m) factor(Line(1, 1, -m));
  return v / at;
}

}  // namespace

TEST_CASE("correctness agrees with the rank oracle") {
  for (int n = 0; n <= 5; ++n) {
    const NodeSet x = principal_lattice(n);
    const auto report = is_n_correct(x, n);
    CHECK(report.rank == oracle::rank(oracle::vandermonde(as_oracle(x), n)));
    CHECK(report.correct);
    CHECK(report.independent);
    CHECK_FALSE(report.essentially_dependent);
  }
  const NodeSet line({pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)});
  const auto r = is_n_correct(line, 2);
  CHECK(r.rank == 3);
  CHECK_FALSE(r.independent);
  CHECK(r.essentially_dependent);
}

TEST_CASE("essential dependence") {
  // Four general points for n = 1: the single syzygy involves all of them.
  const NodeSet general({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)});
  CHECK(is_essentially_dependent(general, 1));
  // Three collinear nodes plus one off the line: the outlier keeps its
  // fundamental polynomial.
  const NodeSet mixed({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)});
  CHECK_FALSE(is_essentially_dependent(mixed, 1));
  const auto has = nodes_with_fundamental(mixed, 1);
  CHECK(has == std::vector<bool>{false, false, false, true});
  CHECK_FALSE(is_essentially_dependent(NodeSet{}, 1));
}

TEST_CASE("fundamental polynomials of the principal lattice match the closed form") {
  const int n = 4;
  const NodeSet x = principal_lattice(n);
  const auto all = fundamental_polynomials(x, n);
  const std::vector<Point> probes{{make_rational(1, 3), make_rational(7, 2)}, pt(-2, 5), pt(9, -4)};
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    const int i = static_cast<int>(x[idx].x.get_num().get_si()), j = static_cast<int>(x[idx].y.get_num().get_si());
    for (std::size_t other = 0; other < x.size(); ++other)
      CHECK(evaluate(all[idx], x[other]) == (other == idx ? 1 : 0));
    for (const auto& q : probes) CHECK(evaluate(all[idx], q) == lattice_fundamental_at(i, j, n, q));
    CHECK(fundamental_polynomial(x[idx], x, n)->same_polynomial(all[idx]));
  }
  CHECK_THROWS_AS(fundamental_polynomial(pt(10, 10), x, n), Error);
  CHECK_THROWS_AS(fundamental_polynomials(NodeSet({pt(0, 0)}), 1), Error);
  CHECK(fundamental_polynomials(x, n, Exec::serial) == all);
}

TEST_CASE("maximal lines and curves on a Chung-Yao set") {
  const auto family = random_general_lines(6, 5);
  const NodeSet x = chung_yao(family);
  const int n = 4;
  auto lines = maximal_lines(x, n);
  auto generating = family.lines;
  std::sort(generating.begin(), generating.end());
  CHECK(lines == generating);

  const std::vector<Line> pair{generating[0], generating[1]};
  const auto w = is_maximal_curve(Poly::line_product(pair), x, n);
  CHECK(w.k == 2);
  CHECK(w.nodes_on == maximal_curve_size(n, 2));
  CHECK(w.is_maximal);
  CHECK(maximal_curve_characterization(pair, x, n));

  // A line through two nodes that is not a generating line is not maximal.
  const Line chord = line_through(x[0], x[x.size() - 1]);
  CHECK_FALSE(is_maximal_curve(Poly::from_line(chord), x, n).is_maximal);
  CHECK_FALSE(maximal_curve_characterization(std::vector<Line>{chord}, x, n));

  CHECK_THROWS_AS(maximal_lines(NodeSet({pt(0, 0), pt(1, 0), pt(2, 0)}), 1), Error);
}

TEST_CASE("coprimality") {
  const Poly x = Poly::from_line(Line(1, 0, 0)), y = Poly::from_line(Line(0, 1, 0));
  const Poly xp1 = Poly::from_line(Line(1, 0, 1));
  CHECK(curves_coprime(x * y, x + y));
  CHECK_FALSE(curves_coprime(x * y, x * xp1));
  CHECK(curves_coprime(x * x, y * y));
  CHECK(curves_coprime(Poly::constant(0, 2), x));
  CHECK_THROWS_AS(curves_coprime(Poly(1), x), Error);
}

TEST_CASE("dependence classification by family") {
  SUBCASE("collinear") {
    const NodeSet x({pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3), pt(0, 5)});
    const auto c = classify_dependence(x, 2);
    CHECK(c.dependent);
    CHECK(c.consistent());
    REQUIRE_FALSE(c.reasons.empty());
    CHECK(c.reasons[0].reason == DependenceReason::Collinear);
    CHECK(c.reasons[0].nodes_on == 4);
  }
  SUBCASE("conic") {
    std::vector<Point> on;
    for (long t = -2; t <= 3; ++t) on.push_back(pt(t, t * t));
    const auto c = classify_dependence(NodeSet(on), 2);
    CHECK(c.dependent);
    CHECK(c.consistent());
    CHECK(std::any_of(c.reasons.begin(), c.reasons.end(),
                      [](const DependenceWitness& w) { return w.reason == DependenceReason::Conic && w.nodes_on == 6; }));
  }
  SUBCASE("cubic and companion") {
    // Crossings of x = 0, 1, 5 with y = 0, 2, 3.
    std::vector<Point> grid;
    for (long a : {0, 1, 5})
      for (long b : {0, 2, 3}) grid.push_back(pt(a, b));
    const auto c = classify_dependence(NodeSet(grid), 3);
    CHECK(c.dependent);
    CHECK(c.consistent());
    const auto it = std::find_if(c.reasons.begin(), c.reasons.end(),
                                 [](const DependenceWitness& w) { return w.reason == DependenceReason::CubicSextic; });
    REQUIRE(it != c.reasons.end());
    REQUIRE(it->companion.has_value());
    CHECK(curves_coprime(it->curve, *it->companion));
  }
  SUBCASE("independent") {
    const NodeSet x({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 5), pt(-3, 1)});
    const auto c = classify_dependence(x, 2);
    CHECK_FALSE(c.dependent);
    CHECK(c.consistent());
  }
  CHECK_THROWS_AS(classify_dependence(principal_lattice(2), 1), Error);
}
