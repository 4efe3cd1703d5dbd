#include <doctest.h>

#include <random>

#include "gclab/error.hpp"
#include "gclab/poly.hpp"
#include "oracles.hpp"

using namespace gclab;

namespace {

Poly random_poly(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coin(0, 2);
  Vector coeffs(dim_pi(bound));
  for (auto& c : coeffs) c = coin(rng) == 0 ? Rational(0) : oracle::random_small(rng, 6);
  Poly p(bound, std::move(coeffs));
  if (p.is_zero()) p.coeff(0, 0) = 1;
  return p;
}

Line random_line(std::mt19937_64& rng) {
  for (;;) {
    Rational a = oracle::random_small(rng, 5), b = oracle::random_small(rng, 5);
    if (a != 0 || b != 0) return Line(a, b, oracle::random_small(rng, 5));
  }
}

// Direct sum of c_ij x^i y^j over exponent pairs enumerated independently.
Rational direct_eval(const Poly& p, const Point& pt) {
  Rational sum = 0;
  for (int i = 0; i <= p.bound(); ++i)
    for (int j = 0; i + j <= p.bound(); ++j) sum += p.coeff(i, j) * oracle::power(pt.x, i) * oracle::power(pt.y, j);
  return sum;
}

Point random_point(std::mt19937_64& rng) { return {oracle::random_small(rng, 9), oracle::random_small(rng, 9)}; }

}  // namespace

TEST_CASE("dimension and maximal-curve constants") {
  for (int n = 0; n <= 10; ++n) CHECK(dim_pi(n) == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::size_t sum = 0;  // (n+1) + n + ... over k lines
      for (int i = 0; i < k; ++i) sum += static_cast<std::size_t>(n + 1 - i);
      CHECK(maximal_curve_size(n, k) == sum);
    }
  CHECK_THROWS_AS(maximal_curve_size(3, 4), Error);
  CHECK_THROWS_AS(maximal_curve_size(3, -1), Error);
}

TEST_CASE("graded monomial order") {
  CHECK(MonomialOrder::index(0, 0) == 0);
  CHECK(MonomialOrder::index(1, 0) == 1);
  CHECK(MonomialOrder::index(0, 1) == 2);
  CHECK(MonomialOrder::index(2, 0) == 3);
  CHECK(MonomialOrder::index(1, 1) == 4);
  CHECK(MonomialOrder::index(0, 2) == 5);
  for (std::size_t idx = 0; idx < dim_pi(9); ++idx) {
    const auto [i, j] = MonomialOrder::exponents(idx);
    CHECK(MonomialOrder::index(i, j) == idx);
  }
}

TEST_CASE("evaluation and Vandermonde rows match direct powers") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_poly(rng, trial % 6);
    const Point pt = random_point(rng);
    CHECK(evaluate(p, pt) == direct_eval(p, pt));
  }
  const NodeSet x({{1, 2}, {3, -1}, {make_rational(1, 2), 0}});
  const Matrix v = vandermonde(x, 3);
  REQUIRE(v.cols() == dim_pi(3));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c) {
      const auto [i, j] = MonomialOrder::exponents(c);
      CHECK(v(r, c) == oracle::power(x[r].x, i) * oracle::power(x[r].y, j));
    }
}

TEST_CASE("arithmetic respects evaluation") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_poly(rng, 3), q = random_poly(rng, 2);
    const Point pt = random_point(rng);
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
    CHECK(evaluate(p + q.with_bound(3), pt) == evaluate(p, pt) + evaluate(q, pt));
    CHECK(evaluate(p - p, pt) == 0);
    CHECK(evaluate(p.scaled(make_rational(-2, 3)), pt) == make_rational(-2, 3) * evaluate(p, pt));
    CHECK((p * q).bound() == 5);
    CHECK(q.with_bound(4).same_polynomial(q));
  }
  CHECK(Poly(3).degree() == -1);
  CHECK(Poly::constant(2, 5).degree() == 0);
  const Line lines[] = {Line(1, 0, 0), Line(0, 1, -1), Line(1, 1, -2)};
  CHECK(Poly::line_product(lines).degree() == 3);
}

TEST_CASE("multiply/divide round trip on 500 random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Poly p = random_poly(rng, trial % 5);
    const Line l = random_line(rng);
    const Poly prod = multiply_line(p, l);
    const Point pt = random_point(rng);
    CHECK(evaluate(prod, pt) == evaluate(p, pt) * l.evaluate(pt));
    CHECK(vanishes_on_line(prod, l));
    const auto back = divide_line(prod, l);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
}

TEST_CASE("division rejects non-multiples") {
  const Poly xy = Poly::line_product(std::vector<Line>{Line(1, 0, 0), Line(0, 1, 0)});
  CHECK_FALSE(divide_line(xy, Line(1, 1, 0)).has_value());
  CHECK(divide_line(xy, Line(1, 0, 0)).has_value());
  CHECK_FALSE(divide_line(Poly::constant(0, 3), Line(1, 0, 0)).has_value());
  CHECK_THROWS_AS(divide_line(Poly(2), Line(1, 0, 0)), Error);
  // x^2 + y^2 - 1 vanishes at rational points of x = 0 only where y = +-1.
  Poly circle(2);
  circle.coeff(2, 0) = 1;
  circle.coeff(0, 2) = 1;
  circle.coeff(0, 0) = -1;
  CHECK_FALSE(vanishes_on_line(circle, Line(1, 0, 0)));
  CHECK_FALSE(divide_line(circle, Line(1, 0, -1)).has_value());
}

TEST_CASE("affine substitution") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = random_poly(rng, 3);
    Rational c[6];
    for (auto& v : c) v = oracle::random_small(rng, 4);
    const Poly s = substitute_affine(p, c[0], c[1], c[2], c[3], c[4], c[5]);
    const Point pt = random_point(rng);
    const Point image{c[0] * pt.x + c[1] * pt.y + c[2], c[3] * pt.x + c[4] * pt.y + c[5]};
    CHECK(evaluate(s, pt) == evaluate(p, image));
  }
}

TEST_CASE("text form") {
  CHECK(to_string(Poly::from_line(Line(-1, -1, 1))) == "-1 + x + y");
  CHECK(to_string(Poly(1)) == "0");
  Poly p(2);
  p.coeff(0, 0) = 1;
  p.coeff(1, 0) = -1;
  p.coeff(1, 1) = make_rational(3, 2);
  CHECK(to_string(p) == "1 - x + 3/2*x*y");
}
