#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "gclab/geometry.hpp"
#include "gclab/matrix.hpp"

namespace gclab {

/// dim of the space of bivariate polynomials of total degree <= n.
std::size_t dim_pi(int n);

/// N_n - N_{n-k}: the most n-independent nodes a degree-k curve can carry.
/// Throws OutOfRange unless 0 <= k <= n.
std::size_t maximal_curve_size(int n, int k);

/// Graded monomial order: all degree-d monomials precede degree d+1, and
/// inside a degree the x-power descends: 1, x, y, x^2, xy, y^2, x^3, ...
/// Position of x^i y^j is d(d+1)/2 + j with d = i + j, independent of the
/// degree bound, so coefficient vectors embed across bounds by zero padding.
struct MonomialOrder {
  static std::size_t index(int i, int j) {
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
  }
  /// (i, j) exponents of the monomial at `index`.
  static std::pair<int, int> exponents(std::size_t index);
};

/// Bivariate polynomial with an explicit total-degree bound n and exactly
/// dim_pi(n) coefficients in MonomialOrder.
class Poly {
 public:
  explicit Poly(int bound);
  Poly(int bound, Vector coeffs);

  static Poly constant(int bound, const Rational& value);
  /// a*x + b*y + c with bound 1.
  static Poly from_line(const Line& line);
  /// Product of the listed lines (bound = number of lines).
  static Poly line_product(std::span<const Line> lines);

  int bound() const { return bound_; }
  const Vector& coeffs() const { return coeffs_; }
  const Rational& coeff(int i, int j) const { return coeffs_[MonomialOrder::index(i, j)]; }
  Rational& coeff(int i, int j) { return coeffs_[MonomialOrder::index(i, j)]; }

  bool is_zero() const;
  /// Actual total degree; -1 for the zero polynomial.
  int degree() const;

  /// Same polynomial viewed with a larger (or equal) degree bound.
  Poly with_bound(int bound) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rational& s) const;

  /// Equal as polynomials; bounds may differ.
  bool same_polynomial(const Poly& other) const;
  friend bool operator==(const Poly& p, const Poly& q) {
    return p.bound_ == q.bound_ && p.coeffs_ == q.coeffs_;
  }

 private:
  int bound_;
  Vector coeffs_;
};

Rational evaluate(const Poly& p, const Point& pt);

/// |X| x dim_pi(n); row i holds the monomials evaluated at node i.
Matrix vandermonde(const NodeSet& nodes, int n);

/// Returns p * l with bound p.bound() + 1.
Poly multiply_line(const Poly& p, const Line& l);

/// q with p = l * q (bound p.bound() - 1) if l divides p, nothing otherwise.
/// The division substitutes coordinates in which l becomes the axis u = 0,
/// checks that the u-free part vanishes, shifts, and maps back.
/// Throws ZeroPolynomial for p = 0.
std::optional<Poly> divide_line(const Poly& p, const Line& l);

/// p vanishes identically on l (tested on bound+1 points of l).
bool vanishes_on_line(const Poly& p, const Line& l);

/// p(ax*x + bx*y + cx, ay*x + by*y + cy).
Poly substitute_affine(const Poly& p, const Rational& ax, const Rational& bx, const Rational& cx,
                       const Rational& ay, const Rational& by, const Rational& cy);

std::string to_string(const Poly& p);

}  // namespace gclab
