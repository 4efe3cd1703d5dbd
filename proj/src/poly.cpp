#include "gclab/poly.hpp"

#include <algorithm>

#include "gclab/error.hpp"

namespace gclab {

std::size_t dim_pi(int n) {
  if (n < 0) return 0;
  const auto m = static_cast<std::size_t>(n);
  return (m + 1) * (m + 2) / 2;
}

std::size_t maximal_curve_size(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "need 0 <= k <= n");
  return static_cast<std::size_t>(k * (2 * n + 3 - k) / 2);
}

std::pair<int, int> MonomialOrder::exponents(std::size_t index) {
  int d = 0;
  while (static_cast<std::size_t>((d + 1) * (d + 2) / 2) <= index) ++d;
  const int j = static_cast<int>(index - static_cast<std::size_t>(d * (d + 1) / 2));
  return {d - j, j};
}

Poly::Poly(int bound) : bound_(bound), coeffs_(dim_pi(bound)) {
  if (bound < 0) throw Error(ErrorCode::OutOfRange, "negative degree bound");
}

Poly::Poly(int bound, Vector coeffs) : bound_(bound), coeffs_(std::move(coeffs)) {
  if (bound < 0) throw Error(ErrorCode::OutOfRange, "negative degree bound");
  if (coeffs_.size() != dim_pi(bound))
    throw Error(ErrorCode::InvalidArgument, "coefficient count must equal dim_pi(bound)");
}

Poly Poly::constant(int bound, const Rational& value) {
  Poly p(bound);
  p.coeffs_[0] = value;
  return p;
}

Poly Poly::from_line(const Line& line) {
  Poly p(1);
  p.coeff(0, 0) = line.c();
  p.coeff(1, 0) = line.a();
  p.coeff(0, 1) = line.b();
  return p;
}

Poly Poly::line_product(std::span<const Line> lines) {
  Poly p = constant(0, 1);
  for (const auto& l : lines) p = multiply_line(p, l);
  return p;
}

bool Poly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!gclab::is_zero(c)) return false;
  return true;
}

int Poly::degree() const {
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    if (!gclab::is_zero(coeffs_[idx])) {
      const auto [i, j] = MonomialOrder::exponents(idx);
      return i + j;
    }
  }
  return -1;
}

Poly Poly::with_bound(int bound) const {
  if (bound < bound_) {
    if (degree() > bound) throw Error(ErrorCode::OutOfRange, "polynomial exceeds requested bound");
    Vector cut(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(dim_pi(bound)));
    return Poly(bound, std::move(cut));
  }
  Vector grown = coeffs_;
  grown.resize(dim_pi(bound));
  return Poly(bound, std::move(grown));
}

Poly Poly::operator+(const Poly& other) const {
  const int b = std::max(bound_, other.bound_);
  Poly out = with_bound(b);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + other.scaled(-1); }

Poly Poly::operator*(const Poly& other) const {
  Poly out(bound_ + other.bound_);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (gclab::is_zero(coeffs_[p])) continue;
    const auto [i1, j1] = MonomialOrder::exponents(p);
    for (std::size_t q = 0; q < other.coeffs_.size(); ++q) {
      if (gclab::is_zero(other.coeffs_[q])) continue;
      const auto [i2, j2] = MonomialOrder::exponents(q);
      out.coeff(i1 + i2, j1 + j2) += coeffs_[p] * other.coeffs_[q];
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& s) const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

bool Poly::same_polynomial(const Poly& other) const {
  const int b = std::max(bound_, other.bound_);
  return with_bound(b) == other.with_bound(b);
}

Rational evaluate(const Poly& p, const Point& pt) {
  const int n = p.bound();
  std::vector<Rational> xp(static_cast<std::size_t>(n) + 1), yp(static_cast<std::size_t>(n) + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (int e = 1; e <= n; ++e) {
    xp[static_cast<std::size_t>(e)] = xp[static_cast<std::size_t>(e - 1)] * pt.x;
    yp[static_cast<std::size_t>(e)] = yp[static_cast<std::size_t>(e - 1)] * pt.y;
  }
  Rational acc = 0;
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const auto& c = p.coeffs()[idx];
    if (is_zero(c)) continue;
    const auto [i, j] = MonomialOrder::exponents(idx);
    acc += c * xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)];
  }
  return acc;
}

Matrix vandermonde(const NodeSet& nodes, int n) {
  const std::size_t dim = dim_pi(n);
  Matrix v(nodes.size(), dim);
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const Point& p = nodes[r];
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const auto [i, j] = MonomialOrder::exponents(idx);
      Rational value = 1;
      for (int e = 0; e < i; ++e) value *= p.x;
      for (int e = 0; e < j; ++e) value *= p.y;
      v(r, idx) = value;
    }
  }
  return v;
}

Poly multiply_line(const Poly& p, const Line& l) { return p * Poly::from_line(l); }

Poly substitute_affine(const Poly& p, const Rational& ax, const Rational& bx, const Rational& cx,
                       const Rational& ay, const Rational& by, const Rational& cy) {
  const int n = p.bound();
  Poly lx(1), ly(1);
  lx.coeff(1, 0) = ax;
  lx.coeff(0, 1) = bx;
  lx.coeff(0, 0) = cx;
  ly.coeff(1, 0) = ay;
  ly.coeff(0, 1) = by;
  ly.coeff(0, 0) = cy;

  std::vector<Poly> xpow, ypow;
  xpow.push_back(Poly::constant(0, 1));
  ypow.push_back(Poly::constant(0, 1));
  for (int e = 1; e <= n; ++e) {
    xpow.push_back(xpow.back() * lx);
    ypow.push_back(ypow.back() * ly);
  }

  Poly out(n);
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const auto& c = p.coeffs()[idx];
    if (is_zero(c)) continue;
    const auto [i, j] = MonomialOrder::exponents(idx);
    const Poly term = xpow[static_cast<std::size_t>(i)] * ypow[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t < term.coeffs().size(); ++t) {
      if (!is_zero(term.coeffs()[t])) {
        const auto [ti, tj] = MonomialOrder::exponents(t);
        out.coeff(ti, tj) += c * term.coeffs()[t];
      }
    }
  }
  return out;
}

bool vanishes_on_line(const Poly& p, const Line& l) {
  for (const auto& pt : l.sample_points(static_cast<std::size_t>(p.bound()) + 1))
    if (!is_zero(evaluate(p, pt))) return false;
  return true;
}

std::optional<Poly> divide_line(const Poly& p, const Line& l) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot divide the zero polynomial");
  const int n = p.bound();
  if (n == 0) return std::nullopt;

  // Coordinates (u, w) with u = l(x, y). For a = 1: x = u - b w - c, y = w.
  // For a = 0 (b = 1): x = u, y = w - c, and the roles of the axes swap.
  const bool vertical_axis = !is_zero(l.a());
  Poly moved = vertical_axis ? substitute_affine(p, 1, -l.b(), -l.c(), 0, 1, 0)
                             : substitute_affine(p, 0, 1, 0, 1, 0, -l.c());
  // In both cases `moved` is a polynomial in (u, w) with u the first variable.
  Poly quotient(n - 1);
  for (std::size_t idx = 0; idx < moved.coeffs().size(); ++idx) {
    const auto& c = moved.coeffs()[idx];
    if (is_zero(c)) continue;
    const auto [i, j] = MonomialOrder::exponents(idx);
    if (i == 0) return std::nullopt;
    quotient.coeff(i - 1, j) = c;
  }
  // Back to (x, y): u = x + b y + c, w = y   or   u = y + c, w = x.
  return vertical_axis ? substitute_affine(quotient, 1, l.b(), l.c(), 0, 1, 0)
                       : substitute_affine(quotient, 0, 1, l.c(), 1, 0, 0);
}

std::string to_string(const Poly& p) {
  std::string out;
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const auto& c = p.coeffs()[idx];
    if (is_zero(c)) continue;
    const auto [i, j] = MonomialOrder::exponents(idx);
    std::string monomial;
    if (i > 0) monomial += i > 1 ? "x^" + std::to_string(i) : "x";
    if (j > 0) monomial += (monomial.empty() ? "" : "*") + (j > 1 ? "y^" + std::to_string(j) : std::string("y"));
    const Rational mag = abs(c);
    std::string term;
    if (monomial.empty()) term = to_string(mag);
    else if (mag == 1) term = monomial;
    else term = to_string(mag) + "*" + monomial;
    if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + term;
    else out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace gclab
