#include "gclab/interpolation.hpp"

#include <algorithm>
#include <random>

#include "gclab/error.hpp"

namespace gclab {

CorrectnessReport is_n_correct(const NodeSet& nodes, int n) {
  CorrectnessReport report;
  report.n = n;
  report.set_size = nodes.size();
  report.rank = rank(vandermonde(nodes, n));
  report.independent = report.rank == nodes.size();
  report.correct = report.independent && nodes.size() == dim_pi(n);
  if (!report.independent) {
    const auto has = nodes_with_fundamental(nodes, n);
    report.essentially_dependent = std::none_of(has.begin(), has.end(), [](bool b) { return b; });
  }
  return report;
}

bool is_n_independent(const NodeSet& nodes, int n) {
  return rank(vandermonde(nodes, n)) == nodes.size();
}

std::vector<bool> nodes_with_fundamental(const NodeSet& nodes, int n) {
  // Node i has a fundamental polynomial iff e_i is in the column space of
  // the Vandermonde, i.e. iff e_i is orthogonal to its left null space.
  const auto left_kernel = kernel_basis(vandermonde(nodes, n).transpose());
  std::vector<bool> has(nodes.size(), true);
  for (const auto& v : left_kernel)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) has[i] = false;
  return has;
}

bool is_essentially_dependent(const NodeSet& nodes, int n) {
  if (nodes.empty()) return false;
  const auto has = nodes_with_fundamental(nodes, n);
  return std::none_of(has.begin(), has.end(), [](bool b) { return b; });
}

std::optional<Poly> fundamental_polynomial(const Point& node, const NodeSet& nodes, int n) {
  const auto idx = nodes.index_of(node);
  if (!idx) throw Error(ErrorCode::NodeNotInSet, to_string(node));
  Vector rhs(nodes.size());
  rhs[*idx] = 1;
  auto coeffs = solve(vandermonde(nodes, n), rhs);
  if (!coeffs) return std::nullopt;
  return Poly(n, std::move(*coeffs));
}

std::vector<Poly> fundamental_polynomials(const NodeSet& nodes, int n, Exec exec) {
  if (nodes.size() != dim_pi(n)) throw Error(ErrorCode::NotCorrect, "node count differs from dim_pi(n)");
  const auto inv = inverse(vandermonde(nodes, n), exec);
  if (!inv) throw Error(ErrorCode::NotCorrect, "Vandermonde is singular");
  std::vector<Poly> out;
  out.reserve(nodes.size());
  for (std::size_t node = 0; node < nodes.size(); ++node) {
    Vector col(inv->rows());
    for (std::size_t r = 0; r < inv->rows(); ++r) col[r] = (*inv)(r, node);
    out.emplace_back(n, std::move(col));
  }
  return out;
}

std::vector<Line> maximal_lines(const NodeSet& nodes, int n) {
  if (!is_n_independent(nodes, n)) throw Error(ErrorCode::NotIndependent, "maximal lines need an n-independent set");
  std::vector<Line> out;
  for (const auto& inc : spanned_lines(nodes))
    if (inc.nodes.size() == static_cast<std::size_t>(n) + 1) out.push_back(inc.line);
  return out;
}

MaximalCurveWitness is_maximal_curve(const Poly& q, const NodeSet& nodes, int n) {
  const int k = q.degree();
  if (k < 1 || k > n) throw Error(ErrorCode::OutOfRange, "curve degree must be in [1, n]");
  const std::size_t capacity = maximal_curve_size(n, k);
  if (nodes.size() < capacity) throw Error(ErrorCode::OutOfRange, "fewer nodes than d(n, k)");
  if (!is_n_independent(nodes, n)) throw Error(ErrorCode::NotIndependent, "maximal curves need an n-independent set");

  MaximalCurveWitness w{q, k, 0, false};
  for (const auto& p : nodes)
    if (is_zero(evaluate(q, p))) ++w.nodes_on;
  w.is_maximal = w.nodes_on == capacity;
  return w;
}

bool maximal_curve_characterization(std::span<const Line> factors, const NodeSet& nodes, int n) {
  std::vector<Point> on;
  for (const auto& p : nodes)
    if (std::any_of(factors.begin(), factors.end(), [&](const Line& l) { return l.contains(p); }))
      on.push_back(p);
  for (auto& v : kernel_basis(vandermonde(NodeSet(on), n))) {
    std::optional<Poly> rest = Poly(n, std::move(v));
    for (const auto& l : factors) {
      rest = divide_line(*rest, l);
      if (!rest) return false;
    }
  }
  return true;
}

const char* to_string(DependenceReason reason) {
  switch (reason) {
    case DependenceReason::Collinear: return "Collinear";
    case DependenceReason::Conic: return "Conic";
    case DependenceReason::CubicSextic: return "CubicSextic";
  }
  return "Unknown";
}

namespace {

std::size_t count_on(const Poly& curve, const NodeSet& nodes) {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(),
                                                [&](const Point& p) { return is_zero(evaluate(curve, p)); }));
}

/// Leading homogeneous part of p evaluated at (t, 1).
Rational top_part_at(const Poly& p, const Rational& t) {
  const int d = p.degree();
  Rational acc = 0, tp = 1;
  // Terms x^i y^(d-i): accumulate c * t^i.
  for (int i = 0; i <= d; ++i) {
    acc += p.coeff(i, d - i) * tp;
    tp *= t;
  }
  return acc;
}

/// Coefficients in y (ascending) of p(x0, y).
Vector in_y(const Poly& p, const Rational& x0) {
  const int d = p.degree();
  Vector out(static_cast<std::size_t>(d) + 1);
  for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
    const auto& c = p.coeffs()[idx];
    if (is_zero(c)) continue;
    const auto [i, j] = MonomialOrder::exponents(idx);
    Rational term = c;
    for (int e = 0; e < i; ++e) term *= x0;
    out[static_cast<std::size_t>(j)] += term;
  }
  return out;
}

bool sylvester_nonsingular(const Vector& f, const Vector& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, size = df + dg;
  if (size == 0) return true;
  Matrix s(size, size);
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t e = 0; e <= df; ++e) s(r, r + df - e) = f[e];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t e = 0; e <= dg; ++e) s(dg + r, r + dg - e) = g[e];
  return rank(s) == size;
}

}  // namespace

bool curves_coprime(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "coprimality of the zero polynomial");
  const int df = f.degree(), dg = g.degree();
  if (df == 0 || dg == 0) return true;

  // Shear x -> x + t y so that both leading coefficients in y are constants.
  Rational t = 0;
  for (long step = 0;; ++step) {
    t = (step % 2 == 0) ? Rational(step / 2) : Rational(-(step + 1) / 2);
    if (!is_zero(top_part_at(f, t)) && !is_zero(top_part_at(g, t))) break;
  }
  const Poly fs = substitute_affine(f, 1, t, 0, 0, 1, 0);
  const Poly gs = substitute_affine(g, 1, t, 0, 0, 1, 0);

  // Res_y(fs, gs) is a polynomial in x of degree <= df * dg.
  for (long x0 = 0; x0 <= static_cast<long>(df) * dg; ++x0)
    if (sylvester_nonsingular(in_y(fs, x0), in_y(gs, x0))) return true;
  return false;
}

DependenceClassification classify_dependence(const NodeSet& nodes, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative degree");
  if (nodes.size() > 3 * static_cast<std::size_t>(n))
    throw Error(ErrorCode::TooLarge, "classification covers at most 3n nodes");

  DependenceClassification out;
  out.rank_dependent = !is_n_independent(nodes, n);
  const std::size_t size = nodes.size();

  for (const auto& inc : spanned_lines(nodes))
    if (inc.nodes.size() >= static_cast<std::size_t>(n) + 2)
      out.reasons.push_back({DependenceReason::Collinear, Poly::from_line(inc.line), std::nullopt, inc.nodes.size()});

  // Any conic carrying 2n+2 >= 6 nodes, and no n+2 of them collinear, is the
  // unique conic through some 5 of them with no 4 collinear; conics with a
  // line of n+2 nodes are already covered by the collinear test.
  const std::size_t conic_threshold = 2 * static_cast<std::size_t>(n) + 2;
  if (size >= conic_threshold && size >= 5) {
    std::vector<Poly> found;
    std::vector<std::size_t> pick = {0, 1, 2, 3, 4};
    while (true) {
      std::vector<Point> sub;
      for (auto i : pick) sub.push_back(nodes[i]);
      const auto k = kernel_basis(vandermonde(NodeSet(sub), 2));
      if (k.size() == 1) {
        Poly conic(2, k[0]);
        if (std::none_of(found.begin(), found.end(), [&](const Poly& c) { return c == conic; })) {
          found.push_back(conic);
          const std::size_t on = count_on(conic, nodes);
          if (on >= conic_threshold) out.reasons.push_back({DependenceReason::Conic, conic, std::nullopt, on});
        }
      }
      // Next 5-combination in lexicographic order.
      int pos = 4;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == size - 5 + static_cast<std::size_t>(pos)) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (auto q = static_cast<std::size_t>(pos) + 1; q < 5; ++q) pick[q] = pick[q - 1] + 1;
    }
  }

  // |X| = 3n: X is cut out by a cubic and a degree-n curve without a common
  // component (Bezout then forces equality with the 3n intersection points).
  if (n >= 1 && size == 3 * static_cast<std::size_t>(n)) {
    const auto cubics = kernel_basis(vandermonde(nodes, 3));
    const auto companions = kernel_basis(vandermonde(nodes, n));
    if (!cubics.empty() && !companions.empty()) {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<long> coef(-3, 3);
      auto combine = [&](const std::vector<Vector>& basis, int bound, std::size_t attempt) {
        if (attempt < basis.size()) return Poly(bound, basis[attempt]);
        Vector v(basis.front().size());
        for (const auto& b : basis) {
          const Rational c(coef(rng));
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        return Poly(bound, std::move(v));
      };
      const std::size_t attempts = std::max(cubics.size(), companions.size()) + 12;
      for (std::size_t a = 0; a < attempts; ++a) {
        const Poly gamma = combine(cubics, 3, a);
        const Poly sigma = combine(companions, n, a);
        if (gamma.degree() != 3 || sigma.degree() != n) continue;
        if (curves_coprime(gamma, sigma)) {
          out.reasons.push_back({DependenceReason::CubicSextic, gamma, sigma, size});
          break;
        }
      }
    }
  }

  out.dependent = !out.reasons.empty();
  return out;
}

}  // namespace gclab
