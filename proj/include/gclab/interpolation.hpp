#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gclab/exec.hpp"
#include "gclab/geometry.hpp"
#include "gclab/poly.hpp"

namespace gclab {

struct CorrectnessReport {
  int n = 0;
  std::size_t set_size = 0;
  std::size_t rank = 0;
  bool correct = false;
  bool independent = false;
  /// No node has an n-fundamental polynomial (only meaningful for X nonempty).
  bool essentially_dependent = false;
};

CorrectnessReport is_n_correct(const NodeSet& nodes, int n);
bool is_n_independent(const NodeSet& nodes, int n);

/// has_fundamental[i] is true iff node i admits an n-fundamental polynomial,
/// i.e. every vector of the left null space of the Vandermonde vanishes at i.
std::vector<bool> nodes_with_fundamental(const NodeSet& nodes, int n);
bool is_essentially_dependent(const NodeSet& nodes, int n);

/// p with p(A) = 1 and p = 0 on the rest of X, or nothing if A has none.
/// Throws NodeNotInSet.
std::optional<Poly> fundamental_polynomial(const Point& node, const NodeSet& nodes, int n);

/// All fundamental polynomials of an n-correct set, read off the inverse
/// Vandermonde. Throws NotCorrect.
std::vector<Poly> fundamental_polynomials(const NodeSet& nodes, int n, Exec exec = Exec::parallel);

/// Lines through exactly n+1 nodes, canonical order. Throws NotIndependent.
std::vector<Line> maximal_lines(const NodeSet& nodes, int n);

struct MaximalCurveWitness {
  Poly curve;
  int k = 0;
  std::size_t nodes_on = 0;
  bool is_maximal = false;
};

/// Counts nodes on q (degree k, 1 <= k <= n) and compares with
/// maximal_curve_size(n, k). Throws OutOfRange / NotIndependent.
MaximalCurveWitness is_maximal_curve(const Poly& q, const NodeSet& nodes, int n);

/// Characterization of a maximal line-product curve: every polynomial of
/// degree <= n vanishing on X ∩ curve is a multiple of the curve. Checked on
/// a kernel basis of the Vandermonde restricted to X ∩ curve.
bool maximal_curve_characterization(std::span<const Line> factors, const NodeSet& nodes, int n);

enum class DependenceReason { Collinear, Conic, CubicSextic };
const char* to_string(DependenceReason reason);

struct DependenceWitness {
  DependenceReason reason;
  Poly curve;                      // the line, conic or cubic
  std::optional<Poly> companion;   // degree-n curve for CubicSextic
  std::size_t nodes_on = 0;
};

struct DependenceClassification {
  /// Geometric verdict: some witness below exists.
  bool dependent = false;
  std::vector<DependenceWitness> reasons;
  /// Rank of the Vandermonde, reported alongside for cross-checking.
  bool rank_dependent = false;
  bool consistent() const { return dependent == rank_dependent; }
};

/// Geometric dependence test for |X| <= 3n: n+2 collinear nodes, 2n+2 nodes
/// on a conic, or |X| = 3n cut out by a cubic and a coprime degree-n curve.
/// Throws TooLarge for |X| > 3n.
DependenceClassification classify_dependence(const NodeSet& nodes, int n);

/// True iff f and g (both nonzero) share no nonconstant factor. Decided by
/// sampling the y-resultant after a shear that makes both monic in y.
bool curves_coprime(const Poly& f, const Poly& g);

}  // namespace gclab
