#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gclab/exec.hpp"
#include "gclab/geometry.hpp"
#include "gclab/poly.hpp"

namespace gclab {

/// scale * prod(lines) as an exact polynomial identity.
struct LineProduct {
  std::vector<Line> lines;  // canonical order, repeated on multiplicity
  Rational scale;

  Poly expand() const;
};

struct LineFactorization {
  Point node;
  LineProduct product;
};

/// Backtracking search for p = scale * l_1 ... l_m with m = p.bound().
/// Candidate lines at each level pass through two or more of the remaining
/// zeros (plus lines already extracted, for repeated factors), tried in
/// canonical order; when one factor remains it is read off directly.
std::optional<LineProduct> factor_into_lines(const Poly& p, const NodeSet& zeros);

/// Fundamental polynomials and their line factorizations for a GC_n set.
class GcAnalysis {
 public:
  GcAnalysis(NodeSet nodes, int n, std::vector<Poly> fundamentals,
             std::vector<LineFactorization> factorizations);

  const NodeSet& nodes() const { return nodes_; }
  int degree() const { return n_; }
  const Poly& fundamental(std::size_t i) const { return fundamentals_[i]; }
  const LineFactorization& factorization(std::size_t i) const { return factorizations_[i]; }

  /// Distinct used lines of node i, canonical order.
  const std::vector<Line>& used_lines(std::size_t i) const { return used_[i]; }
  bool uses(std::size_t i, const Line& l) const;
  bool has_repeated_factor(std::size_t i) const;

 private:
  NodeSet nodes_;
  int n_;
  std::vector<Poly> fundamentals_;
  std::vector<LineFactorization> factorizations_;
  std::vector<std::vector<Line>> used_;
};

/// Present iff X is n-correct and every fundamental polynomial factors into
/// n lines. Per-node factorizations run as an OpenMP kernel unless
/// Exec::serial is requested.
std::optional<GcAnalysis> is_gc_set(const NodeSet& nodes, int n, Exec exec = Exec::parallel);

/// A uses l iff l divides A's fundamental polynomial. Throws NodeNotInSet or
/// NotCorrect.
bool uses_line(const Point& node, const NodeSet& nodes, int n, const Line& l);

/// Throws NotFactorable when the fundamental polynomial is not a product of
/// rational lines.
std::vector<Line> used_lines(const Point& node, const NodeSet& nodes, int n);

/// Nodes on none of the lines that fail to use at least one of them.
NodeSet non_users(const GcAnalysis& gc, std::span<const Line> lines);
NodeSet non_users(const NodeSet& nodes, int n, std::span<const Line> lines);

/// Instance check: non_users empty <=> the line product is a maximal curve.
bool non_users_empty_iff_maximal(const GcAnalysis& gc, std::span<const Line> lines);

struct MDSequence {
  Point node;
  std::vector<std::size_t> counts;
  std::vector<Line> witness;
  /// For each node index of X: position in `witness` of the line it is
  /// primary for; nothing for the analysed node itself.
  std::vector<std::optional<std::size_t>> primary_line;
};

/// Lexicographically maximal primary-count vector over all orderings of the
/// node's used lines, with the first maximizing ordering (in canonical
/// permutation order) as witness. Throws NotFactorable unless the node uses
/// exactly n distinct lines.
MDSequence md_sequence(const GcAnalysis& gc, std::size_t node);
MDSequence md_sequence(const Point& node, const NodeSet& nodes, int n);

/// As md_sequence with `first` forced into the first position.
/// Throws LineNotUsed.
MDSequence l_tilde_md_sequence(const GcAnalysis& gc, std::size_t node, const Line& first);
MDSequence l_tilde_md_sequence(const Point& node, const NodeSet& nodes, int n, const Line& first);

/// Primary counts of one specific line ordering (no maximization).
std::vector<std::size_t> distribution(const NodeSet& nodes, std::size_t node,
                                      std::span<const Line> ordering);

struct UsageReport {
  Line line;
  std::size_t k_nodes = 0;
  std::vector<Point> users;
};

UsageReport usage_report(const GcAnalysis& gc, const Line& line);
/// Throws NotGC.
UsageReport usage_report(const Line& line, const NodeSet& nodes, int n);

struct LineProfile {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t m3 = 0;

  std::size_t weighted() const { return m1 + 2 * m2 + 3 * m3; }
  friend bool operator==(const LineProfile&, const LineProfile&) = default;
};

/// Among lines through B and another node of X, m_k counts those carrying
/// exactly k nodes of `part`. Throws NodeNotInSet if B or a node of `part`
/// is not in X, InvalidArgument if B is in `part`, ProfileOverflow if a line
/// through B carries 4+ nodes of `part`.
LineProfile line_profile(const Point& b, const NodeSet& nodes, const NodeSet& part);

/// For a GC_n set and a maximal curve mu of degree k: X minus mu is a
/// GC_{n-k} set. Throws NotMaximal if mu is not maximal.
bool gc_remainder_check(const NodeSet& nodes, int n, const Poly& mu);

}  // namespace gclab
