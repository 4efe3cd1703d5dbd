#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gclab/rational.hpp"

namespace gclab {

struct Point {
  Rational x;
  Rational y;
};

bool operator==(const Point& p, const Point& q);
/// Lexicographic in (x, y).
bool operator<(const Point& p, const Point& q);

/// The locus a*x + b*y + c = 0, stored in canonical form: the first nonzero
/// coefficient in (a, b, c) order is 1. Equal loci compare equal, and the
/// lexicographic order on (a, b, c) is the canonical line order used
/// everywhere a deterministic ordering is needed.
class Line {
 public:
  Line(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Rational evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point& p) const { return is_zero(evaluate(p)); }

  /// n+1 distinct points of the locus (used for vanishing tests).
  std::vector<Point> sample_points(std::size_t count) const;

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend bool operator<(const Line& l, const Line& m);

 private:
  Rational a_;
  Rational b_;
  Rational c_;
};

/// Ordered set of pairwise distinct nodes. Indices are stable and are what
/// reports refer to.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<Point> nodes);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Point& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<Point>& points() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  /// Nodes whose indices are not listed, order preserved.
  NodeSet without(std::span<const std::size_t> indices) const;

  /// Same nodes in the same order.
  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<Point> nodes_;
};

Line line_through(const Point& p, const Point& q);

/// True iff one line contains every point. Fewer than three points are
/// always collinear; repeated points are ignored.
bool collinear(std::span<const Point> points);

std::vector<Point> nodes_on_line(const NodeSet& nodes, const Line& line);
std::size_t k_node_count(const NodeSet& nodes, const Line& line);

/// Absent for parallel lines. Throws SameLine if the loci coincide.
std::optional<Point> intersect(const Line& l1, const Line& l2);

/// A line spanned by the node set together with the indices it carries.
struct LineIncidence {
  Line line;
  std::vector<std::size_t> nodes;
};

/// Every line through at least two nodes, in canonical line order.
std::vector<LineIncidence> spanned_lines(const NodeSet& nodes);

std::string to_string(const Point& p);
std::string to_string(const Line& l);

}  // namespace gclab
