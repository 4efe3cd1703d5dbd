#include "gclab/geometry.hpp"

#include <algorithm>
#include <map>

#include "gclab/error.hpp"

namespace gclab {

bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

bool operator<(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

Line::Line(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (is_zero(a_) && is_zero(b_)) throw Error(ErrorCode::DegenerateLine, "a = b = 0");
  const Rational lead = is_zero(a_) ? b_ : a_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

bool operator<(const Line& l, const Line& m) {
  if (l.a_ != m.a_) return l.a_ < m.a_;
  if (l.b_ != m.b_) return l.b_ < m.b_;
  return l.c_ < m.c_;
}

std::vector<Point> Line::sample_points(std::size_t count) const {
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const Rational s(static_cast<long>(t));
    if (is_zero(a_)) {
      // b = 1: y = -c.
      pts.push_back({s, -c_});
    } else {
      // a = 1: x = -b y - c.
      pts.push_back({-b_ * s - c_, s});
    }
  }
  return pts;
}

NodeSet::NodeSet(std::vector<Point> nodes) : nodes_(std::move(nodes)) {
  std::vector<Point> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::DuplicateNode, "node set contains a repeated point");
}

std::optional<std::size_t> NodeSet::index_of(const Point& p) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == p) return i;
  return std::nullopt;
}

NodeSet NodeSet::without(std::span<const std::size_t> indices) const {
  std::vector<bool> drop(nodes_.size(), false);
  for (auto i : indices) drop.at(i) = true;
  std::vector<Point> kept;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!drop[i]) kept.push_back(nodes_[i]);
  return NodeSet(std::move(kept));
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorCode::EqualPoints, to_string(p));
  // (y_p - y_q) x + (x_q - x_p) y + (x_p y_q - x_q y_p) = 0
  return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

bool collinear(std::span<const Point> points) {
  if (points.size() < 3) return true;
  const Point& p = points[0];
  std::size_t second = 1;
  while (second < points.size() && points[second] == p) ++second;
  if (second == points.size()) return true;
  const Point& q = points[second];
  for (std::size_t i = second + 1; i < points.size(); ++i) {
    const Point& r = points[i];
    // 3x3 determinant of homogeneous coordinates.
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (!is_zero(det)) return false;
  }
  return true;
}

std::vector<Point> nodes_on_line(const NodeSet& nodes, const Line& line) {
  std::vector<Point> on;
  for (const auto& p : nodes)
    if (line.contains(p)) on.push_back(p);
  return on;
}

std::size_t k_node_count(const NodeSet& nodes, const Line& line) {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [&](const Point& p) { return line.contains(p); }));
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  if (l1 == l2) throw Error(ErrorCode::SameLine, to_string(l1));
  const Rational det = l1.a() * l2.b() - l2.a() * l1.b();
  if (is_zero(det)) return std::nullopt;
  return Point{(l1.b() * l2.c() - l2.b() * l1.c()) / det, (l2.a() * l1.c() - l1.a() * l2.c()) / det};
}

std::vector<LineIncidence> spanned_lines(const NodeSet& nodes) {
  std::map<Line, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      Line l = line_through(nodes[i], nodes[j]);
      if (seen.contains(l)) continue;
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < nodes.size(); ++k)
        if (l.contains(nodes[k])) on.push_back(k);
      seen.emplace(std::move(l), std::move(on));
    }
  }
  std::vector<LineIncidence> out;
  out.reserve(seen.size());
  for (auto& [line, on] : seen) out.push_back({line, on});
  return out;
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

std::string to_string(const Line& l) {
  return "[" + to_string(l.a()) + ", " + to_string(l.b()) + ", " + to_string(l.c()) + "]";
}

}  // namespace gclab
