#include "gclab/constructions.hpp"

#include <algorithm>
#include <random>

#include "gclab/error.hpp"
#include "gclab/gc_analysis.hpp"
#include "gclab/interpolation.hpp"

namespace gclab {

namespace {

constexpr int kMaxRetries = 1000;
constexpr long kCoefficientBound = 16;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-kCoefficientBound, kCoefficientBound);
  std::uniform_int_distribution<long> den(1, kCoefficientBound);
  const long p = num(rng);
  return make_rational(p, den(rng));
}

Line random_line(std::mt19937_64& rng) {
  for (;;) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    if (is_zero(a) && is_zero(b)) continue;
    return Line(std::move(a), std::move(b), random_rational(rng));
  }
}

}  // namespace

bool in_general_position(std::span<const Line> lines) {
  std::vector<Point> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) return false;
      auto p = intersect(lines[i], lines[j]);
      if (!p) return false;
      crossings.push_back(std::move(*p));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  return std::adjacent_find(crossings.begin(), crossings.end()) == crossings.end();
}

GeneralPositionLines random_general_lines(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Line> lines;
  for (int rejected = 0; lines.size() < count;) {
    lines.push_back(random_line(rng));
    if (in_general_position(lines)) continue;
    lines.pop_back();
    if (++rejected == kMaxRetries)
      throw Error(ErrorCode::RetriesExhausted, "could not sample lines in general position");
  }
  return {std::move(lines), seed};
}

NodeSet chung_yao(std::span<const Line> lines) {
  if (!in_general_position(lines)) throw Error(ErrorCode::NotGeneralPosition, "lines not in general position");
  std::vector<Point> nodes;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) nodes.push_back(*intersect(lines[i], lines[j]));
  return NodeSet(std::move(nodes));
}

NodeSet principal_lattice(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "degree must be nonnegative");
  std::vector<Point> nodes;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) nodes.push_back({make_rational(i), make_rational(j)});
  return NodeSet(std::move(nodes));
}

NodeSet carnicer_gasca_3(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const auto family = random_general_lines(4, rng());
    std::vector<Point> nodes = chung_yao(family.lines).points();
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      const Line& l = family.lines[i];
      // A free node on l: pick a rational parameter along the line.
      const auto base = l.sample_points(2);
      const Rational t = random_rational(rng);
      const Point free{base[0].x + t * (base[1].x - base[0].x), base[0].y + t * (base[1].y - base[0].y)};
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i && family.lines[j].contains(free)) ok = false;
      if (std::find(nodes.begin(), nodes.end(), free) != nodes.end()) ok = false;
      nodes.push_back(free);
    }
    if (!ok) continue;
    NodeSet candidate(std::move(nodes));
    if (!is_gc_set(candidate, 3)) continue;
    if (maximal_lines(candidate, 3).size() != 4) continue;
    return candidate;
  }
  throw Error(ErrorCode::ConstructionFailed, "no valid four-line GC_3 set found");
}

std::pair<NodeSet, NodeSet> split_by_lines(const NodeSet& nodes, std::span<const Line> lines) {
  std::vector<Point> on, off;
  for (const auto& p : nodes) {
    const bool hit = std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(p); });
    (hit ? on : off).push_back(p);
  }
  return {NodeSet(std::move(on)), NodeSet(std::move(off))};
}

CubicDecomposition gc6_with_maximal_cubic(std::uint64_t seed) {
  auto family = random_general_lines(8, seed);
  NodeSet nodes = chung_yao(family.lines);
  std::vector<Line> sorted = family.lines;
  std::sort(sorted.begin(), sorted.end());
  std::array<Line, 3> cubic{sorted[0], sorted[1], sorted[2]};
  auto [on, off] = split_by_lines(nodes, cubic);
  return {std::move(nodes), cubic, std::move(on), std::move(off)};
}

}  // namespace gclab

namespace gclab {

std::vector<NamedNodeSet> bundled_constructions(std::uint64_t seed) {
  std::vector<NamedNodeSet> out;
  for (std::uint64_t s = seed; s < seed + 3; ++s)
    out.push_back({"chung-yao n=6 seed=" + std::to_string(s), 6, chung_yao(random_general_lines(8, s))});
  for (int n = 1; n <= 6; ++n) out.push_back({"principal n=" + std::to_string(n), n, principal_lattice(n)});
  for (std::uint64_t s = seed; s < seed + 3; ++s)
    out.push_back({"carnicer-gasca-3 seed=" + std::to_string(s), 3, carnicer_gasca_3(s)});
  out.push_back({"gc6-cubic seed=" + std::to_string(seed), 6, gc6_with_maximal_cubic(seed).nodes});
  return out;
}

}  // namespace gclab
