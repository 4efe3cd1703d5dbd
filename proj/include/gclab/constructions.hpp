#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gclab/geometry.hpp"

namespace gclab {

/// No two parallel, no three concurrent (so all pairwise intersections are
/// distinct points).
bool in_general_position(std::span<const Line> lines);

struct GeneralPositionLines {
  std::vector<Line> lines;
  std::uint64_t seed = 0;
};

/// Seeded rational lines in general position. Coefficients are p/q with
/// |p| <= 16 and 1 <= q <= 16. Throws RetriesExhausted.
GeneralPositionLines random_general_lines(std::size_t count, std::uint64_t seed);

/// Pairwise intersections of n+2 lines in general position: a GC_n set whose
/// generating lines are its maximal lines. Node (i, j), i < j, is listed in
/// lexicographic pair order. Throws NotGeneralPosition.
NodeSet chung_yao(std::span<const Line> lines);
inline NodeSet chung_yao(const GeneralPositionLines& family) { return chung_yao(family.lines); }

/// {(i, j) : i, j >= 0, i + j <= n}, listed by i then j.
NodeSet principal_lattice(int n);

/// Ten-node GC_3 set with exactly four maximal lines: the six intersections
/// of four general lines plus one seeded free node per line. Validated after
/// construction; throws ConstructionFailed after bounded retries.
NodeSet carnicer_gasca_3(std::uint64_t seed);

struct CubicDecomposition {
  NodeSet nodes;                // the GC_6 set
  std::array<Line, 3> cubic;    // three maximal lines forming a maximal cubic
  NodeSet cubic_part;           // the 18 nodes on the cubic
  NodeSet remainder;            // the 10 nodes off it
};

/// Chung-Yao GC_6 set on eight seeded lines, with the three generating lines
/// of smallest canonical form designated as the cubic.
CubicDecomposition gc6_with_maximal_cubic(std::uint64_t seed);

/// Splits X by a line product into (on, off).
std::pair<NodeSet, NodeSet> split_by_lines(const NodeSet& nodes, std::span<const Line> lines);

struct NamedNodeSet {
  std::string name;
  int n = 0;
  NodeSet nodes;
};

/// The GC instances exercised by the verification suites: Chung-Yao GC_6 on
/// three consecutive seeds, principal lattices n = 1..6, four-line GC_3 sets
/// on three seeds and the GC_6 set with a designated maximal cubic.
std::vector<NamedNodeSet> bundled_constructions(std::uint64_t seed);

}  // namespace gclab
