#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gclab/exec.hpp"
#include "gclab/gc_analysis.hpp"
#include "gclab/geometry.hpp"

namespace gclab {

/// A maximal line of a GC_n set if one exists. Absence on a verified GC set
/// would contradict the Gasca-Maeztu conjecture and is reported on stderr.
/// Throws NotGC.
std::optional<Line> gm_witness(const NodeSet& nodes, int n);
std::optional<Line> gm_witness(const GcAnalysis& gc);

using CountVector = std::vector<int>;

struct SequenceCatalog {
  int n = 0;
  int cap = 0;
  std::vector<CountVector> sequences;  // lexicographically descending
};

/// All nonincreasing length-n vectors with entries in [2, cap] summing to
/// dim_pi(n) - 1. With the cubic rule, a vector starting (n, n, n) must
/// continue (n-2, n-3, ..., 2): three full lines form a maximal cubic whose
/// complement is a GC_{n-3} set. The rule is applied for n = 6, cap = 6, or
/// for any n with cap = n when `generalize_cubic_rule` is set.
SequenceCatalog enumerate_md_catalog(int n, int cap, bool apply_cubic_rule,
                                     bool generalize_cubic_rule = false);

/// Sequences of the (n, n, cubic rule) catalog containing k, with one k
/// moved to the front; duplicates removed, catalog order kept.
/// Throws OutOfRange unless 2 <= k <= n.
std::vector<CountVector> enumerate_l_tilde_catalog(int n, int k);

struct UsageClass {
  std::size_t k = 0;          // nodes on the line
  std::size_t lines = 0;      // lines of this class
  std::size_t max_users = 0;  // most users observed on one line
};

struct UsageTable {
  std::vector<UsageClass> classes;  // ascending k
  /// Two-node lines are used by at most one node in any GC_n set.
  std::size_t two_node_violations = 0;
  bool two_node_bound_holds() const { return two_node_violations == 0; }
};

/// Usage observed on every line through >= 2 nodes. Throws NotGC.
UsageTable check_usage_table(const NodeSet& nodes, int n);
UsageTable check_usage_table(const GcAnalysis& gc);

/// Three carrier lines with marked points on each.
struct MConfiguration {
  std::array<Line, 3> carriers;
  std::array<std::vector<Point>, 3> groups;
};

/// Carriers distinct, marked points distinct, each on its carrier and none
/// at an intersection of two carriers.
bool valid_configuration(const MConfiguration& config);

/// Lines through one marked point of each group, canonical order.
std::vector<Line> connecting_lines(const MConfiguration& config);

struct MSearchResult {
  std::size_t k1 = 0, k2 = 0, k3 = 0;
  std::size_t best_found = 0;
  std::optional<MConfiguration> witness;
  std::vector<Line> witness_lines;
  std::size_t best_trial = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Seeded search for configurations maximizing the number of connecting
/// lines. Even trials build projective "center" configurations designed to
/// produce many connecting lines, odd trials sample small-integer grids.
/// Trial t is driven by its own generator derived from (seed, t), so the
/// result does not depend on the schedule. Ties go to the lowest trial.
MSearchResult m_search(std::size_t k1, std::size_t k2, std::size_t k3, std::size_t trials,
                       std::uint64_t seed, Exec exec = Exec::parallel);

/// One trial of m_search; nothing when the sampled configuration is invalid.
std::optional<MConfiguration> m_search_trial(std::size_t k1, std::size_t k2, std::size_t k3,
                                             std::uint64_t seed, std::size_t trial);

struct BanReport {
  std::size_t remainder_nodes = 0;
  std::size_t passed = 0;
  std::vector<bool> per_node;  // aligned with the remainder set
  bool all_passed() const { return passed == remainder_nodes; }
};

/// For a maximal cubic a1 a2 a3 of an n-correct set X (n = 3..), checks
/// coefficient-exactly that every node B off the cubic has
/// p*_{B,X} = a1 a2 a3 p*_{B,R} / (a1 a2 a3)(B), with R the nodes off the
/// cubic; the divisor restores p*(B) = 1 for any scaling of the lines.
/// Throws NotCorrect if X is not n-correct, NotMaximalCubic if the cubic
/// does not carry maximal_curve_size(n, 3) nodes or R is not (n-3)-correct.
BanReport verify_lemma_ban(const NodeSet& nodes, const std::array<Line, 3>& cubic);

/// Nodes on the cubic that use at least one of its three lines.
std::size_t cubic_part_line_users(const GcAnalysis& gc, const std::array<Line, 3>& cubic);

struct DependenceInstance {
  std::string family;  // "collinear", "conic", "grid" or "random"
  int n = 0;
  NodeSet nodes;
};

/// Seeded instances with n in {2, 3} and |X| <= 3n. Families rotate with the
/// index: n+2 collinear nodes plus random fill, 2n+2 nodes on a rational
/// conic plus fill, the 3n crossings of three lines with n lines, and small
/// random sets.
std::vector<DependenceInstance> dependence_instances(std::size_t count, std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named verification suites: catalog, usage, maxmax, ban, m-search,
/// dependence. Throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed, std::size_t trials);
const std::vector<std::string>& suite_names();

}  // namespace gclab
