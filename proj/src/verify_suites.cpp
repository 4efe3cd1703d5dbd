#include <algorithm>
#include <random>
#include <sstream>

#include "gclab/conjecture_lab.hpp"
#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/interpolation.hpp"
#include "gclab/poly.hpp"

namespace gclab {

namespace {

Point random_grid_point(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  const long x = coord(rng);
  return {make_rational(x), make_rational(coord(rng))};
}

void add_random_fill(std::vector<Point>& nodes, std::size_t extra, std::mt19937_64& rng) {
  for (int guard = 0; extra > 0 && guard < 1000; ++guard) {
    Point p = random_grid_point(rng, 6);
    if (std::find(nodes.begin(), nodes.end(), p) != nodes.end()) continue;
    nodes.push_back(std::move(p));
    --extra;
  }
}

std::vector<Point> collinear_family(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-4, 4);
  Point a = random_grid_point(rng, 4), dir{0, 0};
  while (is_zero(dir.x) && is_zero(dir.y)) dir = {make_rational(coef(rng)), make_rational(coef(rng))};
  std::vector<Point> nodes;
  for (int t = 0; t < n + 2; ++t) nodes.push_back({a.x + t * dir.x, a.y + t * dir.y});
  std::uniform_int_distribution<std::size_t> extra(0, static_cast<std::size_t>(3 * n - (n + 2)));
  add_random_fill(nodes, extra(rng), rng);
  return nodes;
}

std::vector<Point> conic_family(int n, std::mt19937_64& rng) {
  // Affine image of the parabola (t, t^2).
  std::uniform_int_distribution<long> coef(-3, 3);
  long a = 0, b = 0, c = 0, d = 0;
  while (a * d - b * c == 0) a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
  const long e = coef(rng), f = coef(rng);
  std::vector<Point> nodes;
  for (int i = 0; i < 2 * n + 2; ++i) {
    const Rational t = make_rational(i - n);
    const Rational t2 = t * t;
    nodes.push_back({a * t + b * t2 + e, c * t + d * t2 + f});
  }
  std::uniform_int_distribution<std::size_t> extra(0, static_cast<std::size_t>(n - 2));
  add_random_fill(nodes, extra(rng), rng);
  return nodes;
}

std::vector<Point> grid_family(int n, std::mt19937_64& rng) {
  const auto family = random_general_lines(static_cast<std::size_t>(3 + n), rng());
  std::vector<Point> nodes;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 3 + n; ++j) nodes.push_back(*intersect(family.lines[i], family.lines[j]));
  if (rng() % 2 == 1) {
    std::uniform_int_distribution<std::size_t> drop(0, nodes.size() - 1);
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(drop(rng)));
  }
  return nodes;
}

std::vector<Point> random_family(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, static_cast<std::size_t>(3 * n));
  std::vector<Point> nodes;
  const std::size_t target = size(rng);
  for (int guard = 0; nodes.size() < target && guard < 1000; ++guard) {
    Point p = random_grid_point(rng, 3);
    if (std::find(nodes.begin(), nodes.end(), p) == nodes.end()) nodes.push_back(std::move(p));
  }
  return nodes;
}

}  // namespace

std::vector<DependenceInstance> dependence_instances(std::size_t count, std::uint64_t seed) {
  std::vector<DependenceInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const int n = 2 + static_cast<int>((i / 4) % 2);
    DependenceInstance inst;
    inst.n = n;
    switch (i % 4) {
      case 0: inst.family = "collinear"; inst.nodes = NodeSet(collinear_family(n, rng)); break;
      case 1: inst.family = "conic"; inst.nodes = NodeSet(conic_family(n, rng)); break;
      case 2: inst.family = "grid"; inst.nodes = NodeSet(grid_family(n, rng)); break;
      default: inst.family = "random"; inst.nodes = NodeSet(random_family(n, rng)); break;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

std::string join(const CountVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<CheckResult> catalog_suite() {
  const std::vector<CountVector> listed = {
      {6, 6, 6, 4, 3, 2}, {6, 6, 5, 5, 3, 2}, {6, 6, 5, 4, 4, 2}, {6, 6, 5, 4, 3, 3},
      {6, 6, 4, 4, 4, 3}, {6, 5, 5, 5, 4, 2}, {6, 5, 5, 5, 3, 3}, {6, 5, 5, 4, 4, 3},
      {6, 5, 4, 4, 4, 4}, {5, 5, 5, 5, 5, 2}, {5, 5, 5, 5, 4, 3}, {5, 5, 5, 4, 4, 4}};
  std::vector<CheckResult> out;
  const auto with_rule = enumerate_md_catalog(6, 6, true).sequences;
  out.push_back({"md-catalog n=6 cubic rule", with_rule == listed,
                 std::to_string(with_rule.size()) + " sequences, expected the 12 listed"});

  auto without = enumerate_md_catalog(6, 6, false).sequences;
  const CountVector omitted_a{6, 6, 6, 5, 2, 2}, omitted_b{6, 6, 6, 3, 3, 3};
  auto expected = listed;
  expected.push_back(omitted_a);
  expected.push_back(omitted_b);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  out.push_back({"md-catalog n=6 no rule", without == expected,
                 std::to_string(without.size()) + " sequences, expected 14 incl. " + join(omitted_a) + " and " +
                     join(omitted_b)});

  const auto trivial = enumerate_md_catalog(1, 2, true).sequences;
  out.push_back({"md-catalog n=1", trivial == std::vector<CountVector>{{2}},
                 std::to_string(trivial.size()) + " sequence(s)"});

  const std::size_t sizes[] = {5, 7, 9, 10, 9};
  for (int k = 2; k <= 6; ++k) {
    const auto cat = enumerate_l_tilde_catalog(6, k);
    const std::size_t want = sizes[k - 2];
    out.push_back({"l-tilde catalog k=" + std::to_string(k), cat.size() == want,
                   std::to_string(cat.size()) + " sequences, expected " + std::to_string(want)});
  }
  return out;
}

std::vector<CheckResult> usage_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& inst : bundled_constructions(seed)) {
    const auto gc = is_gc_set(inst.nodes, inst.n);
    if (!gc) {
      out.push_back({"usage " + inst.name, false, "not a GC set"});
      continue;
    }
    const auto table = check_usage_table(*gc);
    std::ostringstream detail;
    detail << "two-node violations " << table.two_node_violations << "; max users per k:";
    for (const auto& cls : table.classes) detail << ' ' << cls.k << "->" << cls.max_users;
    out.push_back({"usage 2-node bound " + inst.name, table.two_node_bound_holds(), detail.str()});

    if (inst.name.starts_with("chung-yao")) {
      bool all21 = true;
      for (const auto& l : maximal_lines(inst.nodes, inst.n))
        all21 = all21 && usage_report(*gc, l).users.size() == 21;
      out.push_back({"usage maximal lines " + inst.name, all21, "every maximal line has 21 users"});
    }
  }
  return out;
}

std::vector<CheckResult> maxmax_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 6; ++n) {
    const NodeSet lattice = principal_lattice(n);
    const Line diagonal(1, 1, -n);
    const std::array<Line, 1> cut{diagonal};
    const auto rest = split_by_lines(lattice, cut).second;
    const NodeSet smaller = principal_lattice(n - 1);
    bool same = rest.size() == smaller.size();
    for (const auto& p : smaller) same = same && rest.contains(p);
    const bool gc = gc_remainder_check(lattice, n, Poly::from_line(diagonal));
    out.push_back({"maxmax principal n=" + std::to_string(n), same && gc,
                   std::string("remainder is the lattice of degree n-1: ") + (same ? "yes" : "no") +
                       ", GC: " + (gc ? "yes" : "no")});
  }
  const auto dec = gc6_with_maximal_cubic(seed);
  const bool line_ok = gc_remainder_check(dec.nodes, 6, Poly::from_line(dec.cubic[0]));
  out.push_back({"maxmax chung-yao line seed=" + std::to_string(seed), line_ok, "remainder is GC_5"});
  const bool cubic_ok = gc_remainder_check(dec.nodes, 6, Poly::line_product(dec.cubic));
  out.push_back({"maxmax chung-yao cubic seed=" + std::to_string(seed), cubic_ok, "remainder is GC_3"});
  return out;
}

std::vector<CheckResult> ban_suite(std::uint64_t seed) {
  const auto dec = gc6_with_maximal_cubic(seed);
  const auto report = verify_lemma_ban(dec.nodes, dec.cubic);
  return {{"ban seed=" + std::to_string(seed), report.all_passed(),
           std::to_string(report.passed) + "/" + std::to_string(report.remainder_nodes) + " remainder nodes"}};
}

bool witness_sound(const MSearchResult& r) {
  if (!r.witness) return r.best_found == 0;
  if (!valid_configuration(*r.witness)) return false;
  const auto lines = connecting_lines(*r.witness);
  if (lines.size() != r.best_found || lines != r.witness_lines) return false;
  for (const auto& l : lines)
    for (std::size_t g = 0; g < 3; ++g) {
      const auto& grp = r.witness->groups[g];
      if (std::count_if(grp.begin(), grp.end(), [&](const Point& p) { return l.contains(p); }) != 1) return false;
    }
  return true;
}

std::vector<CheckResult> m_search_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<CheckResult> out;
  const auto r = m_search(3, 3, 2, trials, seed);
  out.push_back({"m-search (3,3,2)", r.best_found == 5 && witness_sound(r),
                 "best=" + std::to_string(r.best_found) + " at trial " + std::to_string(r.best_trial) + " of " +
                     std::to_string(trials)});
  const std::size_t small = std::min<std::size_t>(trials, 1000);
  const auto one = m_search(1, 1, 1, small, seed);
  out.push_back({"m-search (1,1,1)", one.best_found <= 1 && witness_sound(one),
                 "best=" + std::to_string(one.best_found)});
  const auto two = m_search(2, 1, 1, small, seed);
  out.push_back({"m-search (2,1,1)", two.best_found <= 2 && witness_sound(two),
                 "best=" + std::to_string(two.best_found)});
  return out;
}

std::vector<CheckResult> dependence_suite(std::uint64_t seed) {
  const auto instances = dependence_instances(200, seed);
  std::size_t agree = 0, dependent = 0;
  std::string first_mismatch;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto c = classify_dependence(inst.nodes, inst.n);
    if (c.consistent()) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = "; first mismatch #" + std::to_string(i) + " (" + inst.family + ")";
    }
    if (c.dependent) ++dependent;
  }
  return {{"dependence verdict vs rank", agree == instances.size(),
           std::to_string(agree) + "/" + std::to_string(instances.size()) + " agree, " + std::to_string(dependent) +
               " dependent" + first_mismatch}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"catalog", "usage", "maxmax", "ban", "m-search", "dependence"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed, std::size_t trials) {
  if (suite == "catalog") return catalog_suite();
  if (suite == "usage") return usage_suite(seed);
  if (suite == "maxmax") return maxmax_suite(seed);
  if (suite == "ban") return ban_suite(seed);
  if (suite == "m-search") return m_search_suite(seed, trials);
  if (suite == "dependence") return dependence_suite(seed);
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace gclab
