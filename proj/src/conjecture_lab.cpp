#include "gclab/conjecture_lab.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/interpolation.hpp"
#include "gclab/poly.hpp"

namespace gclab {

std::optional<Line> gm_witness(const GcAnalysis& gc) {
  const auto n1 = static_cast<std::size_t>(gc.degree()) + 1;
  for (const auto& inc : spanned_lines(gc.nodes()))
    if (inc.nodes.size() == n1) return inc.line;
  if (gc.degree() >= 1)
    std::cerr << "gclab: GC_" << gc.degree() << " set with no maximal line (" << gc.nodes().size()
              << " nodes): Gasca-Maeztu counterexample candidate\n";
  return std::nullopt;
}

std::optional<Line> gm_witness(const NodeSet& nodes, int n) {
  const auto gc = is_gc_set(nodes, n);
  if (!gc) throw Error(ErrorCode::NotGC, "gm_witness needs a GC set");
  return gm_witness(*gc);
}

namespace {

void extend_catalog(CountVector& prefix, int remaining, int ceiling, int length, std::vector<CountVector>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  const int slots = length - static_cast<int>(prefix.size());
  for (int v = ceiling; v >= 2; --v) {
    if (v > remaining) continue;
    if (remaining - v > (slots - 1) * v || remaining - v < (slots - 1) * 2) continue;
    prefix.push_back(v);
    extend_catalog(prefix, remaining - v, v, length, out);
    prefix.pop_back();
  }
}

}  // namespace

SequenceCatalog enumerate_md_catalog(int n, int cap, bool apply_cubic_rule, bool generalize_cubic_rule) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "catalog needs n >= 1");
  SequenceCatalog catalog{n, cap, {}};
  CountVector prefix;
  extend_catalog(prefix, static_cast<int>(dim_pi(n)) - 1, cap, n, catalog.sequences);

  const bool rule = apply_cubic_rule && n >= 3 && cap == n && (n == 6 || generalize_cubic_rule);
  if (rule) {
    CountVector forced;
    for (int v = n - 2; v >= 2; --v) forced.push_back(v);
    std::erase_if(catalog.sequences, [&](const CountVector& s) {
      if (s[0] != n || s[1] != n || s[2] != n) return false;
      return !std::equal(s.begin() + 3, s.end(), forced.begin(), forced.end());
    });
  }
  return catalog;
}

std::vector<CountVector> enumerate_l_tilde_catalog(int n, int k) {
  if (k < 2 || k > n) throw Error(ErrorCode::OutOfRange, "need 2 <= k <= n");
  std::vector<CountVector> out;
  for (const auto& s : enumerate_md_catalog(n, n, true, true).sequences) {
    auto it = std::find(s.begin(), s.end(), k);
    if (it == s.end()) continue;
    CountVector moved{k};
    moved.insert(moved.end(), s.begin(), it);
    moved.insert(moved.end(), it + 1, s.end());
    if (std::find(out.begin(), out.end(), moved) == out.end()) out.push_back(std::move(moved));
  }
  return out;
}

UsageTable check_usage_table(const GcAnalysis& gc) {
  std::map<std::size_t, UsageClass> classes;
  UsageTable table;
  for (const auto& inc : spanned_lines(gc.nodes())) {
    std::size_t users = 0;
    for (std::size_t i = 0; i < gc.nodes().size(); ++i)
      if (gc.uses(i, inc.line)) ++users;
    auto& cls = classes[inc.nodes.size()];
    cls.k = inc.nodes.size();
    ++cls.lines;
    cls.max_users = std::max(cls.max_users, users);
    if (inc.nodes.size() == 2 && users > 1) ++table.two_node_violations;
  }
  for (auto& [k, cls] : classes) table.classes.push_back(cls);
  return table;
}

UsageTable check_usage_table(const NodeSet& nodes, int n) {
  const auto gc = is_gc_set(nodes, n);
  if (!gc) throw Error(ErrorCode::NotGC, "usage table needs a GC set");
  return check_usage_table(*gc);
}

bool valid_configuration(const MConfiguration& config) {
  const auto& c = config.carriers;
  if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) return false;
  std::set<Point> seen;
  for (std::size_t g = 0; g < 3; ++g) {
    for (const auto& p : config.groups[g]) {
      if (!seen.insert(p).second) return false;
      if (!c[g].contains(p)) return false;
      for (std::size_t h = 0; h < 3; ++h)
        if (h != g && c[h].contains(p)) return false;
    }
  }
  return true;
}

std::vector<Line> connecting_lines(const MConfiguration& config) {
  std::set<Line> lines;
  for (const auto& a : config.groups[0]) {
    for (const auto& b : config.groups[1]) {
      const Line l = line_through(a, b);
      for (const auto& c : config.groups[2])
        if (l.contains(c)) lines.insert(l);
    }
  }
  return {lines.begin(), lines.end()};
}

namespace {

Rational small_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long p = num(rng);
  return make_rational(p, den(rng));
}

Line small_line(std::mt19937_64& rng, long bound) {
  for (;;) {
    Rational a = small_rational(rng, bound), b = small_rational(rng, bound);
    if (is_zero(a) && is_zero(b)) continue;
    return Line(std::move(a), std::move(b), small_rational(rng, bound));
  }
}

Point point_at(const Line& l, const Rational& t) {
  const auto base = l.sample_points(2);
  return {base[0].x + t * (base[1].x - base[0].x), base[0].y + t * (base[1].y - base[0].y)};
}

void fill_group(std::vector<Point>& group, const Line& carrier, std::size_t target, std::mt19937_64& rng,
                long bound) {
  for (int guard = 0; group.size() < target && guard < 64; ++guard) {
    Point p = point_at(carrier, small_rational(rng, bound));
    if (std::find(group.begin(), group.end(), p) == group.end()) group.push_back(std::move(p));
  }
}

// Central projection: marked points on the first carrier are projected from
// a center c onto the second, and c itself is marked on the third carrier,
// so every projection ray is a connecting line. A second point c' where two
// non-corresponding connecting lines meet is marked on the third carrier too.
std::optional<MConfiguration> structured_trial(std::size_t k1, std::size_t k2, std::size_t k3,
                                               std::mt19937_64& rng) {
  const Line l1 = small_line(rng, 8);
  const Line l2 = small_line(rng, 8);
  if (l1 == l2) return std::nullopt;
  const Point c{small_rational(rng, 8), small_rational(rng, 8)};
  if (l1.contains(c) || l2.contains(c)) return std::nullopt;

  std::vector<Point> g1, g2;
  fill_group(g1, l1, k1, rng, 8);
  for (const auto& a : g1) {
    if (g2.size() == k2) break;
    const auto b = intersect(line_through(a, c), l2);
    if (b) g2.push_back(*b);
  }
  fill_group(g2, l2, k2, rng, 8);

  std::vector<Point> g3;
  std::optional<Line> l3;
  if (k3 >= 1) g3.push_back(c);
  if (k3 >= 2 && g1.size() >= 2 && g2.size() >= 2) {
    // Pick two non-corresponding pairs (a_i, b_j), (a_k, b_l).
    std::uniform_int_distribution<std::size_t> pick1(0, g1.size() - 1), pick2(0, g2.size() - 1);
    const std::size_t i = pick1(rng), j = pick2(rng), k = pick1(rng), l = pick2(rng);
    if (i != j && k != l && i != k && j != l) {
      try {
        const auto cp = intersect(line_through(g1[i], g2[j]), line_through(g1[k], g2[l]));
        if (cp && !(*cp == c)) {
          l3 = line_through(c, *cp);
          g3.push_back(*cp);
        }
      } catch (const Error&) {
        return std::nullopt;
      }
    }
  }
  if (!l3) {
    // Random carrier through c.
    const Point other{c.x + small_rational(rng, 8), c.y + small_rational(rng, 8)};
    if (other == c) return std::nullopt;
    l3 = line_through(c, other);
  }
  fill_group(g3, *l3, k3, rng, 8);
  g1.resize(std::min(g1.size(), k1));
  g3.resize(std::min(g3.size(), k3));

  MConfiguration config{{l1, l2, *l3}, {std::move(g1), std::move(g2), std::move(g3)}};
  return config;
}

std::optional<MConfiguration> grid_trial(std::size_t k1, std::size_t k2, std::size_t k3, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::array<Line, 3> carriers{Line(1, 0, 0), Line(1, 0, 0), Line(1, 0, 0)};
  for (auto& carrier : carriers) {
    for (;;) {
      const long a = coef(rng), b = coef(rng);
      if (a == 0 && b == 0) continue;
      carrier = Line(make_rational(a), make_rational(b), make_rational(coef(rng)));
      break;
    }
  }
  std::array<std::vector<Point>, 3> groups;
  const std::array<std::size_t, 3> sizes{k1, k2, k3};
  std::uniform_int_distribution<long> param(-4, 4);
  for (std::size_t g = 0; g < 3; ++g) {
    for (int guard = 0; groups[g].size() < sizes[g] && guard < 64; ++guard) {
      Point p = point_at(carriers[g], make_rational(param(rng)));
      if (std::find(groups[g].begin(), groups[g].end(), p) == groups[g].end()) groups[g].push_back(std::move(p));
    }
  }
  return MConfiguration{carriers, groups};
}

}  // namespace

std::optional<MConfiguration> m_search_trial(std::size_t k1, std::size_t k2, std::size_t k3, std::uint64_t seed,
                                             std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t(trial) >> 32)};
  std::mt19937_64 rng(seq);
  std::optional<MConfiguration> config;
  try {
    config = trial % 2 == 0 ? structured_trial(k1, k2, k3, rng) : grid_trial(k1, k2, k3, rng);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!config) return std::nullopt;
  const std::array<std::size_t, 3> sizes{k1, k2, k3};
  for (std::size_t g = 0; g < 3; ++g)
    if (config->groups[g].size() != sizes[g]) return std::nullopt;
  if (!valid_configuration(*config)) return std::nullopt;
  return config;
}

MSearchResult m_search(std::size_t k1, std::size_t k2, std::size_t k3, std::size_t trials, std::uint64_t seed,
                       Exec exec) {
  if (k1 == 0 || k2 == 0 || k3 == 0) throw Error(ErrorCode::OutOfRange, "group sizes must be positive");
  std::vector<std::size_t> counts(trials, 0);
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 64) if (exec == Exec::parallel)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    const auto config = m_search_trial(k1, k2, k3, seed, static_cast<std::size_t>(t));
    if (config) counts[static_cast<std::size_t>(t)] = connecting_lines(*config).size();
  }

  MSearchResult result{k1, k2, k3, 0, std::nullopt, {}, 0, trials, seed};
  for (std::size_t t = 0; t < trials; ++t) {
    if (counts[t] > result.best_found || (!result.witness && counts[t] == result.best_found && counts[t] > 0)) {
      result.best_found = counts[t];
      result.best_trial = t;
      result.witness = m_search_trial(k1, k2, k3, seed, t);
    }
  }
  if (result.witness) result.witness_lines = connecting_lines(*result.witness);
  return result;
}

BanReport verify_lemma_ban(const NodeSet& nodes, const std::array<Line, 3>& cubic) {
  int n = 0;
  while (dim_pi(n) < nodes.size()) ++n;
  if (n < 3 || dim_pi(n) != nodes.size()) throw Error(ErrorCode::NotCorrect, "node count is not dim of Pi_n, n >= 3");
  if (!is_n_correct(nodes, n).correct) throw Error(ErrorCode::NotCorrect, "node set is not n-correct");

  auto [on, off] = split_by_lines(nodes, cubic);
  if (on.size() != maximal_curve_size(n, 3))
    throw Error(ErrorCode::NotMaximalCubic, "cubic carries " + std::to_string(on.size()) + " nodes");
  if (!is_n_correct(off, n - 3).correct)
    throw Error(ErrorCode::NotMaximalCubic, "nodes off the cubic are not (n-3)-correct");

  const Poly cubic_poly = Poly::line_product(cubic);
  BanReport report;
  report.remainder_nodes = off.size();
  for (const auto& b : off) {
    const auto full = fundamental_polynomial(b, nodes, n);
    const auto local = fundamental_polynomial(b, off, n - 3);
    // Both sides are normalized to 1 at B, so the cubic factor is divided by
    // its value there.
    const Rational at_b = evaluate(cubic_poly, b);
    const bool ok = full && local && full->same_polynomial((cubic_poly * *local).scaled(1 / at_b));
    report.per_node.push_back(ok);
    if (ok) ++report.passed;
  }
  return report;
}

std::size_t cubic_part_line_users(const GcAnalysis& gc, const std::array<Line, 3>& cubic) {
  std::size_t users = 0;
  for (std::size_t i = 0; i < gc.nodes().size(); ++i) {
    const Point& p = gc.nodes()[i];
    const bool on_cubic = std::any_of(cubic.begin(), cubic.end(), [&](const Line& l) { return l.contains(p); });
    if (!on_cubic) continue;
    if (std::any_of(cubic.begin(), cubic.end(), [&](const Line& l) { return gc.uses(i, l); })) ++users;
  }
  return users;
}

}  // namespace gclab
