#include "gclab/gc_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gclab/error.hpp"
#include "gclab/interpolation.hpp"

namespace gclab {

Poly LineProduct::expand() const { return Poly::line_product(lines).scaled(scale); }

namespace {

bool extract_lines(const Poly& q, const std::vector<Point>& zeros, std::vector<Line>& acc, Rational& scale) {
  const int bound = q.bound();
  if (bound == 0) {
    scale = q.coeffs()[0];
    return !is_zero(scale);
  }
  if (bound == 1) {
    // Remaining linear content is the last factor.
    const Rational& a = q.coeff(1, 0);
    const Rational& b = q.coeff(0, 1);
    if (is_zero(a) && is_zero(b)) return false;
    acc.emplace_back(a, b, q.coeff(0, 0));
    scale = is_zero(a) ? b : a;
    return true;
  }

  std::set<Line> candidates(acc.begin(), acc.end());
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) candidates.insert(line_through(zeros[i], zeros[j]));

  for (const auto& cand : candidates) {
    if (!vanishes_on_line(q, cand)) continue;
    const auto quotient = divide_line(q, cand);
    if (!quotient) continue;
    std::vector<Point> rest;
    for (const auto& z : zeros)
      if (!cand.contains(z)) rest.push_back(z);
    acc.push_back(cand);
    if (extract_lines(*quotient, rest, acc, scale)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<LineProduct> factor_into_lines(const Poly& p, const NodeSet& zeros) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  LineProduct out;
  if (!extract_lines(p, zeros.points(), out.lines, out.scale)) return std::nullopt;
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

GcAnalysis::GcAnalysis(NodeSet nodes, int n, std::vector<Poly> fundamentals,
                       std::vector<LineFactorization> factorizations)
    : nodes_(std::move(nodes)), n_(n), fundamentals_(std::move(fundamentals)),
      factorizations_(std::move(factorizations)) {
  used_.reserve(factorizations_.size());
  for (const auto& f : factorizations_) {
    std::vector<Line> lines = f.product.lines;
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    used_.push_back(std::move(lines));
  }
}

bool GcAnalysis::uses(std::size_t i, const Line& l) const {
  return std::binary_search(used_[i].begin(), used_[i].end(), l);
}

bool GcAnalysis::has_repeated_factor(std::size_t i) const {
  return used_[i].size() != factorizations_[i].product.lines.size();
}

std::optional<GcAnalysis> is_gc_set(const NodeSet& nodes, int n, Exec exec) {
  if (n < 0 || nodes.size() != dim_pi(n)) return std::nullopt;
  std::vector<Poly> fundamentals;
  try {
    fundamentals = fundamental_polynomials(nodes, n, exec);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCorrect) return std::nullopt;
    throw;
  }

  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
  std::vector<std::optional<LineProduct>> products(nodes.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto node = static_cast<std::size_t>(i);
    const std::size_t skip[] = {node};
    try {
      products[node] = factor_into_lines(fundamentals[node], nodes.without(skip));
    } catch (...) {
      products[node].reset();
    }
  }

  std::vector<LineFactorization> factorizations;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!products[i]) return std::nullopt;
    factorizations.push_back({nodes[i], std::move(*products[i])});
  }
  return GcAnalysis(nodes, n, std::move(fundamentals), std::move(factorizations));
}

namespace {

Poly require_fundamental(const Point& node, const NodeSet& nodes, int n) {
  if (!nodes.contains(node)) throw Error(ErrorCode::NodeNotInSet, to_string(node));
  if (nodes.size() != dim_pi(n) || !is_n_independent(nodes, n))
    throw Error(ErrorCode::NotCorrect, "usage is defined for n-correct sets");
  return *fundamental_polynomial(node, nodes, n);
}

}  // namespace

bool uses_line(const Point& node, const NodeSet& nodes, int n, const Line& l) {
  return divide_line(require_fundamental(node, nodes, n), l).has_value();
}

std::vector<Line> used_lines(const Point& node, const NodeSet& nodes, int n) {
  const Poly p = require_fundamental(node, nodes, n);
  const std::size_t skip[] = {*nodes.index_of(node)};
  auto product = factor_into_lines(p, nodes.without(skip));
  if (!product) throw Error(ErrorCode::NotFactorable, "fundamental polynomial of " + to_string(node));
  auto lines = product->lines;
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

NodeSet non_users(const GcAnalysis& gc, std::span<const Line> lines) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < gc.nodes().size(); ++i) {
    const Point& p = gc.nodes()[i];
    if (std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(p); })) continue;
    if (std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return !gc.uses(i, l); })) out.push_back(p);
  }
  return NodeSet(std::move(out));
}

NodeSet non_users(const NodeSet& nodes, int n, std::span<const Line> lines) {
  if (nodes.size() != dim_pi(n)) throw Error(ErrorCode::NotCorrect, "usage is defined for n-correct sets");
  const auto fundamentals = fundamental_polynomials(nodes, n);
  std::vector<Point> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Point& p = nodes[i];
    if (std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(p); })) continue;
    if (std::any_of(lines.begin(), lines.end(),
                    [&](const Line& l) { return !divide_line(fundamentals[i], l).has_value(); }))
      out.push_back(p);
  }
  return NodeSet(std::move(out));
}

bool non_users_empty_iff_maximal(const GcAnalysis& gc, std::span<const Line> lines) {
  const int k = static_cast<int>(lines.size());
  if (k < 1 || k > gc.degree()) throw Error(ErrorCode::OutOfRange, "need 1 <= #lines <= n");
  std::size_t on = 0;
  for (const auto& p : gc.nodes())
    if (std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.contains(p); })) ++on;
  const bool maximal = on == maximal_curve_size(gc.degree(), k);
  return non_users(gc, lines).empty() == maximal;
}

std::vector<std::size_t> distribution(const NodeSet& nodes, std::size_t node, std::span<const Line> ordering) {
  std::vector<bool> taken(nodes.size(), false);
  taken.at(node) = true;
  std::vector<std::size_t> counts;
  for (const auto& l : ordering) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!taken[j] && l.contains(nodes[j])) {
        taken[j] = true;
        ++c;
      }
    }
    counts.push_back(c);
  }
  return counts;
}

namespace {

// Enumerates every ordering of `free_lines` (appended after `fixed`, if
// given) and keeps the lexicographically largest distribution; the first
// maximizer in permutation order wins ties.
MDSequence maximize_distribution(const GcAnalysis& gc, std::size_t node, const std::optional<Line>& fixed,
                                 std::vector<Line> free_lines) {
  const NodeSet& nodes = gc.nodes();
  const std::size_t total = free_lines.size() + (fixed ? 1 : 0);

  std::vector<Line> all;
  if (fixed) all.push_back(*fixed);
  all.insert(all.end(), free_lines.begin(), free_lines.end());
  std::vector<std::vector<char>> on(all.size(), std::vector<char>(nodes.size(), 0));
  for (std::size_t l = 0; l < all.size(); ++l)
    for (std::size_t j = 0; j < nodes.size(); ++j) on[l][j] = j != node && all[l].contains(nodes[j]);

  std::vector<std::size_t> perm(free_lines.size());
  std::iota(perm.begin(), perm.end(), fixed ? 1 : 0);
  std::vector<std::size_t> best_counts, best_order;
  std::vector<std::size_t> order(total), counts(total);
  std::vector<char> taken(nodes.size());
  do {
    std::size_t pos = 0;
    if (fixed) order[pos++] = 0;
    for (auto p : perm) order[pos++] = p;
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t s = 0; s < total; ++s) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (on[order[s]][j] && !taken[j]) {
          taken[j] = 1;
          ++c;
        }
      }
      counts[s] = c;
    }
    if (best_order.empty() || counts > best_counts) {
      best_counts = counts;
      best_order = order;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  MDSequence out;
  out.node = nodes[node];
  out.counts = best_counts;
  for (auto idx : best_order) out.witness.push_back(all[idx]);
  out.primary_line.assign(nodes.size(), std::nullopt);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == node) continue;
    for (std::size_t s = 0; s < out.witness.size(); ++s) {
      if (out.witness[s].contains(nodes[j])) {
        out.primary_line[j] = s;
        break;
      }
    }
  }
  return out;
}

void require_distinct_lines(const GcAnalysis& gc, std::size_t node) {
  if (node >= gc.nodes().size()) throw Error(ErrorCode::NodeNotInSet, "node index out of range");
  if (gc.has_repeated_factor(node) || gc.used_lines(node).size() != static_cast<std::size_t>(gc.degree()))
    throw Error(ErrorCode::NotFactorable,
                "node " + to_string(gc.nodes()[node]) + " has a repeated line factor; m-d sequence undefined");
}

std::pair<GcAnalysis, std::size_t> analyse_for(const Point& node, const NodeSet& nodes, int n) {
  const auto idx = nodes.index_of(node);
  if (!idx) throw Error(ErrorCode::NodeNotInSet, to_string(node));
  auto gc = is_gc_set(nodes, n);
  if (!gc) throw Error(ErrorCode::NotFactorable, "node set is not a GC set");
  return {std::move(*gc), *idx};
}

}  // namespace

MDSequence md_sequence(const GcAnalysis& gc, std::size_t node) {
  require_distinct_lines(gc, node);
  return maximize_distribution(gc, node, std::nullopt, gc.used_lines(node));
}

MDSequence md_sequence(const Point& node, const NodeSet& nodes, int n) {
  const auto [gc, idx] = analyse_for(node, nodes, n);
  return md_sequence(gc, idx);
}

MDSequence l_tilde_md_sequence(const GcAnalysis& gc, std::size_t node, const Line& first) {
  require_distinct_lines(gc, node);
  if (!gc.uses(node, first)) throw Error(ErrorCode::LineNotUsed, to_string(first));
  std::vector<Line> rest;
  for (const auto& l : gc.used_lines(node))
    if (!(l == first)) rest.push_back(l);
  return maximize_distribution(gc, node, first, std::move(rest));
}

MDSequence l_tilde_md_sequence(const Point& node, const NodeSet& nodes, int n, const Line& first) {
  const auto [gc, idx] = analyse_for(node, nodes, n);
  return l_tilde_md_sequence(gc, idx, first);
}

UsageReport usage_report(const GcAnalysis& gc, const Line& line) {
  UsageReport report{line, k_node_count(gc.nodes(), line), {}};
  for (std::size_t i = 0; i < gc.nodes().size(); ++i)
    if (gc.uses(i, line)) report.users.push_back(gc.nodes()[i]);
  return report;
}

UsageReport usage_report(const Line& line, const NodeSet& nodes, int n) {
  const auto gc = is_gc_set(nodes, n);
  if (!gc) throw Error(ErrorCode::NotGC, "usage report needs a GC set");
  return usage_report(*gc, line);
}

LineProfile line_profile(const Point& b, const NodeSet& nodes, const NodeSet& part) {
  if (!nodes.contains(b)) throw Error(ErrorCode::NodeNotInSet, to_string(b));
  if (part.contains(b)) throw Error(ErrorCode::InvalidArgument, "B must not belong to the counted part");
  for (const auto& p : part)
    if (!nodes.contains(p)) throw Error(ErrorCode::NodeNotInSet, to_string(p));

  std::set<Line> through_b;
  for (const auto& p : nodes)
    if (!(p == b)) through_b.insert(line_through(b, p));

  LineProfile profile;
  for (const auto& l : through_b) {
    const std::size_t k = k_node_count(part, l);
    switch (k) {
      case 0: break;
      case 1: ++profile.m1; break;
      case 2: ++profile.m2; break;
      case 3: ++profile.m3; break;
      default: throw Error(ErrorCode::ProfileOverflow, to_string(l) + " carries " + std::to_string(k) + " nodes");
    }
  }
  return profile;
}

bool gc_remainder_check(const NodeSet& nodes, int n, const Poly& mu) {
  const auto witness = is_maximal_curve(mu, nodes, n);
  if (!witness.is_maximal) throw Error(ErrorCode::NotMaximal, to_string(mu));
  std::vector<Point> rest;
  for (const auto& p : nodes)
    if (!is_zero(evaluate(mu, p))) rest.push_back(p);
  return is_gc_set(NodeSet(std::move(rest)), n - witness.k).has_value();
}

}  // namespace gclab
