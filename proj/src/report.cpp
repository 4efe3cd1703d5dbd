#include <json.hpp>

#include "gclab/conjecture_lab.hpp"
#include "gclab/error.hpp"
#include "gclab/gc_analysis.hpp"
#include "gclab/interpolation.hpp"
#include "gclab/io.hpp"

namespace gclab {

namespace {

using nlohmann::json;

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }
json line_json(const Line& l) { return json::array({to_string(l.a()), to_string(l.b()), to_string(l.c())}); }

json lines_json(const std::vector<Line>& lines) {
  json out = json::array();
  for (const auto& l : lines) out.push_back(line_json(l));
  return out;
}

json node_json(const GcAnalysis& gc, std::size_t i) {
  json node;
  node["index"] = i;
  node["point"] = point_json(gc.nodes()[i]);
  const auto& product = gc.factorization(i).product;
  node["factorization"] = {{"scale", to_string(product.scale)}, {"lines", lines_json(product.lines)}};
  node["used_lines"] = lines_json(gc.used_lines(i));
  try {
    const auto md = md_sequence(gc, i);
    node["md_sequence"] = {{"counts", md.counts}, {"witness", lines_json(md.witness)}};
  } catch (const Error& e) {
    node["md_sequence"] = {{"error", e.what()}};
  }
  return node;
}

}  // namespace

std::string analysis_report(const NodeSetFile& file, int n) {
  const NodeSet& nodes = file.nodes;
  json report;
  report["n"] = n;
  report["node_count"] = nodes.size();
  report["expected_count"] = dim_pi(n);
  report["size_matches"] = nodes.size() == dim_pi(n);

  const auto correctness = is_n_correct(nodes, n);
  report["correctness"] = {{"rank", correctness.rank},
                           {"correct", correctness.correct},
                           {"independent", correctness.independent},
                           {"essentially_dependent", correctness.essentially_dependent}};

  report["maximal_lines"] = correctness.independent ? lines_json(maximal_lines(nodes, n)) : json::array();

  if (!correctness.independent && nodes.size() <= 3 * static_cast<std::size_t>(n)) {
    const auto dep = classify_dependence(nodes, n);
    json reasons = json::array();
    for (const auto& w : dep.reasons)
      reasons.push_back({{"reason", to_string(w.reason)}, {"curve", to_string(w.curve)}, {"nodes_on", w.nodes_on}});
    report["dependence"] = {{"dependent", dep.dependent}, {"rank_dependent", dep.rank_dependent},
                            {"reasons", reasons}};
  }

  const auto gc = correctness.correct ? is_gc_set(nodes, n) : std::nullopt;
  report["gc"] = gc.has_value();
  if (gc) {
    json per_node = json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i) per_node.push_back(node_json(*gc, i));
    report["nodes"] = per_node;
    const auto witness = gm_witness(*gc);
    report["gm_witness"] = witness ? line_json(*witness) : json(nullptr);
    const auto table = check_usage_table(*gc);
    json classes = json::array();
    for (const auto& cls : table.classes)
      classes.push_back({{"k", cls.k}, {"lines", cls.lines}, {"max_users", cls.max_users}});
    report["usage_table"] = {{"classes", classes}, {"two_node_violations", table.two_node_violations}};
  }
  return report.dump(2) + "\n";
}

}  // namespace gclab
