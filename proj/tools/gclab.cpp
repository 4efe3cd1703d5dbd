#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gclab/conjecture_lab.hpp"
#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/interpolation.hpp"
#include "gclab/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using namespace gclab;

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text(out, text);
}

int construct(const std::string& family, std::optional<int> n, std::uint64_t seed, const std::string& out) {
  NodeSetFile file;
  if (family == "chung-yao") {
    file.n = n.value_or(6);
    if (file.n < 1) throw Error(ErrorCode::OutOfRange, "chung-yao needs --n >= 1");
    file.nodes = chung_yao(random_general_lines(static_cast<std::size_t>(file.n) + 2, seed));
  } else if (family == "principal") {
    file.n = n.value_or(6);
    file.nodes = principal_lattice(file.n);
  } else if (family == "carnicer-gasca-3") {
    if (n && *n != 3) throw Error(ErrorCode::InvalidArgument, "carnicer-gasca-3 has n = 3");
    file.n = 3;
    file.nodes = carnicer_gasca_3(seed);
  } else if (family == "gc6-cubic") {
    if (n && *n != 6) throw Error(ErrorCode::InvalidArgument, "gc6-cubic has n = 6");
    file.n = 6;
    const auto dec = gc6_with_maximal_cubic(seed);
    file.nodes = dec.nodes;
    std::size_t a = 0, b = 0;
    for (const auto& p : dec.nodes)
      file.labels.push_back(dec.cubic_part.contains(p) ? "A" + std::to_string(a++) : "B" + std::to_string(b++));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
  }
  emit(serialize_nodeset(file), out);
  const auto maximal = is_n_independent(file.nodes, file.n) ? maximal_lines(file.nodes, file.n).size() : 0;
  (out.empty() ? std::cerr : std::cout) << "nodes: " << file.nodes.size() << "\nmaximal lines: " << maximal
                                        << "\n";
  return kExitOk;
}

int verify(const std::string& suite, std::uint64_t seed, std::size_t trials, const std::string& out) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites.push_back(suite);

  nlohmann::json doc = nlohmann::json::array();
  bool all_passed = true;
  for (const auto& name : suites) {
    for (const auto& r : run_suite(name, seed, trials)) {
      std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << name << '\t' << r.name << '\t' << r.detail << '\n';
      doc.push_back({{"suite", name}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      all_passed = all_passed && r.passed;
    }
  }
  if (!out.empty()) write_text(out, doc.dump(2) + "\n");
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OutOfRange:
      return kExitUsage;
    default:
      return kExitVerifyFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for GC node sets"};
  app.require_subcommand(1);

  std::string family, in_path, out_path, suite;
  std::optional<int> n;
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  bool highlight_cubic = false, labels = false;

  auto* construct_cmd = app.add_subcommand("construct", "Write a node set of a given family");
  construct_cmd->add_option("family", family, "chung-yao | principal | carnicer-gasca-3 | gc6-cubic")->required();
  construct_cmd->add_option("--n", n, "Degree (default 6 for chung-yao and principal)");
  construct_cmd->add_option("--seed", seed, "Seed for randomized families")->capture_default_str();
  construct_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report of a node-set file as JSON");
  analyze_cmd->add_option("file", in_path, "Node-set file")->required();
  analyze_cmd->add_option("--n", n, "Degree (defaults to the file's n)");
  analyze_cmd->add_option("--out", out_path, "Report file (stdout if omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "catalog | usage | maxmax | ban | m-search | dependence | all")->required();
  verify_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--trials", trials, "Trials for m-search")->capture_default_str();
  verify_cmd->add_option("--out", out_path, "Also write results as JSON");

  auto* render_cmd = app.add_subcommand(
      "render", "Draw a node set as SVG 1.1. Canvas " + std::to_string(static_cast<int>(kSvgCanvas)) +
                    " units square over the node bounding box padded by 10%; node radius " +
                    std::to_string(static_cast<int>(kSvgNodeRadius)) + "; maximal lines solid, stroke 1.5; " +
                    "highlighted cubic lines dashed, stroke 3; remainder nodes filled blue.");
  render_cmd->add_option("file", in_path, "Node-set file")->required();
  render_cmd->add_option("--out", out_path, "SVG file (stdout if omitted)");
  render_cmd->add_flag("--highlight-cubic", highlight_cubic,
                       "Emphasize the first three maximal lines when they form a maximal cubic");
  render_cmd->add_flag("--labels", labels, "Label nodes (file labels, else indices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return construct(family, n, seed, out_path);
    if (*analyze_cmd) {
      const auto file = read_nodeset(in_path);
      emit(analysis_report(file, n.value_or(file.n)), out_path);
      return kExitOk;
    }
    if (*verify_cmd) return verify(suite, seed, trials, out_path);
    if (*render_cmd) {
      const auto file = read_nodeset(in_path);
      emit(render_svg(file, {highlight_cubic, labels}), out_path);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "gclab: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "gclab: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
