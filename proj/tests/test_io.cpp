#include <doctest.h>

#include <filesystem>
#include <regex>

#include <json.hpp>

#include "gclab/constructions.hpp"
#include "gclab/error.hpp"
#include "gclab/io.hpp"

using namespace gclab;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

ErrorCode parse_code(const std::string& text) {
  try {
    parse_nodeset(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;  // sentinel: no error
}

// Every opening tag is closed or self-closing, and nesting is proper.
bool balanced_xml(const std::string& text) {
  std::vector<std::string> stack;
  const std::regex tag("<(/?)([a-zA-Z]+)[^>]*?(/?)>");
  for (std::sregex_iterator it(text.begin(), text.end(), tag), end; it != end; ++it) {
    const auto& m = *it;
    if (m[1].length() > 0) {
      if (stack.empty() || stack.back() != m[2].str()) return false;
      stack.pop_back();
    } else if (m[3].length() == 0) {
      stack.push_back(m[2].str());
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("node-set files round-trip") {
  for (const auto& inst : bundled_constructions(1)) {
    NodeSetFile file{kNodeSetFormatVersion, inst.n, inst.nodes, {}};
    const std::string text = serialize_nodeset(file);
    const auto back = parse_nodeset(text);
    CHECK(back.n == inst.n);
    CHECK(back.nodes == inst.nodes);
    CHECK(serialize_nodeset(back) == text);
  }
  NodeSetFile labelled{kNodeSetFormatVersion, 1, NodeSet({{0, 0}, {make_rational(1, 3), 0}}), {"A", "B"}};
  const auto back = parse_nodeset(serialize_nodeset(labelled));
  CHECK(back.labels == labelled.labels);
  CHECK(serialize_nodeset(labelled).find("\"1/3\"") != std::string::npos);
}

TEST_CASE("parsing canonicalizes and rejects malformed input") {
  const auto f = parse_nodeset(R"({"format":"gclab-nodeset","version":1,"n":1,"nodes":[["2/4","-3"]]})");
  CHECK(f.nodes[0].x == make_rational(1, 2));
  const std::string head = R"({"format":"gclab-nodeset","version":1,"n":1,)";
  CHECK(parse_code("{") == ErrorCode::ParseError);
  CHECK(parse_code("[]") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"format":"other","version":1,"n":1,"nodes":[]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"format":"gclab-nodeset","version":2,"n":1,"nodes":[]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"format":"gclab-nodeset","version":1,"n":-1,"nodes":[]})") == ErrorCode::ParseError);
  CHECK(parse_code(head + R"("nodes":[["1.5","0"]]})") == ErrorCode::ParseError);
  CHECK(parse_code(head + R"("nodes":[[1,0]]})") == ErrorCode::ParseError);
  CHECK(parse_code(head + R"("nodes":[["1","0"],["2/2","0"]]})") == ErrorCode::ParseError);
  CHECK(parse_code(head + R"("nodes":[["1","0"]],"labels":["a","b"]})") == ErrorCode::ParseError);
  CHECK(parse_code(head + R"("nodes":[["1","0","2"]]})") == ErrorCode::ParseError);
  CHECK_THROWS_AS(read_nodeset("/nonexistent/file.json"), Error);
}

TEST_CASE("files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "gclab_io_test.json";
  NodeSetFile file{kNodeSetFormatVersion, 3, principal_lattice(3), {}};
  write_text(path, serialize_nodeset(file));
  CHECK(read_nodeset(path).nodes == file.nodes);
  std::filesystem::remove(path);
}

TEST_CASE("analysis report") {
  NodeSetFile lattice{kNodeSetFormatVersion, 3, principal_lattice(3), {}};
  const std::string text = analysis_report(lattice, 3);
  CHECK(text == analysis_report(lattice, 3));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["gc"] == true);
  CHECK(doc["correctness"]["correct"] == true);
  CHECK(doc["maximal_lines"].size() == 3);
  CHECK(doc["nodes"].size() == 10);
  CHECK(doc["nodes"][0]["md_sequence"]["counts"] == nlohmann::json::array({4, 3, 2}));
  CHECK(doc["gm_witness"] == nlohmann::json::array({"0", "1", "0"}));

  NodeSetFile collinear{kNodeSetFormatVersion, 6, {}, {}};
  std::vector<Point> pts;
  for (long i = 0; i < 8; ++i) pts.push_back({make_rational(i), make_rational(2 * i)});
  collinear.nodes = NodeSet(pts);
  const auto dep = nlohmann::json::parse(analysis_report(collinear, 6));
  CHECK(dep["correctness"]["independent"] == false);
  CHECK(dep["gc"] == false);
  CHECK(dep["dependence"]["reasons"][0]["reason"] == "Collinear");
}

TEST_CASE("SVG rendering") {
  NodeSetFile lattice{kNodeSetFormatVersion, 3, principal_lattice(3), {}};
  const std::string svg = render_svg(lattice, {});
  CHECK(svg == render_svg(lattice, {}));
  CHECK(count(svg, "<circle") == 10);
  CHECK(count(svg, "class=\"maximal\"") == 3);
  CHECK(balanced_xml(svg));

  NodeSetFile cy{kNodeSetFormatVersion, 6, chung_yao(random_general_lines(8, 1)), {}};
  const std::string cy_svg = render_svg(cy, {false, true});
  CHECK(count(cy_svg, "<circle") == 28);
  CHECK(count(cy_svg, "class=\"maximal\"") == 8);
  CHECK(count(cy_svg, "<text") == 28);
  CHECK(balanced_xml(cy_svg));

  NodeSetFile cubic{kNodeSetFormatVersion, 6, gc6_with_maximal_cubic(1).nodes, {}};
  const std::string hi = render_svg(cubic, {true, false});
  CHECK(count(hi, "class=\"cubic\"") == 3);
  CHECK(count(hi, "class=\"maximal\"") == 5);
  CHECK(count(hi, "class=\"remainder\"") == 10);
  CHECK(balanced_xml(hi));
}
