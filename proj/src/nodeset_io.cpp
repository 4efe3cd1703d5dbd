#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gclab/error.hpp"
#include "gclab/io.hpp"

namespace gclab {

namespace {

constexpr const char* kFormatTag = "gclab-nodeset";

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

std::string serialize_nodeset(const NodeSetFile& file) {
  nlohmann::json doc;
  doc["format"] = kFormatTag;
  doc["version"] = file.version;
  doc["n"] = file.n;
  doc["nodes"] = nlohmann::json::array();
  for (const auto& p : file.nodes) doc["nodes"].push_back({to_string(p.x), to_string(p.y)});
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc.dump(2) + "\n";
}

NodeSetFile parse_nodeset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("format") || doc["format"] != kFormatTag) fail("missing or wrong \"format\" tag");
  if (!doc.contains("version") || !doc["version"].is_number_integer()) fail("missing integer \"version\"");
  if (doc["version"].get<int>() != kNodeSetFormatVersion)
    fail("unsupported version " + std::to_string(doc["version"].get<int>()));
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 0)
    fail("\"n\" must be a nonnegative integer");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) fail("\"nodes\" must be an array");

  NodeSetFile file;
  file.n = doc["n"].get<int>();
  std::vector<Point> points;
  for (const auto& entry : doc["nodes"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string())
      fail("each node must be a pair of rational strings");
    points.push_back({parse_rational(entry[0].get<std::string>()), parse_rational(entry[1].get<std::string>())});
  }
  try {
    file.nodes = NodeSet(std::move(points));
  } catch (const Error& e) {
    fail(e.what());
  }
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != file.nodes.size()) fail("\"labels\" must have one entry per node");
    for (const auto& l : labels) {
      if (!l.is_string()) fail("labels must be strings");
      file.labels.push_back(l.get<std::string>());
    }
  }
  return file;
}

NodeSetFile read_nodeset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_nodeset(text.str());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path.string());
}

}  // namespace gclab
