#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gclab/geometry.hpp"

namespace gclab {

inline constexpr int kNodeSetFormatVersion = 1;

/// On-disk node set: JSON object
///   {"format": "gclab-nodeset", "version": 1, "n": <int>,
///    "nodes": [["<rational>", "<rational>"], ...], "labels": [...]}
/// where "labels" is optional and, when present, has one string per node.
struct NodeSetFile {
  int version = kNodeSetFormatVersion;
  int n = 0;
  NodeSet nodes;
  std::vector<std::string> labels;
};

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_nodeset(const NodeSetFile& file);
/// Throws ParseError (malformed document, bad rational, duplicate node,
/// label count mismatch, unsupported version).
NodeSetFile parse_nodeset(std::string_view text);

NodeSetFile read_nodeset(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Full analysis pipeline rendered as deterministic JSON text.
std::string analysis_report(const NodeSetFile& file, int n);

struct RenderOptions {
  bool highlight_cubic = false;
  bool labels = false;
};

/// Canvas width/height, node radius and stroke widths, in SVG user units.
inline constexpr double kSvgCanvas = 800.0;
inline constexpr double kSvgNodeRadius = 5.0;
inline constexpr double kSvgMaximalStroke = 1.5;
inline constexpr double kSvgHighlightStroke = 3.0;

/// SVG 1.1 drawing: nodes as circles, maximal lines solid, highlighted cubic
/// lines dashed and thicker, remainder nodes filled differently.
std::string render_svg(const NodeSetFile& file, const RenderOptions& options);

}  // namespace gclab
