#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gclab/constructions.hpp"
#include "gclab/interpolation.hpp"
#include "gclab/io.hpp"

namespace gclab {

namespace {

struct Box {
  double x0, x1, y0, y1;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Box padded_box(const NodeSet& nodes) {
  Box b{0, 1, 0, 1};
  if (!nodes.empty()) {
    b = {nodes[0].x.get_d(), nodes[0].x.get_d(), nodes[0].y.get_d(), nodes[0].y.get_d()};
    for (const auto& p : nodes) {
      b.x0 = std::min(b.x0, p.x.get_d());
      b.x1 = std::max(b.x1, p.x.get_d());
      b.y0 = std::min(b.y0, p.y.get_d());
      b.y1 = std::max(b.y1, p.y.get_d());
    }
  }
  // Keep a nondegenerate, square extent so one scale serves both axes.
  const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1.0});
  const double cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2;
  const double half = span * 0.6;  // half-span plus 10% padding
  return {cx - half, cx + half, cy - half, cy + half};
}

// Segment of a*x + b*y + c = 0 inside the box, or nothing.
std::optional<std::array<double, 4>> clip(const Line& l, const Box& box) {
  const double a = l.a().get_d(), b = l.b().get_d(), c = l.c().get_d();
  std::vector<std::pair<double, double>> hits;
  if (b != 0) {
    for (double x : {box.x0, box.x1}) {
      const double y = -(a * x + c) / b;
      if (y >= box.y0 - 1e-9 && y <= box.y1 + 1e-9) hits.emplace_back(x, y);
    }
  }
  if (a != 0) {
    for (double y : {box.y0, box.y1}) {
      const double x = -(b * y + c) / a;
      if (x >= box.x0 - 1e-9 && x <= box.x1 + 1e-9) hits.emplace_back(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<double, 4>{hits.front().first, hits.front().second, hits.back().first, hits.back().second};
}

}  // namespace

std::string render_svg(const NodeSetFile& file, const RenderOptions& options) {
  const NodeSet& nodes = file.nodes;
  const Box box = padded_box(nodes);
  const double scale = kSvgCanvas / (box.x1 - box.x0);
  const auto sx = [&](double x) { return (x - box.x0) * scale; };
  const auto sy = [&](double y) { return (box.y1 - y) * scale; };

  std::vector<Line> maximal;
  if (is_n_independent(nodes, file.n)) maximal = maximal_lines(nodes, file.n);

  std::vector<Line> cubic;
  if (options.highlight_cubic && maximal.size() >= 3 && file.n >= 3) {
    std::vector<Line> candidate(maximal.begin(), maximal.begin() + 3);
    if (split_by_lines(nodes, candidate).first.size() == maximal_curve_size(file.n, 3)) cubic = candidate;
  }
  const auto on_cubic = [&](const Point& p) {
    return std::any_of(cubic.begin(), cubic.end(), [&](const Line& l) { return l.contains(p); });
  };

  std::ostringstream svg;
  const std::string size = fmt(kSvgCanvas);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

  for (const auto& l : maximal) {
    const bool highlighted = std::find(cubic.begin(), cubic.end(), l) != cubic.end();
    const auto seg = clip(l, box);
    if (!seg) continue;
    svg << "  <line class=\"" << (highlighted ? "cubic" : "maximal") << "\" x1=\"" << fmt(sx((*seg)[0]))
        << "\" y1=\"" << fmt(sy((*seg)[1])) << "\" x2=\"" << fmt(sx((*seg)[2])) << "\" y2=\"" << fmt(sy((*seg)[3]))
        << "\" stroke=\"" << (highlighted ? "crimson" : "black") << "\" stroke-width=\""
        << fmt(highlighted ? kSvgHighlightStroke : kSvgMaximalStroke) << '"'
        << (highlighted ? " stroke-dasharray=\"8 4\"" : "") << "/>\n";
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Point& p = nodes[i];
    const bool remainder = !cubic.empty() && !on_cubic(p);
    svg << "  <circle class=\"" << (remainder ? "remainder" : "node") << "\" cx=\"" << fmt(sx(p.x.get_d()))
        << "\" cy=\"" << fmt(sy(p.y.get_d())) << "\" r=\"" << fmt(kSvgNodeRadius) << "\" fill=\""
        << (remainder ? "steelblue" : "black") << "\"/>\n";
    if (options.labels) {
      const std::string text = file.labels.empty() ? std::to_string(i) : file.labels[i];
      std::string escaped;
      for (char ch : text) {
        switch (ch) {
          case '<': escaped += "&lt;"; break;
          case '>': escaped += "&gt;"; break;
          case '&': escaped += "&amp;"; break;
          case '"': escaped += "&quot;"; break;
          default: escaped += ch;
        }
      }
      svg << "  <text x=\"" << fmt(sx(p.x.get_d()) + kSvgNodeRadius + 2) << "\" y=\""
          << fmt(sy(p.y.get_d()) - kSvgNodeRadius - 2) << "\" font-size=\"12\">" << escaped << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gclab
