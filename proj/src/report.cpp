#include "modetopo/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>

namespace modetopo {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Complex& c, const Trajectory& t) {
  std::string out = "tick";
  for (const auto& v : c.vertices()) out += "," + v;
  out += '\n';
  for (const auto& s : t.samples()) {
    out += std::to_string(s.tick);
    for (const auto& v : c.vertices()) out += "," + format_number(s.point.weight(v));
    out += '\n';
  }
  return out;
}

namespace {

std::string face_field(const std::optional<Face>& f) {
  return f ? "\"" + f->str() + "\"" : std::string{};
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Affine map from layout coordinates to the canvas, y pointing up.
struct Viewport {
  double min_x = 0, min_y = 0, scale = 1, off_x = 0, off_y = 0, height = 0;

  Viewport(const Layout& layout, const SvgStyle& style) : height(style.height) {
    if (layout.positions.empty()) return;
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = max_x;
    min_x = min_y = std::numeric_limits<double>::infinity();
    for (const auto& [label, p] : layout.positions) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double inner_w = style.width - 2 * style.margin;
    const double inner_h = style.height - 2 * style.margin;
    scale = std::min(inner_w / span_x, inner_h / span_y);
    off_x = style.margin + (inner_w - scale * span_x) / 2;
    off_y = style.margin + (inner_h - scale * span_y) / 2;
  }

  Vec2 operator()(const Vec2& p) const {
    return {off_x + (p.x - min_x) * scale, height - (off_y + (p.y - min_y) * scale)};
  }
};

}  // namespace

std::string events_csv(const std::vector<TransitionEvent>& events) {
  std::string out = "tick,kind,from,to\n";
  for (const auto& e : events) {
    out += std::to_string(e.tick) + "," + to_string(e.kind) + "," + face_field(e.from) + ",";
    out += e.kind == EventKind::oracle_alarm ? e.detail : face_field(e.to);
    out += '\n';
  }
  return out;
}

std::string trace_svg(const Complex& c, const Layout& layout, const Trajectory& t,
                      const SvgStyle& style) {
  layout.check_total(c);
  const Viewport view(layout, style);
  const auto at = [&](const Label& l) { return view(layout.at(l)); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(style.width)
      << "\" height=\"" << coord(style.height) << "\" viewBox=\"0 0 " << coord(style.width) << ' '
      << coord(style.height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  svg << "  <g id=\"triangles\" fill=\"" << style.triangle_fill << "\" fill-opacity=\""
      << style.triangle_opacity << "\" stroke=\"none\">\n";
  for (const auto& f : c.faces()) {
    if (f.dimension() != 2) continue;
    svg << "    <polygon data-face=\"" << escape_xml(f.str()) << "\" points=\"";
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vec2 p = at(f.labels()[i]);
      svg << (i ? " " : "") << coord(p.x) << ',' << coord(p.y);
    }
    svg << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"edges\" stroke=\"" << style.edge_stroke << "\" stroke-width=\"1.5\">\n";
  for (const auto& f : c.faces()) {
    if (f.dimension() != 1) continue;
    const Vec2 a = at(f.labels()[0]);
    const Vec2 b = at(f.labels()[1]);
    svg << "    <line data-face=\"" << escape_xml(f.str()) << "\" x1=\"" << coord(a.x)
        << "\" y1=\"" << coord(a.y) << "\" x2=\"" << coord(b.x) << "\" y2=\"" << coord(b.y)
        << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"vertices\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& v : c.vertices()) {
    const Vec2 p = at(v);
    svg << "    <circle cx=\"" << coord(p.x) << "\" cy=\"" << coord(p.y) << "\" r=\""
        << coord(style.vertex_radius) << "\" fill=\"" << style.vertex_fill << "\"/>\n"
        << "    <text x=\"" << coord(p.x + 8) << "\" y=\"" << coord(p.y - 8) << "\">"
        << escape_xml(v) << "</text>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"trajectory\">\n";
  if (!t.empty()) {
    svg << "    <polyline fill=\"none\" stroke=\"" << style.path_stroke
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& s : t.samples()) {
      const Vec2 p = view(embed(s.point, layout));
      svg << (first ? "" : " ") << coord(p.x) << ',' << coord(p.y);
      first = false;
    }
    svg << "\"/>\n";
    for (const auto& s : t.samples()) {
      const Vec2 p = view(embed(s.point, layout));
      svg << "    <circle data-tick=\"" << s.tick << "\" cx=\"" << coord(p.x) << "\" cy=\""
          << coord(p.y) << "\" r=\"" << coord(style.marker_radius) << "\" fill=\""
          << style.path_stroke << "\"/>\n";
    }
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace modetopo
