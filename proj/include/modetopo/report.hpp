#pragma once

// CSV and SVG renderings of runs.

#include <string>
#include <vector>

#include "modetopo/geometry.hpp"
#include "modetopo/modes.hpp"

namespace modetopo {

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

/// Header `tick,<vertex>...` in canonical vertex order, then one row per
/// sample.
std::string trajectory_csv(const Complex& c, const Trajectory& t);

/// Header `tick,kind,from,to`. Faces are written `{a,b}` in double quotes;
/// an absent face is an empty field. Oracle alarms carry the oracle name in
/// the `to` column.
std::string events_csv(const std::vector<TransitionEvent>& events);

/// Fixed rendering constants.
struct SvgStyle {
  double width = 640.0;
  double height = 640.0;
  double margin = 48.0;
  const char* triangle_fill = "#4a7fc1";
  double triangle_opacity = 0.18;
  const char* edge_stroke = "#34495e";
  const char* vertex_fill = "#2c3e50";
  const char* path_stroke = "#c0392b";
  double marker_radius = 3.5;
  double vertex_radius = 5.0;
};

/// Draws the faces of the complex through `layout` (edges as lines, 2-faces
/// as translucent fills, higher faces through their triangles) and the
/// trajectory as a polyline with one marker per sample.
std::string trace_svg(const Complex& c, const Layout& layout, const Trajectory& t,
                      const SvgStyle& style = {});

}  // namespace modetopo
