#pragma once

// Bundled scenarios: the triage evidence pipeline and its partition of unity,
// the emergency tetrahedron, the trigger line and the gold-silver-bronze
// command complexes.

#include <map>
#include <string>
#include <vector>

#include "modetopo/belief.hpp"
#include "modetopo/modes.hpp"

namespace modetopo {

namespace triage {

inline const Label kBegin = "begin";
inline const Label kNeither = "neither";
inline const Label kConcern = "concern";
inline const Label kOpportunity = "opportunity";
inline const Label kNormal = "normal";
inline const Label kClearance = "clearance";
inline const Label kInvestigation = "investigation";

}  // namespace triage

struct TriageSignals {
  double x_begin = 1.0;
  double x_con = 0.0;
  double x_opp = 0.0;
  double x_end = 0.0;
};

struct TriagePresets {
  std::map<std::string, double> concern_weights;
  double concern_level = 1.0;
  std::map<std::string, double> opportunity_weights;
  double opportunity_level = 1.0;
  int total_checks = 1;

  void check() const;
};

/// Begin-region margin epsilon and exit-neighbourhood width delta. The begin
/// region is [0, 1-epsilon)^3; exit regions start at 1-delta. Regions cover
/// the cube whenever delta >= epsilon, and overlap (so the partition of unity
/// can blend continuously out of `begin`) when delta > epsilon.
struct RegionParams {
  double epsilon = 0.2;
  double delta = 0.3;

  void check() const;
};

/// A point (x_opp, x_con, x_end) of the evidence cube.
struct TriageCoords {
  double x_opp = 0.0;
  double x_con = 0.0;
  double x_end = 0.0;
};

std::string to_string(const TriageCoords& s);

double x_end(double x_begin, double x_con, double x_opp);

/// Converts raw evidence scores into the triage signals. Evidence kinds with
/// no weight contribute nothing.
TriageSignals triage_signals(const std::map<std::string, double>& raw, int checks_done,
                             const TriagePresets& presets);

inline TriageCoords coords(const TriageSignals& s) { return {s.x_opp, s.x_con, s.x_end}; }

struct TriageRegions {
  bool begin = false;
  bool neither = false;
  bool concern = false;
  bool opportunity = false;

  bool empty() const { return !(begin || neither || concern || opportunity); }
  /// Member labels in canonical order.
  std::vector<Label> labels() const;
  bool contains(const Label& label) const;
  friend bool operator==(const TriageRegions&, const TriageRegions&) = default;
};

TriageRegions triage_regions(const TriageCoords& s, const RegionParams& params);

/// Maps an evidence point to the triage tetrahedron {begin, neither, concern,
/// opportunity} by normalised linear ramps, one per region, with `neither`
/// gated off inside the concern and opportunity neighbourhoods. On the
/// boundary surfaces where every ramp vanishes, the point is spread evenly
/// over the exit regions containing it. Throws ModelError (coverage) when no
/// region contains the point.
BarycentricPoint triage_phi(const TriageCoords& s, const RegionParams& params,
                            const ComplexPtr& complex);

/// Same, on the bare triage tetrahedron.
BarycentricPoint triage_phi(const TriageCoords& s, const RegionParams& params = {});

/// The triage tetrahedron closure.
const ComplexPtr& triage_tetrahedron();

/// triage_phi packaged as a partition of unity over the cube, with
/// triage_regions as the cover. `complex` must contain the tetrahedron.
PartitionOfUnity<TriageCoords> triage_partition(const RegionParams& params,
                                                ComplexPtr complex = triage_tetrahedron());

/// Non-negative per-vertex scores normalised to a belief point. A vertex's
/// cover set is the set of score maps giving it a positive score, so the
/// point's support is the set of scored vertices and must be a face.
using VertexScores = std::map<Label, double>;
PartitionOfUnity<VertexScores> score_partition(ComplexPtr complex);

/// Closure of the 3-face {warning, police, fire, ambulance}.
ModeSystem build_emergency_tetrahedron(Thresholds thresholds = {});

/// The initial-assessment complex: the triage tetrahedron, the two outcome
/// triangles sharing the {opportunity, investigation} edge and the
/// {normal, begin, neither} entry triangle.
ModeSystem build_triage_complex(Thresholds thresholds = {});

/// Vertex labels of the command prism: `<service>_<level>` for services
/// police, fire, ambulance and levels routine, silver.
std::vector<Face> gsb_prism_faces();
std::vector<Face> gsb_gold_faces();

/// Triangle x interval prism, triangulated into three tetrahedra, together
/// with the gold-command component.
ModeSystem build_gsb_complex(Thresholds thresholds = {});

/// Trigger line: monitor and intervene joined by one edge.
ModeSystem build_trigger_line(Thresholds thresholds = {});

}  // namespace modetopo
