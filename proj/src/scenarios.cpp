#include "modetopo/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace modetopo {

using namespace triage;

void TriagePresets::check() const {
  if (!(concern_level > 0.0)) throw ModelError("concern level must be positive");
  if (!(opportunity_level > 0.0)) throw ModelError("opportunity level must be positive");
  if (total_checks <= 0) throw ModelError("total number of checks must be positive");
  for (const auto* weights : {&concern_weights, &opportunity_weights}) {
    for (const auto& [kind, w] : *weights) {
      if (!(w >= 0.0)) throw ModelError("evidence weight for '" + kind + "' is negative");
    }
  }
}

void RegionParams::check() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ModelError("epsilon must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ModelError("delta must lie in (0,1)");
}

std::string to_string(const TriageCoords& s) {
  std::ostringstream out;
  out.precision(17);
  out << "(x_opp=" << s.x_opp << ", x_con=" << s.x_con << ", x_end=" << s.x_end << ")";
  return out.str();
}

double x_end(double x_begin, double x_con, double x_opp) {
  return std::max({1.0 - x_begin, x_con, x_opp});
}

namespace {

double weighted_score(const std::map<std::string, double>& raw,
                      const std::map<std::string, double>& weights, double level) {
  double sum = 0.0;
  for (const auto& [kind, value] : raw) {
    auto it = weights.find(kind);
    if (it != weights.end()) sum += it->second * value;
  }
  return std::min(1.0, sum / level);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_cube(const TriageCoords& s) {
  for (double v : {s.x_opp, s.x_con, s.x_end}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ModelError("evidence point " + to_string(s) + " lies outside the unit cube");
    }
  }
}

}  // namespace

TriageSignals triage_signals(const std::map<std::string, double>& raw, int checks_done,
                             const TriagePresets& presets) {
  presets.check();
  for (const auto& [kind, value] : raw) {
    if (!(value >= 0.0)) throw ModelError("raw evidence '" + kind + "' is negative");
  }
  if (checks_done < 0 || checks_done > presets.total_checks) {
    throw ModelError("checks done (" + std::to_string(checks_done) + ") outside [0, " +
                     std::to_string(presets.total_checks) + "]");
  }
  TriageSignals s;
  s.x_con = weighted_score(raw, presets.concern_weights, presets.concern_level);
  s.x_opp = weighted_score(raw, presets.opportunity_weights, presets.opportunity_level);
  s.x_begin = static_cast<double>(presets.total_checks - checks_done) / presets.total_checks;
  s.x_end = x_end(s.x_begin, s.x_con, s.x_opp);
  return s;
}

std::vector<Label> TriageRegions::labels() const {
  std::vector<Label> out;
  if (begin) out.push_back(kBegin);
  if (concern) out.push_back(kConcern);
  if (neither) out.push_back(kNeither);
  if (opportunity) out.push_back(kOpportunity);
  return out;
}

bool TriageRegions::contains(const Label& label) const {
  const auto l = labels();
  return std::find(l.begin(), l.end(), label) != l.end();
}

TriageRegions triage_regions(const TriageCoords& s, const RegionParams& params) {
  check_cube(s);
  params.check();
  const double lo = 1.0 - params.epsilon;
  const double hi = 1.0 - params.delta;
  TriageRegions r;
  r.begin = std::max({s.x_opp, s.x_con, s.x_end}) < lo;
  r.concern = s.x_con >= hi;
  r.opportunity = s.x_opp >= hi;
  r.neither = s.x_end >= hi && !r.concern && !r.opportunity;
  return r;
}

const ComplexPtr& triage_tetrahedron() {
  static const ComplexPtr tetra = std::make_shared<const Complex>(
      complex_from_maximal_faces({Face{kBegin, kNeither, kOpportunity, kConcern}}));
  return tetra;
}

BarycentricPoint triage_phi(const TriageCoords& s, const RegionParams& params,
                            const ComplexPtr& complex) {
  const TriageRegions regions = triage_regions(s, params);
  if (regions.empty()) {
    throw ModelError("coverage error: no triage region contains " + to_string(s));
  }
  // Thresholds are computed once so that "ramp > 0" and region membership
  // are decided by the same floating-point comparison.
  const double lo = 1.0 - params.epsilon;
  const double hi = 1.0 - params.delta;
  const bool gated = s.x_con >= hi || s.x_opp >= hi;

  std::map<Label, double> w;
  w[kConcern] = clamp01((s.x_con - hi) / params.delta);
  w[kOpportunity] = clamp01((s.x_opp - hi) / params.delta);
  w[kNeither] = gated ? 0.0 : clamp01((s.x_end - hi) / params.delta);
  w[kBegin] = clamp01((lo - std::max({s.x_opp, s.x_con, s.x_end})) / params.epsilon);

  double total = 0.0;
  for (const auto& [label, v] : w) total += v;
  if (total > 0.0) {
    for (auto& [label, v] : w) v /= total;
  } else {
    // Every ramp vanishes on the surfaces where the governing coordinate sits
    // exactly at its threshold; use the limit from inside the exit regions.
    std::vector<Label> exits;
    for (const auto& l : regions.labels()) {
      if (l != kBegin) exits.push_back(l);
    }
    for (auto& [label, v] : w) v = 0.0;
    for (const auto& l : exits) w[l] = 1.0 / static_cast<double>(exits.size());
  }
  return BarycentricPoint(complex, w);
}

BarycentricPoint triage_phi(const TriageCoords& s, const RegionParams& params) {
  return triage_phi(s, params, triage_tetrahedron());
}

PartitionOfUnity<TriageCoords> triage_partition(const RegionParams& params, ComplexPtr complex) {
  params.check();
  const Face tetra{kBegin, kNeither, kOpportunity, kConcern};
  if (!complex || !complex->contains(tetra)) {
    throw ModelError("triage partition needs a complex containing the triage tetrahedron");
  }
  PartitionOfUnity<TriageCoords> pou;
  pou.complex = complex;
  for (const auto& label : tetra) {
    pou.components.push_back(
        {label,
         [params, label](const TriageCoords& s) {
           return triage_regions(s, params).contains(label);
         },
         [params, label, complex](const TriageCoords& s) {
           return triage_phi(s, params, complex).weight(label);
         }});
  }
  return pou;
}

PartitionOfUnity<VertexScores> score_partition(ComplexPtr complex) {
  if (!complex) throw ModelError("score partition needs a complex");
  PartitionOfUnity<VertexScores> pou;
  pou.complex = complex;
  for (const auto& label : complex->vertices()) {
    pou.components.push_back(
        {label,
         [label](const VertexScores& s) {
           auto it = s.find(label);
           return it != s.end() && it->second > 0.0;
         },
         [label, complex](const VertexScores& s) {
           double total = 0.0;
           for (const auto& [l, v] : s) {
             if (!complex->has_vertex(l)) throw ModelError("score for unknown vertex '" + l + "'");
             if (!(v >= 0.0) || !std::isfinite(v)) {
               throw ModelError("score for '" + l + "' is negative or not finite");
             }
             total += v;
           }
           if (!(total > 0.0)) throw ModelError("all vertex scores are zero");
           auto it = s.find(label);
           return it == s.end() ? 0.0 : it->second / total;
         }});
  }
  return pou;
}

namespace {

ModeSystem make_system(std::vector<Face> maximal, Thresholds thresholds,
                       std::map<Face, ModeInfo> metadata) {
  auto complex = std::make_shared<const Complex>(complex_from_maximal_faces(maximal));
  return ModeSystem(std::move(complex), thresholds, std::move(metadata));
}

}  // namespace

ModeSystem build_emergency_tetrahedron(Thresholds thresholds) {
  const Face all{"warning", "police", "fire", "ambulance"};
  std::map<Face, ModeInfo> meta{
      {all, {"assessment", "gather all available information and assess the response"}},
      {Face{"police", "fire", "ambulance"}, {"full deployment", "deploy all three services"}},
      {Face{"warning"}, {"warning", "notification of a possible incident"}},
      {Face{"police", "ambulance"}, {"police and ambulance", "joint deployment"}},
  };
  return make_system({all}, thresholds, std::move(meta));
}

ModeSystem build_triage_complex(Thresholds thresholds) {
  const Face tetra{kBegin, kNeither, kOpportunity, kConcern};
  const Face investigate{kConcern, kOpportunity, kInvestigation};
  const Face clear{kOpportunity, kClearance, kInvestigation};
  const Face entry{kNormal, kBegin, kNeither};
  std::map<Face, ModeInfo> meta{
      {tetra, {"triage", "classify the person of interest from the evidence"}},
      {investigate, {"consider further investigation", "some concern about security risk"}},
      {clear, {"obtain security clearance", "references from contacts of the subject"}},
      {entry, {"enter or leave triage", "start triage or cancel the investigation"}},
      {Face{kNormal, kNeither}, {"cancel investigation", "delete material as procedures allow"}},
      {Face{kConcern, kOpportunity}, {"triage output", "blend of concern and opportunity"}},
      {Face{kClearance}, {"security clearance", "clearance granted"}},
      {Face{kInvestigation}, {"further investigation", "full investigation opened"}},
  };
  return make_system({tetra, investigate, clear, entry}, thresholds, std::move(meta));
}

std::vector<Face> gsb_prism_faces() {
  const auto v = [](const char* service, const char* level) {
    return std::string(service) + "_" + level;
  };
  const Label pr = v("police", "routine"), fr = v("fire", "routine"), ar = v("ambulance", "routine");
  const Label ps = v("police", "silver"), fs = v("fire", "silver"), as = v("ambulance", "silver");
  // Staircase triangulation along the vertex order police < fire < ambulance.
  return {Face{pr, fr, ar, as}, Face{pr, fr, fs, as}, Face{pr, ps, fs, as}};
}

std::vector<Face> gsb_gold_faces() {
  const Face gold{"gold_police", "gold_fire", "gold_ambulance"};
  std::vector<Face> out;
  for (const char* partner : {"media", "politicians", "local_council"}) {
    auto labels = gold.labels();
    labels.push_back(partner);
    out.emplace_back(std::move(labels));
  }
  out.push_back(Face{"gold_police", "military"});
  return out;
}

ModeSystem build_gsb_complex(Thresholds thresholds) {
  auto maximal = gsb_prism_faces();
  for (auto& f : gsb_gold_faces()) maximal.push_back(std::move(f));
  std::map<Face, ModeInfo> meta{
      {Face{"police_routine", "fire_routine", "ambulance_routine"},
       {"routine command", "usual police-fire-ambulance structure"}},
      {Face{"police_silver", "fire_silver", "ambulance_silver"},
       {"silver command", "operational command after a major incident is declared"}},
      {Face{"gold_police", "gold_fire", "gold_ambulance"},
       {"gold command", "strategy, resources and liaison for the combined operation"}},
  };
  return make_system(std::move(maximal), thresholds, std::move(meta));
}

ModeSystem build_trigger_line(Thresholds thresholds) {
  const Face line{"monitor", "intervene"};
  std::map<Face, ModeInfo> meta{
      {line, {"decide", "decision to intervene unfolds from monitoring data"}},
      {Face{"monitor"}, {"monitor", "judge the attribute from environment data"}},
      {Face{"intervene"}, {"intervene", "perform the intervention"}},
  };
  return make_system({line}, thresholds, std::move(meta));
}

}  // namespace modetopo
