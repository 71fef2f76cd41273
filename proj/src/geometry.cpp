#include "modetopo/geometry.hpp"

#include <cmath>
#include <sstream>

namespace modetopo {

BarycentricPoint::BarycentricPoint(ComplexPtr complex, const std::map<Label, double>& weights)
    : complex_(std::move(complex)) {
  if (!complex_) throw ModelError("barycentric point needs a complex");
  double sum = 0.0;
  std::vector<Label> support;
  for (const auto& [label, w] : weights) {
    if (!complex_->has_vertex(label)) {
      throw ModelError("weight on '" + label + "', which is not a vertex of the complex");
    }
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      std::ostringstream msg;
      msg << "weight " << w << " on '" << label << "' is outside [0,1]";
      throw ModelError(msg.str());
    }
    sum += w;
    if (w > 0.0) {
      weights_.emplace(label, w);
      support.push_back(label);
    }
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights sum to " << sum << ", not 1";
    throw ModelError(msg.str());
  }
  Face face(std::move(support));
  if (!complex_->contains(face)) {
    throw ModelError("support " + face.str() + " is not a face of the complex");
  }
}

BarycentricPoint BarycentricPoint::exact(ComplexPtr complex,
                                         const std::map<Label, Rational>& weights) {
  const Rational zero(0), one(1);
  Rational sum(0);
  std::map<Label, double> approx;
  for (const auto& [label, w] : weights) {
    if (w < zero || w > one) throw ModelError("rational weight on '" + label + "' outside [0,1]");
    sum += w;
    approx.emplace(label, boost::rational_cast<double>(w));
  }
  if (sum != one) {
    std::ostringstream msg;
    msg << "rational weights sum to " << sum << ", not exactly 1";
    throw ModelError(msg.str());
  }
  return BarycentricPoint(std::move(complex), approx);
}

BarycentricPoint BarycentricPoint::vertex(ComplexPtr complex, const Label& label) {
  return BarycentricPoint(std::move(complex), {{label, 1.0}});
}

double BarycentricPoint::weight(const Label& label) const {
  auto it = weights_.find(label);
  return it == weights_.end() ? 0.0 : it->second;
}

Face carrier(const BarycentricPoint& p) {
  std::vector<Label> support;
  for (const auto& [label, w] : p.weights()) support.push_back(label);
  return Face(std::move(support));
}

std::optional<Face> active_set(const BarycentricPoint& p, double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw ModelError("activation threshold must lie in [0,1)");
  }
  std::vector<Label> active;
  for (const auto& [label, w] : p.weights()) {
    if (w > threshold) active.push_back(label);
  }
  if (active.empty()) return std::nullopt;
  return Face(std::move(active));
}

std::optional<Face> face_intersection(const Face& x, const Face& z) { return intersect(x, z); }

double mass_outside(const BarycentricPoint& p, const std::optional<Face>& face) {
  if (!face) return 1.0;
  double inside = 0.0;
  for (const auto& label : *face) inside += p.weight(label);
  const double out = 1.0 - inside;
  // Snap rounding residue so that a point on the face reports exactly zero.
  if (carrier(p).is_subset_of(*face)) return 0.0;
  return out < 0.0 ? 0.0 : out;
}

const Vec2& Layout::at(const Label& label) const {
  auto it = positions.find(label);
  if (it == positions.end()) throw ModelError("layout has no position for '" + label + "'");
  return it->second;
}

void Layout::check_total(const Complex& c) const {
  for (const auto& v : c.vertices()) at(v);
}

Vec2 embed(const BarycentricPoint& p, const Layout& layout) {
  Vec2 out;
  for (const auto& [label, w] : p.weights()) {
    const Vec2& pos = layout.at(label);
    out.x += w * pos.x;
    out.y += w * pos.y;
  }
  return out;
}

void Trajectory::append(std::uint64_t tick, BarycentricPoint point) {
  if (!samples_.empty()) {
    if (tick <= samples_.back().tick) {
      throw ModelError("trajectory tick " + std::to_string(tick) +
                       " does not follow tick " + std::to_string(samples_.back().tick));
    }
    const auto& first = samples_.front().point;
    if (first.complex_ptr() != point.complex_ptr() && !(first.complex() == point.complex())) {
      throw ModelError("trajectory samples must share one complex");
    }
  }
  samples_.push_back({tick, std::move(point)});
}

}  // namespace modetopo
