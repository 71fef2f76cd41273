#pragma once

// Barycentric belief points on the realisation of a complex, trajectories
// and planar layouts for rendering.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "modetopo/simplicial.hpp"

namespace modetopo {

/// Tolerance on the weight sum of a barycentric point.
inline constexpr double kWeightSumTolerance = 1e-9;

using ComplexPtr = std::shared_ptr<const Complex>;
using Rational = boost::rational<std::int64_t>;

/// A point sum_a w_a e_a of the standard realisation. Weights are in [0,1],
/// sum to one within kWeightSumTolerance, and their support is a face.
class BarycentricPoint {
 public:
  /// Zero weights may be listed; they are dropped.
  BarycentricPoint(ComplexPtr complex, const std::map<Label, double>& weights);

  /// Exact mode: the rational weights must sum to exactly one.
  static BarycentricPoint exact(ComplexPtr complex, const std::map<Label, Rational>& weights);

  /// Point sitting on a single vertex.
  static BarycentricPoint vertex(ComplexPtr complex, const Label& label);

  const Complex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }

  /// Positive weights only, keyed by label.
  const std::map<Label, double>& weights() const { return weights_; }
  double weight(const Label& label) const;

  friend bool operator==(const BarycentricPoint& a, const BarycentricPoint& b) {
    return a.weights_ == b.weights_ && *a.complex_ == *b.complex_;
  }

 private:
  ComplexPtr complex_;
  std::map<Label, double> weights_;
};

/// Support of the point: the smallest face whose simplex contains it.
Face carrier(const BarycentricPoint& p);

/// Vertices with weight strictly above `threshold`; a face (or nothing)
/// because it is a subset of the carrier. Throws for thresholds outside [0,1).
std::optional<Face> active_set(const BarycentricPoint& p, double threshold);

/// The shared face of two simplices, or nothing when they are disjoint.
std::optional<Face> face_intersection(const Face& x, const Face& z);

/// Weight not carried by the vertices of `face`; 1 when `face` is empty.
double mass_outside(const BarycentricPoint& p, const std::optional<Face>& face);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Layout {
  std::map<Label, Vec2> positions;

  const Vec2& at(const Label& label) const;
  /// Throws ModelError naming the first vertex of `c` without a position.
  void check_total(const Complex& c) const;
};

/// Convex combination of the carrier's layout positions.
Vec2 embed(const BarycentricPoint& p, const Layout& layout);

/// A sequence of belief points at strictly increasing integer ticks, all on
/// the same complex.
class Trajectory {
 public:
  struct Sample {
    std::uint64_t tick;
    BarycentricPoint point;
  };

  void append(std::uint64_t tick, BarycentricPoint point);

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

 private:
  std::vector<Sample> samples_;
};

}  // namespace modetopo
