#pragma once

// Generalised belief functions, mass functions and partitions of unity.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "modetopo/geometry.hpp"
#include "modetopo/simplicial.hpp"

namespace modetopo {

/// Largest frame accepted by validate_belief (4^12 pair checks).
inline constexpr std::size_t kMaxValidatedFrame = 12;
/// Largest frame a belief or mass function may be declared on.
inline constexpr std::size_t kMaxFrame = 24;

/// Finite set of statements. Subsets are encoded as bit masks over the
/// sorted labels; externally they are canonical sorted label lists.
class Frame {
 public:
  using Subset = std::uint32_t;

  explicit Frame(std::vector<Label> labels);

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  Subset full() const { return static_cast<Subset>((std::uint64_t{1} << labels_.size()) - 1); }

  /// Throws ModelError for labels outside the frame.
  Subset subset(const std::vector<Label>& labels) const;
  std::vector<Label> labels_of(Subset s) const;
  std::string str(Subset s) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<Label> labels_;
};

/// Bel: P(X) -> [0,1]. Entries may be missing; validate_belief rejects that.
class BeliefFunction {
 public:
  BeliefFunction(Frame frame, const std::vector<std::pair<std::vector<Label>, double>>& values);
  BeliefFunction(Frame frame, std::map<Frame::Subset, double> values);

  const Frame& frame() const { return frame_; }
  const std::map<Frame::Subset, double>& values() const { return values_; }
  std::optional<double> value(Frame::Subset s) const;
  std::optional<double> value(const std::vector<Label>& labels) const;

 private:
  Frame frame_;
  std::map<Frame::Subset, double> values_;
};

struct BeliefReport {
  bool valid = false;
  bool empty_set_zero = false;
  /// Unordered pairs (Y, Z) with Bel(Y u Z) + Bel(Y n Z) < Bel(Y) + Bel(Z).
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> violations;
};

/// Exhaustive super-additivity check over all pairs of subsets. Throws
/// ModelError when a subset has no value or the frame exceeds
/// kMaxValidatedFrame.
BeliefReport validate_belief(const BeliefFunction& b);

/// Bel(X) == 1 within kWeightSumTolerance.
bool is_normalised(const BeliefFunction& b);

/// Non-negative masses on non-empty subsets with total at most one.
class MassFunction {
 public:
  MassFunction(Frame frame, const std::vector<std::pair<std::vector<Label>, double>>& masses);
  MassFunction(Frame frame, std::map<Frame::Subset, double> masses);

  const Frame& frame() const { return frame_; }
  const std::map<Frame::Subset, double>& masses() const { return masses_; }
  double total() const;

 private:
  void check() const;

  Frame frame_;
  std::map<Frame::Subset, double> masses_;
};

/// Bel(Y) = sum of m(Z) over non-empty Z contained in Y.
BeliefFunction belief_from_mass(const MassFunction& m);

/// A partition of unity {phi_a} subordinate to a cover {U_a} of a state
/// space. Membership and components are evaluable per label; `complex` is the
/// complex the evaluated points live on (normally the nerve of the cover).
template <class State>
struct PartitionOfUnity {
  struct Component {
    Label label;
    std::function<bool(const State&)> member;
    std::function<double(const State&)> phi;
  };

  ComplexPtr complex;
  std::vector<Component> components;
};

struct SampleDiagnostic {
  std::string sample;
  std::string message;
};

struct PartitionReport {
  bool valid = true;
  std::vector<SampleDiagnostic> problems;
};

namespace detail {

template <class State>
std::vector<std::string> partition_violations(const PartitionOfUnity<State>& pou, const State& s,
                                              std::map<Label, double>& weights) {
  std::vector<std::string> out;
  double sum = 0.0;
  for (const auto& c : pou.components) {
    const double v = c.phi(s);
    if (!(v >= 0.0 && v <= 1.0)) {
      out.push_back("component '" + c.label + "' = " + std::to_string(v) + " outside [0,1]");
    }
    if (v != 0.0 && !c.member(s)) {
      out.push_back("component '" + c.label + "' is non-zero outside its cover set");
    }
    weights[c.label] = v;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    out.push_back("components sum to " + std::to_string(sum) + ", not 1");
  }
  return out;
}

template <class State>
std::string describe(const State& s) {
  if constexpr (std::is_convertible_v<const State&, std::string>) {
    return s;
  } else if constexpr (requires { to_string(s); }) {
    return to_string(s);
  } else {
    return "<state>";
  }
}

}  // namespace detail

/// Checks the support condition (exact) and normalisation (within
/// kWeightSumTolerance) at every sample. Exceptions thrown by a component
/// are reported against that sample.
template <class State, class Describe>
PartitionReport validate_partition(const PartitionOfUnity<State>& pou,
                                   const std::vector<State>& samples, Describe describe) {
  PartitionReport report;
  for (const auto& s : samples) {
    std::vector<std::string> problems;
    try {
      std::map<Label, double> weights;
      problems = detail::partition_violations(pou, s, weights);
    } catch (const std::exception& e) {
      problems.push_back(std::string("evaluation failed: ") + e.what());
    }
    for (auto& p : problems) {
      report.valid = false;
      report.problems.push_back({describe(s), std::move(p)});
    }
  }
  return report;
}

template <class State>
PartitionReport validate_partition(const PartitionOfUnity<State>& pou,
                                   const std::vector<State>& samples) {
  return validate_partition(pou, samples,
                            [](const State& s) { return detail::describe(s); });
}

/// phi(s) = sum_a phi_a(s) e_a. Throws ModelError when either invariant fails
/// at `s`.
template <class State>
BarycentricPoint evaluate_phi(const PartitionOfUnity<State>& pou, const State& s) {
  std::map<Label, double> weights;
  auto problems = detail::partition_violations(pou, s, weights);
  if (!problems.empty()) {
    std::string msg = "partition of unity invalid at " + detail::describe(s) + ":";
    for (const auto& p : problems) msg += " " + p + ";";
    throw ModelError(msg);
  }
  std::erase_if(weights, [](const auto& kv) { return kv.second == 0.0; });
  return BarycentricPoint(pou.complex, weights);
}

/// Partition of unity on the samples of an extensional cover given by a
/// table of component values; labels missing from a row are zero.
PartitionOfUnity<std::string> tabulated_partition(
    const Cover& cover, std::map<std::string, std::map<Label, double>> table);

}  // namespace modetopo
