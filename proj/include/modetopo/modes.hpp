#pragma once

// Mode systems and the threshold-driven transition engine.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modetopo/belief.hpp"
#include "modetopo/geometry.hpp"
#include "modetopo/simplicial.hpp"

namespace modetopo {

/// Activation threshold tau in [0,1) and warn margin eta in (0, 1 - tau].
struct Thresholds {
  double activation = 0.2;
  double warn_margin = 0.05;

  void check() const;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

struct ModeInfo {
  std::string name;
  std::string objectives;
};

/// A complex whose faces are the modes of a system, with per-mode metadata
/// and transition thresholds. Immutable once built.
class ModeSystem {
 public:
  ModeSystem(ComplexPtr complex, Thresholds thresholds,
             std::map<Face, ModeInfo> metadata = {},
             std::map<Face, Thresholds> overrides = {}, std::set<Face> latched = {});

  const Complex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const Thresholds& thresholds() const { return thresholds_; }
  const std::map<Face, Thresholds>& overrides() const { return overrides_; }
  const std::set<Face>& latched() const { return latched_; }

  /// Thresholds governing exit from `occupied`: its override, if any,
  /// otherwise the system thresholds.
  const Thresholds& thresholds_for(const std::optional<Face>& occupied) const;

  /// Metadata for a face; faces without an entry get a name built from their
  /// labels.
  ModeInfo info(const Face& face) const;
  bool is_latched(const std::optional<Face>& face) const;

 private:
  ComplexPtr complex_;
  Thresholds thresholds_;
  std::map<Face, ModeInfo> metadata_;
  std::map<Face, Thresholds> overrides_;
  std::set<Face> latched_;
};

enum class EventKind { transition, warn_drop, warn_add, latch_violation, oracle_alarm };

std::string to_string(EventKind kind);

struct TransitionEvent {
  std::uint64_t tick = 0;
  EventKind kind = EventKind::transition;
  std::optional<Face> from;
  std::optional<Face> to;
  /// Oracle name for oracle alarms; empty otherwise.
  std::string detail;

  friend bool operator==(const TransitionEvent&, const TransitionEvent&) = default;
};

struct StepResult {
  std::optional<Face> current;
  std::vector<TransitionEvent> events;
};

/// One engine update. The new face is the active set of `p` at the governing
/// threshold; a transition is logged when it differs from `prev`. Vertices of
/// the new face within the warn margin above the threshold raise warn-drop
/// events, and carrier vertices within the margin below it raise warn-add
/// events. Leaving a latched face is refused and logged as a
/// latch-violation.
StepResult step(const ModeSystem& sys, const std::optional<Face>& prev,
                const BarycentricPoint& p, std::uint64_t tick);

template <class Record>
struct Observation {
  std::uint64_t tick = 0;
  Record record;
};

struct RunError {
  std::uint64_t tick = 0;
  std::string message;
};

struct RunResult {
  Trajectory trajectory;
  std::vector<TransitionEvent> events;
  /// Face occupied after each trajectory sample.
  std::vector<std::optional<Face>> faces;
  std::optional<RunError> error;
};

/// Replays an evidence stream through `to_state`, the partition of unity and
/// `step`, sequentially. Stops at the first failing record and returns what
/// was produced before it together with the error.
template <class Record, class State, class ToState>
RunResult run(const ModeSystem& sys, const PartitionOfUnity<State>& pou,
              std::span<const Observation<Record>> evidence, ToState to_state) {
  RunResult result;
  std::optional<Face> current;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    const auto& obs = evidence[i];
    try {
      if (i > 0 && obs.tick <= evidence[i - 1].tick) {
        throw ModelError("tick " + std::to_string(obs.tick) + " does not follow tick " +
                         std::to_string(evidence[i - 1].tick));
      }
      BarycentricPoint p = evaluate_phi(pou, to_state(obs.record));
      StepResult r = step(sys, current, p, obs.tick);
      result.trajectory.append(obs.tick, std::move(p));
      result.events.insert(result.events.end(), r.events.begin(), r.events.end());
      current = std::move(r.current);
      result.faces.push_back(current);
    } catch (const std::exception& e) {
      result.error = RunError{obs.tick, e.what()};
      break;
    }
  }
  return result;
}

template <class State>
RunResult run(const ModeSystem& sys, const PartitionOfUnity<State>& pou,
              std::span<const Observation<State>> evidence) {
  return run(sys, pou, evidence, [](const State& s) -> const State& { return s; });
}

/// Adds a shadow vertex `shadow` for `original`: every face F containing the
/// original gains a copy with the original replaced by the shadow and a
/// linking face F + {shadow}.
Complex add_shadow(const Complex& c, const Label& original, const Label& shadow);

/// Counts calls to external oracles against prescribed limits.
struct OracleMonitor {
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::uint64_t> limits;
  /// Limit for oracles without an entry; no limit when empty.
  std::optional<std::uint64_t> default_limit;

  std::optional<std::uint64_t> limit_for(const std::string& name) const;
  std::uint64_t count(const std::string& name) const;
};

/// Increments the counter for `name`; the flag is true iff the new count
/// exceeds the oracle's limit.
std::pair<OracleMonitor, bool> record_oracle_call(OracleMonitor mon, const std::string& name);

}  // namespace modetopo
