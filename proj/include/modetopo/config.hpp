#pragma once

// Scenario configs, evidence streams and cover files (JSON / JSON lines).

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modetopo/geometry.hpp"
#include "modetopo/modes.hpp"
#include "modetopo/scenarios.hpp"

namespace modetopo {

/// A config that parsed but does not describe a consistent scenario. The
/// message carries the file name and the JSON pointer of the offending entry.
class ConfigError : public ModelError {
 public:
  using ModelError::ModelError;
};

enum class ScenarioKind { triage, emergency, gsb, custom };

std::string to_string(ScenarioKind kind);

struct ScenarioConfig {
  std::string name;
  ScenarioKind kind = ScenarioKind::custom;
  std::vector<std::vector<Label>> maximal_faces;
  Layout layout;
  Thresholds thresholds;
  std::map<Face, Thresholds> overrides;
  std::set<Face> latched;
  std::map<Face, ModeInfo> modes;
  TriagePresets presets;
  RegionParams regions;
  std::map<std::string, std::uint64_t> oracle_limits;
  std::optional<std::uint64_t> default_oracle_limit;

  /// Closed complex built from `maximal_faces`.
  ComplexPtr complex;

  ModeSystem system() const;
  OracleMonitor monitor() const;
};

/// Parses and resolves a config. Throws FormatError for malformed JSON or
/// wrongly typed entries and ConfigError for dangling references.
ScenarioConfig parse_scenario(const std::string& text, const std::string& source = "<config>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

struct EvidenceRecord {
  std::uint64_t tick = 0;
  std::map<std::string, double> signals;
  std::optional<int> checks_done;
  std::vector<std::string> oracle_calls;
};

/// One JSON object per non-blank line. Throws FormatError naming the line.
std::vector<EvidenceRecord> parse_evidence(const std::string& text,
                                           const std::string& source = "<evidence>");
std::vector<EvidenceRecord> load_evidence(const std::filesystem::path& path);

/// `{"sets": {label: [sample, ...]}, "universe": [sample, ...]}`; the
/// universe defaults to the union of the sets.
Cover parse_cover(const std::string& text, const std::string& source = "<cover>");
Cover load_cover(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace modetopo
