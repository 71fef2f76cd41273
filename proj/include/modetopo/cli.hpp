#pragma once

// Subcommands of the `modetopo` tool. Each returns the process exit status:
// 0 success, 1 validation failure, 2 I/O or format error.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "modetopo/config.hpp"
#include "modetopo/modes.hpp"

namespace modetopo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFormat = 2;

int cmd_validate(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

int cmd_run(const std::filesystem::path& config, const std::filesystem::path& evidence,
            const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);

int cmd_nerve(const std::filesystem::path& cover, std::ostream& out, std::ostream& err);

int cmd_graph(const std::filesystem::path& config, const std::string& relation,
              std::ostream& out, std::ostream& err);

/// The scenario's evidence pipeline applied to a stream: triage configs go
/// through triage_signals and triage_phi, all others treat signals as
/// per-vertex scores. Oracle calls are counted against the configured limits
/// and alarms are merged into the event log.
RunResult replay(const ScenarioConfig& cfg, const std::vector<EvidenceRecord>& evidence);

}  // namespace modetopo::cli
