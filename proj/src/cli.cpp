#include "modetopo/cli.hpp"

#include <fstream>
#include <ostream>

#include "modetopo/report.hpp"
#include "modetopo/scenarios.hpp"

namespace modetopo::cli {

namespace {

std::string join_census(const std::vector<std::size_t>& census) {
  std::string out;
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(census[i]);
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError(path.string() + ": cannot write file");
  f << text;
  if (!f) throw FormatError(path.string() + ": write failed");
}

// Runs `body`, mapping exceptions onto exit statuses.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const ModelError& e) {
    err << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }
}

// Inserts oracle alarms after the engine events of the same tick.
std::vector<TransitionEvent> merge_alarms(const std::vector<TransitionEvent>& events,
                                          const std::vector<TransitionEvent>& alarms) {
  std::vector<TransitionEvent> out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    while (j < alarms.size() && alarms[j].tick < events[i].tick) out.push_back(alarms[j++]);
    out.push_back(events[i]);
    const bool last_of_tick = i + 1 == events.size() || events[i + 1].tick != events[i].tick;
    if (last_of_tick) {
      while (j < alarms.size() && alarms[j].tick == events[i].tick) out.push_back(alarms[j++]);
    }
  }
  while (j < alarms.size()) out.push_back(alarms[j++]);
  return out;
}

}  // namespace

RunResult replay(const ScenarioConfig& cfg, const std::vector<EvidenceRecord>& evidence) {
  std::vector<Observation<EvidenceRecord>> stream;
  stream.reserve(evidence.size());
  for (const auto& r : evidence) stream.push_back({r.tick, r});
  const ModeSystem sys = cfg.system();

  RunResult result;
  if (cfg.kind == ScenarioKind::triage) {
    const auto pou = triage_partition(cfg.regions, cfg.complex);
    result = run(sys, pou, std::span<const Observation<EvidenceRecord>>(stream),
                 [&](const EvidenceRecord& r) {
                   return coords(triage_signals(r.signals, r.checks_done.value_or(0), cfg.presets));
                 });
  } else {
    const auto pou = score_partition(cfg.complex);
    result = run(sys, pou, std::span<const Observation<EvidenceRecord>>(stream),
                 [](const EvidenceRecord& r) -> const VertexScores& { return r.signals; });
  }

  // Oracle calls are only counted for records the engine consumed.
  OracleMonitor monitor = cfg.monitor();
  std::vector<TransitionEvent> alarms;
  for (std::size_t i = 0; i < result.faces.size(); ++i) {
    for (const auto& name : evidence[i].oracle_calls) {
      bool alarm = false;
      std::tie(monitor, alarm) = record_oracle_call(std::move(monitor), name);
      if (alarm) {
        alarms.push_back({evidence[i].tick, EventKind::oracle_alarm, result.faces[i], std::nullopt,
                          name});
      }
    }
  }
  result.events = merge_alarms(result.events, alarms);
  return result;
}

int cmd_validate(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig cfg = load_scenario(config);
    const Complex& c = *cfg.complex;
    if (!is_valid(c)) {
      err << "invalid: " << config.string() << ": complex is not closed under subsets\n";
      return kExitInvalid;
    }
    out << "scenario: " << cfg.name << " (" << to_string(cfg.kind) << ")\n"
        << "vertices: " << c.vertices().size() << '\n'
        << "census: " << join_census(face_census(c)) << '\n'
        << "faces: " << c.size() << '\n'
        << "maximal faces: " << c.maximal_faces().size() << '\n'
        << "thresholds: tau=" << cfg.thresholds.activation
        << " eta=" << cfg.thresholds.warn_margin << '\n'
        << "ok\n";
    return kExitOk;
  });
}

int cmd_run(const std::filesystem::path& config, const std::filesystem::path& evidence,
            const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig cfg = load_scenario(config);
    const auto records = load_evidence(evidence);
    const RunResult result = replay(cfg, records);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw FormatError(out_dir.string() + ": " + ec.message());
    write_file(out_dir / "trajectory.csv", trajectory_csv(*cfg.complex, result.trajectory));
    write_file(out_dir / "events.csv", events_csv(result.events));
    write_file(out_dir / "trace.svg", trace_svg(*cfg.complex, cfg.layout, result.trajectory));

    out << "samples: " << result.trajectory.size() << '\n'
        << "events: " << result.events.size() << '\n';
    if (result.error) {
      err << "invalid: " << evidence.string() << ": run aborted at tick " << result.error->tick
          << ": " << result.error->message << '\n';
      return kExitInvalid;
    }
    return kExitOk;
  });
}

int cmd_nerve(const std::filesystem::path& cover, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Complex c = nerve(load_cover(cover));
    for (const auto& f : c.maximal_faces()) out << f.str() << '\n';
    return kExitOk;
  });
}

int cmd_graph(const std::filesystem::path& config, const std::string& relation,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rel = parse_graph_relation(relation);
    if (!rel) {
      throw FormatError("unknown relation '" + relation + "' (expected hasse or all)");
    }
    const ScenarioConfig cfg = load_scenario(config);
    const Graph g = to_graph(*cfg.complex, *rel);
    out << "relation: " << to_string(*rel) << '\n'
        << "nodes: " << g.nodes.size() << '\n'
        << "edges: " << g.edges.size() << '\n';
    for (const auto& n : g.nodes) out << "node " << n.str() << '\n';
    for (const auto& [a, b] : g.edges) {
      out << "edge " << g.nodes[a].str() << ' ' << g.nodes[b].str() << '\n';
    }
    return kExitOk;
  });
}

}  // namespace modetopo::cli
