#include "modetopo/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace modetopo {

using nlohmann::json;

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::triage: return "triage";
    case ScenarioKind::emergency: return "emergency";
    case ScenarioKind::gsb: return "gsb";
    case ScenarioKind::custom: return "custom";
  }
  return "custom";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

// Walks a JSON document keeping the pointer of the current node for
// diagnostics.
class Node {
 public:
  Node(const json& value, std::string source, std::string pointer)
      : value_(value), source_(std::move(source)), pointer_(std::move(pointer)) {}

  const json& raw() const { return value_; }
  const std::string& pointer() const { return pointer_; }

  [[noreturn]] void format_error(const std::string& msg) const {
    throw FormatError(source_ + ": " + where() + ": " + msg);
  }
  [[noreturn]] void config_error(const std::string& msg) const {
    throw ConfigError(source_ + ": " + where() + ": " + msg);
  }

  bool has(const std::string& key) const {
    return value_.is_object() && value_.contains(key);
  }
  Node operator[](const std::string& key) const {
    if (!value_.is_object()) format_error("expected an object");
    if (!value_.contains(key)) format_error("missing required key '" + key + "'");
    return Node(value_.at(key), source_, pointer_ + "/" + key);
  }
  Node operator[](std::size_t i) const {
    return Node(value_.at(i), source_, pointer_ + "/" + std::to_string(i));
  }

  std::size_t array_size() const {
    if (!value_.is_array()) format_error("expected an array");
    return value_.size();
  }
  void expect_object() const {
    if (!value_.is_object()) format_error("expected an object");
  }
  std::vector<std::string> keys() const {
    expect_object();
    std::vector<std::string> out;
    for (auto it = value_.begin(); it != value_.end(); ++it) out.push_back(it.key());
    return out;
  }

  std::string string() const {
    if (!value_.is_string()) format_error("expected a string");
    return value_.get<std::string>();
  }
  double number() const {
    if (!value_.is_number()) format_error("expected a number");
    return value_.get<double>();
  }
  std::int64_t integer() const {
    if (!value_.is_number_integer()) format_error("expected an integer");
    return value_.get<std::int64_t>();
  }
  std::uint64_t count() const {
    const auto v = integer();
    if (v < 0) format_error("expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array_size(); ++i) out.push_back((*this)[i].string());
    return out;
  }
  Face face() const {
    auto labels = strings();
    if (labels.empty()) config_error("empty face");
    try {
      return Face(std::move(labels));
    } catch (const ModelError& e) {
      config_error(e.what());
    }
  }
  std::map<std::string, double> number_map() const {
    std::map<std::string, double> out;
    for (const auto& k : keys()) out[k] = (*this)[k].number();
    return out;
  }

 private:
  std::string where() const { return pointer_.empty() ? "/" : pointer_; }

  const json& value_;
  std::string source_;
  std::string pointer_;
};

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line:column.
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": malformed JSON (" + e.what() + ")");
  }
}

Thresholds parse_thresholds(const Node& n, Thresholds base) {
  n.expect_object();
  if (n.has("tau")) base.activation = n["tau"].number();
  if (n.has("eta")) base.warn_margin = n["eta"].number();
  try {
    base.check();
  } catch (const ModelError& e) {
    n.config_error(e.what());
  }
  return base;
}

Face known_face(const Node& n, const Complex& c) {
  Face f = n.face();
  if (!c.contains(f)) n.config_error(f.str() + " is not a face of the complex");
  return f;
}

}  // namespace

ModeSystem ScenarioConfig::system() const {
  return ModeSystem(complex, thresholds, modes, overrides, latched);
}

OracleMonitor ScenarioConfig::monitor() const {
  OracleMonitor m;
  m.limits = oracle_limits;
  m.default_limit = default_oracle_limit;
  return m;
}

ScenarioConfig parse_scenario(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Node root(doc, source, "");
  root.expect_object();

  ScenarioConfig cfg;
  cfg.name = root.has("name") ? root["name"].string() : "unnamed";
  if (root.has("kind")) {
    const auto kind = root["kind"].string();
    if (kind == "triage") cfg.kind = ScenarioKind::triage;
    else if (kind == "emergency") cfg.kind = ScenarioKind::emergency;
    else if (kind == "gsb") cfg.kind = ScenarioKind::gsb;
    else if (kind == "custom") cfg.kind = ScenarioKind::custom;
    else root["kind"].format_error("unknown scenario kind '" + kind + "'");
  }

  const Node faces = root["complex"];
  for (std::size_t i = 0; i < faces.array_size(); ++i) {
    const Node entry = faces[i];
    auto labels = entry.strings();
    if (labels.empty()) entry.config_error("empty face");
    for (const auto& l : labels) {
      try {
        check_label(l);
      } catch (const ModelError& e) {
        entry.config_error(e.what());
      }
    }
    cfg.maximal_faces.push_back(std::move(labels));
  }
  cfg.complex = std::make_shared<const Complex>(complex_from_maximal_faces(cfg.maximal_faces));
  const Complex& c = *cfg.complex;

  const Node layout = root["layout"];
  for (const auto& label : layout.keys()) {
    const Node pos = layout[label];
    if (pos.array_size() != 2) pos.format_error("expected [x, y]");
    if (!c.has_vertex(label)) pos.config_error("layout names unknown vertex '" + label + "'");
    cfg.layout.positions[label] = {pos[0].number(), pos[1].number()};
  }
  for (const auto& v : c.vertices()) {
    if (!cfg.layout.positions.count(v)) layout.config_error("no position for vertex '" + v + "'");
  }

  if (root.has("thresholds")) cfg.thresholds = parse_thresholds(root["thresholds"], {});
  if (root.has("overrides")) {
    const Node list = root["overrides"];
    for (std::size_t i = 0; i < list.array_size(); ++i) {
      const Node o = list[i];
      Face f = known_face(o["face"], c);
      cfg.overrides[f] = parse_thresholds(o, cfg.thresholds);
    }
  }
  if (root.has("latched")) {
    const Node list = root["latched"];
    for (std::size_t i = 0; i < list.array_size(); ++i) cfg.latched.insert(known_face(list[i], c));
  }
  if (root.has("modes")) {
    const Node list = root["modes"];
    for (std::size_t i = 0; i < list.array_size(); ++i) {
      const Node m = list[i];
      Face f = known_face(m["face"], c);
      ModeInfo info{m["name"].string(), m.has("objectives") ? m["objectives"].string() : ""};
      cfg.modes[f] = std::move(info);
    }
  }
  if (root.has("oracles")) {
    const Node o = root["oracles"];
    o.expect_object();
    if (o.has("limits")) {
      const Node limits = o["limits"];
      for (const auto& k : limits.keys()) cfg.oracle_limits[k] = limits[k].count();
    }
    if (o.has("default_limit") && !o["default_limit"].raw().is_null()) {
      cfg.default_oracle_limit = o["default_limit"].count();
    }
  }

  if (cfg.kind == ScenarioKind::triage) {
    const Node t = root["triage"];
    auto& p = cfg.presets;
    p.concern_weights = t["concern_weights"].number_map();
    p.concern_level = t["concern_level"].number();
    p.opportunity_weights = t["opportunity_weights"].number_map();
    p.opportunity_level = t["opportunity_level"].number();
    p.total_checks = static_cast<int>(t["total_checks"].integer());
    if (t.has("epsilon")) cfg.regions.epsilon = t["epsilon"].number();
    if (t.has("delta")) cfg.regions.delta = t["delta"].number();
    try {
      p.check();
      cfg.regions.check();
    } catch (const ModelError& e) {
      t.config_error(e.what());
    }
    const Face tetra{triage::kBegin, triage::kNeither, triage::kOpportunity, triage::kConcern};
    if (!c.contains(tetra)) {
      faces.config_error("triage scenario needs the face " + tetra.str());
    }
  }

  try {
    cfg.system();
  } catch (const ModelError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path), path.string());
}

std::vector<EvidenceRecord> parse_evidence(const std::string& text, const std::string& source) {
  std::vector<EvidenceRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const json doc = parse_json(line, where);
    const Node n(doc, where, "");
    n.expect_object();
    EvidenceRecord r;
    r.tick = n["tick"].count();
    if (n.has("signals")) r.signals = n["signals"].number_map();
    if (n.has("checks_done")) r.checks_done = static_cast<int>(n["checks_done"].integer());
    if (n.has("oracle_calls")) r.oracle_calls = n["oracle_calls"].strings();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<EvidenceRecord> load_evidence(const std::filesystem::path& path) {
  return parse_evidence(read_file(path), path.string());
}

Cover parse_cover(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Node root(doc, source, "");
  const Node sets = root["sets"];
  std::map<Label, std::set<Cover::Sample>> members;
  for (const auto& label : sets.keys()) {
    auto list = sets[label].strings();
    members[label] = std::set<Cover::Sample>(list.begin(), list.end());
  }
  try {
    if (root.has("universe")) {
      auto u = root["universe"].strings();
      return Cover(std::move(members), std::set<Cover::Sample>(u.begin(), u.end()));
    }
    return Cover(std::move(members));
  } catch (const ModelError& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

Cover load_cover(const std::filesystem::path& path) {
  return parse_cover(read_file(path), path.string());
}

}  // namespace modetopo
