#include "modetopo/modes.hpp"

#include <algorithm>

namespace modetopo {

void Thresholds::check() const {
  if (!(activation >= 0.0 && activation < 1.0)) {
    throw ModelError("activation threshold must lie in [0,1)");
  }
  if (!(warn_margin > 0.0 && warn_margin <= 1.0 - activation + 1e-12)) {
    throw ModelError("warn margin must lie in (0, 1 - activation]");
  }
}

ModeSystem::ModeSystem(ComplexPtr complex, Thresholds thresholds,
                       std::map<Face, ModeInfo> metadata, std::map<Face, Thresholds> overrides,
                       std::set<Face> latched)
    : complex_(std::move(complex)),
      thresholds_(thresholds),
      metadata_(std::move(metadata)),
      overrides_(std::move(overrides)),
      latched_(std::move(latched)) {
  if (!complex_) throw ModelError("mode system needs a complex");
  thresholds_.check();
  for (const auto& [face, info] : metadata_) {
    if (!complex_->contains(face)) {
      throw ModelError("mode metadata names " + face.str() + ", which is not a face");
    }
  }
  for (const auto& [face, t] : overrides_) {
    if (!complex_->contains(face)) {
      throw ModelError("threshold override names " + face.str() + ", which is not a face");
    }
    t.check();
  }
  for (const auto& face : latched_) {
    if (!complex_->contains(face)) {
      throw ModelError("latched mode " + face.str() + " is not a face");
    }
  }
}

const Thresholds& ModeSystem::thresholds_for(const std::optional<Face>& occupied) const {
  if (occupied) {
    auto it = overrides_.find(*occupied);
    if (it != overrides_.end()) return it->second;
  }
  return thresholds_;
}

ModeInfo ModeSystem::info(const Face& face) const {
  auto it = metadata_.find(face);
  if (it != metadata_.end()) return it->second;
  std::string name;
  for (const auto& l : face) {
    if (!name.empty()) name += '+';
    name += l;
  }
  return {name, ""};
}

bool ModeSystem::is_latched(const std::optional<Face>& face) const {
  return face && latched_.count(*face) != 0;
}

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::transition: return "transition";
    case EventKind::warn_drop: return "warn-drop";
    case EventKind::warn_add: return "warn-add";
    case EventKind::latch_violation: return "latch-violation";
    case EventKind::oracle_alarm: return "oracle-alarm";
  }
  return "unknown";
}

namespace {

std::optional<Face> without(const Face& f, const Label& label) {
  std::vector<Label> rest;
  for (const auto& l : f) {
    if (l != label) rest.push_back(l);
  }
  if (rest.empty()) return std::nullopt;
  return Face(std::move(rest));
}

Face with(const std::optional<Face>& f, const Label& label) {
  std::vector<Label> all = f ? f->labels() : std::vector<Label>{};
  all.push_back(label);
  return Face(std::move(all));
}

}  // namespace

StepResult step(const ModeSystem& sys, const std::optional<Face>& prev,
                const BarycentricPoint& p, std::uint64_t tick) {
  if (p.complex_ptr() != sys.complex_ptr() && !(p.complex() == sys.complex())) {
    throw ModelError("belief point does not lie on the mode system's complex");
  }
  const Thresholds& t = sys.thresholds_for(prev);
  StepResult out;
  std::optional<Face> current = active_set(p, t.activation);

  if (current != prev && sys.is_latched(prev)) {
    out.events.push_back({tick, EventKind::latch_violation, prev, current, ""});
    current = prev;
  } else if (current != prev) {
    out.events.push_back({tick, EventKind::transition, prev, current, ""});
  }

  if (current) {
    for (const auto& label : *current) {
      if (p.weight(label) - t.activation < t.warn_margin) {
        out.events.push_back({tick, EventKind::warn_drop, current, without(*current, label), ""});
      }
    }
  }
  for (const auto& [label, w] : p.weights()) {
    if (current && current->contains(label)) continue;
    if (t.activation - w < t.warn_margin) {
      out.events.push_back({tick, EventKind::warn_add, current, with(current, label), ""});
    }
  }
  out.current = std::move(current);
  return out;
}

Complex add_shadow(const Complex& c, const Label& original, const Label& shadow) {
  check_label(shadow);
  if (!c.has_vertex(original)) {
    throw ModelError("cannot shadow '" + original + "': not a vertex of the complex");
  }
  if (c.has_vertex(shadow)) {
    throw ModelError("shadow label '" + shadow + "' is already a vertex");
  }
  std::set<Face> faces = c.faces();
  for (const auto& f : c.faces()) {
    if (!f.contains(original)) continue;
    std::vector<Label> copy;
    for (const auto& l : f) copy.push_back(l == original ? shadow : l);
    faces.insert(Face(std::move(copy)));
    std::vector<Label> link = f.labels();
    link.push_back(shadow);
    faces.insert(Face(std::move(link)));
  }
  return Complex(std::move(faces));
}

std::optional<std::uint64_t> OracleMonitor::limit_for(const std::string& name) const {
  auto it = limits.find(name);
  if (it != limits.end()) return it->second;
  return default_limit;
}

std::uint64_t OracleMonitor::count(const std::string& name) const {
  auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second;
}

std::pair<OracleMonitor, bool> record_oracle_call(OracleMonitor mon, const std::string& name) {
  const std::uint64_t n = ++mon.counts[name];
  const auto limit = mon.limit_for(name);
  const bool alarm = limit && n > *limit;
  return {std::move(mon), alarm};
}

}  // namespace modetopo
