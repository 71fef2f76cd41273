#include "modetopo/belief.hpp"

#include <algorithm>
#include <sstream>

namespace modetopo {

Frame::Frame(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (const auto& l : labels_) check_label(l);
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw ModelError("frame lists a statement twice");
  }
  if (labels_.size() > kMaxFrame) {
    throw ModelError("frame of " + std::to_string(labels_.size()) +
                     " statements exceeds the limit of " + std::to_string(kMaxFrame));
  }
}

Frame::Subset Frame::subset(const std::vector<Label>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) {
      throw ModelError("statement '" + l + "' is not in the frame");
    }
    s |= Subset{1} << (it - labels_.begin());
  }
  return s;
}

std::vector<Label> Frame::labels_of(Subset s) const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s & (Subset{1} << i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::str(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

namespace {

std::map<Frame::Subset, double> encode(const Frame& frame,
                                       const std::vector<std::pair<std::vector<Label>, double>>& entries,
                                       const char* what) {
  std::map<Frame::Subset, double> out;
  for (const auto& [labels, v] : entries) {
    const auto key = frame.subset(labels);
    if (!out.emplace(key, v).second) {
      throw ModelError(std::string(what) + " lists subset " + frame.str(key) + " twice");
    }
  }
  return out;
}

}  // namespace

BeliefFunction::BeliefFunction(Frame frame,
                               const std::vector<std::pair<std::vector<Label>, double>>& values)
    : BeliefFunction(frame, encode(frame, values, "belief function")) {}

BeliefFunction::BeliefFunction(Frame frame, std::map<Frame::Subset, double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  for (const auto& [s, v] : values_) {
    if (s > frame_.full()) throw ModelError("belief subset outside the frame");
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ModelError("belief of " + frame_.str(s) + " is outside [0,1]");
    }
  }
}

std::optional<double> BeliefFunction::value(Frame::Subset s) const {
  auto it = values_.find(s);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> BeliefFunction::value(const std::vector<Label>& labels) const {
  return value(frame_.subset(labels));
}

BeliefReport validate_belief(const BeliefFunction& b) {
  const auto& frame = b.frame();
  if (frame.size() > kMaxValidatedFrame) {
    throw ModelError("frame of " + std::to_string(frame.size()) +
                     " statements is too large to validate exhaustively (limit " +
                     std::to_string(kMaxValidatedFrame) + ")");
  }
  const std::size_t n_subsets = std::size_t{1} << frame.size();
  std::vector<double> bel(n_subsets);
  for (std::size_t s = 0; s < n_subsets; ++s) {
    auto v = b.value(static_cast<Frame::Subset>(s));
    if (!v) {
      throw ModelError("belief function has no value for subset " +
                       frame.str(static_cast<Frame::Subset>(s)));
    }
    bel[s] = *v;
  }

  BeliefReport report;
  report.empty_set_zero = bel[0] == 0.0;
  for (std::size_t y = 0; y < n_subsets; ++y) {
    for (std::size_t z = y + 1; z < n_subsets; ++z) {
      if (bel[y | z] + bel[y & z] < bel[y] + bel[z] - kWeightSumTolerance) {
        report.violations.emplace_back(frame.labels_of(static_cast<Frame::Subset>(y)),
                                       frame.labels_of(static_cast<Frame::Subset>(z)));
      }
    }
  }
  report.valid = report.empty_set_zero && report.violations.empty();
  return report;
}

bool is_normalised(const BeliefFunction& b) {
  auto v = b.value(b.frame().full());
  return v && std::abs(*v - 1.0) <= kWeightSumTolerance;
}

MassFunction::MassFunction(Frame frame,
                           const std::vector<std::pair<std::vector<Label>, double>>& masses)
    : MassFunction(frame, encode(frame, masses, "mass function")) {}

MassFunction::MassFunction(Frame frame, std::map<Frame::Subset, double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  check();
}

void MassFunction::check() const {
  for (const auto& [s, m] : masses_) {
    if (s == 0) throw ModelError("mass may not be placed on the empty set");
    if (s > frame_.full()) throw ModelError("mass subset outside the frame");
    if (!(m >= 0.0)) throw ModelError("mass of " + frame_.str(s) + " is negative");
  }
  if (total() > 1.0 + kWeightSumTolerance) {
    std::ostringstream msg;
    msg << "masses total " << total() << ", more than 1";
    throw ModelError(msg.str());
  }
}

double MassFunction::total() const {
  double t = 0.0;
  for (const auto& [s, m] : masses_) t += m;
  return t;
}

BeliefFunction belief_from_mass(const MassFunction& m) {
  const auto& frame = m.frame();
  const std::size_t n_subsets = std::size_t{1} << frame.size();
  std::map<Frame::Subset, double> values;
  for (std::size_t y = 0; y < n_subsets; ++y) {
    double bel = 0.0;
    for (const auto& [z, mass] : m.masses()) {
      if ((z & ~y) == 0) bel += mass;
    }
    values.emplace(static_cast<Frame::Subset>(y), std::min(bel, 1.0));
  }
  return BeliefFunction(frame, std::move(values));
}

PartitionOfUnity<std::string> tabulated_partition(
    const Cover& cover, std::map<std::string, std::map<Label, double>> table) {
  for (const auto& [sample, row] : table) {
    if (!cover.universe().count(sample)) {
      throw ModelError("partition table row for unknown sample '" + sample + "'");
    }
    for (const auto& [label, v] : row) cover.members(label);
  }
  auto rows = std::make_shared<const std::map<std::string, std::map<Label, double>>>(
      std::move(table));
  PartitionOfUnity<std::string> pou;
  pou.complex = std::make_shared<const Complex>(nerve(cover));
  for (const auto& [label, members] : cover.sets()) {
    pou.components.push_back(
        {label, [copy = members](const std::string& s) { return copy.count(s) != 0; },
         [rows, label = label](const std::string& s) {
           auto row = rows->find(s);
           if (row == rows->end()) throw ModelError("no partition values for sample '" + s + "'");
           auto it = row->second.find(label);
           return it == row->second.end() ? 0.0 : it->second;
         }});
  }
  return pou;
}

}  // namespace modetopo
