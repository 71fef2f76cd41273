#include "modetopo/simplicial.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace modetopo {

void check_label(const Label& label) {
  if (label.empty()) throw ModelError("empty vertex label");
  for (char ch : label) {
    if (ch == ',' || ch == '{' || ch == '}' || ch == '"' || ch == '\'' ||
        static_cast<unsigned char>(ch) <= ' ') {
      throw ModelError("vertex label '" + label + "' contains a reserved character");
    }
  }
}

Face::Face(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ModelError("a face needs at least one vertex");
  for (const auto& l : labels_) check_label(l);
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool Face::contains(const Label& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                       labels_.end());
}

std::string Face::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += labels_[i];
  }
  out += '}';
  return out;
}

std::optional<Face> intersect(const Face& a, const Face& b) {
  std::vector<Label> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return Face(std::move(common));
}

std::vector<Face> subfaces(const Face& face) {
  const auto& labels = face.labels();
  const std::size_t n = labels.size();
  if (n > 24) throw ModelError("face " + face.str() + " is too large to enumerate");
  std::vector<Face> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) pick.push_back(labels[i]);
    }
    out.emplace_back(std::move(pick));
  }
  return out;
}

Complex::Complex(std::set<Face> faces) : faces_(std::move(faces)) {
  std::set<Label> verts;
  for (const auto& f : faces_) verts.insert(f.begin(), f.end());
  vertices_.assign(verts.begin(), verts.end());
}

bool Complex::has_vertex(const Label& label) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), label);
}

std::vector<Face> Complex::maximal_faces() const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool covered = false;
    for (const auto& g : faces_) {
      if (g.size() > f.size() && f.is_subset_of(g)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(f);
  }
  return out;
}

Complex complex_from_maximal_faces(const std::vector<Face>& maximal) {
  std::set<Face> faces;
  for (const auto& m : maximal) {
    for (auto& f : subfaces(m)) faces.insert(std::move(f));
  }
  return Complex(std::move(faces));
}

Complex complex_from_maximal_faces(const std::vector<std::vector<Label>>& maximal) {
  std::vector<Face> faces;
  faces.reserve(maximal.size());
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (maximal[i].empty()) {
      throw ModelError("face entry " + std::to_string(i) + " is empty");
    }
    try {
      faces.emplace_back(maximal[i]);
    } catch (const ModelError& e) {
      throw ModelError("face entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return complex_from_maximal_faces(faces);
}

bool is_valid(const Complex& c) {
  for (const auto& f : c.faces()) {
    // Checking the codimension-one faces suffices by induction on size.
    if (f.size() == 1) continue;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      std::vector<Label> sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != skip) sub.push_back(f.labels()[i]);
      }
      if (!c.contains(Face(std::move(sub)))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> face_census(const Complex& c) {
  std::vector<std::size_t> census;
  for (const auto& f : c.faces()) {
    const auto dim = static_cast<std::size_t>(f.dimension());
    if (census.size() <= dim) census.resize(dim + 1, 0);
    ++census[dim];
  }
  return census;
}

Cover::Cover(std::map<Label, std::set<Sample>> sets, std::set<Sample> universe)
    : sets_(std::move(sets)), universe_(std::move(universe)) {
  std::set<Sample> covered;
  for (const auto& [label, members] : sets_) {
    check_label(label);
    for (const auto& s : members) {
      if (!universe_.count(s)) {
        throw ModelError("cover set '" + label + "' references sample '" + s +
                         "' outside the universe");
      }
      covered.insert(s);
    }
  }
  if (covered != universe_) {
    std::vector<Sample> missing;
    std::set_difference(universe_.begin(), universe_.end(), covered.begin(), covered.end(),
                        std::back_inserter(missing));
    throw ModelError("cover does not exhaust the universe; first uncovered sample '" +
                     missing.front() + "'");
  }
}

namespace {
std::set<Cover::Sample> union_of(const std::map<Label, std::set<Cover::Sample>>& sets) {
  std::set<Cover::Sample> u;
  for (const auto& [label, members] : sets) u.insert(members.begin(), members.end());
  return u;
}
}  // namespace

Cover::Cover(std::map<Label, std::set<Sample>> sets)
    : Cover(sets, union_of(sets)) {}

std::vector<Label> Cover::labels() const {
  std::vector<Label> out;
  for (const auto& [label, members] : sets_) out.push_back(label);
  return out;
}

const std::set<Cover::Sample>& Cover::members(const Label& label) const {
  auto it = sets_.find(label);
  if (it == sets_.end()) throw ModelError("cover has no set labelled '" + label + "'");
  return it->second;
}

Complex nerve(const Cover& cover) {
  // Each sample spans the face of all labels containing it; the nerve is the
  // closure of those faces. An empty set still contributes nothing.
  std::map<Cover::Sample, std::vector<Label>> containing;
  for (const auto& [label, members] : cover.sets()) {
    for (const auto& s : members) containing[s].push_back(label);
  }
  std::set<Face> tops;
  for (auto& [sample, labels] : containing) tops.insert(Face(std::move(labels)));
  return complex_from_maximal_faces(std::vector<Face>(tops.begin(), tops.end()));
}

Face SimplicialMap::image(const Face& face) const {
  std::vector<Label> out;
  out.reserve(face.size());
  for (const auto& l : face) {
    auto it = vertex_map.find(l);
    if (it == vertex_map.end()) {
      throw ModelError("simplicial map is not defined on vertex '" + l + "'");
    }
    out.push_back(it->second);
  }
  return Face(std::move(out));
}

bool validate_simplicial_map(const SimplicialMap& m) {
  for (const auto& v : m.source.vertices()) {
    if (!m.vertex_map.count(v)) {
      throw ModelError("simplicial map is not defined on vertex '" + v + "'");
    }
  }
  return std::all_of(m.source.faces().begin(), m.source.faces().end(),
                     [&](const Face& f) { return m.target.contains(m.image(f)); });
}

bool check_refinement(const Cover& fine, const Cover& coarse,
                      const std::map<Label, Label>& psi) {
  if (fine.universe() != coarse.universe()) {
    throw ModelError("refinement check needs covers of the same universe");
  }
  for (const auto& [label, members] : fine.sets()) {
    auto it = psi.find(label);
    if (it == psi.end()) {
      throw ModelError("refinement map is not defined on fine label '" + label + "'");
    }
    auto target = coarse.sets().find(it->second);
    if (target == coarse.sets().end()) return false;
    if (!std::includes(target->second.begin(), target->second.end(), members.begin(),
                       members.end())) {
      return false;
    }
  }
  return true;
}

std::optional<GraphRelation> parse_graph_relation(const std::string& text) {
  if (text == "hasse") return GraphRelation::hasse;
  if (text == "all") return GraphRelation::all_containments;
  return std::nullopt;
}

std::string to_string(GraphRelation relation) {
  return relation == GraphRelation::hasse ? "hasse" : "all";
}

Graph to_graph(const Complex& c, GraphRelation relation) {
  Graph g;
  g.nodes.assign(c.faces().begin(), c.faces().end());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const auto& small = g.nodes[i];
      const auto& big = g.nodes[j];
      if (small.size() >= big.size() || !small.is_subset_of(big)) continue;
      if (relation == GraphRelation::hasse && big.size() != small.size() + 1) continue;
      g.edges.emplace_back(i, j);
    }
  }
  return g;
}

}  // namespace modetopo
