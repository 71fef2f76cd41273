#pragma once

// Abstract simplicial complexes: faces, closure, nerves of covers,
// simplicial maps, refinements and the face graph.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modetopo/error.hpp"

namespace modetopo {

using Label = std::string;

/// Throws ModelError unless `label` can be used as a vertex name. Labels are
/// non-empty and may not contain whitespace, quotes, commas or braces, since
/// faces are printed as `{a,b}`.
void check_label(const Label& label);

/// A non-empty, sorted, duplicate-free set of vertex labels.
class Face {
 public:
  explicit Face(std::vector<Label> labels);
  Face(std::initializer_list<Label> labels) : Face(std::vector<Label>(labels)) {}

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int dimension() const { return static_cast<int>(labels_.size()) - 1; }
  bool contains(const Label& label) const;
  bool is_subset_of(const Face& other) const;

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  /// Canonical text form, e.g. `{a,b}`.
  std::string str() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Label> labels_;
};

/// Set intersection of two faces; empty when the faces are disjoint.
std::optional<Face> intersect(const Face& a, const Face& b);

/// Every non-empty subset of `face`, including `face` itself.
std::vector<Face> subfaces(const Face& face);

/// A finite family of faces. Construction does not enforce downward closure
/// so that `is_valid` can be asked of arbitrary families; use
/// `complex_from_maximal_faces` to build a closed complex.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::set<Face> faces);

  const std::set<Face>& faces() const { return faces_; }
  const std::vector<Label>& vertices() const { return vertices_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const Face& face) const { return faces_.count(face) != 0; }
  bool has_vertex(const Label& label) const;

  /// Faces not strictly contained in another face, in canonical order.
  std::vector<Face> maximal_faces() const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.faces_ == b.faces_; }

 private:
  std::set<Face> faces_;
  std::vector<Label> vertices_;
};

Complex complex_from_maximal_faces(const std::vector<Face>& maximal);

/// Raw-list overload used by parsers. An empty entry is rejected with its
/// index in the diagnostic.
Complex complex_from_maximal_faces(const std::vector<std::vector<Label>>& maximal);

/// True iff every non-empty subset of every face is a face.
bool is_valid(const Complex& c);

/// Entry k is the number of k-dimensional faces. Empty for the empty complex.
std::vector<std::size_t> face_census(const Complex& c);

/// A finite cover of a finite sample universe, given extensionally.
class Cover {
 public:
  using Sample = std::string;

  /// Validates that every referenced sample belongs to `universe` and that
  /// the sets jointly exhaust it.
  Cover(std::map<Label, std::set<Sample>> sets, std::set<Sample> universe);

  /// Universe taken as the union of the sets.
  explicit Cover(std::map<Label, std::set<Sample>> sets);

  const std::map<Label, std::set<Sample>>& sets() const { return sets_; }
  const std::set<Sample>& universe() const { return universe_; }
  std::vector<Label> labels() const;
  const std::set<Sample>& members(const Label& label) const;

 private:
  std::map<Label, std::set<Sample>> sets_;
  std::set<Sample> universe_;
};

/// Nerve of the cover: X is a face iff the sets labelled by X share a sample.
Complex nerve(const Cover& cover);

struct SimplicialMap {
  std::map<Label, Label> vertex_map;
  Complex source;
  Complex target;

  /// Image of a face; collapsing vertices shrinks it.
  Face image(const Face& face) const;
};

/// True iff every source face maps onto a target face. Throws ModelError when
/// the vertex map misses a source vertex.
bool validate_simplicial_map(const SimplicialMap& m);

/// True iff every fine set lies inside the coarse set it is sent to.
bool check_refinement(const Cover& fine, const Cover& coarse,
                      const std::map<Label, Label>& psi);

enum class GraphRelation { hasse, all_containments };

std::optional<GraphRelation> parse_graph_relation(const std::string& text);
std::string to_string(GraphRelation relation);

struct Graph {
  std::vector<Face> nodes;
  // Index pairs into `nodes`, smaller face first.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Graph to_graph(const Complex& c, GraphRelation relation = GraphRelation::hasse);

}  // namespace modetopo
