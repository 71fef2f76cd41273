#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's algorithms; results are compared against them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace testsupport {

using Labels = std::vector<std::string>;
using FaceSet = std::set<Labels>;

inline std::string letter(std::size_t i) { return std::string("v") + std::to_string(i); }

/// All non-empty label subsets of `labels` (sorted).
inline std::vector<Labels> all_subsets(const Labels& labels) {
  std::vector<Labels> out;
  const std::size_t n = labels.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Labels pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) pick.push_back(labels[i]);
    }
    std::sort(pick.begin(), pick.end());
    out.push_back(pick);
  }
  return out;
}

/// Closure by enumeration: X is kept iff it lies inside some input face.
inline FaceSet brute_closure(const std::vector<Labels>& maximal) {
  std::set<std::string> verts;
  for (const auto& m : maximal) verts.insert(m.begin(), m.end());
  FaceSet out;
  for (const auto& x : all_subsets(Labels(verts.begin(), verts.end()))) {
    for (const auto& m : maximal) {
      std::set<std::string> ms(m.begin(), m.end());
      if (std::all_of(x.begin(), x.end(), [&](const auto& l) { return ms.count(l) != 0; })) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

/// Nerve by enumeration of every label subset and its common intersection.
inline FaceSet brute_nerve(const std::map<std::string, std::set<std::string>>& sets) {
  Labels labels;
  for (const auto& [l, s] : sets) labels.push_back(l);
  FaceSet out;
  for (const auto& x : all_subsets(labels)) {
    std::set<std::string> common = sets.at(x.front());
    for (const auto& l : x) {
      std::set<std::string> next;
      for (const auto& s : common) {
        if (sets.at(l).count(s)) next.insert(s);
      }
      common = std::move(next);
    }
    if (!common.empty()) out.insert(x);
  }
  return out;
}

/// Random list of maximal faces over at most `max_vertices` vertices.
inline std::vector<Labels> random_maximal(std::mt19937& rng, std::size_t max_vertices,
                                          std::size_t max_faces) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> nf(0, max_faces);
  std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
  std::vector<Labels> out;
  const std::size_t count = nf(rng);
  for (std::size_t k = 0; k < count; ++k) {
    const auto m = mask(rng);
    Labels f;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (1u << i)) f.push_back(letter(i));
    }
    out.push_back(f);
  }
  return out;
}

/// Random cover: labels L0..L(k-1), samples s0..s(m-1); every sample lands in
/// at least one set.
inline std::map<std::string, std::set<std::string>> random_cover(std::mt19937& rng,
                                                                 std::size_t max_samples,
                                                                 std::size_t max_labels) {
  std::uniform_int_distribution<std::size_t> ns(1, max_samples), nl(1, max_labels);
  const std::size_t samples = ns(rng), labels = nl(rng);
  std::map<std::string, std::set<std::string>> sets;
  for (std::size_t l = 0; l < labels; ++l) sets["L" + std::to_string(l)];
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<std::size_t> pick(0, labels - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string id = "s" + std::to_string(s);
    bool placed = false;
    for (auto& [l, members] : sets) {
      if (coin(rng)) {
        members.insert(id);
        placed = true;
      }
    }
    if (!placed) sets["L" + std::to_string(pick(rng))].insert(id);
  }
  return sets;
}

/// Super-additivity checked over all ordered pairs of subsets.
inline bool brute_belief_ok(const std::vector<double>& bel, std::size_t n) {
  if (bel[0] != 0.0) return false;
  const std::size_t m = std::size_t{1} << n;
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t z = 0; z < m; ++z) {
      if (bel[y | z] + bel[y & z] < bel[y] + bel[z] - 1e-9) return false;
    }
  }
  return true;
}

using Q = boost::rational<std::int64_t>;
using GridPoint = std::map<std::string, Q>;

/// Rational points of the simplex on `face` with denominator `den`, all
/// weights listed (zeros included) over `vertices`.
inline std::vector<GridPoint> simplex_grid(const Labels& face, const Labels& vertices, int den) {
  std::vector<GridPoint> out;
  std::vector<int> parts(face.size(), 0);
  // Enumerate compositions of den into |face| non-negative parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == face.size()) {
      parts[i] = left;
      GridPoint p;
      for (const auto& v : vertices) p[v] = 0;
      for (std::size_t k = 0; k < face.size(); ++k) p[face[k]] = Q(parts[k], den);
      out.push_back(p);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      parts[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, den);
  return out;
}

struct P2 {
  double x, y;
};

inline double cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Point-in-convex-hull test with tolerance; hull by monotone chain.
inline bool in_hull(std::vector<P2> pts, const P2& q, double tol = 1e-9) {
  std::sort(pts.begin(), pts.end(),
            [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  auto seg_dist = [](const P2& a, const P2& b, const P2& p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(a.x + t * dx - p.x, a.y + t * dy - p.y);
  };
  std::vector<P2> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  if (hull.size() < 3) {
    // Degenerate: a point or a segment.
    double best = std::hypot(pts.front().x - q.x, pts.front().y - q.y);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, seg_dist(pts[i], pts[j], q));
    }
    return best <= tol;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const P2& a = hull[i];
    const P2& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, q) < -tol && seg_dist(a, b, q) > tol) return false;
  }
  return true;
}

}  // namespace testsupport
