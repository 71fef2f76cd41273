#include "doctest.h"

#include "modetopo/modes.hpp"
#include "support.hpp"

using namespace modetopo;

namespace {

ComplexPtr share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

ComplexPtr triangle() {
  static const ComplexPtr c = share(complex_from_maximal_faces({Face{"alpha", "beta", "gamma"}}));
  return c;
}

std::vector<EventKind> kinds(const std::vector<TransitionEvent>& events) {
  std::vector<EventKind> out;
  for (const auto& e : events) out.push_back(e.kind);
  return out;
}

}  // namespace

TEST_CASE("thresholds") {
  CHECK_NOTHROW(Thresholds{}.check());
  CHECK_THROWS_AS((Thresholds{1.0, 0.05}.check()), ModelError);
  CHECK_THROWS_AS((Thresholds{0.2, 0.0}.check()), ModelError);
  CHECK_THROWS_AS((Thresholds{0.9, 0.2}.check()), ModelError);
  CHECK_NOTHROW((Thresholds{0.8, 0.2}.check()));
}

TEST_CASE("mode system metadata and references") {
  const ModeSystem sys(triangle(), {}, {{Face{"alpha"}, {"watch", "observe"}}});
  CHECK(sys.info(Face{"alpha"}).name == "watch");
  CHECK(sys.info(Face{"alpha", "beta"}).name == "alpha+beta");
  CHECK_THROWS_AS(ModeSystem(triangle(), {}, {{Face{"delta"}, {"x", ""}}}), ModelError);
  CHECK_THROWS_AS(ModeSystem(triangle(), {}, {}, {{Face{"delta"}, Thresholds{}}}), ModelError);
  CHECK_THROWS_AS(ModeSystem(triangle(), {}, {}, {}, {Face{"delta"}}), ModelError);
}

TEST_CASE("step examples") {
  const ModeSystem sys(triangle(), Thresholds{0.2, 0.05});
  SUBCASE("dropping a vertex") {
    const BarycentricPoint p(triangle(), {{"alpha", 0.9}, {"beta", 0.1}});
    const auto r = step(sys, Face{"alpha", "beta"}, p, 7);
    CHECK(r.current == Face{"alpha"});
    REQUIRE(r.events.size() == 1);
    CHECK(r.events[0] == TransitionEvent{7, EventKind::transition, Face{"alpha", "beta"},
                                         Face{"alpha"}, ""});
  }
  SUBCASE("stationary at a vertex") {
    for (double tau : {0.0, 0.2, 0.9}) {
      const ModeSystem s(triangle(), Thresholds{tau, std::min(0.05, 1.0 - tau)});
      const auto r = step(s, Face{"alpha"}, BarycentricPoint::vertex(triangle(), "alpha"), 1);
      CHECK(r.current == Face{"alpha"});
      CHECK(r.events.empty());
    }
  }
  SUBCASE("joining an edge close to the threshold") {
    const BarycentricPoint p(triangle(), {{"alpha", 0.78}, {"beta", 0.22}});
    const auto r = step(sys, Face{"alpha"}, p, 3);
    CHECK(r.current == Face{"alpha", "beta"});
    REQUIRE(r.events.size() == 2);
    CHECK(r.events[0].kind == EventKind::transition);
    CHECK(r.events[1] == TransitionEvent{3, EventKind::warn_drop, Face{"alpha", "beta"},
                                         Face{"alpha"}, ""});
  }
  SUBCASE("warn-add names the anticipated face") {
    const BarycentricPoint p(triangle(), {{"alpha", 0.82}, {"beta", 0.18}});
    const auto r = step(sys, Face{"alpha"}, p, 4);
    CHECK(r.current == Face{"alpha"});
    REQUIRE(r.events.size() == 1);
    CHECK(r.events[0] == TransitionEvent{4, EventKind::warn_add, Face{"alpha"},
                                         Face{"alpha", "beta"}, ""});
  }
  SUBCASE("initial placement") {
    const auto r = step(sys, std::nullopt, BarycentricPoint::vertex(triangle(), "gamma"), 0);
    REQUIRE(r.events.size() == 1);
    CHECK_FALSE(r.events[0].from.has_value());
    CHECK(r.events[0].to == Face{"gamma"});
  }
  SUBCASE("point on another complex") {
    auto other = share(complex_from_maximal_faces({Face{"alpha", "beta"}}));
    CHECK_THROWS_AS(step(sys, std::nullopt, BarycentricPoint::vertex(other, "alpha"), 0),
                    ModelError);
  }
}

TEST_CASE("step invariants on random points") {
  auto tetra = share(complex_from_maximal_faces({Face{"a", "b", "c", "d"}, Face{"d", "e"}}));
  const ModeSystem sys(tetra, Thresholds{0.2, 0.05});
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::optional<Face> prev;
  for (int i = 0; i < 500; ++i) {
    std::map<Label, double> w;
    if (u(rng) < 0.2) {
      const double t = u(rng);
      w = {{"d", t}, {"e", 1 - t}};
    } else {
      double total = 0;
      for (const char* l : {"a", "b", "c", "d"}) total += (w[l] = u(rng) < 0.3 ? 0.0 : u(rng));
      if (total == 0) continue;
      for (auto& [l, v] : w) v /= total;
    }
    const BarycentricPoint p(tetra, w);
    const auto r = step(sys, prev, p, i);
    if (r.current) CHECK(tetra->contains(*r.current));
    CHECK(r.current == active_set(p, 0.2));
    for (const auto& e : r.events) {
      if (e.kind == EventKind::transition) CHECK(e.from != e.to);
    }
    prev = r.current;
  }
}

TEST_CASE("per-face overrides govern exit from that face") {
  const ModeSystem sys(triangle(), Thresholds{0.2, 0.05},
                       {}, {{Face{"alpha"}, Thresholds{0.3, 0.05}}});
  const BarycentricPoint p(triangle(), {{"alpha", 0.75}, {"beta", 0.25}});
  CHECK(step(sys, Face{"alpha"}, p, 0).current == Face{"alpha"});
  CHECK(step(sys, Face{"beta"}, p, 0).current == Face{"alpha", "beta"});
}

TEST_CASE("latched faces") {
  auto line = share(complex_from_maximal_faces({Face{"monitor", "intervene"}}));
  const ModeSystem sys(line, Thresholds{0.2, 0.05}, {}, {}, {Face{"intervene"}});
  const auto r = step(sys, Face{"intervene"}, BarycentricPoint::vertex(line, "monitor"), 9);
  CHECK(r.current == Face{"intervene"});
  // The held face still raises its warn events after the violation.
  REQUIRE_FALSE(r.events.empty());
  CHECK(r.events[0].kind == EventKind::latch_violation);
  CHECK(r.events[0].to == Face{"monitor"});
  const auto enter = step(sys, Face{"monitor"}, BarycentricPoint::vertex(line, "intervene"), 10);
  CHECK(enter.current == Face{"intervene"});
  CHECK(kinds(enter.events) == std::vector<EventKind>{EventKind::transition});
}

TEST_CASE("run") {
  const ModeSystem sys(triangle(), Thresholds{0.2, 0.05});
  const Cover cover({{"alpha", {"s", "t"}}, {"beta", {"t", "u"}}});
  auto pou = tabulated_partition(
      cover, {{"s", {{"alpha", 1.0}}}, {"t", {{"alpha", 0.5}, {"beta", 0.5}}}, {"u", {{"beta", 1.0}}}});
  pou.complex = triangle();
  using Obs = Observation<std::string>;
  SUBCASE("empty stream") {
    const auto r = run(sys, pou, std::span<const Obs>{});
    CHECK(r.trajectory.size() == 0);
    CHECK(r.events.empty());
    CHECK_FALSE(r.error);
  }
  SUBCASE("constant evidence") {
    const std::vector<Obs> obs{{0, "t"}, {1, "t"}, {2, "t"}, {5, "t"}};
    const auto r = run(sys, pou, std::span<const Obs>(obs));
    CHECK(r.trajectory.size() == 4);
    REQUIRE(r.events.size() == 1);
    CHECK(r.events[0].to == Face{"alpha", "beta"});
  }
  SUBCASE("path across the edge") {
    const std::vector<Obs> obs{{0, "s"}, {1, "t"}, {2, "u"}};
    const auto r = run(sys, pou, std::span<const Obs>(obs));
    CHECK(r.events.size() == 3);
    CHECK(r.faces.back() == Face{"beta"});
    const auto again = run(sys, pou, std::span<const Obs>(obs));
    CHECK(again.events == r.events);
  }
  SUBCASE("non-increasing tick aborts with partial output") {
    const std::vector<Obs> obs{{0, "s"}, {4, "t"}, {4, "u"}};
    const auto r = run(sys, pou, std::span<const Obs>(obs));
    CHECK(r.trajectory.size() == 2);
    REQUIRE(r.error);
    CHECK(r.error->tick == 4);
  }
  SUBCASE("evaluation failure aborts at its tick") {
    const std::vector<Obs> obs{{0, "s"}, {3, "missing"}};
    const auto r = run(sys, pou, std::span<const Obs>(obs));
    CHECK(r.trajectory.size() == 1);
    REQUIRE(r.error);
    CHECK(r.error->tick == 3);
  }
}

TEST_CASE("add_shadow on the star") {
  const Complex star = complex_from_maximal_faces({Face{"a", "b"}, Face{"a", "c"}});
  const Complex out = add_shadow(star, "a", "a2");
  CHECK(is_valid(out));
  std::set<Face> added;
  for (const auto& f : out.faces()) {
    if (!star.contains(f)) added.insert(f);
  }
  const std::set<Face> expected{Face{"a2"},      Face{"a2", "b"},      Face{"a2", "c"},
                                Face{"a", "a2"}, Face{"a", "a2", "b"}, Face{"a", "a2", "c"}};
  CHECK(added == expected);
  CHECK(out.size() == star.size() + expected.size());
}

TEST_CASE("add_shadow edge cases") {
  const Complex point = complex_from_maximal_faces({Face{"a"}});
  const Complex out = add_shadow(point, "a", "b");
  CHECK(out == complex_from_maximal_faces({Face{"a", "b"}}));
  CHECK_THROWS_AS(add_shadow(point, "z", "b"), ModelError);
  CHECK_THROWS_AS(add_shadow(out, "a", "b"), ModelError);
}

TEST_CASE("add_shadow face-count law") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = testsupport::random_maximal(rng, 5, 4);
    if (raw.empty()) continue;
    std::vector<Face> faces;
    for (const auto& r : raw) faces.emplace_back(r);
    const Complex c = complex_from_maximal_faces(faces);
    const Label alpha = c.vertices().front();
    std::size_t k = 0;
    for (const auto& f : c.faces()) k += f.contains(alpha);
    const Complex out = add_shadow(c, alpha, "shadow");
    CHECK(is_valid(out));
    CHECK(out.size() == c.size() + 2 * k);
    // Brute force: every face of the output maps into c when the shadow is
    // identified with alpha.
    for (const auto& f : out.faces()) {
      std::vector<Label> image;
      for (const auto& l : f.labels()) image.push_back(l == "shadow" ? alpha : l);
      CHECK(c.contains(Face(image)));
    }
  }
}

TEST_CASE("double shadowing commutes up to relabelling") {
  const Complex c = complex_from_maximal_faces({Face{"a", "b", "c"}, Face{"c", "d"}});
  const Complex one = add_shadow(add_shadow(c, "a", "x"), "a", "y");
  const Complex two = add_shadow(add_shadow(c, "a", "y"), "a", "x");
  CHECK(one == two);
  std::set<Face> swapped;
  for (const auto& f : one.faces()) {
    std::vector<Label> l;
    for (const auto& v : f.labels()) l.push_back(v == "x" ? "y" : v == "y" ? "x" : v);
    swapped.insert(Face(l));
  }
  CHECK(Complex(swapped) == one);
}

TEST_CASE("oracle monitor") {
  SUBCASE("limit three") {
    OracleMonitor mon{{}, {{"records", 3}}, std::nullopt};
    bool alarm = false;
    for (int i = 1; i <= 3; ++i) {
      std::tie(mon, alarm) = record_oracle_call(std::move(mon), "records");
      CHECK_FALSE(alarm);
    }
    std::tie(mon, alarm) = record_oracle_call(std::move(mon), "records");
    CHECK(alarm);
    CHECK(mon.count("records") == 4);
  }
  SUBCASE("limit zero") {
    auto [mon, alarm] = record_oracle_call(OracleMonitor{{}, {{"x", 0}}, std::nullopt}, "x");
    CHECK(alarm);
  }
  SUBCASE("no limit") {
    OracleMonitor mon;
    bool alarm = false;
    for (int i = 0; i < 1000; ++i) {
      std::tie(mon, alarm) = record_oracle_call(std::move(mon), "anything");
      CHECK_FALSE(alarm);
    }
  }
  SUBCASE("default limit") {
    OracleMonitor mon{{}, {}, 1};
    CHECK_FALSE(record_oracle_call(mon, "q").second);
    mon.counts["q"] = 1;
    CHECK(record_oracle_call(mon, "q").second);
  }
}
