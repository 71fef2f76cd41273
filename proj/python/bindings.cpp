#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "modetopo/cli.hpp"
#include "modetopo/report.hpp"
#include "modetopo/scenarios.hpp"

namespace py = pybind11;
using namespace modetopo;

namespace {

using Faces = std::vector<std::vector<Label>>;
using Weights = std::map<Label, double>;

ComplexPtr closed(const Faces& maximal) {
  return std::make_shared<const Complex>(complex_from_maximal_faces(maximal));
}

Faces listing(const std::vector<Face>& faces) {
  Faces out;
  for (const auto& f : faces) out.push_back(f.labels());
  return out;
}

Faces all_faces(const Complex& c) {
  return listing(std::vector<Face>(c.faces().begin(), c.faces().end()));
}

std::optional<std::vector<Label>> labels_or_none(const std::optional<Face>& f) {
  if (!f) return std::nullopt;
  return f->labels();
}

py::dict event_dict(const TransitionEvent& e) {
  py::dict d;
  d["tick"] = e.tick;
  d["kind"] = to_string(e.kind);
  d["from"] = labels_or_none(e.from);
  d["to"] = labels_or_none(e.to);
  d["detail"] = e.detail;
  return d;
}

template <class F>
py::tuple captured(F f) {
  std::ostringstream out, err;
  const int status = f(out, err);
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mode complexes, belief points and the transition engine.";

  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("closure", [](const Faces& maximal) { return all_faces(*closed(maximal)); },
        py::arg("maximal_faces"), "All faces of the complex generated by the given faces.");
  m.def("census", [](const Faces& maximal) { return face_census(*closed(maximal)); },
        py::arg("maximal_faces"));
  m.def("maximal_faces", [](const Faces& faces) { return listing(closed(faces)->maximal_faces()); },
        py::arg("faces"));
  m.def("is_valid",
        [](const Faces& faces) {
          std::set<Face> set;
          for (const auto& f : faces) set.insert(Face(f));
          return is_valid(Complex(std::move(set)));
        },
        py::arg("faces"), "True iff the face family is closed under taking non-empty subsets.");
  m.def("nerve",
        [](const std::map<Label, std::set<std::string>>& sets) {
          return listing(nerve(Cover(sets)).maximal_faces());
        },
        py::arg("sets"), "Maximal faces of the nerve of a cover given as label -> samples.");
  m.def("graph",
        [](const Faces& maximal, const std::string& relation) {
          const auto rel = parse_graph_relation(relation);
          if (!rel) throw FormatError("unknown relation '" + relation + "'");
          const Graph g = to_graph(*closed(maximal), *rel);
          return py::make_tuple(listing(g.nodes), g.edges);
        },
        py::arg("maximal_faces"), py::arg("relation") = "hasse");
  m.def("add_shadow",
        [](const Faces& maximal, const Label& original, const Label& shadow) {
          return all_faces(add_shadow(*closed(maximal), original, shadow));
        },
        py::arg("maximal_faces"), py::arg("original"), py::arg("shadow"));

  m.def("carrier",
        [](const Faces& maximal, const Weights& w) {
          return carrier(BarycentricPoint(closed(maximal), w)).labels();
        },
        py::arg("maximal_faces"), py::arg("weights"));
  m.def("active_set",
        [](const Faces& maximal, const Weights& w, double threshold) {
          return labels_or_none(active_set(BarycentricPoint(closed(maximal), w), threshold));
        },
        py::arg("maximal_faces"), py::arg("weights"), py::arg("threshold"));
  m.def("face_intersection",
        [](const std::vector<Label>& a, const std::vector<Label>& b) {
          return labels_or_none(face_intersection(Face(a), Face(b)));
        },
        py::arg("a"), py::arg("b"));

  m.def("validate_belief",
        [](const std::vector<Label>& frame,
           const std::vector<std::pair<std::vector<Label>, double>>& values) {
          const auto report = validate_belief(BeliefFunction(Frame(frame), values));
          return py::make_tuple(report.valid, report.violations);
        },
        py::arg("frame"), py::arg("values"),
        "Returns (valid, violating pairs). `values` lists (subset, belief) pairs.");
  m.def("belief_from_mass",
        [](const std::vector<Label>& frame,
           const std::vector<std::pair<std::vector<Label>, double>>& masses) {
          const auto b = belief_from_mass(MassFunction(Frame(frame), masses));
          std::vector<std::pair<std::vector<Label>, double>> out;
          for (const auto& [s, v] : b.values()) out.emplace_back(b.frame().labels_of(s), v);
          return out;
        },
        py::arg("frame"), py::arg("masses"));

  m.def("step",
        [](const Faces& maximal, std::optional<std::vector<Label>> prev, const Weights& w,
           double tau, double eta, std::uint64_t tick) {
          auto c = closed(maximal);
          const ModeSystem sys(c, Thresholds{tau, eta});
          std::optional<Face> from;
          if (prev) from = Face(*prev);
          const auto r = step(sys, from, BarycentricPoint(c, w), tick);
          py::list events;
          for (const auto& e : r.events) events.append(event_dict(e));
          return py::make_tuple(labels_or_none(r.current), events);
        },
        py::arg("maximal_faces"), py::arg("prev"), py::arg("weights"), py::arg("tau") = 0.2,
        py::arg("eta") = 0.05, py::arg("tick") = 0);

  m.def("triage_regions",
        [](double x_opp, double x_con, double x_end, double epsilon, double delta) {
          return triage_regions({x_opp, x_con, x_end}, {epsilon, delta}).labels();
        },
        py::arg("x_opp"), py::arg("x_con"), py::arg("x_end"), py::arg("epsilon") = 0.2,
        py::arg("delta") = 0.3);
  m.def("triage_phi",
        [](double x_opp, double x_con, double x_end, double epsilon, double delta) {
          return triage_phi({x_opp, x_con, x_end}, {epsilon, delta}).weights();
        },
        py::arg("x_opp"), py::arg("x_con"), py::arg("x_end"), py::arg("epsilon") = 0.2,
        py::arg("delta") = 0.3);

  m.def("replay",
        [](const std::filesystem::path& config, const std::filesystem::path& evidence) {
          const auto cfg = load_scenario(config);
          const auto result = cli::replay(cfg, load_evidence(evidence));
          py::dict d;
          d["trajectory_csv"] = trajectory_csv(*cfg.complex, result.trajectory);
          d["events_csv"] = events_csv(result.events);
          d["svg"] = trace_svg(*cfg.complex, cfg.layout, result.trajectory);
          py::list events;
          for (const auto& e : result.events) events.append(event_dict(e));
          d["events"] = events;
          d["error"] = result.error ? py::object(py::make_tuple(result.error->tick,
                                                                result.error->message))
                                    : py::object(py::none());
          return d;
        },
        py::arg("config"), py::arg("evidence"));

  m.def("cmd_validate",
        [](const std::filesystem::path& config) {
          return captured([&](auto& o, auto& e) { return cli::cmd_validate(config, o, e); });
        },
        py::arg("config"), "Returns (exit status, stdout, stderr).");
  m.def("cmd_run",
        [](const std::filesystem::path& config, const std::filesystem::path& evidence,
           const std::filesystem::path& out) {
          return captured([&](auto& o, auto& e) { return cli::cmd_run(config, evidence, out, o, e); });
        },
        py::arg("config"), py::arg("evidence"), py::arg("out"));
  m.def("cmd_nerve",
        [](const std::filesystem::path& cover) {
          return captured([&](auto& o, auto& e) { return cli::cmd_nerve(cover, o, e); });
        },
        py::arg("cover"));
  m.def("cmd_graph",
        [](const std::filesystem::path& config, const std::string& relation) {
          return captured([&](auto& o, auto& e) { return cli::cmd_graph(config, relation, o, e); });
        },
        py::arg("config"), py::arg("relation") = "hasse");
}
