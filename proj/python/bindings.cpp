#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaingame/arena.hpp"
#include "chaingame/game_value.hpp"
#include "chaingame/oracle.hpp"
#include "chaingame/prooflab.hpp"

namespace py = pybind11;
using namespace chaingame;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string run_game_json(const std::string& config) {
  return to_canonical_json(run_game(config_from_json(nlohmann::json::parse(config))));
}

std::string replay_json(const std::string& transcript) {
  return verdict_to_json(replay(parse_transcript(transcript))).dump();
}

std::string prooflab_json(const std::string& transcript) {
  const prooflab::Analysis a = prooflab::analyse(parse_transcript(transcript));
  return prooflab::analysis_to_json(a, prooflab::check_facts(a), prooflab::check_lemmas(a.stats, a.w)).dump();
}

}  // namespace

PYBIND11_MODULE(_chaingame, m) {
  m.doc() = "On-line chain partitions of semi-orders";

  static py::exception<Error> error(m, "ChainGameError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(error, (std::string("parse_error: ") + e.what()).c_str());
    }
  });

  m.def("game_value", &game_value, py::arg("w"));
  m.def("floor_golden_fraction", &floor_golden_fraction, py::arg("z"));
  m.def("solve_ik", [](std::uint64_t w) { return solve_ik(w).xs; }, py::arg("w"));
  m.def("max_x0", [](std::uint64_t w) {
    const auto r = oracle::max_x0(w);
    return py::make_tuple(r.x0, r.certificate);
  }, py::arg("w"));
  m.def("run_game_json", &run_game_json, py::arg("config"));
  m.def("replay_json", &replay_json, py::arg("transcript"));
  m.def("prooflab_json", &prooflab_json, py::arg("transcript"));
  m.def("exhaustive_adversary", [](const std::string& spoiler, std::uint64_t w, const std::string& mode,
                                   std::uint64_t node_cap) {
    const auto r = oracle::exhaustive_adversary(spoiler, w, parse_mode(mode), node_cap);
    py::dict d;
    d["min_chains"] = r.min_chains;
    d["nodes"] = r.nodes;
    d["memo_entries"] = r.memo_entries;
    return d;
  }, py::arg("spoiler"), py::arg("w"), py::arg("mode") = "up_growing", py::arg("node_cap") = 100000000);

  py::class_<SemiOrder>(m, "SemiOrder")
      .def(py::init<>())
      .def("add_point", [](SemiOrder& o, const std::vector<PointId>& down, const std::vector<PointId>& up) {
        return o.add_point(PointSet::of(down), PointSet::of(up));
      }, py::arg("down") = std::vector<PointId>{}, py::arg("up") = std::vector<PointId>{})
      .def("__len__", &SemiOrder::size)
      .def("less", &SemiOrder::less)
      .def("width", &SemiOrder::width)
      .def("down", [](const SemiOrder& o, PointId p) { return o.down(p).ids(); })
      .def("up", [](const SemiOrder& o, PointId p) { return o.up(p).ids(); })
      .def("interval_left_endpoints", [](const SemiOrder& o) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const Rational& r : o.interval_representation().left) out.emplace_back(r.num, r.den);
        return out;
      });
}
