#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hanoigram/cli.hpp"
#include "hanoigram/constructions.hpp"

namespace py = pybind11;

namespace hanoigram::python {

namespace {

std::vector<std::string> codes(const std::vector<MoveSymbol>& moves) {
  std::vector<std::string> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.push_back(to_string(m));
  return out;
}

MoveSymbol move_from_code(const std::string& code) {
  auto m = parse_move(code);
  if (!m) throw py::value_error("invalid move code '" + code + "'");
  return *m;
}

Engine engine_from_name(const std::string& name) {
  auto e = parse_engine(name);
  if (!e) throw py::value_error("unknown engine '" + name + "'");
  return *e;
}

std::string outcome_name(pda::Outcome o) {
  switch (o) {
    case pda::Outcome::EmptyStackHalt:
      return "empty-stack-halt";
    case pda::Outcome::AcceptingStateHalt:
      return "accepting-state-halt";
    case pda::Outcome::Stuck:
      return "stuck";
    case pda::Outcome::StepLimit:
      return "step-limit";
  }
  return "?";
}

}  // namespace

void define_module(py::module_& m) {
  auto base = py::register_exception<Error>(m, "HanoigramError", PyExc_RuntimeError);
  py::register_exception<IllegalMove>(m, "IllegalMove", base.ptr());
  py::register_exception<StepLimitExceeded>(m, "StepLimitExceeded", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InvalidDiscCount>(m, "InvalidDiscCount", base.ptr());

  py::class_<HanoiState>(m, "HanoiState")
      .def(py::init([](std::array<HanoiState::Peg, 3> pegs) { return HanoiState(std::move(pegs)); }),
           py::arg("pegs"))
      .def_property_readonly("pegs", &HanoiState::pegs)
      .def("disc_count", &HanoiState::disc_count)
      .def(py::self == py::self)
      .def("__repr__", [](const HanoiState& s) {
        std::ostringstream os;
        os << "HanoiState(";
        for (std::size_t i = 0; i < 3; ++i) {
          os << (i ? ", " : "") << '[';
          for (std::size_t j = 0; j < s.pegs()[i].size(); ++j) os << (j ? ", " : "") << s.pegs()[i][j];
          os << ']';
        }
        os << ')';
        return os.str();
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("legal", &ValidationReport::legal)
      .def_readonly("failing_index", &ValidationReport::failing_index)
      .def_property_readonly("failure",
                             [](const ValidationReport& r) -> std::optional<std::string> {
                               if (!r.failure) return std::nullopt;
                               return std::string(to_string(*r.failure));
                             })
      .def_readonly("final_solved", &ValidationReport::final_solved)
      .def_readonly("moves_checked", &ValidationReport::moves_checked);

  m.def("initial_state", &initial_state, py::arg("n_discs"));
  m.def(
      "apply_move",
      [](const HanoiState& s, const std::string& code) { return apply_move(s, move_from_code(code)); },
      py::arg("state"), py::arg("move"));
  m.def("is_solved", &is_solved, py::arg("state"), py::arg("n_discs"));
  m.def(
      "validate_sequence",
      [](std::size_t n, const std::vector<std::string>& moves) {
        std::vector<MoveSymbol> parsed;
        for (const auto& c : moves) parsed.push_back(move_from_code(c));
        return validate_sequence(n, parsed);
      },
      py::arg("n_discs"), py::arg("moves"));

  m.def(
      "solve",
      [](std::size_t n, const std::string& engine) { return codes(solve(engine_from_name(engine), n)); },
      py::arg("n_discs"), py::arg("engine") = "grammar");
  m.def(
      "derive_full",
      [](std::size_t n) {
        auto d = cfg::derive_full(build_hanoi_grammar(n), default_derivation_limit(n));
        return py::make_tuple(codes(d.word), d.length);
      },
      py::arg("n_discs"), "Leftmost derivation of the Hanoi grammar: (word, derivation length).");
  m.def(
      "enumerate_language",
      [](std::size_t n, std::size_t bound) {
        std::vector<std::vector<std::string>> out;
        for (const auto& w : cfg::enumerate_language(build_hanoi_grammar(n), bound)) {
          out.push_back(codes(w));
        }
        return out;
      },
      py::arg("n_discs"), py::arg("bound"));
  m.def(
      "run_pda",
      [](std::size_t n, std::optional<std::size_t> step_limit) {
        auto trace = pda::run_to_empty_stack(build_hanoi_pda(n), {}, [](const auto&) {},
                                             step_limit.value_or(default_run_limit(n)));
        std::vector<std::string> emitted;
        for (const auto& s : trace.emitted) emitted.push_back(to_string(s));
        py::dict d;
        d["steps"] = trace.steps;
        d["emitted"] = emitted;
        d["outcome"] = outcome_name(trace.outcome);
        d["max_stack_depth"] = trace.max_stack_depth;
        return d;
      },
      py::arg("n_discs"), py::arg("step_limit") = py::none());
  m.def(
      "is_deterministic",
      [](std::size_t n) { return pda::is_deterministic(build_hanoi_pda(n)).deterministic; },
      py::arg("n_discs"));
  m.def(
      "bfs_optimal",
      [](std::size_t n) {
        auto r = bfs_optimal(n);
        return py::make_tuple(codes(r.moves), r.shortest_path_count);
      },
      py::arg("n_discs"));
  m.def(
      "recursive_solve",
      [](std::size_t n) { return codes(recursive_solve(HanoiInstance{n})); },
      py::arg("n_discs"));
  m.def(
      "cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Run the command-line tool in-process: (exit code, stdout, stderr).");
}

}  // namespace hanoigram::python

PYBIND11_MODULE(_core, m) {  // NOLINT
  m.doc() = "Towers of Hanoi grammar, pushdown automaton and oracles";
  hanoigram::python::define_module(m);
}
