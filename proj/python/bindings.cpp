#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "superperm/analysis.hpp"
#include "superperm/baseline.hpp"
#include "superperm/bead.hpp"
#include "superperm/generator.hpp"
#include "superperm/verifier.hpp"

namespace py = pybind11;
using namespace superperm;

namespace {

py::int_ to_py(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::dict histogram_to_py(const std::map<std::size_t, BigInt>& histogram) {
  py::dict out;
  for (const auto& [len, count] : histogram) out[py::int_(len)] = to_py(count);
  return out;
}

Bead to_bead(const std::vector<int>& core) {
  std::vector<Symbol> symbols;
  symbols.reserve(core.size());
  for (int s : core) {
    if (s < 0 || s > 255) throw std::invalid_argument("symbol index out of range: " + std::to_string(s));
    symbols.push_back(static_cast<Symbol>(s));
  }
  return Bead(std::move(symbols));
}

std::vector<int> from_bead(const Bead& bead) { return {bead.core().begin(), bead.core().end()}; }

std::vector<Symbol> to_symbols(const std::vector<int>& seq, std::size_t n) {
  std::vector<Symbol> out;
  out.reserve(seq.size());
  for (int s : seq) {
    if (s < 0 || static_cast<std::size_t>(s) >= n)
      throw MalformedInput("symbol index " + std::to_string(s) + " outside alphabet of size " + std::to_string(n));
    out.push_back(static_cast<Symbol>(s));
  }
  return out;
}

py::dict stats_to_py(const GenerationStats& stats) {
  py::dict out;
  out["mode"] = stats.mode == GenerationMode::stream ? "stream" : "palindrome";
  out["symbols_emitted"] = to_py(stats.symbols_emitted);
  out["mirror_shift_count"] = to_py(stats.mirror_shift_count);
  out["intersection_histogram"] = histogram_to_py(stats.intersection_histogram);
  out["max_recursion_depth"] = stats.footprint.max_recursion_depth;
  return out;
}

GenerationMode parse_mode(const std::string& mode) {
  if (mode == "stream") return GenerationMode::stream;
  if (mode == "palindrome") return GenerationMode::palindrome_buffer;
  throw std::invalid_argument("mode must be 'stream' or 'palindrome'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mirror-shift superpermutation generator, verifier and analytics";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_ValueError);

  m.def("initial_bead", [](std::size_t n) { return from_bead(initial_bead(n)); }, py::arg("n"));
  m.def("expand", [](const std::vector<int>& core) {
    const auto full = expand(to_bead(core));
    return std::vector<int>(full.begin(), full.end());
  }, py::arg("core"));
  m.def("straight_shift", [](const std::vector<int>& core, std::size_t p) {
    return from_bead(straight_shift(to_bead(core), ShiftPosition(p)));
  }, py::arg("core"), py::arg("p"));
  m.def("straight_unshift", [](const std::vector<int>& core, std::size_t p) {
    return from_bead(straight_unshift(to_bead(core), ShiftPosition(p)));
  }, py::arg("core"), py::arg("p"));
  m.def("mirror_shift", [](const std::vector<int>& core, std::size_t r) {
    return from_bead(mirror_shift(to_bead(core), RingOrder(r)));
  }, py::arg("core"), py::arg("r"));
  m.def("mirror_unshift", [](const std::vector<int>& core, std::size_t r) {
    return from_bead(mirror_unshift(to_bead(core), RingOrder(r)));
  }, py::arg("core"), py::arg("r"));
  m.def("trailing_bead", [](const std::vector<int>& core, std::size_t r) {
    return from_bead(trailing_bead(to_bead(core), RingOrder(r)));
  }, py::arg("core"), py::arg("r"));
  m.def("mirror_sequence", [](std::vector<int> seq) {
    std::reverse(seq.begin(), seq.end());
    return seq;
  }, py::arg("seq"));

  m.def("generate", [](std::size_t n, const std::string& mode) {
    VectorSink sink;
    GenerationStats stats;
    {
      py::gil_scoped_release release;
      stats = generate(GeneratorConfig{n, parse_mode(mode)}, sink);
    }
    const auto& seq = sink.symbols();
    return py::make_tuple(std::vector<int>(seq.begin(), seq.end()), stats_to_py(stats));
  }, py::arg("n"), py::arg("mode") = "stream",
        "Return (sequence, stats) for n symbols; the sequence is materialized.");

  m.def("generate_stats", [](std::size_t n) {
    CountingSink sink;
    GenerationStats stats;
    {
      py::gil_scoped_release release;
      stats = generate(GeneratorConfig{n}, sink);
    }
    py::dict out = stats_to_py(stats);
    out["digest"] = sink.digest();
    return out;
  }, py::arg("n"), "Run the stream generator into a counting sink and return its stats.");

  m.def("verify", [](const std::vector<int>& seq, std::size_t n, bool check_palindrome) {
    const auto r = verify(to_symbols(seq, n), n, check_palindrome);
    py::dict out;
    out["n"] = r.n;
    out["length"] = r.length;
    out["covered"] = r.covered;
    out["complete"] = r.complete;
    out["windows"] = r.windows;
    out["permutation_windows"] = r.permutation_windows;
    out["is_palindrome"] = r.is_palindrome ? py::object(py::bool_(*r.is_palindrome)) : py::object(py::none());
    out["first_missing"] = r.first_missing ? py::object(py::int_(r.first_missing->value)) : py::object(py::none());
    return out;
  }, py::arg("seq"), py::arg("n"), py::arg("check_palindrome") = false);

  m.def("rank_permutation", [](const std::vector<int>& window) -> py::object {
    std::vector<Symbol> symbols;
    for (int s : window) {
      if (s < 0 || static_cast<std::size_t>(s) >= window.size()) return py::none();
      symbols.push_back(static_cast<Symbol>(s));
    }
    const auto rank = rank_permutation(symbols);
    return rank ? py::object(py::int_(rank->value)) : py::object(py::none());
  }, py::arg("window"));
  m.def("unrank_permutation", [](std::uint64_t rank, std::size_t n) {
    const auto perm = unrank_permutation(PermutationRank{rank}, n);
    return std::vector<int>(perm.begin(), perm.end());
  }, py::arg("rank"), py::arg("n"));

  m.def("length_closed_form", [](std::size_t n) { return to_py(length_closed_form(n)); }, py::arg("n"));
  m.def("length_sum_factorials", [](std::size_t n) { return to_py(length_sum_factorials(n)); }, py::arg("n"));
  m.def("intersection_count", [](std::size_t j) { return to_py(intersection_count(j)); }, py::arg("j"));
  m.def("intersections_by_ring_order", [](std::size_t n, std::size_t k) {
    return to_py(intersections_by_ring_order(n, k));
  }, py::arg("n"), py::arg("k"));
  m.def("operation_count", [](std::size_t n) { return to_py(operation_count(n)); }, py::arg("n"));
  m.def("length_report", [](std::size_t n) {
    const auto r = length_report(n);
    py::dict out;
    out["n"] = r.n;
    out["length_closed_form"] = to_py(r.length_closed_form);
    out["length_sum_factorials"] = to_py(r.length_sum_factorials);
    out["bead_count"] = to_py(r.bead_count);
    out["intersection_histogram"] = histogram_to_py(r.intersection_histogram);
    out["operation_count"] = to_py(r.operation_count);
    return out;
  }, py::arg("n"));

  m.def("recursive_superperm", [](std::size_t n) {
    const auto build = recursive_superperm(n);
    return std::vector<int>(build.sequence.begin(), build.sequence.end());
  }, py::arg("n"));
}
