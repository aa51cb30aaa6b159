// Python bindings for the counting library. Counts are returned as
// Python ints (converted through decimal strings, so they stay exact at
// any size); spectra travel as plain lists indexed by label.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/search.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

py::int_ to_py(const ExactCount& x) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(to_decimal(x).c_str(), nullptr, 10));
}

int digits_of(size_t size, const char* what) {
    if (size < 2 || !std::has_single_bit(size))
        throw std::invalid_argument(std::string(what) + " list length must be 2^k with k >= 1");
    return static_cast<int>(std::bit_width(size)) - 1;
}

VennSpectrum spectrum_from_list(const std::vector<int>& q) {
    return VennSpectrum{digits_of(q.size(), "spectrum"), q};
}

EngineOptions make_options(std::uint64_t budget, int workers, std::optional<int> k_cutoff) {
    EngineOptions opt;
    opt.budget = budget;
    opt.workers = workers;
    opt.k_cutoff = k_cutoff;
    return opt;
}

py::dict report_to_dict(const EngineReport& report) {
    py::dict d;
    d["engine"] = report.engine;
    d["n"] = report.n;
    d["n_w"] = to_py(report.n_w);
    d["total"] = to_py(report.total);
    d["is_witness"] = report.n_w == report.total;
    d["objects"] = report.objects;
    d["max_k"] = report.max_k;
    py::list per_k;
    for (auto& term : report.per_k) per_k.append(to_py(term));
    d["per_k"] = per_k;
    if (report.no_w_witness) d["no_w_witness"] = *report.no_w_witness;
    d["seconds"] = report.seconds;
    return d;
}

EngineId parse_engine(const std::string& name) {
    auto id = engine_from_name(name);
    if (!id) throw std::invalid_argument("unknown engine '" + name + "'");
    return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counts of r-subset distributions with monochromatic P_i-subsets";

    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);
    py::register_exception<UnrealizableSpectrum>(m, "UnrealizableSpectrumError", PyExc_ValueError);

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def(py::init<int, int, std::vector<int>>(), py::arg("t"), py::arg("r"), py::arg("p"))
        .def_readonly("t", &ProblemSpec::t)
        .def_readonly("r", &ProblemSpec::r)
        .def_readonly("p", &ProblemSpec::p)
        .def("__repr__", [](const ProblemSpec& s) {
            std::ostringstream out;
            out << "ProblemSpec(t=" << s.t << ", r=" << s.r << ", p=[";
            for (size_t i = 0; i < s.p.size(); ++i) out << (i ? "," : "") << s.p[i];
            out << "])";
            return out.str();
        });

    py::class_<Event>(m, "Event")
        .def(py::init([](int box, VertexSet vertices) {
                 return Event{box, std::move(vertices)};
             }),
             py::arg("box"), py::arg("vertices"))
        .def_readonly("box", &Event::box)
        .def_readonly("vertices", &Event::vertices)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Event& e) {
            std::ostringstream out;
            out << "Event(box=" << e.box << ", vertices=[";
            for (size_t i = 0; i < e.vertices.size(); ++i) out << (i ? "," : "") << e.vertices[i];
            out << "])";
            return out.str();
        });

    m.def("binom", [](long n, long k) { return to_py(binom(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("rank_rsubset", &rank_rsubset, py::arg("s"), py::arg("n"), py::arg("r"));
    m.def("unrank_rsubset", &unrank_rsubset, py::arg("idx"), py::arg("n"), py::arg("r"));
    m.def("enumerate_events", &enumerate_events, py::arg("spec"), py::arg("n"));

    m.def("venn_spectrum",
          [](const std::vector<VertexSet>& sets, int n) { return venn_spectrum_of(sets, n).q; },
          py::arg("sets"), py::arg("n"));
    m.def("p_from_q",
          [](const std::vector<int>& q, const std::vector<int>& positions) {
              return p_from_q(spectrum_from_list(q), positions);
          },
          py::arg("q"), py::arg("positions"));
    m.def("q_from_p",
          [](const std::vector<int>& p) {
              IntersectionSpectrum ispec{digits_of(p.size(), "intersection"), p};
              return q_from_p(ispec).q;
          },
          py::arg("p"),
          "Invert an intersection spectrum (indexed by position mask, entry 0 = n) "
          "to Venn-part cardinalities.");
    m.def("is_compatible",
          [](const EventTuple& tuple, int r) { return is_compatible(tuple, r); },
          py::arg("tuple"), py::arg("r"));
    m.def("check_spectrum_constraints",
          [](const std::vector<int>& q, const std::vector<int>& type, const ProblemSpec& spec,
             int n) {
              return check_spectrum_constraints(spectrum_from_list(q), TupleType{type}, spec, n);
          },
          py::arg("q"), py::arg("type"), py::arg("spec"), py::arg("n"));

    m.def("tuple_value",
          [](const EventTuple& tuple, const ProblemSpec& spec, int n) {
              return to_py(tuple_value(tuple, spec, n));
          },
          py::arg("tuple"), py::arg("spec"), py::arg("n"));
    m.def("frequency",
          [](const std::vector<int>& q) { return to_py(frequency(spectrum_from_list(q))); },
          py::arg("q"));
    m.def("kmax_upper_bound",
          [](const ProblemSpec& spec, int n) { return to_py(kmax_upper_bound(spec, n)); },
          py::arg("spec"), py::arg("n"));
    m.def("w_holds", &w_holds, py::arg("coloring"), py::arg("spec"), py::arg("n"));

    auto def_engine = [&m](const char* name, EngineId id) {
        m.def(name,
              [id](const ProblemSpec& spec, int n, std::uint64_t budget, int workers,
                   std::optional<int> k_cutoff) {
                  return to_py(engine_report(id, spec, n, make_options(budget, workers, k_cutoff)).n_w);
              },
              py::arg("spec"), py::arg("n"), py::kw_only(), py::arg("budget") = kDefaultBudget,
              py::arg("workers") = 1, py::arg("k_cutoff") = std::nullopt);
    };
    def_engine("brute_force_nw", EngineId::brute);
    def_engine("direct_ie_nw", EngineId::direct);
    def_engine("spectrum_nw", EngineId::spectrum);

    m.def("compute",
          [](const ProblemSpec& spec, int n, const std::string& engine, std::uint64_t budget,
             int workers, std::optional<int> k_cutoff) {
              return report_to_dict(
                  engine_report(parse_engine(engine), spec, n, make_options(budget, workers, k_cutoff)));
          },
          py::arg("spec"), py::arg("n"), py::kw_only(), py::arg("engine") = "direct",
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1,
          py::arg("k_cutoff") = std::nullopt);

    m.def("is_ramsey_witness",
          [](const ProblemSpec& spec, int n, const std::string& engine, std::uint64_t budget,
             int workers) {
              return is_ramsey_witness(spec, n, parse_engine(engine),
                                       make_options(budget, workers, std::nullopt));
          },
          py::arg("spec"), py::arg("n"), py::kw_only(), py::arg("engine") = "brute",
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

    m.def("ramsey_number",
          [](const ProblemSpec& spec, int n_max, const std::string& engine, std::uint64_t budget,
             int workers) -> py::object {
              auto result = ramsey_number(spec, n_max, parse_engine(engine),
                                          make_options(budget, workers, std::nullopt));
              if (!result.ramsey_n) return py::none();
              return py::int_(*result.ramsey_n);
          },
          py::arg("spec"), py::arg("n_max"), py::kw_only(), py::arg("engine") = "brute",
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

    m.def("search",
          [](const ProblemSpec& spec, int n_max, const std::string& engine, std::uint64_t budget,
             int workers) {
              auto result = ramsey_number(spec, n_max, parse_engine(engine),
                                          make_options(budget, workers, std::nullopt));
              py::dict d;
              d["ramsey_n"] = result.ramsey_n ? py::object(py::int_(*result.ramsey_n))
                                              : py::object(py::none());
              py::list scan;
              for (auto& report : result.per_n) scan.append(report_to_dict(report));
              d["scan"] = scan;
              if (result.witness && result.witness_n) {
                  d["witness_n"] = *result.witness_n;
                  d["witness_coloring"] = *result.witness;
              }
              return d;
          },
          py::arg("spec"), py::arg("n_max"), py::kw_only(), py::arg("engine") = "brute",
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

    m.def("cross_validate",
          [](const ProblemSpec& spec, int n, std::uint64_t budget, int workers) {
              auto result = cross_validate(spec, n, make_options(budget, workers, std::nullopt));
              py::dict d;
              d["n"] = result.n;
              d["agree"] = result.agree;
              py::list engines;
              for (auto& report : result.reports) engines.append(report_to_dict(report));
              d["engines"] = engines;
              d["failures"] = result.failures;
              d["kmax_bound"] = to_py(result.kmax_bound);
              d["realized_max_k"] = result.realized_max_k;
              return d;
          },
          py::arg("spec"), py::arg("n"), py::kw_only(), py::arg("budget") = kDefaultBudget,
          py::arg("workers") = 1);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
