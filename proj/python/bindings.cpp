#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "borelss/cli.hpp"
#include "borelss/classify.hpp"
#include "borelss/errors.hpp"
#include "borelss/oracle.hpp"
#include "borelss/report.hpp"

namespace py = pybind11;
using namespace borelss;

namespace {

Group group_from(const std::string& g) {
    if (g == "z2")
        return Group::Z2;
    if (g == "s1")
        return Group::Circle;
    throw InvalidInput("group must be 'z2' or 's1'");
}

Parity parity_from(const std::string& p) {
    if (p == "even")
        return Parity::Even;
    if (p == "odd")
        return Parity::Odd;
    throw InvalidInput("parity must be 'even' or 'odd'");
}

ReportInputs type_inputs(const std::string& group, int n, const std::string& a, const std::string& b) {
    ReportInputs in;
    in.group = group;
    in.n = n;
    in.a = a;
    in.b = b;
    in.a_parity = a;
    in.b_parity = b;
    return in;
}

FiberRing type_fiber(int n, const std::string& a, const std::string& b) {
    if (n < 1)
        throw InvalidInput("n must be a positive integer");
    return make_type_ab(n, parity_from(a), parity_from(b));
}

std::string classify_type(const std::string& group, int n, const std::string& a, const std::string& b,
                          bool show_rejected) {
    const ClassificationReport report = classify(type_fiber(n, a, b), group_from(group));
    return dump_canonical(report_json(report, type_inputs(group, n, a, b), show_rejected));
}

std::string classify_fiber(const std::string& fiber_json, const std::string& group, bool show_rejected) {
    const ClassificationReport report = classify(fiber_ring_from_json(fiber_json), group_from(group));
    ReportInputs in;
    in.group = group;
    return dump_canonical(report_json(report, in, show_rejected));
}

py::dict index_type(int n, const std::string& a, const std::string& b) {
    const IndexSummary s = index_summary(classify(type_fiber(n, a, b), Group::Z2));
    py::dict d;
    d["candidate_indices"] = s.per_outcome;
    d["status"] = s.status;
    d["no_equivariant_map_above"] = s.bound >= 0 ? py::object(py::int_(s.bound)) : py::object(py::none());
    return d;
}

py::dict oracle_check(const std::string& group, int n, const std::string& a, const std::string& b,
                      std::optional<int> cap) {
    const FiberRing fiber = type_fiber(n, a, b);
    const Group g = group_from(group);
    const int c = cap.value_or(default_oracle_cap(fiber, g));
    const ClassificationReport engine = classify(fiber, g);
    const OracleReport oracle = brute_force_classify(fiber, g, c);
    py::dict d;
    d["match"] = compare_reports(engine, oracle);
    d["cap"] = c;
    d["trusted_degree"] = oracle.trusted_degree;
    d["engine_outcomes"] = engine.outcomes.size();
    d["oracle_outcomes"] = oracle.outcomes.size();
    return d;
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orbit-space cohomology of free Z/2 and circle actions via the Borel spectral sequence";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<UnsupportedShape>(m, "UnsupportedShape", PyExc_ValueError);
    py::register_exception<WrongGroup>(m, "WrongGroup", PyExc_ValueError);
    py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);

    m.def("classify_type", &classify_type, py::arg("group"), py::arg("n"), py::arg("a"), py::arg("b"),
          py::arg("show_rejected") = false, "Report document (JSON text) for a type-(a,b) fiber");
    m.def("classify_fiber", &classify_fiber, py::arg("fiber_json"), py::arg("group"),
          py::arg("show_rejected") = false, "Report document (JSON text) for a fiber ring description");
    m.def("parity_table", [](int n) { return dump_canonical(parity_table(n)); }, py::arg("n"),
          "Eight-row verdict table (JSON text)");
    m.def("index", &index_type, py::arg("n"), py::arg("a"), py::arg("b"), "Mod-2 cohomology index candidates (Z/2)");
    m.def("oracle_check", &oracle_check, py::arg("group"), py::arg("n"), py::arg("a"), py::arg("b"),
          py::arg("cap") = std::nullopt, "Engine versus brute-force oracle");
    m.def("run_cli", &run, py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr)");
}
