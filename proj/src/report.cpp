#include "borelss/report.hpp"

#include <sstream>

namespace borelss {

using nlohmann::json;

namespace {

json inputs_json(const ClassificationReport& report, const ReportInputs& inputs) {
    json in;
    in["group"] = inputs.group;
    in["n"] = inputs.n;
    in["a"] = inputs.a;
    in["b"] = inputs.b;
    in["a_parity"] = inputs.a_parity;
    in["b_parity"] = inputs.b_parity;
    in["fiber_file"] = inputs.fiber_file;
    in["top_degree"] = report.top_degree;
    in["fiber_poincare"] = json::array();
    for (const auto& [d, v] : poincare(report.fiber))
        in["fiber_poincare"].push_back({{"degree", d}, {"dim", v}});
    return in;
}

std::string describe_inputs(const ClassificationReport& report, const ReportInputs& inputs) {
    std::ostringstream out;
    out << "group " << inputs.group;
    auto scalar = [](const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
    if (!inputs.n.is_null())
        out << ", n = " << inputs.n.dump();
    if (!inputs.a.is_null())
        out << ", a = " << scalar(inputs.a) << " (" << scalar(inputs.a_parity) << ")";
    if (!inputs.b.is_null())
        out << ", b = " << scalar(inputs.b) << " (" << scalar(inputs.b_parity) << ")";
    if (!inputs.fiber_file.is_null())
        out << ", fiber " << inputs.fiber_file.get<std::string>();
    out << ", top degree " << report.top_degree;
    return out.str();
}

}  // namespace

json pattern_json(const std::vector<DifferentialPattern>& history) {
    json out = json::array();
    for (const auto& p : history) {
        json round;
        round["round"] = p.round;
        round["differentials"] = json::array();
        for (std::size_t i = 0; i < p.slots.size(); ++i) {
            const auto& s = p.slots[i];
            round["differentials"].push_back({{"source", s.source},
                                              {"source_row", s.source_row},
                                              {"target", s.target},
                                              {"target_row", s.target_row},
                                              {"t_exponent", s.t_exponent},
                                              {"coefficient", p.coefficients[i] ? 1 : 0}});
        }
        out.push_back(std::move(round));
    }
    return out;
}

json page_json(const Page& page) {
    json out = json::array();
    for (const auto& [l, row] : page.rows) {
        json r;
        r["row"] = l;
        r["basis"] = json::array();
        for (std::size_t b : row.basis)
            r["basis"].push_back(page.fiber.name(b));
        r["summands"] = json::array();
        for (const auto& s : row.module.summands())
            r["summands"].push_back({{"shift", s.shift}, {"length", s.length ? json(*s.length) : json("infinite")}});
        out.push_back(std::move(r));
    }
    return out;
}

json presentation_json(const RingPresentation& pres) {
    json out;
    out["generators"] = json::array();
    for (const auto& g : pres.generators()) {
        json gj{{"name", g.name}, {"degree", g.degree}};
        gj["edge_image"] = g.edge_image ? json(*g.edge_image) : json(nullptr);
        out["generators"].push_back(std::move(gj));
    }
    out["relations"] = pres.relation_strings();
    out["text"] = pres.to_string();
    return out;
}

json report_json(const ClassificationReport& report, const ReportInputs& inputs, bool show_rejected) {
    json doc;
    doc["inputs"] = inputs_json(report, inputs);
    doc["verdict"] = report.free_action_possible() ? "free-action-possible" : "no-free-action";
    doc["outcomes"] = json::array();
    for (const auto& o : report.outcomes) {
        json oj;
        oj["pattern"] = pattern_json(o.history);
        oj["e_infinity"] = page_json(o.e_infinity);
        oj["poincare"] = json::array();
        for (const auto& [d, v] : o.poincare)
            oj["poincare"].push_back({{"degree", d}, {"dim", v}});
        oj["presentation"] = presentation_json(o.presentation);
        oj["extension_flags"] = json::array();
        for (const auto& f : o.extension_flags)
            oj["extension_flags"].push_back({{"product", f.product}, {"candidates", f.candidates}});
        if (o.index)
            oj["index"] = {{"cohomology_index", o.index->cohomology_index},
                           {"no_equivariant_map_above", o.index->no_equivariant_map_above},
                           {"status", o.index->status}};
        else
            oj["index"] = nullptr;
        doc["outcomes"].push_back(std::move(oj));
    }
    if (show_rejected) {
        doc["rejected"] = json::array();
        for (const auto& r : report.rejected)
            doc["rejected"].push_back({{"pattern", pattern_json(r.history)}, {"reason", r.reason}});
    }
    doc["warnings"] = report.fiber.warnings();
    return doc;
}

std::string report_text(const ClassificationReport& report, const ReportInputs& inputs, bool show_rejected) {
    std::ostringstream out;
    out << "classify: " << describe_inputs(report, inputs) << "\n";
    for (const auto& w : report.fiber.warnings())
        out << "warning: " << w << "\n";
    if (!report.free_action_possible()) {
        out << "verdict: no free action consistent with the spectral sequence; G can not act freely on X\n";
    } else {
        out << "verdict: free action possible, " << report.outcomes.size() << " candidate orbit-space ring"
            << (report.outcomes.size() == 1 ? "" : "s") << "\n";
    }
    for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
        const auto& o = report.outcomes[i];
        out << "\noutcome " << i + 1 << "\n";
        out << "  differentials: " << render_history(o.history) << "\n";
        std::istringstream page(o.e_infinity.describe());
        for (std::string line; std::getline(page, line);)
            out << "  " << line << "\n";
        out << "  poincare:";
        for (const auto& [d, v] : o.poincare)
            out << " H^" << d << "=" << v;
        out << "\n  H*(X/G) = " << o.presentation.to_string() << "\n";
        for (const auto& g : o.presentation.generators())
            if (g.edge_image)
                out << "  edge: i*(" << g.name << ") = " << *g.edge_image << "\n";
        for (const auto& f : o.extension_flags) {
            out << "  extension flag: " << f.product << " = 0 in Tot E_inf; higher-filtration classes {";
            for (std::size_t c = 0; c < f.candidates.size(); ++c)
                out << (c ? ", " : "") << f.candidates[c];
            out << "}\n";
        }
        if (o.index)
            out << "  index: " << o.index->cohomology_index << " (" << o.index->status
                << "); no equivariant map S^m -> X for m > " << o.index->no_equivariant_map_above << "\n";
    }
    if (show_rejected) {
        out << "\nrejected branches: " << report.rejected.size() << "\n";
        for (const auto& r : report.rejected)
            out << "  " << render_history(r.history) << "\n    -> " << r.reason << "\n";
    }
    return out.str();
}

std::string dump_canonical(const json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace borelss
