#include "borelss/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "borelss/classify.hpp"
#include "borelss/errors.hpp"
#include "borelss/oracle.hpp"
#include "borelss/report.hpp"

namespace borelss {

using nlohmann::json;

namespace {

constexpr int kOracleMaxN = 3;

struct Query {
    std::string group = "z2";
    std::optional<int> n;
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::optional<std::string> fiber_file;
    std::optional<int> top_degree;
    std::optional<int> cap;
    std::string format = "text";
    bool show_rejected = false;
    bool self_check = false;
};

Group parse_group(const std::string& g) {
    if (g == "z2")
        return Group::Z2;
    if (g == "s1")
        return Group::Circle;
    throw InvalidInput("--group must be z2 or s1");
}

// An integer or the words even/odd; returns (value as given, parity).
std::pair<json, Parity> parse_coefficient(const std::string& flag, const std::string& text) {
    if (text == "even")
        return {json("even"), Parity::Even};
    if (text == "odd")
        return {json("odd"), Parity::Odd};
    long long value = 0;
    std::size_t used = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw InvalidInput(flag + " must be an integer or even/odd, got '" + text + "'");
    return {json(value), parity_of(value)};
}

struct Resolved {
    FiberRing fiber;
    Group group;
    ReportInputs inputs;
};

Resolved resolve(const Query& q) {
    Resolved r{FiberRing::point(), parse_group(q.group), {}};
    r.inputs.group = q.group;
    if (q.fiber_file) {
        if (q.n || q.a || q.b)
            throw InvalidInput("--fiber cannot be combined with --n/--a/--b");
        std::ifstream in(*q.fiber_file);
        if (!in)
            throw InvalidInput("cannot read fiber file " + *q.fiber_file);
        std::stringstream buf;
        buf << in.rdbuf();
        r.fiber = fiber_ring_from_json(buf.str());
        r.inputs.fiber_file = *q.fiber_file;
        return r;
    }
    if (!q.n || !q.a || !q.b)
        throw InvalidInput("--n, --a and --b are required (or give --fiber FILE)");
    if (*q.n < 1)
        throw InvalidInput("--n must be a positive integer");
    auto [a_given, a_parity] = parse_coefficient("--a", *q.a);
    auto [b_given, b_parity] = parse_coefficient("--b", *q.b);
    r.fiber = make_type_ab(*q.n, a_parity, b_parity);
    r.inputs.n = *q.n;
    r.inputs.a = a_given;
    r.inputs.b = b_given;
    r.inputs.a_parity = to_string(a_parity);
    r.inputs.b_parity = to_string(b_parity);
    return r;
}

void add_fiber_options(CLI::App* cmd, Query& q, bool with_group = true) {
    if (with_group)
        cmd->add_option("--group", q.group, "Structure group: z2 or s1")->check(CLI::IsMember({"z2", "s1"}));
    cmd->add_option("--n", q.n, "Fiber rows sit in degrees 0, n, 2n, 3n");
    cmd->add_option("--a", q.a, "Coefficient a in v1^2 = a v2 (integer or even/odd)");
    cmd->add_option("--b", q.b, "Coefficient b in v1 v2 = b v3 (integer or even/odd)");
    cmd->add_option("--fiber", q.fiber_file, "Fiber ring description (JSON) instead of a type-(a,b) fiber");
    cmd->add_option("--format", q.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

int cmd_classify(const Query& q, std::ostream& out, std::ostream& err) {
    const Resolved r = resolve(q);
    ClassifyOptions options;
    options.top_degree = q.top_degree;
    const ClassificationReport report = classify(r.fiber, r.group, options);
    if (q.format == "json")
        out << dump_canonical(report_json(report, r.inputs, q.show_rejected));
    else
        out << report_text(report, r.inputs, q.show_rejected);
    if (q.self_check) {
        const int cap = q.cap.value_or(default_oracle_cap(r.fiber, r.group));
        const OracleReport oracle = brute_force_classify(r.fiber, r.group, cap);
        if (!compare_reports(report, oracle)) {
            err << "self-check: engine and oracle disagree (" << report.outcomes.size() << " vs "
                << oracle.outcomes.size() << " outcomes at cap " << cap << ")\n";
            return kExitInconsistent;
        }
    }
    return kExitOk;
}

int cmd_index(const Query& q, std::ostream& out) {
    const Resolved r = resolve(q);
    if (r.group != Group::Z2)
        throw WrongGroup("the mod-2 cohomology index is defined for free Z/2 actions only; use --group z2");
    const ClassificationReport report = classify(r.fiber, r.group);
    const IndexSummary summary = index_summary(report);
    json doc;
    doc["inputs"] = report_json(report, r.inputs, false)["inputs"];
    doc["candidate_indices"] = summary.per_outcome;
    doc["status"] = summary.status;
    doc["verdict"] = report.free_action_possible() ? "free-action-possible" : "no-free-action";
    doc["no_equivariant_map_above"] = summary.bound >= 0 ? json(summary.bound) : json(nullptr);
    if (q.format == "json") {
        out << dump_canonical(doc);
        return kExitOk;
    }
    if (!report.free_action_possible()) {
        out << "no free Z/2 action consistent with the spectral sequence; index undefined\n";
        return kExitOk;
    }
    out << "mod-2 cohomology index (" << summary.status << "):";
    for (int i : summary.per_outcome)
        out << " " << i;
    out << "\nno equivariant map S^m -> X (antipodal action) for m > " << summary.bound << "\n";
    return kExitOk;
}

int cmd_table(const Query& q, std::ostream& out) {
    if (!q.n || *q.n < 1)
        throw InvalidInput("--n must be a positive integer");
    const json table = parity_table(*q.n);
    if (q.format == "json") {
        out << dump_canonical(table);
        return kExitOk;
    }
    out << "type-(a,b) fibers with n = " << *q.n << "\n";
    for (const auto& row : table["rows"]) {
        out << row["group"].get<std::string>() << "  a " << row["a_parity"].get<std::string>() << ", b "
            << row["b_parity"].get<std::string>() << ": " << row["verdict"].get<std::string>();
        if (!row["candidate_indices"].is_null()) {
            out << "  index";
            for (const auto& i : row["candidate_indices"])
                out << " " << i.get<int>();
            out << " (" << row["index_status"].get<std::string>() << ")";
        }
        out << "\n";
        for (const auto& ring : row["rings"])
            out << "    " << ring.get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_oracle_check(const Query& q, std::ostream& out) {
    if (q.n && *q.n > kOracleMaxN)
        throw Refusal("oracle-check is limited to n <= " + std::to_string(kOracleMaxN));
    const Resolved r = resolve(q);
    const int cap = q.cap.value_or(default_oracle_cap(r.fiber, r.group));
    const ClassificationReport engine = classify(r.fiber, r.group);
    const OracleReport oracle = brute_force_classify(r.fiber, r.group, cap);
    const bool match = compare_reports(engine, oracle);
    if (q.format == "json") {
        json doc;
        doc["inputs"] = report_json(engine, r.inputs, false)["inputs"];
        doc["cap"] = cap;
        doc["trusted_degree"] = oracle.trusted_degree;
        doc["engine_outcomes"] = engine.outcomes.size();
        doc["oracle_outcomes"] = oracle.outcomes.size();
        doc["result"] = match ? "MATCH" : "MISMATCH";
        out << dump_canonical(doc);
    } else {
        out << (match ? "MATCH" : "MISMATCH") << ": engine " << engine.outcomes.size() << " outcome(s), oracle "
            << oracle.outcomes.size() << " outcome(s), cap " << cap << ", compared through degree "
            << oracle.trusted_degree << "\n";
    }
    return match ? kExitOk : kExitInconsistent;
}

}  // namespace

json parity_table(int n) {
    json table;
    table["n"] = n;
    table["rows"] = json::array();
    for (Group g : {Group::Z2, Group::Circle}) {
        for (Parity a : {Parity::Even, Parity::Odd}) {
            for (Parity b : {Parity::Even, Parity::Odd}) {
                const ClassificationReport report = classify(make_type_ab(n, a, b), g);
                json row;
                row["group"] = to_string(g);
                row["a_parity"] = to_string(a);
                row["b_parity"] = to_string(b);
                row["verdict"] = report.free_action_possible() ? "free-action-possible" : "none";
                row["rings"] = json::array();
                for (const auto& o : report.outcomes)
                    row["rings"].push_back(o.presentation.to_string());
                if (g == Group::Z2 && report.free_action_possible()) {
                    const IndexSummary s = index_summary(report);
                    row["candidate_indices"] = s.per_outcome;
                    row["index_status"] = s.status;
                } else {
                    row["candidate_indices"] = nullptr;
                    row["index_status"] = nullptr;
                }
                table["rows"].push_back(std::move(row));
            }
        }
    }
    return table;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbit-space cohomology of free Z/2 and circle actions on spaces of cohomology type (a,b)"};
    app.require_subcommand(1);
    Query q;

    auto* classify_cmd = app.add_subcommand("classify", "List every orbit-space ring consistent with the spectral sequence");
    add_fiber_options(classify_cmd, q);
    classify_cmd->add_flag("--show-rejected", q.show_rejected, "Also list rejected branches with their contradiction");
    classify_cmd->add_flag("--self-check", q.self_check, "Cross-check against the brute-force oracle");
    classify_cmd->add_option("--top-degree", q.top_degree, "Degree above which H*(X_G) must vanish");
    classify_cmd->add_option("--cap", q.cap, "Oracle truncation degree for --self-check");

    auto* table_cmd = app.add_subcommand("table", "Verdicts for both groups and all four parity pairs");
    table_cmd->add_option("--n", q.n, "Fiber rows sit in degrees 0, n, 2n, 3n")->required();
    table_cmd->add_option("--format", q.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* index_cmd = app.add_subcommand("index", "Mod-2 cohomology index and sphere-map bound (Z/2)");
    add_fiber_options(index_cmd, q);

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the engine with exhaustive enumeration");
    add_fiber_options(oracle_cmd, q);
    oracle_cmd->add_option("--cap", q.cap, "Truncation degree for the oracle");

    std::vector<std::string> argv_storage{"borelss"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(q, out, err);
        if (table_cmd->parsed())
            return cmd_table(q, out);
        if (index_cmd->parsed())
            return cmd_index(q, out);
        return cmd_oracle_check(q, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
    } catch (const WrongGroup& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UnsupportedShape& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInvalidInput;
}

}  // namespace borelss
