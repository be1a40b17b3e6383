#include "borelss/classify.hpp"

#include <algorithm>

#include "borelss/errors.hpp"

namespace borelss {

namespace {

struct Search {
    const ClassifyOptions& options;
    ClassificationReport& report;
    std::vector<DifferentialPattern> history;

    void visit(const Page& page) {
        if (page.is_final()) {
            if (auto why = survival_violation(page, report.top_degree)) {
                report.rejected.push_back({history, *why});
                return;
            }
            Outcome o;
            o.history = history;
            o.e_infinity = page;
            o.poincare = tot_poincare(page);
            auto extraction = extract_presentation(page, page.group);
            o.presentation = std::move(extraction.presentation);
            o.extension_flags = std::move(extraction.flags);
            report.outcomes.push_back(std::move(o));
            return;
        }
        for (auto& a : enumerate_assignments(page, page.round)) {
            history.push_back(a.pattern);
            if (a.violation) {
                report.rejected.push_back({history, *a.violation});
            } else {
                Page next = turn_page(page, a.pattern);
                if (options.on_turn)
                    options.on_turn(page, a.pattern, next);
                visit(next);
            }
            history.pop_back();
        }
    }
};

// Canonical branch key: bits of every round in order.
std::vector<std::pair<int, std::vector<bool>>> history_key(const std::vector<DifferentialPattern>& h) {
    std::vector<std::pair<int, std::vector<bool>>> key;
    for (const auto& p : h)
        key.emplace_back(p.round, p.coefficients);
    return key;
}

bool imported_parity_case(const FiberRing& fiber) {
    const auto& t = fiber.type_ab();
    return t && is_odd(t->b);
}

}  // namespace

ClassificationReport classify(const FiberRing& fiber, Group group, const ClassifyOptions& options) {
    ClassificationReport report;
    report.fiber = fiber;
    report.group = group;
    report.top_degree = options.top_degree.value_or(fiber.top_degree());

    Page page = build_e2(fiber, group);
    // Rounds below the first candidate carry no differentials.
    const auto rounds = candidate_rounds(fiber, group);
    page.round = rounds.empty() ? kFinalRound : rounds.front();

    Search search{options, report, {}};
    search.visit(page);

    std::sort(report.outcomes.begin(), report.outcomes.end(), [](const Outcome& a, const Outcome& b) {
        return history_key(a.history) < history_key(b.history);
    });
    if (group == Group::Z2) {
        const bool candidate = report.outcomes.size() > 1 || imported_parity_case(fiber);
        for (auto& o : report.outcomes)
            o.index = make_index_result(o.presentation, candidate ? "candidate" : "determined");
    }
    return report;
}

std::string render_history(const std::vector<DifferentialPattern>& history) {
    std::string out;
    for (const auto& p : history)
        out += (out.empty() ? "" : "; ") + p.to_string();
    return out.empty() ? "(no differentials)" : out;
}

}  // namespace borelss
