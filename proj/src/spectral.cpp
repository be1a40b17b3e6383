#include "borelss/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "borelss/errors.hpp"

namespace borelss {

namespace {

// A nonzero rank-one row in t-exponent units: classes t^j (x) v for begin <= j < end.
struct Span {
    std::size_t basis;
    int begin;
    std::optional<int> end;

    bool contains(int j) const { return j >= begin && (!end || j < *end); }
};

std::optional<Span> span_of(const Page& page, int l) {
    auto it = page.rows.find(l);
    if (it == page.rows.end() || it->second.module.empty())
        return std::nullopt;
    const PageRow& row = it->second;
    if (row.basis.size() != 1 || row.module.summands().size() != 1)
        throw UnsupportedShape("row " + std::to_string(l) + " has rank > 1; the engine handles rank-one rows only");
    const Summand& s = row.module.summands().front();
    const int st = row.module.step();
    Span span{row.basis.front(), s.shift / st, std::nullopt};
    if (s.length)
        span.end = span.begin + *s.length;
    return span;
}

bool alive(const std::optional<Span>& span, int j) {
    return span && span->contains(j);
}

std::string class_name(const FiberRing& fiber, int exponent, std::size_t basis) {
    std::string out;
    if (exponent > 0)
        out = exponent == 1 ? "t" : "t^" + std::to_string(exponent);
    if (basis != fiber.unit() || out.empty())
        out += (out.empty() ? "" : "*") + fiber.name(basis);
    return out;
}

bool has_term(const Combination& c, std::size_t basis) {
    return std::binary_search(c.begin(), c.end(), basis);
}

void require_rank_one(const Page& page) {
    for (const auto& [l, row] : page.rows)
        if (row.basis.size() > 1)
            throw UnsupportedShape("fiber degree " + std::to_string(l) +
                                   " has rank > 1; the engine handles rank-one rows only");
}

int next_round(const Page& page, int r) {
    for (int c : candidate_rounds(page.fiber, page.group))
        if (c > r)
            return c;
    return kFinalRound;
}

void require_matching_slots(const Page& page, const DifferentialPattern& pattern) {
    if (pattern.round != page.round)
        throw PreconditionViolation("pattern is for round " + std::to_string(pattern.round) + " but the page is E_" +
                                    std::to_string(page.round));
    if (pattern.slots != differential_slots(page, page.round) || pattern.coefficients.size() != pattern.slots.size())
        throw PreconditionViolation("pattern slots do not match the slots of this page");
}

}  // namespace

std::string to_string(Group g) {
    return g == Group::Z2 ? "z2" : "s1";
}

int Page::dimension_at(int k, int l) const {
    auto it = rows.find(l);
    return it == rows.end() ? 0 : it->second.module.dimension_at(k);
}

std::optional<std::string> Page::generator(int l) const {
    auto it = rows.find(l);
    if (it == rows.end() || it->second.basis.size() != 1)
        return std::nullopt;
    if (it->second.module.dimension_at(0) == 0)
        return std::nullopt;
    return fiber.name(it->second.basis.front());
}

bool Page::rows_equal(const Page& other) const {
    if (rows.size() != other.rows.size())
        return false;
    for (auto a = rows.begin(), b = other.rows.begin(); a != rows.end(); ++a, ++b)
        if (a->first != b->first || a->second.basis != b->second.basis || !(a->second.module == b->second.module))
            return false;
    return true;
}

std::string Page::describe() const {
    std::ostringstream out;
    out << (is_final() ? std::string("E_inf") : "E_" + std::to_string(round)) << " (" << borelss::to_string(group)
        << ")\n";
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const auto& [l, row] = *it;
        std::string names;
        for (std::size_t b : row.basis)
            names += (names.empty() ? "" : ",") + fiber.name(b);
        out << "  row " << l << " (" << names << "): ";
        if (row.module.empty()) {
            out << "0\n";
            continue;
        }
        for (std::size_t i = 0; i < row.module.summands().size(); ++i) {
            const Summand& s = row.module.summands()[i];
            if (i)
                out << " + ";
            out << "columns " << s.shift;
            if (s.infinite())
                out << ", " << s.shift + row.module.step() << ", ...";
            else if (*s.length > 1)
                out << ".." << s.shift + row.module.step() * (*s.length - 1);
        }
        out << "\n";
    }
    return out.str();
}

bool DifferentialPattern::is_zero() const {
    return std::none_of(coefficients.begin(), coefficients.end(), [](bool c) { return c; });
}

bool DifferentialPattern::acts_on(int source_row) const {
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].source_row == source_row && coefficients[i])
            return true;
    return false;
}

std::string DifferentialPattern::to_string() const {
    std::ostringstream out;
    out << "d_" << round << ":";
    if (slots.empty())
        return out.str() + " (no slots)";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& s = slots[i];
        out << " d(" << s.source << ")=";
        if (coefficients[i])
            out << "t^" << s.t_exponent << "*" << s.target;
        else
            out << "0";
        if (i + 1 < slots.size())
            out << ",";
    }
    return out.str();
}

Page build_e2(const FiberRing& fiber, Group group) {
    if (auto v = validate(fiber); !v.empty())
        throw InvalidInput("build_e2: invalid fiber ring (" + to_string(v.front().kind) + ": " + v.front().message +
                           ")");
    Page page;
    page.round = 2;
    page.group = group;
    page.fiber = fiber;
    for (const auto& [degree, count] : poincare(fiber)) {
        PageRow row;
        row.basis = fiber.basis_in_degree(degree);
        row.module = IntervalModule(step(group), std::vector<Summand>(count, Summand{0, std::nullopt}));
        page.rows.emplace(degree, std::move(row));
    }
    return page;
}

std::vector<int> candidate_rounds(const FiberRing& fiber, Group group) {
    std::set<int> degrees;
    for (const auto& b : fiber.basis())
        degrees.insert(b.degree);
    std::set<int> rounds;
    for (int hi : degrees)
        for (int lo : degrees) {
            const int r = hi - lo + 1;
            if (hi > lo && r >= 2 && r % step(group) == 0)
                rounds.insert(r);
        }
    return {rounds.begin(), rounds.end()};
}

std::vector<int> admissible_rounds(const FiberRing& fiber, Group group) {
    const auto dims = poincare(fiber);
    int n = 0;
    for (const auto& [d, c] : dims)
        if (d > 0) {
            n = d;
            break;
        }
    const std::map<int, int> expected = n > 0 ? std::map<int, int>{{0, 1}, {n, 1}, {2 * n, 1}, {3 * n, 1}}
                                              : std::map<int, int>{};
    if (n == 0 || dims != expected)
        throw UnsupportedShape("admissible_rounds: fiber rows are not at 0, n, 2n, 3n");
    std::vector<int> out;
    for (int r : {n + 1, 2 * n + 1, 3 * n + 1})
        if (r % step(group) == 0)
            out.push_back(r);
    return out;
}

std::vector<DifferentialSlot> differential_slots(const Page& page, int r) {
    require_rank_one(page);
    std::vector<DifferentialSlot> out;
    const int st = step(page.group);
    if (r < 2 || r == kFinalRound || r % st != 0)
        return out;
    const int e = r / st;
    for (const auto& [l, row] : page.rows) {
        const int m = l - r + 1;
        if (m < 0)
            continue;
        const auto source = span_of(page, l);
        const auto target = span_of(page, m);
        if (!source || !target)
            continue;
        const int hit = source->begin + e;
        if (hit < target->begin || !target->contains(hit))
            continue;
        // t^len kills the source generator, so it must kill the image too.
        if (source->end && (!target->end || *source->end + e < *target->end))
            continue;
        out.push_back({r, l, page.fiber.name(source->basis), m, page.fiber.name(target->basis), e});
    }
    return out;
}

std::optional<std::string> find_violation(const Page& page, const DifferentialPattern& pattern) {
    require_matching_slots(page, pattern);
    const FiberRing& fiber = page.fiber;
    const int r = pattern.round;
    const int st = step(page.group);
    if (pattern.slots.empty())
        return std::nullopt;
    const int e = r / st;

    std::map<int, int> out;  // source row -> target row, active slots only
    for (std::size_t i = 0; i < pattern.slots.size(); ++i)
        if (pattern.coefficients[i])
            out[pattern.slots[i].source_row] = pattern.slots[i].target_row;
    auto active = [&](int l) { return out.count(l) > 0; };

    // Leibniz on generator pairs; u == v is the square rule d(u^2) = 0.
    std::vector<int> live_rows;
    for (const auto& [l, row] : page.rows)
        if (l > 0 && span_of(page, l))
            live_rows.push_back(l);
    for (std::size_t a = 0; a < live_rows.size(); ++a) {
        for (std::size_t b = a; b < live_rows.size(); ++b) {
            const int lu = live_rows[a], lv = live_rows[b];
            const Span su = *span_of(page, lu), sv = *span_of(page, lv);
            const int lw = lu + lv;
            const int lt = lw - r + 1;
            if (lt < 0)
                continue;
            const auto target = span_of(page, lt);
            const int pos = su.begin + sv.begin;
            if (!alive(target, pos + e))
                continue;

            const Combination uv = fiber.multiply(su.basis, sv.basis);
            bool lhs = false;
            if (const auto sw = span_of(page, lw); sw && has_term(uv, sw->basis)) {
                if (pos < sw->begin)
                    throw std::logic_error("product of surviving generators is not a cycle");
                lhs = sw->contains(pos) && active(lw);
            }
            bool rhs = false;
            if (active(lu))
                rhs ^= has_term(fiber.multiply(span_of(page, out[lu])->basis, sv.basis), target->basis);
            if (active(lv))
                rhs ^= has_term(fiber.multiply(su.basis, span_of(page, out[lv])->basis), target->basis);
            if (lhs != rhs) {
                const std::string u = fiber.name(su.basis), v = fiber.name(sv.basis);
                const std::string hit = class_name(fiber, pos + e, target->basis);
                const std::string where =
                    " at (" + std::to_string((pos + e) * st) + "," + std::to_string(lt) + ")";
                if (lu == lv)
                    return "square rule: d_" + std::to_string(r) + "(" + u + "^2) = " + (lhs ? hit : "0") +
                           " but must vanish in characteristic 2" + where;
                return "Leibniz: d_" + std::to_string(r) + "(" + u + "*" + v + ") = " + (lhs ? hit : "0") +
                       " but d(" + u + ")*" + v + " + " + u + "*d(" + v + ") = " + (rhs ? hit : "0") + where;
            }
        }
    }

    for (const auto& [l, m] : out) {
        if (!active(m))
            continue;
        const int m2 = out[m];
        const Span s = *span_of(page, l);
        const auto t2 = span_of(page, m2);
        if (alive(t2, s.begin + 2 * e))
            return "d_" + std::to_string(r) + " o d_" + std::to_string(r) + " != 0: d(d(" + fiber.name(s.basis) +
                   ")) = " + class_name(fiber, s.begin + 2 * e, t2->basis);
    }
    return std::nullopt;
}

std::vector<Assignment> enumerate_assignments(const Page& page, int r) {
    if (r != page.round)
        throw PreconditionViolation("enumerate_assignments: page is E_" + std::to_string(page.round) +
                                    ", asked for round " + std::to_string(r));
    const auto slots = differential_slots(page, r);
    if (slots.size() > 20)
        throw UnsupportedShape("round " + std::to_string(r) + " has too many slots to enumerate");
    std::vector<Assignment> out;
    const std::size_t count = std::size_t{1} << slots.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        DifferentialPattern p{r, slots, std::vector<bool>(slots.size())};
        for (std::size_t i = 0; i < slots.size(); ++i)
            p.coefficients[i] = (mask >> (slots.size() - 1 - i)) & 1U;
        auto violation = find_violation(page, p);
        out.push_back({std::move(p), std::move(violation)});
    }
    return out;
}

std::vector<DifferentialPattern> enumerate_patterns(const Page& page, int r) {
    std::vector<DifferentialPattern> out;
    for (auto& a : enumerate_assignments(page, r))
        if (!a.violation)
            out.push_back(std::move(a.pattern));
    return out;
}

Page turn_page(const Page& page, const DifferentialPattern& pattern) {
    if (auto v = find_violation(page, pattern))
        throw PreconditionViolation("turn_page: inconsistent pattern (" + *v + ")");
    const int st = step(page.group);
    Page next = page;
    next.round = next_round(page, page.round);
    if (pattern.slots.empty())
        return next;
    const int e = pattern.round / st;

    for (auto& [l, row] : next.rows) {
        const auto span = span_of(page, l);
        if (!span)
            continue;
        std::optional<int> kernel_start = span->begin;  // nullopt: nothing survives
        std::optional<int> image_start = span->end;     // nullopt: nothing is hit
        for (std::size_t i = 0; i < pattern.slots.size(); ++i) {
            if (!pattern.coefficients[i])
                continue;
            const auto& slot = pattern.slots[i];
            if (slot.source_row == l) {
                const Span target = *span_of(page, slot.target_row);
                if (target.end)
                    kernel_start = std::max(span->begin, *target.end - e);
                else
                    kernel_start.reset();
            }
            if (slot.target_row == l) {
                const int hit = span_of(page, slot.source_row)->begin + e;
                image_start = image_start ? std::min(*image_start, hit) : hit;
            }
        }
        std::vector<Summand> summands;
        if (kernel_start && (!image_start || *image_start > *kernel_start)) {
            Summand s{*kernel_start * st, std::nullopt};
            if (image_start)
                s.length = *image_start - *kernel_start;
            summands.push_back(s);
        }
        row.module = IntervalModule(st, std::move(summands));
    }
    return next;
}

F2Matrix induced_matrix(const Page& page, const DifferentialPattern& pattern, int k, int l) {
    require_matching_slots(page, pattern);
    const int r = pattern.round;
    const int m = l - r + 1;
    const int src_dim = page.dimension_at(k, l);
    const int dst_dim = m >= 0 ? page.dimension_at(k + r, m) : 0;
    F2Matrix d(dst_dim, src_dim);
    if (src_dim == 1 && dst_dim == 1 && pattern.acts_on(l))
        d.set(0, 0, true);
    return d;
}

std::optional<std::string> survival_violation(const Page& page, int top_degree) {
    for (const auto& [l, row] : page.rows) {
        std::string names;
        for (std::size_t b : row.basis)
            names += (names.empty() ? "" : ",") + page.fiber.name(b);
        for (const Summand& s : row.module.summands()) {
            if (s.infinite())
                return "survival: row " + std::to_string(l) + " (" + names +
                       ") survives to E_inf as an infinite line, but H^j(X_G) must vanish above degree " +
                       std::to_string(top_degree);
            const int highest = l + s.shift + row.module.step() * (*s.length - 1);
            if (highest > top_degree)
                return "survival: row " + std::to_string(l) + " (" + names + ") has a class in total degree " +
                       std::to_string(highest) + " above " + std::to_string(top_degree);
        }
    }
    return std::nullopt;
}

bool is_free_admissible(const Page& page, int top_degree) {
    return !survival_violation(page, top_degree).has_value();
}

}  // namespace borelss
