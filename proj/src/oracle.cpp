#include "borelss/oracle.hpp"

#include <algorithm>
#include <set>

#include "borelss/errors.hpp"
#include "borelss/f2_matrix.hpp"

namespace borelss {

namespace {

constexpr std::size_t kMaxCells = 4000;
constexpr std::size_t kMaxSlotsPerRound = 16;

std::vector<int> oracle_rounds(const FiberRing& fiber, Group group) {
    const int st = step(group);
    int span = 0;
    for (const auto& a : fiber.basis())
        for (const auto& b : fiber.basis())
            span = std::max(span, a.degree - b.degree);
    std::vector<int> out;
    for (int r = 2; r <= span + 1; ++r) {
        if (r % st != 0)
            continue;
        bool any = false;
        for (const auto& a : fiber.basis())
            for (const auto& b : fiber.basis())
                any = any || a.degree - b.degree == r - 1;
        if (any)
            out.push_back(r);
    }
    return out;
}

class Search {
  public:
    explicit Search(const TruncatedComplex& complex) : c_(complex) {
        for (std::size_t i = 0; i < c_.cells.size(); ++i)
            at_[{c_.cells[i].k, c_.cells[i].l}] = i;
        report_.cap = c_.cap;
        report_.trusted_degree = c_.trusted_degree();
    }

    OracleReport run() {
        std::vector<bool> alive(c_.cells.size(), true);
        std::vector<std::pair<int, std::vector<bool>>> history;
        descend(0, alive, history);
        return report_;
    }

  private:
    int degree(std::size_t cell) const { return c_.cells[cell].k + c_.cells[cell].l; }

    std::optional<std::size_t> cell_at(int k, int l) const {
        auto it = at_.find({k, l});
        return it == at_.end() ? std::nullopt : std::optional{it->second};
    }

    // Alive cell at a position, as the (0 or 1 element) basis of E_r there.
    std::vector<std::size_t> basis_at(int k, int l, const std::vector<bool>& alive) const {
        auto c = cell_at(k, l);
        if (c && alive[*c])
            return {*c};
        return {};
    }

    // Matrix of d_r at position (k, l) for the current assignment.
    F2Matrix matrix_at(int k, int l, int r, const std::vector<std::optional<std::size_t>>& image,
                       const std::vector<bool>& alive) const {
        const auto src = basis_at(k, l, alive);
        const auto dst = basis_at(k + r, l - r + 1, alive);
        F2Matrix m(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < dst.size(); ++i)
                if (image[src[j]] == dst[i])
                    m.set(i, j, true);
        return m;
    }

    static void toggle(std::set<std::size_t>& s, std::size_t x) {
        if (!s.erase(x))
            s.insert(x);
    }

    // Product of two alive cells in E_r, as a set of alive cells.
    std::set<std::size_t> product(std::size_t p, std::size_t q, const std::vector<bool>& alive) const {
        std::set<std::size_t> out;
        const auto& a = c_.cells[p];
        const auto& b = c_.cells[q];
        for (std::size_t w : c_.fiber.multiply(a.label, b.label)) {
            auto cell = cell_at(a.k + b.k, c_.fiber.degree(w));
            if (cell && alive[*cell])
                toggle(out, *cell);
        }
        return out;
    }

    bool consistent(int r, const std::vector<std::optional<std::size_t>>& image, const std::vector<bool>& alive) const {
        const int trusted = c_.trusted_degree();
        for (std::size_t p = 0; p < c_.cells.size(); ++p) {
            if (!alive[p] || degree(p) + 2 > trusted + 1)
                continue;
            const auto& cp = c_.cells[p];
            const F2Matrix first = matrix_at(cp.k, cp.l, r, image, alive);
            const F2Matrix second = matrix_at(cp.k + r, cp.l - r + 1, r, image, alive);
            if (!(second * first).is_zero())
                return false;
        }
        for (std::size_t p = 0; p < c_.cells.size(); ++p) {
            if (!alive[p])
                continue;
            for (std::size_t q = p; q < c_.cells.size(); ++q) {
                if (!alive[q] || degree(p) + degree(q) > trusted)
                    continue;
                std::set<std::size_t> lhs;
                for (std::size_t cell : product(p, q, alive))
                    if (image[cell])
                        toggle(lhs, *image[cell]);
                std::set<std::size_t> rhs;
                if (image[p])
                    for (std::size_t cell : product(*image[p], q, alive))
                        toggle(rhs, cell);
                if (image[q])
                    for (std::size_t cell : product(p, *image[q], alive))
                        toggle(rhs, cell);
                if (lhs != rhs)
                    return false;
            }
        }
        return true;
    }

    void descend(std::size_t round_index, const std::vector<bool>& alive,
                 std::vector<std::pair<int, std::vector<bool>>>& history) {
        const int trusted = c_.trusted_degree();
        if (round_index == c_.rounds.size()) {
            OracleOutcome o;
            for (std::size_t cell = 0; cell < c_.cells.size(); ++cell) {
                if (!alive[cell] || degree(cell) > trusted)
                    continue;
                if (degree(cell) > c_.top_degree)
                    return;
                ++o.dims[degree(cell)];
            }
            o.assignments = history;
            report_.outcomes.push_back(std::move(o));
            return;
        }
        const int r = c_.rounds[round_index];
        const auto& slots = c_.slots.at(r);
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<bool> bits(slots.size());
            for (std::size_t i = 0; i < slots.size(); ++i)
                bits[i] = (mask >> (slots.size() - 1 - i)) & 1U;

            std::vector<std::optional<std::size_t>> image(c_.cells.size());
            for (std::size_t cell = 0; cell < c_.cells.size(); ++cell) {
                if (!alive[cell])
                    continue;
                const auto& cc = c_.cells[cell];
                for (std::size_t i = 0; i < slots.size(); ++i) {
                    if (!bits[i] || slots[i].source != cc.label)
                        continue;
                    auto target = cell_at(cc.k + r, c_.fiber.degree(slots[i].target));
                    if (target && alive[*target] && c_.cells[*target].label == slots[i].target)
                        image[cell] = target;
                }
            }
            if (!consistent(r, image, alive))
                continue;

            // Assignments that act identically on trusted cells are the same branch.
            std::vector<std::size_t> signature;
            for (std::size_t cell = 0; cell < c_.cells.size(); ++cell)
                if (image[cell] && degree(cell) <= trusted)
                    signature.push_back(cell);
            if (!seen.insert(signature).second)
                continue;

            std::vector<bool> next(c_.cells.size(), false);
            for (std::size_t cell = 0; cell < c_.cells.size(); ++cell) {
                if (!alive[cell])
                    continue;
                const auto& cc = c_.cells[cell];
                const F2Matrix d_in = matrix_at(cc.k - r, cc.l + r - 1, r, image, alive);
                const F2Matrix d_out = matrix_at(cc.k, cc.l, r, image, alive);
                if (!(d_out * d_in).is_zero()) {
                    // Only possible above the trusted degree; those cells are never reported.
                    continue;
                }
                next[cell] = homology_dim(d_in, d_out) == 1;
            }
            history.emplace_back(r, bits);
            descend(round_index + 1, next, history);
            history.pop_back();
        }
    }

    const TruncatedComplex& c_;
    std::map<std::pair<int, int>, std::size_t> at_;
    OracleReport report_;
};

std::vector<std::map<int, int>> sorted_dims(std::vector<std::map<int, int>> dims) {
    std::sort(dims.begin(), dims.end());
    return dims;
}

std::map<int, int> restrict_to(const std::map<int, int>& dims, int limit) {
    std::map<int, int> out;
    for (const auto& [d, v] : dims)
        if (d <= limit && v > 0)
            out[d] = v;
    return out;
}

}  // namespace

int oracle_margin(const FiberRing& fiber, Group group) {
    const auto rounds = oracle_rounds(fiber, group);
    return (rounds.empty() ? 0 : rounds.back()) + step(group);
}

int minimum_oracle_cap(const FiberRing& fiber, Group group) {
    return fiber.top_degree() + oracle_margin(fiber, group);
}

int default_oracle_cap(const FiberRing& fiber, Group group) {
    return 2 * fiber.top_degree() + 2 * oracle_margin(fiber, group);
}

TruncatedComplex truncate_e2(const FiberRing& fiber, Group group, int cap) {
    if (auto v = validate(fiber); !v.empty())
        throw InvalidInput("truncate_e2: invalid fiber ring (" + v.front().message + ")");
    for (const auto& [d, count] : poincare(fiber))
        if (count > 1)
            throw UnsupportedShape("truncate_e2: fiber degree " + std::to_string(d) + " has rank > 1");
    TruncatedComplex c;
    c.fiber = fiber;
    c.group = group;
    c.cap = cap;
    c.top_degree = fiber.top_degree();
    c.margin = oracle_margin(fiber, group);
    if (cap < c.top_degree + c.margin)
        throw InvalidInput("truncate_e2: cap " + std::to_string(cap) + " is below top degree + margin = " +
                           std::to_string(c.top_degree + c.margin));
    const int st = step(group);
    for (std::size_t b = 0; b < fiber.basis().size(); ++b)
        for (int k = 0; k + fiber.degree(b) <= cap; k += st)
            c.cells.push_back({k, fiber.degree(b), b});
    c.rounds = oracle_rounds(fiber, group);
    for (int r : c.rounds) {
        auto& slots = c.slots[r];
        for (std::size_t u = 0; u < fiber.basis().size(); ++u)
            for (std::size_t w = 0; w < fiber.basis().size(); ++w)
                if (fiber.degree(u) - fiber.degree(w) == r - 1)
                    slots.push_back({u, w});
    }
    return c;
}

OracleReport brute_force_classify(const FiberRing& fiber, Group group, int cap) {
    const TruncatedComplex complex = truncate_e2(fiber, group, cap);
    if (complex.cells.size() > kMaxCells)
        throw Refusal("oracle: " + std::to_string(complex.cells.size()) + " cells exceeds the limit of " +
                      std::to_string(kMaxCells));
    for (const auto& [r, slots] : complex.slots)
        if (slots.size() > kMaxSlotsPerRound)
            throw Refusal("oracle: round " + std::to_string(r) + " has too many slots");
    return Search(complex).run();
}

bool compare_reports(const ClassificationReport& engine, const OracleReport& oracle) {
    if (engine.outcomes.size() != oracle.outcomes.size())
        return false;
    std::vector<std::map<int, int>> a, b;
    for (const auto& o : engine.outcomes)
        a.push_back(restrict_to(o.poincare, oracle.trusted_degree));
    for (const auto& o : oracle.outcomes)
        b.push_back(restrict_to(o.dims, oracle.trusted_degree));
    return sorted_dims(a) == sorted_dims(b);
}

bool same_oracle_results(const OracleReport& x, const OracleReport& y) {
    if (x.outcomes.size() != y.outcomes.size())
        return false;
    const int limit = std::min(x.trusted_degree, y.trusted_degree);
    std::vector<std::map<int, int>> a, b;
    for (const auto& o : x.outcomes)
        a.push_back(restrict_to(o.dims, limit));
    for (const auto& o : y.outcomes)
        b.push_back(restrict_to(o.dims, limit));
    return sorted_dims(a) == sorted_dims(b);
}

}  // namespace borelss
