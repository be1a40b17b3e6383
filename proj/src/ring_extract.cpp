#include "borelss/ring_extract.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "borelss/errors.hpp"
#include "borelss/f2_matrix.hpp"

namespace borelss {

namespace {

int monomial_degree(const std::vector<Generator>& gens, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * gens[i].degree;
    return d;
}

// Cancel repeated monomials mod 2 and sort descending.
Polynomial normalize(Polynomial p) {
    std::sort(p.begin(), p.end());
    Polynomial out;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(p[i]);
        i = j;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Polynomial> canonical_relations(const std::vector<Generator>& gens, std::vector<Polynomial> rels) {
    std::vector<Polynomial> out;
    for (auto& r : rels) {
        Polynomial p = normalize(std::move(r));
        if (!p.empty())
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        const int da = monomial_degree(gens, a.front()), db = monomial_degree(gens, b.front());
        if (da != db)
            return da < db;
        return a > b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All monomials of total degree d, in lexicographic order of exponent vectors.
std::vector<Monomial> monomials_of_degree(const std::vector<Generator>& gens, int d) {
    std::vector<Monomial> out;
    Monomial current(gens.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == gens.size()) {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        for (int e = 0; e * gens[i].degree <= remaining; ++e) {
            current[i] = e;
            rec(i + 1, remaining - e * gens[i].degree);
        }
        current[i] = 0;
    };
    rec(0, d);
    return out;
}

Monomial times(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

// Rows spanning the degree-d part of the relation ideal, over the monomial basis `monos`.
F2Matrix ideal_rows(const RingPresentation& pres, const std::vector<Monomial>& monos, int d) {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = i;
    std::vector<std::vector<std::size_t>> rows;
    for (const Polynomial& rel : pres.relations()) {
        const int rd = pres.degree(rel);
        if (rd > d)
            continue;
        for (const Monomial& mult : monomials_of_degree(pres.generators(), d - rd)) {
            std::vector<std::size_t> row;
            for (const Monomial& term : rel)
                row.push_back(index.at(times(mult, term)));
            rows.push_back(std::move(row));
        }
    }
    F2Matrix m(rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c : rows[r])
            m.flip(r, c);
    return m;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(trim(item));
    return out;
}

}  // namespace

RingPresentation::RingPresentation(std::vector<Generator> generators, std::vector<Polynomial> relations) {
    for (const auto& g : generators)
        if (g.degree <= 0)
            throw InvalidInput("RingPresentation: generator " + g.name + " must have positive degree");
    std::vector<std::size_t> order(generators.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (generators[a].degree != generators[b].degree)
            return generators[a].degree < generators[b].degree;
        return generators[a].name < generators[b].name;
    });
    for (std::size_t i : order)
        generators_.push_back(generators[i]);
    for (std::size_t i = 1; i < generators_.size(); ++i)
        if (generators_[i].name == generators_[i - 1].name)
            throw InvalidInput("RingPresentation: duplicate generator " + generators_[i].name);

    for (auto& rel : relations) {
        for (auto& m : rel) {
            if (m.size() != generators.size())
                throw InvalidInput("RingPresentation: monomial length does not match generator count");
            Monomial reordered(m.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                reordered[i] = m[order[i]];
            m = std::move(reordered);
        }
        for (const auto& m : rel)
            if (monomial_degree(generators_, m) != monomial_degree(generators_, rel.front()))
                throw InvalidInput("RingPresentation: relation is not homogeneous");
    }
    relations_ = canonical_relations(generators_, std::move(relations));
}

RingPresentation RingPresentation::parse(std::vector<Generator> generators, const std::vector<std::string>& relations) {
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name)
                return i;
        throw InvalidInput("RingPresentation::parse: unknown generator '" + name + "'");
    };
    std::vector<Polynomial> rels;
    for (const auto& text : relations) {
        Polynomial poly;
        for (const auto& term : split(text, '+')) {
            Monomial m(generators.size(), 0);
            if (term != "1") {
                for (const auto& factor : split(term, '*')) {
                    const auto caret = factor.find('^');
                    const std::string name = trim(factor.substr(0, caret));
                    int exponent = 1;
                    if (caret != std::string::npos) {
                        try {
                            exponent = std::stoi(factor.substr(caret + 1));
                        } catch (const std::exception&) {
                            throw InvalidInput("RingPresentation::parse: bad exponent in '" + factor + "'");
                        }
                    }
                    m[index_of(name)] += exponent;
                }
            }
            poly.push_back(std::move(m));
        }
        rels.push_back(std::move(poly));
    }
    return RingPresentation(std::move(generators), std::move(rels));
}

std::optional<std::size_t> RingPresentation::find(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

int RingPresentation::degree(const Monomial& m) const {
    return monomial_degree(generators_, m);
}

int RingPresentation::degree(const Polynomial& p) const {
    return p.empty() ? 0 : degree(p.front());
}

std::string RingPresentation::render(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += generators_[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string RingPresentation::render(const Polynomial& p) const {
    std::string out;
    for (const auto& m : p)
        out += (out.empty() ? "" : " + ") + render(m);
    return out.empty() ? "0" : out;
}

std::vector<std::string> RingPresentation::relation_strings() const {
    std::vector<std::string> out;
    for (const auto& r : relations_)
        out.push_back(render(r));
    return out;
}

std::string RingPresentation::to_string() const {
    std::string out = "F2";
    if (!generators_.empty()) {
        out += "[";
        for (std::size_t i = 0; i < generators_.size(); ++i)
            out += (i ? "," : "") + generators_[i].name;
        out += "]";
    }
    if (!relations_.empty()) {
        out += "/(";
        for (std::size_t i = 0; i < relations_.size(); ++i)
            out += (i ? ", " : "") + render(relations_[i]);
        out += ")";
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out += (i ? ", deg " : "; deg ") + generators_[i].name + " = " + std::to_string(generators_[i].degree);
    return out;
}

std::map<int, int> tot_poincare(const Page& e_inf) {
    std::map<int, int> out;
    for (const auto& [l, row] : e_inf.rows) {
        for (const Summand& s : row.module.summands()) {
            if (s.infinite())
                throw PreconditionViolation("tot_poincare: row " + std::to_string(l) + " is infinite");
            for (int i = 0; i < *s.length; ++i)
                ++out[l + s.shift + row.module.step() * i];
        }
    }
    return out;
}

Extraction extract_presentation(const Page& e_inf, Group group) {
    if (group != e_inf.group)
        throw PreconditionViolation("extract_presentation: page was computed for another group");
    if (auto why = survival_violation(e_inf, e_inf.fiber.top_degree()))
        throw PreconditionViolation("extract_presentation: page is not admissible (" + *why + ")");
    const FiberRing& fiber = e_inf.fiber;
    const int st = step(group);

    struct Row {
        int l;
        std::size_t basis;
        int begin;  // t-exponent of the generator
        int length;
        std::string name;
    };
    std::optional<Row> base;
    std::vector<Row> fiber_rows;
    for (const auto& [l, row] : e_inf.rows) {
        if (row.basis.size() > 1)
            throw UnsupportedShape("extract_presentation: row " + std::to_string(l) + " has rank > 1");
        if (row.module.empty())
            continue;
        if (row.module.summands().size() > 1)
            throw UnsupportedShape("extract_presentation: row " + std::to_string(l) + " splits into several summands");
        const Summand& s = row.module.summands().front();
        Row r{l, row.basis.front(), s.shift / st, *s.length, {}};
        if (l == 0)
            base = r;
        else
            fiber_rows.push_back(r);
    }
    if (!base || base->begin != 0)
        throw PreconditionViolation("extract_presentation: the unit does not survive");
    const int p = base->length;
    const bool has_x = p >= 2;
    for (std::size_t i = 0; i < fiber_rows.size(); ++i)
        fiber_rows[i].name = fiber_rows.size() == 1 ? "z" : "z" + std::to_string(i + 1);

    std::vector<Generator> gens;
    if (has_x)
        gens.push_back({"x", st, std::nullopt});
    for (const auto& r : fiber_rows) {
        Generator g{r.name, r.l + r.begin * st, std::nullopt};
        if (r.begin == 0)
            g.edge_image = fiber.name(r.basis);
        gens.push_back(g);
    }
    const RingPresentation skeleton(gens, {});
    const std::size_t width = skeleton.generators().size();
    const std::size_t ix = has_x ? *skeleton.find("x") : 0;
    auto x_pow = [&](int a) {
        Monomial m(width, 0);
        if (has_x)
            m[ix] = a;
        return m;
    };
    auto z_of = [&](const Row& r) { return *skeleton.find(r.name); };

    std::vector<Polynomial> relations;
    std::vector<Monomial> zero_products;
    if (has_x)
        relations.push_back({x_pow(p)});
    for (const auto& r : fiber_rows) {
        if (has_x && r.length < p) {
            Monomial m = x_pow(r.length);
            m[z_of(r)] += 1;
            relations.push_back({m});
            zero_products.push_back(m);
        }
    }
    for (std::size_t i = 0; i < fiber_rows.size(); ++i) {
        for (std::size_t j = i; j < fiber_rows.size(); ++j) {
            const Row &a = fiber_rows[i], &b = fiber_rows[j];
            Monomial prod(width, 0);
            prod[z_of(a)] += 1;
            prod[z_of(b)] += 1;
            const Combination uv = fiber.multiply(a.basis, b.basis);
            const int pos = a.begin + b.begin;
            const Row* hit = nullptr;
            for (const auto& w : fiber_rows)
                if (w.l == a.l + b.l && std::binary_search(uv.begin(), uv.end(), w.basis)) {
                    if (pos < w.begin)
                        throw std::logic_error("extract_presentation: product of generators is not a cycle");
                    if (pos < w.begin + w.length)
                        hit = &w;
                }
            if (hit && (pos == hit->begin || has_x)) {
                Monomial value = x_pow(pos - hit->begin);
                value[z_of(*hit)] += 1;
                relations.push_back({prod, value});
            } else {
                relations.push_back({prod});
                zero_products.push_back(prod);
            }
        }
    }

    Extraction out{RingPresentation(skeleton.generators(), relations), {}};
    const RingPresentation& pres = out.presentation;

    // E_inf basis classes with their filtration (t-exponent).
    struct BasisClass {
        Monomial m;
        int degree;
        int filtration;
    };
    std::vector<BasisClass> classes;
    for (int a = 0; a < p; ++a)
        classes.push_back({x_pow(a), a * st, a});
    for (const auto& r : fiber_rows)
        for (int a = 0; a < r.length && (has_x || a == 0); ++a) {
            Monomial m = x_pow(a);
            m[z_of(r)] += 1;
            classes.push_back({m, r.l + (a + r.begin) * st, a + r.begin});
        }
    auto filtration_of = [&](const Monomial& m) {
        int f = has_x ? m[ix] : 0;
        for (const auto& r : fiber_rows)
            f += m[z_of(r)] * r.begin;
        return f;
    };
    std::vector<std::pair<int, ExtensionFlag>> keyed;
    for (const Monomial& m : zero_products) {
        const int d = pres.degree(m);
        const int f = filtration_of(m);
        std::vector<const BasisClass*> hits;
        for (const auto& c : classes)
            if (c.degree == d && c.filtration > f)
                hits.push_back(&c);
        if (hits.empty())
            continue;
        std::sort(hits.begin(), hits.end(), [](auto* a, auto* b) { return a->filtration < b->filtration; });
        ExtensionFlag flag{pres.render(m), {}};
        for (auto* c : hits)
            flag.candidates.push_back(pres.render(c->m));
        keyed.emplace_back(d, std::move(flag));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.product < b.second.product;
    });
    for (auto& [d, flag] : keyed)
        out.flags.push_back(std::move(flag));
    return out;
}

bool same_presentation(const RingPresentation& lhs, const RingPresentation& rhs) {
    const auto& lg = lhs.generators();
    const auto& rg = rhs.generators();
    if (lg.size() != rg.size())
        return false;
    for (std::size_t i = 0; i < lg.size(); ++i)
        if (lg[i].degree != rg[i].degree)
            return false;
    if (lhs.relations().size() != rhs.relations().size())
        return false;

    // perm[i] = position in lhs of rhs generator i; only equal-degree blocks are permuted.
    std::vector<std::size_t> perm(rg.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < rg.size();) {
        std::size_t j = i;
        while (j < rg.size() && rg[j].degree == rg[i].degree)
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::function<bool(std::size_t)> try_blocks = [&](std::size_t b) -> bool {
        if (b == blocks.size()) {
            std::vector<Polynomial> mapped;
            for (const auto& rel : rhs.relations()) {
                Polynomial p;
                for (const auto& m : rel) {
                    Monomial out(m.size());
                    for (std::size_t i = 0; i < m.size(); ++i)
                        out[perm[i]] = m[i];
                    p.push_back(std::move(out));
                }
                mapped.push_back(std::move(p));
            }
            return canonical_relations(lg, std::move(mapped)) == lhs.relations();
        }
        auto [first, last] = blocks[b];
        std::sort(perm.begin() + first, perm.begin() + last);
        do {
            if (try_blocks(b + 1))
                return true;
        } while (std::next_permutation(perm.begin() + first, perm.begin() + last));
        return false;
    };
    return try_blocks(0);
}

std::map<int, int> presented_poincare(const RingPresentation& pres, int max_degree) {
    std::map<int, int> out;
    for (int d = 0; d <= max_degree; ++d) {
        const auto monos = monomials_of_degree(pres.generators(), d);
        if (monos.empty())
            continue;
        const std::size_t dim = monos.size() - rank(ideal_rows(pres, monos, d));
        if (dim > 0)
            out[d] = static_cast<int>(dim);
    }
    return out;
}

bool in_ideal(const RingPresentation& pres, const Monomial& m) {
    if (m.size() != pres.generators().size())
        throw InvalidInput("in_ideal: monomial length does not match generator count");
    const int d = pres.degree(m);
    const auto monos = monomials_of_degree(pres.generators(), d);
    const F2Matrix rows = ideal_rows(pres, monos, d);
    F2Matrix extended(rows.row_count() + 1, rows.col_count());
    for (std::size_t r = 0; r < rows.row_count(); ++r)
        for (std::size_t c = 0; c < rows.col_count(); ++c)
            extended.set(r, c, rows.get(r, c));
    extended.set(rows.row_count(), std::find(monos.begin(), monos.end(), m) - monos.begin(), true);
    return rank(extended) == rank(rows);
}

}  // namespace borelss
