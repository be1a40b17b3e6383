#include "borelss/fiber_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "borelss/errors.hpp"

namespace borelss {

namespace {

void add_into(Combination& acc, std::size_t term) {
    auto it = std::lower_bound(acc.begin(), acc.end(), term);
    if (it != acc.end() && *it == term)
        acc.erase(it);
    else
        acc.insert(it, term);
}

Combination normalized(const Combination& raw) {
    Combination out;
    for (std::size_t t : raw)
        add_into(out, t);
    return out;
}

}  // namespace

std::string to_string(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

std::string to_string(RingViolation::Kind kind) {
    switch (kind) {
        case RingViolation::Kind::Structure: return "structure";
        case RingViolation::Kind::Unit: return "unit";
        case RingViolation::Kind::Degree: return "degree-additivity";
        case RingViolation::Kind::Commutativity: return "commutativity";
        case RingViolation::Kind::Associativity: return "associativity";
        case RingViolation::Kind::TopDegree: return "top-degree";
    }
    return "unknown";
}

FiberRing::FiberRing(std::vector<BasisElement> basis, std::size_t unit, ProductTable products, int top_degree)
    : basis_(std::move(basis)), unit_(unit), top_degree_(top_degree) {
    if (unit_ >= basis_.size())
        throw InvalidInput("FiberRing: unit index out of range");
    for (auto& [key, value] : products) {
        if (key.first >= basis_.size() || key.second >= basis_.size())
            throw InvalidInput("FiberRing: product entry refers to a missing basis element");
        for (std::size_t t : value)
            if (t >= basis_.size())
                throw InvalidInput("FiberRing: product result refers to a missing basis element");
        products_.emplace(key, normalized(value));
    }
}

FiberRing FiberRing::point() {
    return FiberRing({{"1", 0}}, 0, {}, 0);
}

std::optional<std::size_t> FiberRing::find(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return i;
    return std::nullopt;
}

Combination FiberRing::multiply(std::size_t lhs, std::size_t rhs) const {
    if (auto it = products_.find({lhs, rhs}); it != products_.end())
        return it->second;
    if (auto it = products_.find({rhs, lhs}); it != products_.end())
        return it->second;
    if (lhs == unit_)
        return {rhs};
    if (rhs == unit_)
        return {lhs};
    return {};
}

Combination FiberRing::multiply(const Combination& lhs, const Combination& rhs) const {
    Combination acc;
    for (std::size_t i : lhs)
        for (std::size_t j : rhs)
            for (std::size_t t : multiply(i, j))
                add_into(acc, t);
    return acc;
}

std::vector<std::size_t> FiberRing::basis_in_degree(int degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == degree)
            out.push_back(i);
    return out;
}

FiberRing make_type_ab(int n, Parity a, Parity b) {
    if (n < 1)
        throw InvalidInput("make_type_ab: n must be at least 1");
    FiberRing::ProductTable table;
    table[{1, 1}] = is_odd(a) ? Combination{2} : Combination{};
    table[{1, 2}] = is_odd(b) ? Combination{3} : Combination{};
    table[{1, 3}] = {};
    table[{2, 2}] = {};
    table[{2, 3}] = {};
    table[{3, 3}] = {};
    FiberRing ring({{"1", 0}, {"v1", n}, {"v2", 2 * n}, {"v3", 3 * n}}, 0, std::move(table), 3 * n);
    ring.type_ab_ = TypeAB{n, a, b};
    if (n % 2 == 1 && is_odd(a))
        ring.warnings_.push_back("n odd with a odd: graded commutativity forces v1^2 = 0 integrally, "
                                 "so this fiber is not integrally realizable; the mod-2 computation is formal");
    return ring;
}

std::string render(const FiberRing& ring, const Combination& c) {
    if (c.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += " + ";
        out += ring.name(c[i]);
    }
    return out;
}

std::vector<RingViolation> validate(const FiberRing& ring) {
    using Kind = RingViolation::Kind;
    std::vector<RingViolation> out;
    const auto& basis = ring.basis();
    const std::size_t size = basis.size();

    std::set<std::string> names;
    for (const auto& b : basis) {
        if (b.name.empty())
            out.push_back({Kind::Structure, "basis element with empty name"});
        else if (!names.insert(b.name).second)
            out.push_back({Kind::Structure, "duplicate basis name " + b.name});
        if (b.degree < 0)
            out.push_back({Kind::Structure, "negative degree on " + b.name});
        if (b.degree > ring.top_degree())
            out.push_back({Kind::TopDegree, b.name + " has degree " + std::to_string(b.degree) +
                                                " above top degree " + std::to_string(ring.top_degree())});
    }
    if (ring.degree(ring.unit()) != 0)
        out.push_back({Kind::Structure, "unit " + ring.name(ring.unit()) + " is not in degree 0"});

    for (std::size_t u = 0; u < size; ++u) {
        const Combination expect{u};
        if (ring.multiply(ring.unit(), u) != expect || ring.multiply(u, ring.unit()) != expect)
            out.push_back({Kind::Unit, "unit * " + ring.name(u) + " != " + ring.name(u)});
    }

    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            const Combination prod = ring.multiply(i, j);
            const int deg = ring.degree(i) + ring.degree(j);
            const std::string label = ring.name(i) + "*" + ring.name(j);
            if (deg > ring.top_degree()) {
                if (!prod.empty())
                    out.push_back({Kind::TopDegree, label + " = " + render(ring, prod) + " lands above top degree"});
                continue;
            }
            for (std::size_t t : prod)
                if (ring.degree(t) != deg) {
                    out.push_back({Kind::Degree, label + " contains " + ring.name(t) + " of degree " +
                                                     std::to_string(ring.degree(t)) + ", expected " +
                                                     std::to_string(deg)});
                    break;
                }
        }
    }

    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (ring.multiply(i, j) != ring.multiply(j, i))
                out.push_back({Kind::Commutativity, ring.name(i) + "*" + ring.name(j) + " != " + ring.name(j) +
                                                        "*" + ring.name(i)});

    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            for (std::size_t k = j; k < size; ++k) {
                const Combination ij_k = ring.multiply(ring.multiply(i, j), Combination{k});
                const Combination i_jk = ring.multiply(Combination{i}, ring.multiply(j, k));
                const Combination ik_j = ring.multiply(ring.multiply(i, k), Combination{j});
                if (ij_k != i_jk || ij_k != ik_j) {
                    const std::string a = ring.name(i), b = ring.name(j), c = ring.name(k);
                    out.push_back({Kind::Associativity, "(" + a + "*" + b + ")*" + c + " = " + render(ring, ij_k) +
                                                            ", " + a + "*(" + b + "*" + c + ") = " +
                                                            render(ring, i_jk) + ", (" + a + "*" + c + ")*" + b +
                                                            " = " + render(ring, ik_j)});
                }
            }
        }
    }
    return out;
}

std::map<int, int> poincare(const FiberRing& ring) {
    std::map<int, int> out;
    for (const auto& b : ring.basis())
        ++out[b.degree];
    return out;
}

FiberRing fiber_ring_from_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("fiber ring file: ") + e.what());
    }
    try {
        std::vector<BasisElement> basis;
        for (const auto& entry : doc.at("basis"))
            basis.push_back({entry.at("name").get<std::string>(), entry.at("degree").get<int>()});
        auto lookup = [&](const std::string& name) {
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (basis[i].name == name)
                    return i;
            throw InvalidInput("fiber ring file: unknown basis name '" + name + "'");
        };
        const std::size_t unit = lookup(doc.at("unit").get<std::string>());
        FiberRing::ProductTable table;
        if (doc.contains("products")) {
            for (const auto& entry : doc.at("products")) {
                const std::size_t l = lookup(entry.at("left").get<std::string>());
                const std::size_t r = lookup(entry.at("right").get<std::string>());
                Combination result;
                for (const auto& name : entry.at("result"))
                    result.push_back(lookup(name.get<std::string>()));
                if (!table.emplace(std::pair{l, r}, result).second)
                    throw InvalidInput("fiber ring file: duplicate product entry " + basis[l].name + "*" +
                                       basis[r].name);
            }
        }
        return FiberRing(std::move(basis), unit, std::move(table), doc.at("top_degree").get<int>());
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("fiber ring file: ") + e.what());
    }
}

std::string fiber_ring_to_json(const FiberRing& ring) {
    using nlohmann::json;
    json doc;
    doc["basis"] = json::array();
    for (const auto& b : ring.basis())
        doc["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
    doc["unit"] = ring.name(ring.unit());
    doc["products"] = json::array();
    for (const auto& [key, value] : ring.products()) {
        json result = json::array();
        for (std::size_t t : value)
            result.push_back(ring.name(t));
        doc["products"].push_back({{"left", ring.name(key.first)}, {"right", ring.name(key.second)}, {"result", result}});
    }
    doc["top_degree"] = ring.top_degree();
    return doc.dump(2);
}

}  // namespace borelss
