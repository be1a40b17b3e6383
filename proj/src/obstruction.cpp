#include "borelss/obstruction.hpp"

#include <algorithm>

#include "borelss/classify.hpp"
#include "borelss/errors.hpp"

namespace borelss {

namespace {

constexpr int kPowerSearchLimit = 4096;

std::optional<std::size_t> base_class(const RingPresentation& pres) {
    const auto ix = pres.find("x");
    if (ix && pres.generators()[*ix].degree != 1)
        throw WrongGroup("cohomology index needs a degree-1 class x; x has degree " +
                         std::to_string(pres.generators()[*ix].degree));
    return ix;
}

}  // namespace

int cohomology_index(const RingPresentation& pres) {
    const auto ix = base_class(pres);
    if (!ix)
        return 0;
    for (const Polynomial& rel : pres.relations()) {
        if (rel.size() != 1)
            continue;
        const Monomial& m = rel.front();
        bool pure = m[*ix] > 0;
        for (std::size_t i = 0; i < m.size() && pure; ++i)
            pure = (i == *ix) || m[i] == 0;
        if (pure)
            return m[*ix] - 1;
    }
    throw InvalidInput("cohomology_index: no relation x^p = 0 in " + pres.to_string());
}

int cohomology_index_by_basis(const RingPresentation& pres) {
    const auto ix = base_class(pres);
    if (!ix)
        return 0;
    Monomial power(pres.generators().size(), 0);
    for (int m = 1; m <= kPowerSearchLimit; ++m) {
        power[*ix] = m;
        if (in_ideal(pres, power))
            return m - 1;
    }
    throw InvalidInput("cohomology_index_by_basis: x is not nilpotent below x^" + std::to_string(kPowerSearchLimit));
}

IndexResult make_index_result(const RingPresentation& pres, std::string status) {
    const int idx = cohomology_index(pres);
    return {idx, idx, std::move(status)};
}

int sphere_map_bound(const IndexResult& result) {
    return result.cohomology_index;
}

IndexSummary index_summary(const ClassificationReport& report) {
    if (report.group != Group::Z2)
        throw WrongGroup("the mod-2 cohomology index is defined for free Z/2 actions only");
    IndexSummary out;
    for (const auto& o : report.outcomes) {
        const IndexResult r = o.index ? *o.index : make_index_result(o.presentation);
        out.per_outcome.push_back(r.cohomology_index);
        out.bound = std::max(out.bound, sphere_map_bound(r));
        if (r.status == "candidate")
            out.status = "candidate";
    }
    return out;
}

}  // namespace borelss
