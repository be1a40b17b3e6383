#pragma once

#include <string>
#include <vector>

#include "borelss/ring_extract.hpp"

namespace borelss {

struct ClassificationReport;

/// Mod-2 cohomology index: the largest m with x^m != 0, x the degree-one
/// class of the double cover X -> X/G. No equivariant map S^m -> X exists
/// (antipodal action on S^m) for m above this number.
struct IndexResult {
    int cohomology_index = 0;
    int no_equivariant_map_above = 0;
    /// "determined", or "candidate" when the outcome set may strictly contain the realized case.
    std::string status = "determined";

    friend bool operator==(const IndexResult&, const IndexResult&) = default;
};

/// Read off the pure power relation x^p (index p - 1). Zero when x has been
/// elided. Throws WrongGroup if x does not have degree 1.
int cohomology_index(const RingPresentation& pres);

/// Same number by testing x^m for ideal membership degree by degree.
int cohomology_index_by_basis(const RingPresentation& pres);

IndexResult make_index_result(const RingPresentation& pres, std::string status = "determined");

int sphere_map_bound(const IndexResult& result);

/// Index over every admissible outcome of a Z/2 report.
struct IndexSummary {
    std::vector<int> per_outcome;
    /// Largest candidate index; no equivariant map S^m -> X for m above it. -1 when there are no outcomes.
    int bound = -1;
    std::string status = "determined";
};

/// Throws WrongGroup for circle reports: the index is a Z/2 notion.
IndexSummary index_summary(const ClassificationReport& report);

}  // namespace borelss
