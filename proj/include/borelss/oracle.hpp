#pragma once

#include <map>
#include <utility>
#include <vector>

#include "borelss/classify.hpp"
#include "borelss/fiber_ring.hpp"
#include "borelss/spectral.hpp"

namespace borelss {

// Independent check of the engine: E_2 realized cell by cell up to a total
// degree cap, every slot assignment tried exhaustively, constraints tested
// on explicit degreewise matrices. Shares no code with the interval engine.

struct OracleCell {
    int k = 0;  // base degree
    int l = 0;  // fiber degree
    std::size_t label = 0;
};

/// Generator-level slot d_r(1 (x) source) = t^{r/step} (x) target, fiber basis indices.
struct OracleSlot {
    std::size_t source = 0;
    std::size_t target = 0;
};

struct TruncatedComplex {
    FiberRing fiber = FiberRing::point();
    Group group = Group::Z2;
    int cap = 0;
    int top_degree = 0;
    int margin = 0;
    std::vector<OracleCell> cells;
    std::vector<int> rounds;
    std::map<int, std::vector<OracleSlot>> slots;

    /// Highest total degree whose classes are unaffected by truncation.
    int trusted_degree() const { return cap - margin; }
};

/// Largest round that can carry a differential, plus the step of the group.
int oracle_margin(const FiberRing& fiber, Group group);
int minimum_oracle_cap(const FiberRing& fiber, Group group);
/// Leaves room for every product of two fiber classes and its differential.
int default_oracle_cap(const FiberRing& fiber, Group group);

/// Cells t^i (x) v with total degree <= cap. Throws InvalidInput when cap is
/// below minimum_oracle_cap, UnsupportedShape for rank > 1 fiber degrees.
TruncatedComplex truncate_e2(const FiberRing& fiber, Group group, int cap);

struct OracleOutcome {
    std::vector<std::pair<int, std::vector<bool>>> assignments;  // per round, slot bits
    std::map<int, int> dims;                                      // total degree -> dim, up to trusted degree
};

struct OracleReport {
    int cap = 0;
    int trusted_degree = 0;
    std::vector<OracleOutcome> outcomes;
};

/// Exhaustive search. Throws Refusal when the instance is too large.
OracleReport brute_force_classify(const FiberRing& fiber, Group group, int cap);

/// Outcome counts agree and outcomes pair up with identical dimensions up to the trusted degree.
bool compare_reports(const ClassificationReport& engine, const OracleReport& oracle);

/// Same comparison between two oracle runs (cap stability).
bool same_oracle_results(const OracleReport& a, const OracleReport& b);

}  // namespace borelss
