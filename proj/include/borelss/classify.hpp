#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borelss/obstruction.hpp"
#include "borelss/ring_extract.hpp"
#include "borelss/spectral.hpp"

namespace borelss {

struct Outcome {
    std::vector<DifferentialPattern> history;
    Page e_infinity;
    std::map<int, int> poincare;
    RingPresentation presentation;
    std::vector<ExtensionFlag> extension_flags;
    std::optional<IndexResult> index;  // Z/2 only
};

struct RejectedBranch {
    std::vector<DifferentialPattern> history;
    std::string reason;
};

struct ClassificationReport {
    FiberRing fiber = FiberRing::point();
    Group group = Group::Z2;
    int top_degree = 0;
    std::vector<Outcome> outcomes;
    std::vector<RejectedBranch> rejected;

    bool free_action_possible() const { return !outcomes.empty(); }
};

struct ClassifyOptions {
    /// Degree above which H*(X_G) must vanish; defaults to the fiber's top degree.
    std::optional<int> top_degree;
    /// Called for every accepted pattern with the page before and after it.
    std::function<void(const Page&, const DifferentialPattern&, const Page&)> on_turn;
};

/// Depth-first search over the candidate rounds: each round branches over
/// every slot assignment; inconsistent assignments and pages that fail the
/// freeness test are recorded as rejected branches, the rest become outcomes.
ClassificationReport classify(const FiberRing& fiber, Group group, const ClassifyOptions& options = {});

/// Pattern histories rendered as one line per round.
std::string render_history(const std::vector<DifferentialPattern>& history);

}  // namespace borelss
