#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "borelss/classify.hpp"

namespace borelss {

/// What the user asked for, echoed into every document.
struct ReportInputs {
    std::string group;
    nlohmann::json n;  // integer, or null for file fibers
    nlohmann::json a;  // as given: integer or "even"/"odd"
    nlohmann::json b;
    nlohmann::json a_parity;
    nlohmann::json b_parity;
    nlohmann::json fiber_file;
};

nlohmann::json pattern_json(const std::vector<DifferentialPattern>& history);
nlohmann::json page_json(const Page& page);
nlohmann::json presentation_json(const RingPresentation& pres);

/// Document with keys inputs, verdict, outcomes, warnings, and rejected
/// when show_rejected is set. Keys are emitted in sorted order.
nlohmann::json report_json(const ClassificationReport& report, const ReportInputs& inputs, bool show_rejected);

std::string report_text(const ClassificationReport& report, const ReportInputs& inputs, bool show_rejected);

/// The canonical serialization: two-space indent, sorted keys, trailing newline.
std::string dump_canonical(const nlohmann::json& doc);

}  // namespace borelss
