#include "borelss/interval_module.hpp"

#include <algorithm>
#include <sstream>

#include "borelss/errors.hpp"

namespace borelss {

std::strong_ordering operator<=>(const Summand& lhs, const Summand& rhs) {
    if (auto c = lhs.shift <=> rhs.shift; c != 0)
        return c;
    if (lhs.infinite() || rhs.infinite())
        return lhs.infinite() <=> rhs.infinite();
    return *lhs.length <=> *rhs.length;
}

IntervalModule::IntervalModule(int step, std::vector<Summand> summands)
    : step_(step), summands_(std::move(summands)) {
    if (step_ < 1)
        throw InvalidInput("IntervalModule: step must be positive");
    for (const auto& s : summands_) {
        if (s.shift < 0)
            throw InvalidInput("IntervalModule: negative shift");
        if (s.length && *s.length < 1)
            throw InvalidInput("IntervalModule: summand length must be positive");
    }
    std::sort(summands_.begin(), summands_.end());
}

bool IntervalModule::has_infinite() const {
    return std::any_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.infinite(); });
}

int IntervalModule::dimension_at(int k) const {
    int dim = 0;
    for (const auto& s : summands_) {
        const int offset = k - s.shift;
        if (offset < 0 || offset % step_ != 0)
            continue;
        if (s.infinite() || offset / step_ < *s.length)
            ++dim;
    }
    return dim;
}

std::string IntervalModule::to_string() const {
    std::ostringstream out;
    out << "step " << step_ << " [";
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i)
            out << ", ";
        out << "(" << summands_[i].shift << ", ";
        if (summands_[i].infinite())
            out << "inf";
        else
            out << *summands_[i].length;
        out << ")";
    }
    out << "]";
    return out.str();
}

}  // namespace borelss
