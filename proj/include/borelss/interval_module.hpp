#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace borelss {

/// One cyclic summand of a graded F2[t]-module: a copy of F2 in degrees
/// shift, shift + step, ..., shift + step * (length - 1). A missing length
/// means the summand is free (infinite).
struct Summand {
    int shift = 0;
    std::optional<int> length;

    bool infinite() const { return !length.has_value(); }

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// (shift, length) order with infinite summands last among equal shifts.
std::strong_ordering operator<=>(const Summand& lhs, const Summand& rhs);

/// Graded module over F2[t] with deg t = step, held as a sorted direct sum
/// of interval summands. Two modules compare equal iff they are isomorphic.
class IntervalModule {
  public:
    IntervalModule() = default;
    IntervalModule(int step, std::vector<Summand> summands);

    static IntervalModule free_rank_one(int step) { return {step, {Summand{0, std::nullopt}}}; }

    int step() const { return step_; }
    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    bool has_infinite() const;

    /// Number of summands contributing to degree k.
    int dimension_at(int k) const;

    std::string to_string() const;

    friend bool operator==(const IntervalModule&, const IntervalModule&) = default;

  private:
    int step_ = 1;
    std::vector<Summand> summands_;
};

}  // namespace borelss
