#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borelss/f2_matrix.hpp"
#include "borelss/fiber_ring.hpp"
#include "borelss/interval_module.hpp"

namespace borelss {

/// Structure group of the Borel fibration. H*(BG; F2) = F2[t] with
/// deg t = 1 for Z/2 and deg t = 2 for the circle.
enum class Group { Z2, Circle };

inline int step(Group g) { return g == Group::Z2 ? 1 : 2; }
std::string to_string(Group g);

/// Round number carried by a page once every differential has been applied.
inline constexpr int kFinalRound = std::numeric_limits<int>::max();

struct PageRow {
    std::vector<std::size_t> basis;  // fiber basis elements of this degree
    IntervalModule module;
};

/// A page E_r of the Leray-Serre spectral sequence of X -> X_G -> BG.
///
/// Row l is the F2[t]-module E_r^{*,l}; column degrees are base degrees.
/// Classes are represented by E_2 elements t^j (x) v, so products are the
/// E_2 products read in the subquotient.
struct Page {
    int round = 2;
    Group group = Group::Z2;
    FiberRing fiber = FiberRing::point();
    std::map<int, PageRow> rows;

    bool is_final() const { return round == kFinalRound; }
    int dimension_at(int k, int l) const;
    /// Name of the class 1 (x) v_l when the column-0 class of row l survives.
    std::optional<std::string> generator(int l) const;
    std::string describe() const;

    friend bool operator==(const Page& lhs, const Page& rhs) {
        return lhs.round == rhs.round && lhs.group == rhs.group && lhs.rows_equal(rhs);
    }

  private:
    bool rows_equal(const Page& other) const;
};

/// d_r on the generator of row source_row, landing on t^{t_exponent} times
/// the generator of target_row = source_row - r + 1.
struct DifferentialSlot {
    int round = 0;
    int source_row = 0;
    std::string source;
    int target_row = 0;
    std::string target;
    int t_exponent = 0;

    friend bool operator==(const DifferentialSlot&, const DifferentialSlot&) = default;
};

struct DifferentialPattern {
    int round = 0;
    std::vector<DifferentialSlot> slots;
    std::vector<bool> coefficients;  // parallel to slots

    bool is_zero() const;
    /// Coefficient of the slot leaving the given row, false if there is none.
    bool acts_on(int source_row) const;
    std::string to_string() const;

    friend bool operator==(const DifferentialPattern&, const DifferentialPattern&) = default;
};

/// E_2 = H*(BG) (x) H*(X): every nonzero fiber degree is a free row.
Page build_e2(const FiberRing& fiber, Group group);

/// Rounds r >= 2 that can carry a differential: r - 1 is a gap between
/// nonzero fiber rows and r is divisible by the step of the group.
std::vector<int> candidate_rounds(const FiberRing& fiber, Group group);

/// The subset of {n+1, 2n+1, 3n+1} divisible by step(group) for a fiber
/// with rows exactly at 0, n, 2n, 3n. Throws UnsupportedShape otherwise.
std::vector<int> admissible_rounds(const FiberRing& fiber, Group group);

/// Slots for round r on this page, ordered by (source row, target row).
/// A slot exists when both rows are nonzero and the generator map extends to
/// a well-defined F2[t]-module map between the two interval rows.
std::vector<DifferentialSlot> differential_slots(const Page& page, int r);

/// First Leibniz / square-rule / d o d violation of the pattern, if any.
std::optional<std::string> find_violation(const Page& page, const DifferentialPattern& pattern);

struct Assignment {
    DifferentialPattern pattern;
    std::optional<std::string> violation;
};

/// Every 0/1 assignment of the slots of round r in binary order (first slot
/// is the most significant bit), each tagged with its first violation.
std::vector<Assignment> enumerate_assignments(const Page& page, int r);

/// The violation-free subset of enumerate_assignments.
std::vector<DifferentialPattern> enumerate_patterns(const Page& page, int r);

/// E_{r+1} = H(E_r, d_r), advanced to the next candidate round.
Page turn_page(const Page& page, const DifferentialPattern& pattern);

/// Degreewise matrix of d_r from E_r^{k,l} to E_r^{k+r, l-r+1}.
F2Matrix induced_matrix(const Page& page, const DifferentialPattern& pattern, int k, int l);

/// Why a page cannot be the E_infinity page of a free action: an infinite
/// row, or a class above top_degree. Empty when the page passes.
std::optional<std::string> survival_violation(const Page& page, int top_degree);

bool is_free_admissible(const Page& page, int top_degree);

}  // namespace borelss
