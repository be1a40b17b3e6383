#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borelss {

enum class Parity { Even, Odd };

inline Parity parity_of(long long value) { return (value % 2 == 0) ? Parity::Even : Parity::Odd; }
inline bool is_odd(Parity p) { return p == Parity::Odd; }
std::string to_string(Parity p);

struct BasisElement {
    std::string name;
    int degree = 0;
};

/// F2-linear combination of basis elements: sorted indices, each present once.
using Combination = std::vector<std::size_t>;

/// Parameters of a type-(a,b) fiber; only the residues of a and b matter mod 2.
struct TypeAB {
    int n = 1;
    Parity a = Parity::Even;
    Parity b = Parity::Even;
};

struct RingViolation {
    enum class Kind { Structure, Unit, Degree, Commutativity, Associativity, TopDegree };
    Kind kind;
    std::string message;
};

std::string to_string(RingViolation::Kind kind);

/// Finite-dimensional graded-commutative F2 algebra given by a homogeneous
/// basis and a multiplication table on basis pairs.
///
/// Products that are not listed fall back to the mirrored entry (v*u for
/// u*v), then to the unit law when one factor is the unit, then to zero.
class FiberRing {
  public:
    using ProductTable = std::map<std::pair<std::size_t, std::size_t>, Combination>;

    FiberRing(std::vector<BasisElement> basis, std::size_t unit, ProductTable products, int top_degree);

    /// The cohomology of a point.
    static FiberRing point();

    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t unit() const { return unit_; }
    int top_degree() const { return top_degree_; }
    const ProductTable& products() const { return products_; }

    const std::string& name(std::size_t i) const { return basis_.at(i).name; }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    std::optional<std::size_t> find(std::string_view name) const;

    Combination multiply(std::size_t lhs, std::size_t rhs) const;
    Combination multiply(const Combination& lhs, const Combination& rhs) const;

    /// Basis indices of the given degree, in basis order.
    std::vector<std::size_t> basis_in_degree(int degree) const;

    /// Set when the ring was built by make_type_ab.
    const std::optional<TypeAB>& type_ab() const { return type_ab_; }
    /// Non-fatal remarks attached at construction (e.g. integral unrealizability).
    const std::vector<std::string>& warnings() const { return warnings_; }

  private:
    friend FiberRing make_type_ab(int n, Parity a, Parity b);

    std::vector<BasisElement> basis_;
    std::size_t unit_ = 0;
    ProductTable products_;
    int top_degree_ = 0;
    std::optional<TypeAB> type_ab_;
    std::vector<std::string> warnings_;
};

/// Mod-2 cohomology of a space of cohomology type (a,b):
/// basis 1, v1, v2, v3 in degrees 0, n, 2n, 3n with v1^2 = a v2 and v1 v2 = b v3.
FiberRing make_type_ab(int n, Parity a, Parity b);

/// Every failed ring axiom, with witnesses. Empty iff the ring is valid.
std::vector<RingViolation> validate(const FiberRing& ring);

/// Number of basis elements in each degree.
std::map<int, int> poincare(const FiberRing& ring);

/// Parse the structured-text fiber description:
///   {"basis": [{"name":..., "degree":...}], "unit": name,
///    "products": [{"left":..., "right":..., "result": [names]}], "top_degree": int}
FiberRing fiber_ring_from_json(std::string_view text);
std::string fiber_ring_to_json(const FiberRing& ring);

/// Human-readable product rendering of a combination ("0", "v3", "a + b").
std::string render(const FiberRing& ring, const Combination& c);

}  // namespace borelss
