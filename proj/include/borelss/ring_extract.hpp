#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borelss/spectral.hpp"

namespace borelss {

struct Generator {
    std::string name;
    int degree = 0;
    /// Fiber class v with i*(generator) = v, when the generator sits on the fiber edge.
    std::optional<std::string> edge_image;
};

/// Exponent vector, indexed like RingPresentation::generators().
using Monomial = std::vector<int>;
/// Sum of distinct monomials over F2, read as "= 0".
using Polynomial = std::vector<Monomial>;

/// Graded-commutative F2 algebra F2[generators] / (relations), kept in a
/// canonical form: generators by (degree, name), monomials within a
/// relation in descending exponent order, relations by (degree, monomials).
class RingPresentation {
  public:
    RingPresentation() = default;
    RingPresentation(std::vector<Generator> generators, std::vector<Polynomial> relations);

    /// Relations written as strings over the generator names, e.g. "x^3*z", "z1*z2 + x*z3".
    static RingPresentation parse(std::vector<Generator> generators, const std::vector<std::string>& relations);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    std::optional<std::size_t> find(const std::string& name) const;

    int degree(const Monomial& m) const;
    int degree(const Polynomial& p) const;
    std::string render(const Monomial& m) const;
    std::string render(const Polynomial& p) const;
    std::vector<std::string> relation_strings() const;
    /// "F2[x,z]/(x^7, z^2, x^3*z), deg x = 1, deg z = 2"
    std::string to_string() const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

  private:
    std::vector<Generator> generators_;
    std::vector<Polynomial> relations_;
};

/// A product set to zero in Tot E_inf although classes of higher filtration
/// exist in its total degree, so the true product in H*(X_G) may differ.
struct ExtensionFlag {
    std::string product;
    std::vector<std::string> candidates;

    friend bool operator==(const ExtensionFlag&, const ExtensionFlag&) = default;
};

struct Extraction {
    RingPresentation presentation;
    std::vector<ExtensionFlag> flags;
};

/// dim H^j(Tot E_inf) for every j carrying a class.
std::map<int, int> tot_poincare(const Page& e_inf);

/// Presentation of Tot E_inf read off interval endpoints and fiber products.
Extraction extract_presentation(const Page& e_inf, Group group);

/// Equality after canonicalization, allowing generators of equal degree to be renamed.
bool same_presentation(const RingPresentation& lhs, const RingPresentation& rhs);

/// Degreewise dimension of the presented algebra for degrees 0..max_degree
/// (zero entries omitted), by linear algebra on monomial multiples of the relations.
std::map<int, int> presented_poincare(const RingPresentation& pres, int max_degree);

/// True when the monomial lies in the ideal generated by the relations.
bool in_ideal(const RingPresentation& pres, const Monomial& m);

}  // namespace borelss
