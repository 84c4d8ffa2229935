#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumlab/field.hpp"
#include "sumlab/group.hpp"
#include "sumlab/poly.hpp"

namespace sumlab {

using Ambient = std::variant<GroupSpec, FieldSpec>;
using Element = std::variant<GroupElement, FieldElement>;

bool is_field_ambient(const Ambient& ambient);
const GroupSpec& group_of(const Ambient& ambient);
const FieldSpec& field_of(const Ambient& ambient);

/// Additive-group classification of the ambient: a field contributes the class
/// of its additive group (GF(p^n) is elementary abelian, Q is torsion-free).
GroupClass ambient_class(const Ambient& ambient);
bool ambient_has_cyclic_torsion(const Ambient& ambient);

Element ambient_identity(const Ambient& ambient);
Element ambient_add(const Element& a, const Element& b, const Ambient& ambient);
Element ambient_sub(const Element& a, const Element& b, const Ambient& ambient);
Element ambient_scalar_mul(std::int64_t c, const Element& a, const Ambient& ambient);
bool element_conforms(const Element& a, const Ambient& ambient);

/// Canonical order (group: free then torsion lexicographic; field: by
/// coefficient-vector integer encoding, rationals by value).
bool element_less(const Element& a, const Element& b);
int compare_elements(const Element& a, const Element& b);

std::string print_element(const Element& a, const Ambient& ambient);
Element parse_element(const std::string& text, const Ambient& ambient);

std::string print_ambient(const Ambient& ambient);
/// "Q"/"GF(...)" parse as fields, anything else as a group spec (normalized).
Ambient parse_ambient(const std::string& text, bool* was_canonical = nullptr);

/// Sorted, duplicate-free element set in canonical order.
std::vector<Element> canonical_set(std::vector<Element> xs, const Ambient& ambient);
bool set_contains(const std::vector<Element>& sorted_set, const Element& x);

/// All ambient elements in canonical order (finite ambients only).
std::vector<Element> enumerate_ambient(const Ambient& ambient);

/// One m*a - n*b != d avoidance constraint (group ambients).
struct LinearTerm {
    std::int64_t m = 0;
    std::int64_t n = 0;
    GroupElement d;

    bool operator==(const LinearTerm&) const = default;
};

/// Admissibility condition on pairs (a, b):
///   none       every pair
///   distinct   a != b
///   poly       P(a, b) != 0 (field ambients, bivariate P)
///   linear     m_i*a - n_i*b != d_i for every i (group ambients)
///   difference a - b not in S
struct Constraint {
    enum class Kind { none, distinct, poly, linear, difference };

    Kind kind = Kind::none;
    std::optional<MultiPoly> poly;
    std::vector<LinearTerm> linear_terms;
    std::vector<Element> difference_set; // canonical order

    static Constraint make_none() { return {}; }
    static Constraint make_distinct();
    static Constraint make_poly(MultiPoly p);
    static Constraint make_linear(std::vector<LinearTerm> terms);
    static Constraint make_difference(std::vector<Element> s, const Ambient& ambient);
};

std::string to_string(Constraint::Kind kind);

/// One (ambient, A, B, constraint) problem.
struct Instance {
    Ambient ambient;
    std::vector<Element> set_a;
    std::vector<Element> set_b;
    Constraint constraint;
};

/// Normalizes the sets to canonical order and checks every invariant
/// (nonempty conforming sets, constraint/ambient compatibility). Throws
/// InvalidInput on violation.
Instance make_instance(Ambient ambient, std::vector<Element> a, std::vector<Element> b,
                       Constraint constraint);

void validate_instance(const Instance& inst);

// -- sumset operations ----------------------------------------------------------

/// A + B in canonical order.
std::vector<Element> sumset(const std::vector<Element>& a, const std::vector<Element>& b,
                            const Ambient& ambient);

/// Number of ordered pairs (a, b) in A x B with a + b = c.
long long nu(const std::vector<Element>& a, const std::vector<Element>& b, const Element& c,
             const Ambient& ambient);

bool pair_admissible(const Element& a, const Element& b, const Constraint& constraint,
                     const Ambient& ambient);

/// The set C of admissible sums, in canonical order.
std::vector<Element> restricted_sumset(const Instance& inst);

/// Minimum of nu over a target subset of A + B; nullopt when the target is empty.
std::optional<long long> min_nu_over(const std::vector<Element>& a,
                                     const std::vector<Element>& b,
                                     const std::vector<Element>& target,
                                     const Ambient& ambient);

/// Everything the bound checkers need, computed in one pass over A x B.
struct SumsetAnalysis {
    std::vector<Element> full_sumset;  // A + B, canonical order
    std::vector<long long> nu_full;    // nu for each element of full_sumset
    std::vector<Element> restricted;   // C, canonical order
    long long min_nu_ab = 0;
    std::optional<long long> min_nu_c; // nullopt when C is empty
};

SumsetAnalysis analyze_instance(const Instance& inst);

} // namespace sumlab
