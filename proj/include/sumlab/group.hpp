#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/error.hpp"

namespace sumlab {

using BigInt = boost::multiprecision::cpp_int;

/// A finitely generated abelian group Z^r + Z/n1 + ... + Z/nk in
/// invariant-factor form: every n_i >= 2 and n_i | n_{i+1}.
struct GroupSpec {
    int free_rank = 0;
    std::vector<std::int64_t> invariant_factors;

    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::size_t torsion_count() const { return invariant_factors.size(); }

    /// Torsion subgroup is cyclic iff at most one invariant factor.
    bool has_cyclic_torsion() const { return invariant_factors.size() <= 1; }

    /// Order of a finite group (product of invariant factors; 1 for trivial).
    BigInt order() const;

    /// lcm of the invariant factors = the last one (1 for trivial torsion).
    std::int64_t exponent() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Element of a GroupSpec: r signed integers plus k residues in [0, n_i).
struct GroupElement {
    std::vector<BigInt> free_part;
    std::vector<std::int64_t> torsion_part;

    bool operator==(const GroupElement&) const = default;
};

/// Mutually exclusive classification with precedence
/// torsion_free > elementary_abelian > torsion_cyclic > other.
struct GroupClass {
    enum class Tag { torsion_free, elementary_abelian, torsion_cyclic, other };
    Tag tag = Tag::other;
    std::int64_t prime = 0; // set for elementary_abelian

    bool operator==(const GroupClass&) const = default;
};

std::string to_string(GroupClass::Tag tag);

// -- construction ------------------------------------------------------------

/// Canonicalize Z^free_rank + sum Z/m_i into invariant-factor form by repeated
/// (gcd, lcm) replacement; gcd-1 factors are dropped.
GroupSpec normalize_group_spec(const std::vector<std::int64_t>& moduli, int free_rank);

/// True iff the moduli list already is a divisibility chain of values >= 2.
bool is_invariant_factor_form(const std::vector<std::int64_t>& moduli);

GroupElement identity_element(const GroupSpec& spec);

/// True when the element's shape matches the group and its residues are reduced.
bool conforms(const GroupElement& g, const GroupSpec& spec);

/// Builds an element from raw coordinates, reducing torsion residues mod n_i.
GroupElement make_element(std::vector<BigInt> free_part,
                          const std::vector<BigInt>& torsion_part,
                          const GroupSpec& spec);

// -- arithmetic --------------------------------------------------------------

GroupElement add(const GroupElement& g, const GroupElement& h, const GroupSpec& spec);
GroupElement neg(const GroupElement& g, const GroupSpec& spec);
GroupElement sub(const GroupElement& g, const GroupElement& h, const GroupSpec& spec);
GroupElement scalar_mul(const BigInt& c, const GroupElement& g, const GroupSpec& spec);

/// Least m >= 1 with m*g = 0, or nullopt when g has infinite order.
std::optional<std::int64_t> element_order(const GroupElement& g, const GroupSpec& spec);

GroupClass classify(const GroupSpec& spec);

/// Canonical order: free part lexicographic, then torsion lexicographic.
int compare_elements(const GroupElement& a, const GroupElement& b);
bool element_less(const GroupElement& a, const GroupElement& b);

// -- text forms --------------------------------------------------------------

/// Parses "Z^r x Z/n1 x ... x Z/nk" (either side may be absent, "Z" = Z^1,
/// "Z^0" = trivial group). The result is always normalized; *was_canonical
/// reports whether the written moduli already were in invariant-factor form.
GroupSpec parse_group_spec(const std::string& text, bool* was_canonical = nullptr);

std::string print_group_spec(const GroupSpec& spec);

/// Element text: "(f1,...,fr;t1,...,tk)". The semicolon is required only when
/// both parts are nonempty; single coordinates may be written bare.
GroupElement parse_group_element(const std::string& text, const GroupSpec& spec);

std::string print_group_element(const GroupElement& g, const GroupSpec& spec);

// -- misc --------------------------------------------------------------------

/// Deterministic Miller-Rabin primality for 64-bit values.
bool is_prime_i64(std::int64_t n);

/// If n = p^j for a prime p and j >= 1, returns p.
std::optional<std::int64_t> prime_power_base(std::int64_t n);

/// All elements of a finite group in canonical order.
std::vector<GroupElement> enumerate_group(const GroupSpec& spec);

} // namespace sumlab
