#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/error.hpp"
#include "sumlab/group.hpp"

namespace sumlab {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime, extension };

/// The rationals, a prime field GF(p), or an extension GF(p^n) presented by a
/// monic irreducible modulus of degree n over GF(p). GF(p) behaves exactly
/// like the degree-1 extension with modulus x.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::int64_t p = 0;                 // characteristic (prime/extension)
    int degree = 1;                     // n
    std::vector<std::int64_t> modulus;  // length n+1, little-endian, monic

    static FieldSpec rationals_field();
    static FieldSpec prime_field(std::int64_t p);
    static FieldSpec extension_field(std::int64_t p, int n); // default modulus
    static FieldSpec extension_field(std::int64_t p, std::vector<std::int64_t> modulus);

    bool is_rationals() const { return kind == FieldKind::rationals; }
    bool is_finite() const { return kind != FieldKind::rationals; }
    std::int64_t q() const; // p^degree for finite fields

    bool operator==(const FieldSpec&) const = default;
};

/// Exact field element: a reduced fraction over Q, or a coefficient vector of
/// length n with entries in [0, p) for GF(p^n).
struct FieldElement {
    std::variant<Rational, std::vector<std::int64_t>> value;

    bool operator==(const FieldElement&) const = default;
};

bool conforms(const FieldElement& a, const FieldSpec& spec);

// -- construction ------------------------------------------------------------

FieldElement fe_zero(const FieldSpec& spec);
FieldElement fe_one(const FieldSpec& spec);
FieldElement fe_from_int(const BigInt& v, const FieldSpec& spec);
/// GF(p^n) element with the given coefficient vector (reduced mod p).
FieldElement fe_from_coeffs(std::vector<std::int64_t> coeffs, const FieldSpec& spec);

// -- arithmetic --------------------------------------------------------------

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_neg(const FieldElement& a, const FieldSpec& spec);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_inv(const FieldElement& a, const FieldSpec& spec); // throws DivisionByZero
FieldElement fe_div(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_pow(const FieldElement& a, std::int64_t e, const FieldSpec& spec);

bool fe_is_zero(const FieldElement& a);

/// Canonical order: rationals by value; finite-field elements by the integer
/// encoding sum c_i * p^i (most significant coefficient decides first).
int compare_elements(const FieldElement& a, const FieldElement& b);
bool element_less(const FieldElement& a, const FieldElement& b);

// -- irreducible modulus -----------------------------------------------------

/// The first monic irreducible polynomial of degree n over GF(p) in ascending
/// base-p integer encoding of the non-leading coefficients. Deterministic;
/// find_irreducible(p, 1) = x. Requires p^n <= 2^20.
std::vector<std::int64_t> find_irreducible(std::int64_t p, int n);

/// Monic degree-n polynomial irreducibility over GF(p), via gcd(x^{p^d} - x, m)
/// for d < n plus the x^{p^n} = x divisibility check.
bool is_irreducible(const std::vector<std::int64_t>& modulus, std::int64_t p);

// -- elementary abelian embedding ---------------------------------------------

/// Coordinate map (Z/p)^n -> GF(p^n) onto the basis {1, alpha, ..., alpha^{n-1}}.
FieldElement embed_elementary(const GroupElement& g, const GroupSpec& gspec,
                              const FieldSpec& fspec);

/// Inverse of embed_elementary.
GroupElement extract_elementary(const FieldElement& a, const FieldSpec& fspec,
                                const GroupSpec& gspec);

// -- text forms --------------------------------------------------------------

/// "Q", "GF(p)", "GF(p^n)", "GF(p^n; x^n+...)"; composite GF(q) is accepted
/// for prime powers q and factored automatically.
FieldSpec parse_field_spec(const std::string& text);

std::string print_field_spec(const FieldSpec& spec);

/// Rationals: "3", "-2/7". Finite fields: polynomial expressions in the
/// generator 'a', e.g. "0", "2", "1+a", "2*a^2+1" (reduced mod the modulus).
FieldElement parse_field_element(const std::string& text, const FieldSpec& spec);

std::string print_field_element(const FieldElement& a, const FieldSpec& spec);

// -- enumeration ---------------------------------------------------------------

/// All elements of a finite field in canonical order.
std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

namespace gfpoly {

// Dense univariate polynomials over GF(p), little-endian coefficient vectors
// with no trailing zeros. Shared by the field core and its tests.

using Poly = std::vector<std::int64_t>;

void trim(Poly& f);
int degree(const Poly& f); // -1 for zero
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
/// Division with remainder by a nonzero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p); // monic
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p);
Poly powmod(Poly base, BigInt e, const Poly& m, std::int64_t p);

} // namespace gfpoly

} // namespace sumlab
