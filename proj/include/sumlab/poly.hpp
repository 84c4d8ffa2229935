#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/field.hpp"

namespace sumlab {

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// lexicographic with the first variable most significant.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial with exact coefficients over a FieldSpec.
/// No zero coefficients are stored; the zero polynomial has no terms and its
/// total degree is minus-infinity (represented as an empty optional).
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, FieldElement, GradedLexLess>;

    MultiPoly() = default;
    MultiPoly(FieldSpec spec, int nvars);

    static MultiPoly constant(const FieldSpec& spec, int nvars, const FieldElement& c);
    static MultiPoly monomial(const FieldSpec& spec, int nvars, std::vector<int> exponents,
                              const FieldElement& c);
    static MultiPoly variable(const FieldSpec& spec, int nvars, int index);

    const FieldSpec& spec() const { return spec_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> total_degree() const;
    std::optional<int> degree_in(int var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;

    FieldElement eval(const std::vector<FieldElement>& point) const;

    void add_term(const std::vector<int>& exponents, const FieldElement& c);

    bool operator==(const MultiPoly& o) const;

private:
    FieldSpec spec_;
    int nvars_ = 0;
    TermMap terms_;
};

/// Quotient/remainder form produced by grid-relation reduction:
/// f = sum_i g_i * h_i + r with deg_{x_i} r < |A_i| and
/// deg h_i <= deg f - deg g_i.
struct CnDecomposition {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};

/// g = prod_{a in grid} (x_var - a), over nvars variables.
MultiPoly grid_vanishing_poly(const std::vector<FieldElement>& grid, int var, int nvars,
                              const FieldSpec& spec);

/// Reduces f against the grid relations x_i^{|A_i|} = -(tail of g_i), variables
/// in ascending index order, highest powers first. The remainder is zero if and
/// only if f vanishes on the Cartesian product of the grids.
CnDecomposition cn_decompose(const MultiPoly& f,
                             const std::vector<std::vector<FieldElement>>& grids);

/// Direct evaluation over the whole grid (product size capped at 10^6).
bool vanishes_on_grid(const MultiPoly& f,
                      const std::vector<std::vector<FieldElement>>& grids);

/// P(x,y) = prod_{s in S} (x - y - s); the empty product is the constant 1.
MultiPoly build_difference_poly(const std::vector<FieldElement>& s_set,
                                const FieldSpec& spec);

struct MonomialConstraint {
    std::int64_t m = 0;
    std::int64_t n = 0;
    FieldElement d;
};

/// P(x,y) = prod_i (x^{m_i} y^{n_i} - d_i); the empty product is the constant 1.
MultiPoly build_monomial_constraint_poly(const std::vector<MonomialConstraint>& constraints,
                                         const FieldSpec& spec);

/// One line a + lambda*b = mu with lambda != 0.
struct LemmaLine {
    FieldElement lambda;
    FieldElement mu;
};

struct Lemma21Report {
    bool hypotheses_ok = false;
    std::string failure_detail;            // empty when hypotheses_ok
    std::vector<long long> nu_values;      // one per line, counting all of A x B
    long long lhs = 0;                     // k + min nu_i
    long long rhs = 0;                     // |A| + |B| - deg P
    bool inequality_holds = false;
    bool is_tight = false;
};

/// Verifies the covering hypotheses (every line carries a pair with
/// P(a,b) != 0; every such pair lies on exactly one line), computes the nu
/// counts over all of A x B, and evaluates k + min nu >= |A| + |B| - deg P.
Lemma21Report lemma21_check(const std::vector<FieldElement>& a_set,
                            const std::vector<FieldElement>& b_set,
                            const std::vector<LemmaLine>& lines, const MultiPoly& p_poly,
                            const FieldSpec& spec);

// -- text form -----------------------------------------------------------------

/// Parses "+"/"-"-separated products of numeric or parenthesized coefficients
/// and powers of x, y (or x1..xn), e.g. "x^2-x", "2*x1*x2^2+1", "(1+a)*x*y".
MultiPoly parse_poly(const std::string& text, int nvars, const FieldSpec& spec);

/// Canonical form: terms in descending graded-lexicographic order.
std::string print_poly(const MultiPoly& f);

} // namespace sumlab
