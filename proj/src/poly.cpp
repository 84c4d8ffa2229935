#include "sumlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sumlab {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(FieldSpec spec, int nvars) : spec_(std::move(spec)), nvars_(nvars) {
    if (nvars < 0) throw InvalidInput("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(const FieldSpec& spec, int nvars, const FieldElement& c) {
    MultiPoly f(spec, nvars);
    f.add_term(std::vector<int>(nvars, 0), c);
    return f;
}

MultiPoly MultiPoly::monomial(const FieldSpec& spec, int nvars, std::vector<int> exponents,
                              const FieldElement& c) {
    if (exponents.size() != static_cast<std::size_t>(nvars)) {
        throw InvalidInput("MultiPoly::monomial: exponent vector length mismatch");
    }
    for (int e : exponents) {
        if (e < 0) throw InvalidInput("MultiPoly::monomial: negative exponent");
    }
    MultiPoly f(spec, nvars);
    f.add_term(exponents, c);
    return f;
}

MultiPoly MultiPoly::variable(const FieldSpec& spec, int nvars, int index) {
    if (index < 0 || index >= nvars) throw InvalidInput("MultiPoly::variable: index out of range");
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    return monomial(spec, nvars, std::move(e), fe_one(spec));
}

std::optional<int> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // terms are graded-lex ordered, so the last term carries the max degree
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0LL));
}

std::optional<int> MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw InvalidInput("degree_in: variable index out of range");
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const FieldElement& c) {
    if (exponents.size() != static_cast<std::size_t>(nvars_)) {
        throw InvalidInput("MultiPoly::add_term: exponent vector length mismatch");
    }
    if (fe_is_zero(c)) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
        return;
    }
    it->second = fe_add(it->second, c, spec_);
    if (fe_is_zero(it->second)) terms_.erase(it);
}

namespace {

void check_same_shape(const MultiPoly& a, const MultiPoly& b, const char* who) {
    if (a.nvars() != b.nvars() || !(a.spec() == b.spec())) {
        throw InvalidInput(std::string(who) + ": operands live in different polynomial rings");
    }
}

} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_shape(*this, o, "MultiPoly::operator+");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_shape(*this, o, "MultiPoly::operator-");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, fe_neg(c, spec_));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_shape(*this, o, "MultiPoly::operator*");
    MultiPoly r(spec_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, fe_mul(ca, cb, spec_));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(spec_, nvars_);
    for (const auto& [e, t] : terms_) r.add_term(e, fe_mul(t, c, spec_));
    return r;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) {
        throw InvalidInput("MultiPoly::eval: point arity mismatch");
    }
    // power tables per variable up to the max exponent used
    std::vector<int> max_exp(nvars_, 0);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    }
    std::vector<std::vector<FieldElement>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].push_back(fe_one(spec_));
        for (int k = 1; k <= max_exp[i]; ++k) {
            powers[i].push_back(fe_mul(powers[i].back(), point[i], spec_));
        }
    }
    FieldElement acc = fe_zero(spec_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] > 0) t = fe_mul(t, powers[i][e[i]], spec_);
        }
        acc = fe_add(acc, t, spec_);
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && spec_ == o.spec_ && terms_ == o.terms_;
}

// -- CN decomposition -----------------------------------------------------------

MultiPoly grid_vanishing_poly(const std::vector<FieldElement>& grid, int var, int nvars,
                              const FieldSpec& spec) {
    MultiPoly g = MultiPoly::constant(spec, nvars, fe_one(spec));
    for (const auto& a : grid) {
        MultiPoly factor = MultiPoly::variable(spec, nvars, var) -
                           MultiPoly::constant(spec, nvars, a);
        g = g * factor;
    }
    return g;
}

namespace {

std::vector<FieldElement> as_canonical_set(const std::vector<FieldElement>& xs,
                                           const FieldSpec& spec, const char* who) {
    std::vector<FieldElement> out = xs;
    for (const auto& x : out) {
        if (!conforms(x, spec)) {
            throw InvalidInput(std::string(who) + ": element does not conform to the field");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return element_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

CnDecomposition cn_decompose(const MultiPoly& f,
                             const std::vector<std::vector<FieldElement>>& grids) {
    const FieldSpec& spec = f.spec();
    int nvars = f.nvars();
    if (grids.size() != static_cast<std::size_t>(nvars)) {
        throw InvalidInput("cn_decompose: one grid per variable required");
    }
    std::vector<std::vector<FieldElement>> sets;
    sets.reserve(nvars);
    for (const auto& g : grids) {
        auto s = as_canonical_set(g, spec, "cn_decompose");
        if (s.empty()) throw InvalidInput("cn_decompose: empty grid");
        sets.push_back(std::move(s));
    }

    CnDecomposition out;
    out.quotients.assign(nvars, MultiPoly(spec, nvars));
    MultiPoly r = f;

    for (int v = 0; v < nvars; ++v) {
        const int d = static_cast<int>(sets[v].size());
        MultiPoly g = grid_vanishing_poly(sets[v], v, nvars, spec);
        // tail = g - x_v^d, so x_v^d acts as -tail modulo g
        std::vector<int> lead(nvars, 0);
        lead[v] = d;
        MultiPoly tail = g - MultiPoly::monomial(spec, nvars, lead, fe_one(spec));
        while (true) {
            // highest x_v-power first
            const std::vector<int>* best = nullptr;
            const FieldElement* coef = nullptr;
            for (const auto& [e, c] : r.terms()) {
                if (e[v] < d) continue;
                if (!best || e[v] > (*best)[v]) {
                    best = &e;
                    coef = &c;
                }
            }
            if (!best) break;
            std::vector<int> rest = *best;
            rest[v] -= d;
            MultiPoly piece = MultiPoly::monomial(spec, nvars, rest, *coef);
            out.quotients[v] = out.quotients[v] + piece;
            r = r - piece * g;
        }
    }
    out.remainder = std::move(r);
    return out;
}

bool vanishes_on_grid(const MultiPoly& f,
                      const std::vector<std::vector<FieldElement>>& grids) {
    const FieldSpec& spec = f.spec();
    int nvars = f.nvars();
    if (grids.size() != static_cast<std::size_t>(nvars)) {
        throw InvalidInput("vanishes_on_grid: one grid per variable required");
    }
    std::vector<std::vector<FieldElement>> sets;
    long long product = 1;
    for (const auto& g : grids) {
        auto s = as_canonical_set(g, spec, "vanishes_on_grid");
        if (s.empty()) throw InvalidInput("vanishes_on_grid: empty grid");
        product *= static_cast<long long>(s.size());
        if (product > 1000000) throw ResourceLimit("vanishes_on_grid: grid product exceeds 10^6");
        sets.push_back(std::move(s));
    }
    std::vector<std::size_t> idx(nvars, 0);
    std::vector<FieldElement> point;
    while (true) {
        point.clear();
        for (int i = 0; i < nvars; ++i) point.push_back(sets[i][idx[i]]);
        if (!fe_is_zero(f.eval(point))) return false;
        int i = nvars - 1;
        while (i >= 0 && ++idx[i] == sets[i].size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) return true;
        if (nvars == 0) return true;
    }
}

MultiPoly build_difference_poly(const std::vector<FieldElement>& s_set, const FieldSpec& spec) {
    auto s = as_canonical_set(s_set, spec, "build_difference_poly");
    MultiPoly p = MultiPoly::constant(spec, 2, fe_one(spec));
    MultiPoly x = MultiPoly::variable(spec, 2, 0);
    MultiPoly y = MultiPoly::variable(spec, 2, 1);
    for (const auto& c : s) {
        p = p * (x - y - MultiPoly::constant(spec, 2, c));
    }
    return p;
}

MultiPoly build_monomial_constraint_poly(const std::vector<MonomialConstraint>& constraints,
                                         const FieldSpec& spec) {
    MultiPoly p = MultiPoly::constant(spec, 2, fe_one(spec));
    for (const auto& c : constraints) {
        if (c.m < 0 || c.n < 0) {
            throw InvalidInput("build_monomial_constraint_poly: exponents must be nonnegative");
        }
        std::vector<int> e{static_cast<int>(c.m), static_cast<int>(c.n)};
        MultiPoly factor = MultiPoly::monomial(spec, 2, e, fe_one(spec)) -
                           MultiPoly::constant(spec, 2, c.d);
        p = p * factor;
    }
    return p;
}

// -- Lemma 2.1 -------------------------------------------------------------------

Lemma21Report lemma21_check(const std::vector<FieldElement>& a_set,
                            const std::vector<FieldElement>& b_set,
                            const std::vector<LemmaLine>& lines, const MultiPoly& p_poly,
                            const FieldSpec& spec) {
    auto a_sorted = as_canonical_set(a_set, spec, "lemma21_check");
    auto b_sorted = as_canonical_set(b_set, spec, "lemma21_check");
    if (a_sorted.empty() || b_sorted.empty()) {
        throw InvalidInput("lemma21_check: A and B must be nonempty");
    }
    if (lines.empty()) throw InvalidInput("lemma21_check: at least one line is required");
    if (p_poly.nvars() != 2 || !(p_poly.spec() == spec)) {
        throw InvalidInput("lemma21_check: P must be a bivariate polynomial over the field");
    }
    for (const auto& line : lines) {
        if (fe_is_zero(line.lambda)) {
            throw InvalidInput("lemma21_check: every lambda must be nonzero");
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].lambda == lines[j].lambda && lines[i].mu == lines[j].mu) {
                throw InvalidInput("lemma21_check: lines must be pairwise distinct");
            }
        }
    }

    const std::size_t k = lines.size();
    Lemma21Report rep;
    rep.nu_values.assign(k, 0);
    rep.hypotheses_ok = true;

    std::vector<bool> line_has_nonvanishing(k, false);
    for (const auto& a : a_sorted) {
        for (const auto& b : b_sorted) {
            bool nonzero = !fe_is_zero(p_poly.eval({a, b}));
            int hits = 0;
            for (std::size_t i = 0; i < k; ++i) {
                // a + lambda_i * b == mu_i
                FieldElement lhs = fe_add(a, fe_mul(lines[i].lambda, b, spec), spec);
                if (lhs == lines[i].mu) {
                    ++rep.nu_values[i];
                    ++hits;
                    if (nonzero) line_has_nonvanishing[i] = true;
                }
            }
            if (nonzero && hits != 1 && rep.hypotheses_ok) {
                rep.hypotheses_ok = false;
                rep.failure_detail = "pair (" + print_field_element(a, spec) + ", " +
                                     print_field_element(b, spec) + ") with P(a,b) != 0 lies on " +
                                     std::to_string(hits) + " lines (expected exactly 1)";
            }
        }
    }
    for (std::size_t i = 0; i < k && rep.hypotheses_ok; ++i) {
        if (!line_has_nonvanishing[i]) {
            rep.hypotheses_ok = false;
            rep.failure_detail = "line " + std::to_string(i + 1) +
                                 " carries no pair with P(a,b) != 0";
        }
    }

    long long min_nu = *std::min_element(rep.nu_values.begin(), rep.nu_values.end());
    rep.lhs = static_cast<long long>(k) + min_nu;
    if (p_poly.is_zero()) {
        // H1 cannot hold for a zero P; keep rhs meaningless but defined
        rep.rhs = 0;
        rep.inequality_holds = false;
        rep.is_tight = false;
        return rep;
    }
    rep.rhs = static_cast<long long>(a_sorted.size()) + static_cast<long long>(b_sorted.size()) -
              *p_poly.total_degree();
    rep.inequality_holds = rep.lhs >= rep.rhs;
    rep.is_tight = rep.lhs == rep.rhs;
    return rep;
}

// -- text form --------------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    int nvars;
    const FieldSpec& spec;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw InvalidInput("polynomial '" + s + "': " + msg);
    }

    int parse_var() {
        // "x", "y", or "x<k>"; returns variable index
        char v = s[i];
        ++i;
        if (v == 'y') {
            if (nvars < 2) fail("variable y needs at least two variables");
            return 1;
        }
        if (v != 'x') fail("unknown variable");
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            int idx = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                idx = idx * 10 + (s[i] - '0');
                ++i;
            }
            if (idx < 1 || idx > nvars) fail("variable index out of range");
            return idx - 1;
        }
        return 0;
    }

    int parse_exponent() {
        skip_ws();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
            fail("malformed exponent");
        }
        long long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i] - '0');
            if (e > 100000) fail("exponent too large");
            ++i;
        }
        return static_cast<int>(e);
    }

    FieldElement parse_number() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string digits = s.substr(start, i - start);
        skip_ws();
        if (spec.is_rationals() && i < s.size() && s[i] == '/') {
            ++i;
            skip_ws();
            std::size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (dstart == i) fail("malformed fraction");
            return parse_field_element(digits + "/" + s.substr(dstart, i - dstart), spec);
        }
        return parse_field_element(digits, spec);
    }

    // one product of factors, e.g. "2*x^2*y" or "(1+a)x"
    void parse_term(MultiPoly& out, bool negate) {
        FieldElement coef = fe_one(spec);
        std::vector<int> exps(nvars, 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (c == '+' || c == '-') break;
            if (c == '*') {
                if (!saw_factor) fail("term starts with '*'");
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef = fe_mul(coef, parse_number(), spec);
                saw_factor = true;
                continue;
            }
            if (c == '(') {
                std::size_t close = s.find(')', i);
                if (close == std::string::npos) fail("unbalanced parenthesis");
                coef = fe_mul(coef, parse_field_element(s.substr(i + 1, close - i - 1), spec),
                              spec);
                i = close + 1;
                saw_factor = true;
                continue;
            }
            if (c == 'x' || c == 'y') {
                int var = parse_var();
                exps[var] += parse_exponent();
                saw_factor = true;
                continue;
            }
            if (c == 'a' && spec.kind == FieldKind::extension) {
                // a power of the field generator as a coefficient factor
                ++i;
                int e = parse_exponent();
                FieldElement gen = fe_from_coeffs({0, 1}, spec);
                coef = fe_mul(coef, fe_pow(gen, e, spec), spec);
                saw_factor = true;
                continue;
            }
            fail(std::string("unexpected character '") + c + "'");
        }
        if (!saw_factor) fail("empty term");
        if (negate) coef = fe_neg(coef, spec);
        out.add_term(exps, coef);
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars, const FieldSpec& spec) {
    if (nvars < 1) throw InvalidInput("parse_poly: at least one variable required");
    MultiPoly out(spec, nvars);
    PolyParser p{text, 0, nvars, spec};
    bool first = true;
    while (!p.eof()) {
        bool negate = false;
        if (p.s[p.i] == '+' || p.s[p.i] == '-') {
            negate = p.s[p.i] == '-';
            ++p.i;
        } else if (!first) {
            p.fail("expected '+' or '-' between terms");
        }
        first = false;
        if (p.eof()) p.fail("dangling sign");
        p.parse_term(out, negate);
    }
    if (first) throw InvalidInput("parse_poly: empty polynomial text");
    return out;
}

std::string print_poly(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    const FieldSpec& spec = f.spec();
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coef = print_field_element(c, spec);
        bool negative = !coef.empty() && coef[0] == '-';
        if (first) {
            if (negative) {
                os << "-";
                coef = coef.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) coef = coef.substr(1);
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool coef_needs_parens = coef.find('+') != std::string::npos;
        bool coef_is_one = coef == "1";
        if (constant_term) {
            os << (coef_needs_parens ? "(" + coef + ")" : coef);
        } else {
            if (!coef_is_one) {
                os << (coef_needs_parens ? "(" + coef + ")" : coef) << "*";
            }
            bool first_var = true;
            for (int v = 0; v < f.nvars(); ++v) {
                if (e[v] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                if (f.nvars() <= 2) {
                    os << (v == 0 ? "x" : "y");
                } else {
                    os << "x" << (v + 1);
                }
                if (e[v] > 1) os << "^" << e[v];
            }
        }
    }
    return os.str();
}

} // namespace sumlab
