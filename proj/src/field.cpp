#include "sumlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sumlab {

namespace {

// inverse of a modulo a prime p, extended Euclid
std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, next_t = 1;
    std::int64_t r = p, next_r = a % p;
    while (next_r != 0) {
        std::int64_t q = r / next_r;
        std::int64_t tmp = t - q * next_t;
        t = next_t;
        next_t = tmp;
        tmp = r - q * next_r;
        r = next_r;
        next_r = tmp;
    }
    return ((t % p) + p) % p;
}

} // namespace

namespace gfpoly {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
    return static_cast<int>(f.size()) - 1;
}

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p) {
    if (b.empty()) throw DivisionByZero("gfpoly: division by the zero polynomial");
    Poly r = a, q;
    trim(r);
    if (degree(r) < degree(b)) return {q, r};
    q.assign(r.size() - b.size() + 1, 0);
    std::int64_t lead_inv = inv_mod_p(b.back(), p);
    for (int i = degree(r); i >= degree(b); --i) {
        if (r[i] == 0) continue;
        std::int64_t c = r[i] * lead_inv % p;
        q[i - degree(b)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = i - degree(b) + j;
            r[k] = ((r[k] - c * b[j]) % p + p) % p;
        }
    }
    trim(r);
    trim(q);
    return {q, r};
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::int64_t inv = inv_mod_p(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    return divmod(mul(a, b, p), m, p).second;
}

Poly powmod(Poly base, BigInt e, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = divmod(base, m, p).second;
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

} // namespace gfpoly

// -- FieldSpec ----------------------------------------------------------------

namespace {

constexpr std::int64_t kFieldSizeCap = 1 << 20;

std::int64_t pow_checked(std::int64_t p, int n) {
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > kFieldSizeCap / p) return kFieldSizeCap + 1;
        q *= p;
    }
    return q;
}

} // namespace

FieldSpec FieldSpec::rationals_field() {
    FieldSpec s;
    s.kind = FieldKind::rationals;
    return s;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime_i64(p)) throw InvalidInput("prime_field: " + std::to_string(p) + " is not prime");
    if (p > kFieldSizeCap) throw ResourceLimit("prime_field: field size exceeds 2^20");
    FieldSpec s;
    s.kind = FieldKind::prime;
    s.p = p;
    s.degree = 1;
    s.modulus = {0, 1}; // x
    return s;
}

FieldSpec FieldSpec::extension_field(std::int64_t p, int n) {
    if (n == 1) return prime_field(p);
    return extension_field(p, find_irreducible(p, n));
}

FieldSpec FieldSpec::extension_field(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime_i64(p)) {
        throw InvalidInput("extension_field: characteristic must be prime");
    }
    for (auto& c : modulus) c = ((c % p) + p) % p;
    gfpoly::trim(modulus);
    int n = gfpoly::degree(modulus);
    if (n < 1) throw InvalidInput("extension_field: modulus must have degree >= 1");
    if (modulus.back() != 1) throw InvalidInput("extension_field: modulus must be monic");
    if (pow_checked(p, n) > kFieldSizeCap) {
        throw ResourceLimit("extension_field: field size exceeds 2^20");
    }
    if (!is_irreducible(modulus, p)) {
        throw InvalidInput("extension_field: modulus is not irreducible over GF(" +
                           std::to_string(p) + ")");
    }
    if (n == 1) {
        if (modulus[0] != 0) {
            throw InvalidInput("extension_field: the degree-1 modulus must be x");
        }
        return prime_field(p);
    }
    FieldSpec s;
    s.kind = FieldKind::extension;
    s.p = p;
    s.degree = n;
    s.modulus = std::move(modulus);
    return s;
}

std::int64_t FieldSpec::q() const {
    if (is_rationals()) throw InvalidInput("q: the rationals are infinite");
    std::int64_t v = 1;
    for (int i = 0; i < degree; ++i) v *= p;
    return v;
}

bool conforms(const FieldElement& a, const FieldSpec& spec) {
    if (spec.is_rationals()) return std::holds_alternative<Rational>(a.value);
    auto* c = std::get_if<std::vector<std::int64_t>>(&a.value);
    if (!c || c->size() != static_cast<std::size_t>(spec.degree)) return false;
    return std::all_of(c->begin(), c->end(),
                       [&](std::int64_t v) { return v >= 0 && v < spec.p; });
}

// -- construction ------------------------------------------------------------

FieldElement fe_zero(const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElement{Rational(0)};
    return FieldElement{std::vector<std::int64_t>(spec.degree, 0)};
}

FieldElement fe_one(const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElement{Rational(1)};
    std::vector<std::int64_t> c(spec.degree, 0);
    c[0] = 1;
    return FieldElement{std::move(c)};
}

FieldElement fe_from_int(const BigInt& v, const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElement{Rational(v)};
    BigInt r = v % spec.p;
    if (r < 0) r += spec.p;
    std::vector<std::int64_t> c(spec.degree, 0);
    c[0] = static_cast<std::int64_t>(r);
    return FieldElement{std::move(c)};
}

FieldElement fe_from_coeffs(std::vector<std::int64_t> coeffs, const FieldSpec& spec) {
    if (spec.is_rationals()) throw InvalidInput("fe_from_coeffs: not a finite field");
    for (auto& c : coeffs) c = ((c % spec.p) + spec.p) % spec.p;
    gfpoly::trim(coeffs);
    coeffs = gfpoly::divmod(coeffs, spec.modulus, spec.p).second;
    coeffs.resize(spec.degree, 0);
    return FieldElement{std::move(coeffs)};
}

// -- arithmetic --------------------------------------------------------------

namespace {

const Rational& rat(const FieldElement& a) { return std::get<Rational>(a.value); }
const std::vector<std::int64_t>& vec(const FieldElement& a) {
    return std::get<std::vector<std::int64_t>>(a.value);
}

void check_operand(const FieldElement& a, const FieldSpec& spec, const char* who) {
    if (!conforms(a, spec)) {
        throw InvalidInput(std::string(who) + ": operand does not conform to field spec");
    }
}

} // namespace

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    check_operand(a, spec, "fe_add");
    check_operand(b, spec, "fe_add");
    if (spec.is_rationals()) return FieldElement{rat(a) + rat(b)};
    std::vector<std::int64_t> c(spec.degree);
    for (int i = 0; i < spec.degree; ++i) {
        std::int64_t s = vec(a)[i] + vec(b)[i];
        c[i] = s >= spec.p ? s - spec.p : s;
    }
    return FieldElement{std::move(c)};
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    check_operand(a, spec, "fe_sub");
    check_operand(b, spec, "fe_sub");
    if (spec.is_rationals()) return FieldElement{rat(a) - rat(b)};
    std::vector<std::int64_t> c(spec.degree);
    for (int i = 0; i < spec.degree; ++i) {
        std::int64_t s = vec(a)[i] - vec(b)[i];
        c[i] = s < 0 ? s + spec.p : s;
    }
    return FieldElement{std::move(c)};
}

FieldElement fe_neg(const FieldElement& a, const FieldSpec& spec) {
    return fe_sub(fe_zero(spec), a, spec);
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    check_operand(a, spec, "fe_mul");
    check_operand(b, spec, "fe_mul");
    if (spec.is_rationals()) return FieldElement{rat(a) * rat(b)};
    gfpoly::Poly pa = vec(a), pb = vec(b);
    gfpoly::trim(pa);
    gfpoly::trim(pb);
    auto r = gfpoly::mulmod(pa, pb, spec.modulus, spec.p);
    r.resize(spec.degree, 0);
    return FieldElement{std::move(r)};
}

FieldElement fe_inv(const FieldElement& a, const FieldSpec& spec) {
    check_operand(a, spec, "fe_inv");
    if (fe_is_zero(a)) throw DivisionByZero("fe_inv: zero has no inverse");
    if (spec.is_rationals()) return FieldElement{Rational(1) / rat(a)};
    // extended Euclid in GF(p)[x] against the modulus
    gfpoly::Poly r0 = spec.modulus, r1 = vec(a);
    gfpoly::trim(r1);
    gfpoly::Poly t0, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = gfpoly::divmod(r0, r1, spec.p);
        auto t2 = gfpoly::sub(t0, gfpoly::mul(q, t1, spec.p), spec.p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // gcd(a, modulus) is a nonzero constant since the modulus is irreducible
    if (r0.size() != 1) throw Error("fe_inv: modulus is not irreducible");
    std::int64_t p = spec.p;
    std::int64_t inv_scale = inv_mod_p(r0[0], p);
    for (auto& c : t0) c = c * inv_scale % p;
    t0.resize(spec.degree, 0);
    return FieldElement{std::move(t0)};
}

FieldElement fe_div(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    return fe_mul(a, fe_inv(b, spec), spec);
}

FieldElement fe_pow(const FieldElement& a, std::int64_t e, const FieldSpec& spec) {
    check_operand(a, spec, "fe_pow");
    if (e < 0) return fe_pow(fe_inv(a, spec), -e, spec);
    FieldElement r = fe_one(spec);
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) r = fe_mul(r, base, spec);
        base = fe_mul(base, base, spec);
        e >>= 1;
    }
    return r;
}

bool fe_is_zero(const FieldElement& a) {
    if (auto* r = std::get_if<Rational>(&a.value)) return *r == 0;
    const auto& c = std::get<std::vector<std::int64_t>>(a.value);
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

int compare_elements(const FieldElement& a, const FieldElement& b) {
    if (auto* ra = std::get_if<Rational>(&a.value)) {
        const auto& rb = std::get<Rational>(b.value);
        if (*ra == rb) return 0;
        return *ra < rb ? -1 : 1;
    }
    const auto& ca = std::get<std::vector<std::int64_t>>(a.value);
    const auto& cb = std::get<std::vector<std::int64_t>>(b.value);
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    for (std::size_t i = ca.size(); i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
    }
    return 0;
}

bool element_less(const FieldElement& a, const FieldElement& b) {
    return compare_elements(a, b) < 0;
}

// -- irreducibility ------------------------------------------------------------

bool is_irreducible(const std::vector<std::int64_t>& modulus, std::int64_t p) {
    gfpoly::Poly m = modulus;
    gfpoly::trim(m);
    int n = gfpoly::degree(m);
    if (n < 1 || m.back() != 1) return false;
    if (n == 1) return true;
    gfpoly::Poly x{0, 1};
    gfpoly::Poly t = x;
    for (int d = 1; d < n; ++d) {
        t = gfpoly::powmod(t, BigInt(p), m, p); // t = x^{p^d} mod m
        auto g = gfpoly::gcd(gfpoly::sub(t, x, p), m, p);
        if (gfpoly::degree(g) != 0) return false;
    }
    t = gfpoly::powmod(t, BigInt(p), m, p); // x^{p^n} mod m
    return gfpoly::sub(t, x, p).empty();
}

std::vector<std::int64_t> find_irreducible(std::int64_t p, int n) {
    if (!is_prime_i64(p)) {
        throw InvalidInput("find_irreducible: " + std::to_string(p) + " is not prime");
    }
    if (n < 1) throw InvalidInput("find_irreducible: degree must be >= 1");
    std::int64_t q = pow_checked(p, n);
    if (q > kFieldSizeCap) throw ResourceLimit("find_irreducible: p^n exceeds 2^20");
    if (n == 1) return {0, 1};
    // Non-leading coefficients enumerated by ascending base-p integer encoding.
    for (std::int64_t v = 0; v < q; ++v) {
        gfpoly::Poly m(n + 1, 0);
        std::int64_t rest = v;
        for (int i = 0; i < n; ++i) {
            m[i] = rest % p;
            rest /= p;
        }
        m[n] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw Error("find_irreducible: no irreducible polynomial found"); // unreachable
}

// -- embedding ----------------------------------------------------------------

FieldElement embed_elementary(const GroupElement& g, const GroupSpec& gspec,
                              const FieldSpec& fspec) {
    GroupClass cls = classify(gspec);
    if (cls.tag != GroupClass::Tag::elementary_abelian) {
        throw InvalidInput("embed_elementary: group is not elementary abelian");
    }
    if (!fspec.is_finite() || fspec.p != cls.prime ||
        fspec.degree != static_cast<int>(gspec.invariant_factors.size())) {
        throw InvalidInput("embed_elementary: field does not match (Z/p)^n");
    }
    if (!conforms(g, gspec)) throw InvalidInput("embed_elementary: element shape mismatch");
    return FieldElement{g.torsion_part};
}

GroupElement extract_elementary(const FieldElement& a, const FieldSpec& fspec,
                                const GroupSpec& gspec) {
    GroupClass cls = classify(gspec);
    if (cls.tag != GroupClass::Tag::elementary_abelian || !fspec.is_finite() ||
        fspec.p != cls.prime ||
        fspec.degree != static_cast<int>(gspec.invariant_factors.size())) {
        throw InvalidInput("extract_elementary: field does not match (Z/p)^n");
    }
    if (!conforms(a, fspec)) throw InvalidInput("extract_elementary: element mismatch");
    GroupElement g;
    g.torsion_part = std::get<std::vector<std::int64_t>>(a.value);
    return g;
}

// -- text forms ----------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_strict_i64(const std::string& s) {
    std::string t = strip(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        throw InvalidInput("malformed number '" + s + "' in field spec");
    }
    if (t.size() > 18) throw InvalidInput("number out of range in field spec: " + s);
    return std::stoll(t);
}

// Parses a univariate polynomial in `var` over GF(p) into little-endian
// coefficients, e.g. "x^3+2*x+1".
gfpoly::Poly parse_gf_poly(const std::string& text, char var, std::int64_t p) {
    gfpoly::Poly out;
    std::size_t i = 0;
    const std::string& s = text;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto add_term = [&](std::int64_t coef, int exp) {
        if (out.size() <= static_cast<std::size_t>(exp)) out.resize(exp + 1, 0);
        out[exp] = ((out[exp] + coef) % p + p) % p;
    };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        skip_ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InvalidInput("malformed polynomial: " + text);
        }
        first = false;
        skip_ws();
        std::int64_t coef = 1;
        bool saw_number = false, saw_var = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = (coef * 10 + (s[i] - '0')) % p;
                ++i;
            }
            saw_number = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        int exp = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            exp = 1;
            saw_var = true;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
                    throw InvalidInput("malformed exponent in polynomial: " + text);
                }
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i] - '0');
                    if (exp > 1 << 20) throw ResourceLimit("polynomial exponent too large");
                    ++i;
                }
            }
        }
        if (!saw_number && !saw_var) {
            throw InvalidInput("malformed polynomial term in: " + text);
        }
        add_term(sign * coef, exp);
        skip_ws();
    }
    gfpoly::trim(out);
    return out;
}

std::string print_gf_poly(const gfpoly::Poly& f, char var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i] << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace

FieldSpec parse_field_spec(const std::string& text) {
    std::string t = strip(text);
    if (t == "Q") return FieldSpec::rationals_field();
    if (t.rfind("GF(", 0) != 0 || t.back() != ')') {
        throw InvalidInput("malformed field spec: " + text);
    }
    std::string inner = t.substr(3, t.size() - 4);
    std::string size_part = inner, modulus_part;
    if (auto semi = inner.find(';'); semi != std::string::npos) {
        size_part = strip(inner.substr(0, semi));
        modulus_part = strip(inner.substr(semi + 1));
    } else {
        size_part = strip(inner);
    }
    std::int64_t p = 0;
    int n = 1;
    if (auto caret = size_part.find('^'); caret != std::string::npos) {
        p = parse_strict_i64(size_part.substr(0, caret));
        n = static_cast<int>(parse_strict_i64(size_part.substr(caret + 1)));
    } else {
        std::int64_t q = parse_strict_i64(size_part);
        if (is_prime_i64(q)) {
            p = q;
            n = 1;
        } else {
            auto base = prime_power_base(q);
            if (!base) throw InvalidInput("field size is not a prime power: " + text);
            p = *base;
            n = 0;
            while (q > 1) {
                q /= p;
                ++n;
            }
        }
    }
    if (n < 1) throw InvalidInput("field degree must be >= 1: " + text);
    if (!modulus_part.empty()) {
        if (!is_prime_i64(p)) throw InvalidInput("field characteristic must be prime: " + text);
        auto m = parse_gf_poly(modulus_part, 'x', p);
        if (gfpoly::degree(m) != n) {
            throw InvalidInput("modulus degree does not match field degree: " + text);
        }
        return FieldSpec::extension_field(p, m);
    }
    return FieldSpec::extension_field(p, n);
}

std::string print_field_spec(const FieldSpec& spec) {
    if (spec.is_rationals()) return "Q";
    if (spec.kind == FieldKind::prime) return "GF(" + std::to_string(spec.p) + ")";
    std::ostringstream os;
    os << "GF(" << spec.p << "^" << spec.degree << "; " << print_gf_poly(spec.modulus, 'x')
       << ")";
    return os.str();
}

FieldElement parse_field_element(const std::string& text, const FieldSpec& spec) {
    std::string t = strip(text);
    if (t.empty()) throw InvalidInput("empty field element");
    if (spec.is_rationals()) {
        auto slash = t.find('/');
        if (slash == std::string::npos) return FieldElement{Rational(BigInt(t))};
        BigInt num(strip(t.substr(0, slash)));
        BigInt den(strip(t.substr(slash + 1)));
        if (den == 0) throw InvalidInput("zero denominator: " + text);
        return FieldElement{Rational(num, den)};
    }
    auto coeffs = parse_gf_poly(t, 'a', spec.p);
    return fe_from_coeffs(std::move(coeffs), spec);
}

std::string print_field_element(const FieldElement& a, const FieldSpec& spec) {
    if (!conforms(a, spec)) throw InvalidInput("print_field_element: element mismatch");
    if (spec.is_rationals()) {
        const auto& r = rat(a);
        std::ostringstream os;
        os << boost::multiprecision::numerator(r);
        if (boost::multiprecision::denominator(r) != 1) {
            os << "/" << boost::multiprecision::denominator(r);
        }
        return os.str();
    }
    gfpoly::Poly f = vec(a);
    gfpoly::trim(f);
    if (f.empty()) return "0";
    // ascending degree reads naturally for field elements: "1+a", "2+a^2"
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i] << "*";
            os << 'a';
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
    if (spec.is_rationals()) throw InvalidInput("enumerate_field: the rationals are infinite");
    std::int64_t q = spec.q();
    std::vector<FieldElement> out;
    out.reserve(q);
    for (std::int64_t v = 0; v < q; ++v) {
        std::vector<std::int64_t> c(spec.degree, 0);
        std::int64_t rest = v;
        for (int i = 0; i < spec.degree; ++i) {
            c[i] = rest % spec.p;
            rest /= spec.p;
        }
        out.push_back(FieldElement{std::move(c)});
    }
    return out;
}

} // namespace sumlab
