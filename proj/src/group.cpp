#include "sumlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace sumlab {

namespace {

std::int64_t reduce_mod(const BigInt& v, std::int64_t n) {
    BigInt r = v % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>((__int128)a * b % n);
}

void check_shape(const GroupElement& g, const GroupSpec& spec, const char* who) {
    if (g.free_part.size() != static_cast<std::size_t>(spec.free_rank) ||
        g.torsion_part.size() != spec.invariant_factors.size()) {
        throw InvalidInput(std::string(who) + ": element shape does not match group spec");
    }
}

} // namespace

BigInt GroupSpec::order() const {
    if (free_rank != 0) throw InvalidInput("order: group is infinite");
    BigInt o = 1;
    for (auto n : invariant_factors) o *= n;
    return o;
}

std::int64_t GroupSpec::exponent() const {
    return invariant_factors.empty() ? 1 : invariant_factors.back();
}

std::string to_string(GroupClass::Tag tag) {
    switch (tag) {
        case GroupClass::Tag::torsion_free: return "torsion_free";
        case GroupClass::Tag::elementary_abelian: return "elementary_abelian";
        case GroupClass::Tag::torsion_cyclic: return "torsion_cyclic";
        case GroupClass::Tag::other: return "other";
    }
    return "other";
}

GroupSpec normalize_group_spec(const std::vector<std::int64_t>& moduli, int free_rank) {
    if (free_rank < 0) throw InvalidInput("normalize_group_spec: free rank must be nonnegative");
    for (auto m : moduli) {
        if (m < 2) throw InvalidInput("normalize_group_spec: every modulus must be >= 2");
    }
    std::vector<BigInt> f(moduli.begin(), moduli.end());
    // Replace any non-dividing pair by (gcd, lcm) until a divisibility chain holds.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i + 1 < f.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < f.size() && !changed; ++j) {
                if (f[j] % f[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(f[i], f[j]);
                    BigInt l = f[i] / g * f[j];
                    f[i] = g;
                    f[j] = l;
                    changed = true;
                }
            }
        }
    }
    GroupSpec spec;
    spec.free_rank = free_rank;
    for (const auto& v : f) {
        if (v == 1) continue;
        if (v > std::numeric_limits<std::int64_t>::max()) {
            throw ResourceLimit("normalize_group_spec: invariant factor exceeds 64-bit range");
        }
        spec.invariant_factors.push_back(static_cast<std::int64_t>(v));
    }
    std::sort(spec.invariant_factors.begin(), spec.invariant_factors.end());
    return spec;
}

bool is_invariant_factor_form(const std::vector<std::int64_t>& moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 2) return false;
        if (i > 0 && moduli[i] % moduli[i - 1] != 0) return false;
    }
    return true;
}

GroupElement identity_element(const GroupSpec& spec) {
    GroupElement e;
    e.free_part.assign(spec.free_rank, BigInt(0));
    e.torsion_part.assign(spec.invariant_factors.size(), 0);
    return e;
}

bool conforms(const GroupElement& g, const GroupSpec& spec) {
    if (g.free_part.size() != static_cast<std::size_t>(spec.free_rank)) return false;
    if (g.torsion_part.size() != spec.invariant_factors.size()) return false;
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        if (g.torsion_part[i] < 0 || g.torsion_part[i] >= spec.invariant_factors[i]) return false;
    }
    return true;
}

GroupElement make_element(std::vector<BigInt> free_part,
                          const std::vector<BigInt>& torsion_part,
                          const GroupSpec& spec) {
    if (free_part.size() != static_cast<std::size_t>(spec.free_rank) ||
        torsion_part.size() != spec.invariant_factors.size()) {
        throw InvalidInput("make_element: coordinate count does not match group spec");
    }
    GroupElement g;
    g.free_part = std::move(free_part);
    g.torsion_part.reserve(torsion_part.size());
    for (std::size_t i = 0; i < torsion_part.size(); ++i) {
        g.torsion_part.push_back(reduce_mod(torsion_part[i], spec.invariant_factors[i]));
    }
    return g;
}

GroupElement add(const GroupElement& g, const GroupElement& h, const GroupSpec& spec) {
    check_shape(g, spec, "add");
    check_shape(h, spec, "add");
    GroupElement r;
    r.free_part.reserve(g.free_part.size());
    for (std::size_t i = 0; i < g.free_part.size(); ++i) {
        r.free_part.push_back(g.free_part[i] + h.free_part[i]);
    }
    r.torsion_part.reserve(g.torsion_part.size());
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        std::int64_t n = spec.invariant_factors[i];
        std::int64_t s = g.torsion_part[i] - n + h.torsion_part[i]; // stays in [-n, n)
        r.torsion_part.push_back(s < 0 ? s + n : s);
    }
    return r;
}

GroupElement neg(const GroupElement& g, const GroupSpec& spec) {
    check_shape(g, spec, "neg");
    GroupElement r;
    r.free_part.reserve(g.free_part.size());
    for (const auto& v : g.free_part) r.free_part.push_back(-v);
    r.torsion_part.reserve(g.torsion_part.size());
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        std::int64_t n = spec.invariant_factors[i];
        r.torsion_part.push_back(g.torsion_part[i] == 0 ? 0 : n - g.torsion_part[i]);
    }
    return r;
}

GroupElement sub(const GroupElement& g, const GroupElement& h, const GroupSpec& spec) {
    return add(g, neg(h, spec), spec);
}

GroupElement scalar_mul(const BigInt& c, const GroupElement& g, const GroupSpec& spec) {
    check_shape(g, spec, "scalar_mul");
    GroupElement r;
    r.free_part.reserve(g.free_part.size());
    for (const auto& v : g.free_part) r.free_part.push_back(c * v);
    r.torsion_part.reserve(g.torsion_part.size());
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        std::int64_t n = spec.invariant_factors[i];
        r.torsion_part.push_back(mul_mod(reduce_mod(c, n), g.torsion_part[i], n));
    }
    return r;
}

std::optional<std::int64_t> element_order(const GroupElement& g, const GroupSpec& spec) {
    check_shape(g, spec, "element_order");
    for (const auto& v : g.free_part) {
        if (v != 0) return std::nullopt;
    }
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        std::int64_t n = spec.invariant_factors[i];
        std::int64_t o = n / std::gcd(n, g.torsion_part[i]);
        ord = std::lcm(ord, o); // both divide exponent(), no overflow
    }
    return ord;
}

GroupClass classify(const GroupSpec& spec) {
    GroupClass c;
    if (spec.invariant_factors.empty()) {
        c.tag = GroupClass::Tag::torsion_free;
        return c;
    }
    if (spec.free_rank == 0) {
        std::int64_t p = spec.invariant_factors.front();
        bool all_p = std::all_of(spec.invariant_factors.begin(), spec.invariant_factors.end(),
                                 [&](std::int64_t n) { return n == p; });
        if (all_p && is_prime_i64(p)) {
            c.tag = GroupClass::Tag::elementary_abelian;
            c.prime = p;
            return c;
        }
    }
    if (spec.invariant_factors.size() == 1) {
        c.tag = GroupClass::Tag::torsion_cyclic;
        return c;
    }
    c.tag = GroupClass::Tag::other;
    return c;
}

int compare_elements(const GroupElement& a, const GroupElement& b) {
    for (std::size_t i = 0; i < std::min(a.free_part.size(), b.free_part.size()); ++i) {
        if (a.free_part[i] != b.free_part[i]) return a.free_part[i] < b.free_part[i] ? -1 : 1;
    }
    if (a.free_part.size() != b.free_part.size()) {
        return a.free_part.size() < b.free_part.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < std::min(a.torsion_part.size(), b.torsion_part.size()); ++i) {
        if (a.torsion_part[i] != b.torsion_part[i]) {
            return a.torsion_part[i] < b.torsion_part[i] ? -1 : 1;
        }
    }
    if (a.torsion_part.size() != b.torsion_part.size()) {
        return a.torsion_part.size() < b.torsion_part.size() ? -1 : 1;
    }
    return 0;
}

bool element_less(const GroupElement& a, const GroupElement& b) {
    return compare_elements(a, b) < 0;
}

// -- text forms --------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

BigInt parse_bigint(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw InvalidInput("malformed integer literal: " + s);
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
            throw InvalidInput("malformed integer literal: " + s);
        }
    }
    return BigInt(t);
}

std::int64_t parse_i64(const std::string& s) {
    BigInt v = parse_bigint(s);
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw InvalidInput("integer out of 64-bit range: " + s);
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

GroupSpec parse_group_spec(const std::string& text, bool* was_canonical) {
    std::string t = strip(text);
    if (t.empty()) throw InvalidInput("empty group spec");
    // normalize separators: accept 'x' and '*'
    std::vector<std::string> parts;
    {
        std::string cur;
        for (std::size_t i = 0; i < t.size(); ++i) {
            char ch = t[i];
            bool is_sep = (ch == '*') || (ch == 'x' && (i + 1 >= t.size() || t[i + 1] != '^'));
            // 'x' only separates between whitespace or Z-tokens; "Z/..." never contains 'x'
            if (is_sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
    }
    int rank = 0;
    std::vector<std::int64_t> moduli;
    for (auto& raw : parts) {
        std::string p = strip(raw);
        if (p.empty()) throw InvalidInput("malformed group spec: " + text);
        if (p == "Z") {
            rank += 1;
        } else if (p.rfind("Z^", 0) == 0) {
            std::int64_t r = parse_i64(p.substr(2));
            if (r < 0) throw InvalidInput("negative free rank in group spec: " + text);
            rank += static_cast<int>(r);
        } else if (p.rfind("Z/", 0) == 0) {
            moduli.push_back(parse_i64(p.substr(2)));
        } else {
            throw InvalidInput("malformed group spec token '" + p + "' in: " + text);
        }
    }
    if (was_canonical) *was_canonical = is_invariant_factor_form(moduli);
    return normalize_group_spec(moduli, rank);
}

std::string print_group_spec(const GroupSpec& spec) {
    std::ostringstream os;
    bool first = true;
    if (spec.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (spec.free_rank > 1) {
        os << "Z^" << spec.free_rank;
        first = false;
    }
    for (auto n : spec.invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << n;
        first = false;
    }
    if (first) os << "Z^0";
    return os.str();
}

GroupElement parse_group_element(const std::string& text, const GroupSpec& spec) {
    std::string t = strip(text);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        t = strip(t.substr(1, t.size() - 2));
    }
    std::vector<BigInt> free_part, torsion_part;
    auto parse_list = [](const std::string& s) {
        std::vector<BigInt> out;
        if (strip(s).empty()) return out;
        for (auto& tok : split(s, ',')) out.push_back(parse_bigint(tok));
        return out;
    };
    auto semi = t.find(';');
    if (semi != std::string::npos) {
        free_part = parse_list(t.substr(0, semi));
        torsion_part = parse_list(t.substr(semi + 1));
    } else {
        if (spec.free_rank > 0 && !spec.invariant_factors.empty()) {
            throw InvalidInput("element '" + text + "' needs ';' between free and torsion parts");
        }
        auto coords = parse_list(t);
        if (spec.free_rank > 0) {
            free_part = std::move(coords);
        } else {
            torsion_part = std::move(coords);
        }
    }
    return make_element(std::move(free_part), torsion_part, spec);
}

std::string print_group_element(const GroupElement& g, const GroupSpec& spec) {
    check_shape(g, spec, "print_group_element");
    std::ostringstream free_os, tor_os;
    for (std::size_t i = 0; i < g.free_part.size(); ++i) {
        if (i) free_os << ",";
        free_os << g.free_part[i];
    }
    for (std::size_t i = 0; i < g.torsion_part.size(); ++i) {
        if (i) tor_os << ",";
        tor_os << g.torsion_part[i];
    }
    std::string f = free_os.str(), t = tor_os.str();
    if (!f.empty() && !t.empty()) return "(" + f + ";" + t + ")";
    const std::string& one = f.empty() ? t : f;
    std::size_t coords = f.empty() ? g.torsion_part.size() : g.free_part.size();
    if (coords == 0) return "()";
    if (coords == 1) return one;
    return "(" + one + ")";
}

// -- misc --------------------------------------------------------------------

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    auto pow_mod = [&](__int128 base, std::int64_t exp, std::int64_t mod) {
        __int128 r = 1;
        base %= mod;
        while (exp > 0) {
            if (exp & 1) r = r * base % mod;
            base = base * base % mod;
            exp >>= 1;
        }
        return static_cast<std::int64_t>(r);
    };
    // deterministic witness set for 64-bit integers
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<std::int64_t>((__int128)x * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::int64_t> prime_power_base(std::int64_t n) {
    if (n < 2) return std::nullopt;
    std::int64_t p = n;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            p = d;
            break;
        }
    }
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    if (m != 1) return std::nullopt;
    return p;
}

std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
    if (!spec.is_finite()) throw InvalidInput("enumerate_group: group is infinite");
    BigInt order = spec.order();
    if (order > 1000000) throw ResourceLimit("enumerate_group: group order exceeds 10^6");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order));
    GroupElement cur = identity_element(spec);
    while (true) {
        out.push_back(cur);
        // odometer in canonical (lexicographic) order: last coordinate fastest
        std::size_t k = cur.torsion_part.size();
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++cur.torsion_part[i] < spec.invariant_factors[i]) break;
            cur.torsion_part[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

} // namespace sumlab
