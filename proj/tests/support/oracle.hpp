#pragma once

// Test-only brute force for restricted sumsets. Deliberately shares no logic
// with the sumset module: group arithmetic is redone on raw coordinates,
// scalar multiples by repeated addition, polynomial values by repeated
// multiplication, and results are compared as printed-element string sets.

#include <set>
#include <string>
#include <vector>

#include "sumlab/instance.hpp"

namespace oracle {

using namespace sumlab;

inline GroupElement o_add(const GroupElement& a, const GroupElement& b, const GroupSpec& g) {
    GroupElement r;
    for (std::size_t i = 0; i < a.free_part.size(); ++i) {
        r.free_part.push_back(a.free_part[i] + b.free_part[i]);
    }
    for (std::size_t i = 0; i < a.torsion_part.size(); ++i) {
        r.torsion_part.push_back((a.torsion_part[i] + b.torsion_part[i]) %
                                 g.invariant_factors[i]);
    }
    return r;
}

inline GroupElement o_neg(const GroupElement& a, const GroupSpec& g) {
    GroupElement r;
    for (const auto& v : a.free_part) r.free_part.push_back(-v);
    for (std::size_t i = 0; i < a.torsion_part.size(); ++i) {
        std::int64_t n = g.invariant_factors[i];
        r.torsion_part.push_back(((-a.torsion_part[i]) % n + n) % n);
    }
    return r;
}

inline GroupElement o_sub(const GroupElement& a, const GroupElement& b, const GroupSpec& g) {
    return o_add(a, o_neg(b, g), g);
}

inline GroupElement o_scalar(std::int64_t m, const GroupElement& a, const GroupSpec& g) {
    GroupElement acc;
    acc.free_part.assign(a.free_part.size(), BigInt(0));
    acc.torsion_part.assign(a.torsion_part.size(), 0);
    GroupElement step = m >= 0 ? a : o_neg(a, g);
    for (std::int64_t i = 0; i < (m >= 0 ? m : -m); ++i) acc = o_add(acc, step, g);
    return acc;
}

inline FieldElement o_pow(const FieldElement& a, int e, const FieldSpec& f) {
    FieldElement r = fe_one(f);
    for (int i = 0; i < e; ++i) r = fe_mul(r, a, f);
    return r;
}

inline FieldElement o_poly_eval(const MultiPoly& p, const FieldElement& x,
                                const FieldElement& y, const FieldSpec& f) {
    FieldElement acc = fe_zero(f);
    for (const auto& [e, c] : p.terms()) {
        FieldElement t = c;
        t = fe_mul(t, o_pow(x, e[0], f), f);
        t = fe_mul(t, o_pow(y, e[1], f), f);
        acc = fe_add(acc, t, f);
    }
    return acc;
}

inline Element o_element_add(const Element& a, const Element& b, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return o_add(std::get<GroupElement>(a), std::get<GroupElement>(b), *g);
    }
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    return fe_add(std::get<FieldElement>(a), std::get<FieldElement>(b), f);
}

inline bool o_admissible(const Element& a, const Element& b, const Instance& inst) {
    switch (inst.constraint.kind) {
        case Constraint::Kind::none:
            return true;
        case Constraint::Kind::distinct:
            return !(a == b);
        case Constraint::Kind::poly: {
            const FieldSpec& f = std::get<FieldSpec>(inst.ambient);
            return !fe_is_zero(o_poly_eval(*inst.constraint.poly, std::get<FieldElement>(a),
                                           std::get<FieldElement>(b), f));
        }
        case Constraint::Kind::linear: {
            const GroupSpec& g = std::get<GroupSpec>(inst.ambient);
            const auto& ga = std::get<GroupElement>(a);
            const auto& gb = std::get<GroupElement>(b);
            for (const auto& t : inst.constraint.linear_terms) {
                GroupElement lhs = o_sub(o_scalar(t.m, ga, g), o_scalar(t.n, gb, g), g);
                if (lhs == t.d) return false;
            }
            return true;
        }
        case Constraint::Kind::difference: {
            Element diff;
            if (auto* g = std::get_if<GroupSpec>(&inst.ambient)) {
                diff = o_sub(std::get<GroupElement>(a), std::get<GroupElement>(b), *g);
            } else {
                const FieldSpec& f = std::get<FieldSpec>(inst.ambient);
                diff = fe_sub(std::get<FieldElement>(a), std::get<FieldElement>(b), f);
            }
            for (const auto& s : inst.constraint.difference_set) {
                if (diff == s) return false;
            }
            return true;
        }
    }
    return true;
}

inline std::set<std::string> o_restricted_sumset(const Instance& inst) {
    std::set<std::string> out;
    for (const auto& a : inst.set_a) {
        for (const auto& b : inst.set_b) {
            if (o_admissible(a, b, inst)) {
                out.insert(print_element(o_element_add(a, b, inst.ambient), inst.ambient));
            }
        }
    }
    return out;
}

inline std::set<std::string> o_sumset(const Instance& inst) {
    std::set<std::string> out;
    for (const auto& a : inst.set_a) {
        for (const auto& b : inst.set_b) {
            out.insert(print_element(o_element_add(a, b, inst.ambient), inst.ambient));
        }
    }
    return out;
}

inline long long o_nu(const Instance& inst, const Element& c) {
    long long count = 0;
    for (const auto& a : inst.set_a) {
        for (const auto& b : inst.set_b) {
            if (o_element_add(a, b, inst.ambient) == c) ++count;
        }
    }
    return count;
}

inline std::set<std::string> to_string_set(const std::vector<Element>& xs,
                                           const Ambient& ambient) {
    std::set<std::string> out;
    for (const auto& x : xs) out.insert(print_element(x, ambient));
    return out;
}

} // namespace oracle
