#include "sumlab/instance.hpp"

#include <algorithm>

namespace sumlab {

bool is_field_ambient(const Ambient& ambient) {
    return std::holds_alternative<FieldSpec>(ambient);
}

const GroupSpec& group_of(const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) return *g;
    throw InvalidInput("expected a group ambient");
}

const FieldSpec& field_of(const Ambient& ambient) {
    if (auto* f = std::get_if<FieldSpec>(&ambient)) return *f;
    throw InvalidInput("expected a field ambient");
}

GroupClass ambient_class(const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) return classify(*g);
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    GroupClass c;
    if (f.is_rationals()) {
        c.tag = GroupClass::Tag::torsion_free;
    } else {
        c.tag = GroupClass::Tag::elementary_abelian;
        c.prime = f.p;
    }
    return c;
}

bool ambient_has_cyclic_torsion(const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) return g->has_cyclic_torsion();
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    return f.is_rationals() || f.degree == 1;
}

Element ambient_identity(const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) return identity_element(*g);
    return fe_zero(std::get<FieldSpec>(ambient));
}

Element ambient_add(const Element& a, const Element& b, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return add(std::get<GroupElement>(a), std::get<GroupElement>(b), *g);
    }
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    return fe_add(std::get<FieldElement>(a), std::get<FieldElement>(b), f);
}

Element ambient_sub(const Element& a, const Element& b, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return sub(std::get<GroupElement>(a), std::get<GroupElement>(b), *g);
    }
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    return fe_sub(std::get<FieldElement>(a), std::get<FieldElement>(b), f);
}

Element ambient_scalar_mul(std::int64_t c, const Element& a, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return scalar_mul(BigInt(c), std::get<GroupElement>(a), *g);
    }
    const FieldSpec& f = std::get<FieldSpec>(ambient);
    return fe_mul(fe_from_int(BigInt(c), f), std::get<FieldElement>(a), f);
}

bool element_conforms(const Element& a, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        auto* ge = std::get_if<GroupElement>(&a);
        return ge && conforms(*ge, *g);
    }
    auto* fe = std::get_if<FieldElement>(&a);
    return fe && conforms(*fe, std::get<FieldSpec>(ambient));
}

int compare_elements(const Element& a, const Element& b) {
    if (auto* ga = std::get_if<GroupElement>(&a)) {
        return compare_elements(*ga, std::get<GroupElement>(b));
    }
    return compare_elements(std::get<FieldElement>(a), std::get<FieldElement>(b));
}

bool element_less(const Element& a, const Element& b) {
    return compare_elements(a, b) < 0;
}

std::string print_element(const Element& a, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return print_group_element(std::get<GroupElement>(a), *g);
    }
    return print_field_element(std::get<FieldElement>(a), std::get<FieldSpec>(ambient));
}

Element parse_element(const std::string& text, const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        return parse_group_element(text, *g);
    }
    return parse_field_element(text, std::get<FieldSpec>(ambient));
}

std::string print_ambient(const Ambient& ambient) {
    if (auto* g = std::get_if<GroupSpec>(&ambient)) return print_group_spec(*g);
    return print_field_spec(std::get<FieldSpec>(ambient));
}

Ambient parse_ambient(const std::string& text, bool* was_canonical) {
    std::string t = text;
    auto b = t.find_first_not_of(" \t");
    if (b != std::string::npos) t = t.substr(b);
    if (was_canonical) *was_canonical = true;
    if (t.rfind("GF", 0) == 0 || t.rfind("Q", 0) == 0) {
        return parse_field_spec(text);
    }
    return parse_group_spec(text, was_canonical);
}

std::vector<Element> canonical_set(std::vector<Element> xs, const Ambient& ambient) {
    for (const auto& x : xs) {
        if (!element_conforms(x, ambient)) {
            throw InvalidInput("set element does not conform to the ambient " +
                               print_ambient(ambient));
        }
    }
    std::sort(xs.begin(), xs.end(),
              [](const Element& a, const Element& b) { return element_less(a, b); });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool set_contains(const std::vector<Element>& sorted_set, const Element& x) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), x,
                              [](const Element& a, const Element& b) {
                                  return element_less(a, b);
                              });
}

std::vector<Element> enumerate_ambient(const Ambient& ambient) {
    std::vector<Element> out;
    if (auto* g = std::get_if<GroupSpec>(&ambient)) {
        for (auto& e : enumerate_group(*g)) out.emplace_back(std::move(e));
        return out;
    }
    for (auto& e : enumerate_field(std::get<FieldSpec>(ambient))) out.emplace_back(std::move(e));
    return out;
}

Constraint Constraint::make_distinct() {
    Constraint c;
    c.kind = Kind::distinct;
    return c;
}

Constraint Constraint::make_poly(MultiPoly p) {
    if (p.nvars() != 2) throw InvalidInput("poly constraint: P must be bivariate");
    Constraint c;
    c.kind = Kind::poly;
    c.poly = std::move(p);
    return c;
}

Constraint Constraint::make_linear(std::vector<LinearTerm> terms) {
    for (const auto& t : terms) {
        if (t.m < 0 || t.n < 0) {
            throw InvalidInput("linear constraint: m and n must be nonnegative");
        }
    }
    Constraint c;
    c.kind = Kind::linear;
    c.linear_terms = std::move(terms);
    return c;
}

Constraint Constraint::make_difference(std::vector<Element> s, const Ambient& ambient) {
    Constraint c;
    c.kind = Kind::difference;
    c.difference_set = canonical_set(std::move(s), ambient);
    return c;
}

std::string to_string(Constraint::Kind kind) {
    switch (kind) {
        case Constraint::Kind::none: return "none";
        case Constraint::Kind::distinct: return "distinct";
        case Constraint::Kind::poly: return "poly";
        case Constraint::Kind::linear: return "linear";
        case Constraint::Kind::difference: return "difference";
    }
    return "none";
}

Instance make_instance(Ambient ambient, std::vector<Element> a, std::vector<Element> b,
                       Constraint constraint) {
    Instance inst;
    inst.set_a = canonical_set(std::move(a), ambient);
    inst.set_b = canonical_set(std::move(b), ambient);
    inst.constraint = std::move(constraint);
    inst.ambient = std::move(ambient);
    validate_instance(inst);
    return inst;
}

void validate_instance(const Instance& inst) {
    if (inst.set_a.empty() || inst.set_b.empty()) {
        throw InvalidInput("instance: A and B must be nonempty");
    }
    for (const auto& x : inst.set_a) {
        if (!element_conforms(x, inst.ambient)) throw InvalidInput("instance: bad element in A");
    }
    for (const auto& x : inst.set_b) {
        if (!element_conforms(x, inst.ambient)) throw InvalidInput("instance: bad element in B");
    }
    switch (inst.constraint.kind) {
        case Constraint::Kind::none:
        case Constraint::Kind::distinct:
            break;
        case Constraint::Kind::poly: {
            if (!is_field_ambient(inst.ambient)) {
                throw InvalidInput("poly constraint requires a field ambient");
            }
            if (!inst.constraint.poly || inst.constraint.poly->nvars() != 2 ||
                !(inst.constraint.poly->spec() == field_of(inst.ambient))) {
                throw InvalidInput("poly constraint: P must be bivariate over the ambient field");
            }
            break;
        }
        case Constraint::Kind::linear: {
            if (is_field_ambient(inst.ambient)) {
                throw InvalidInput("linear constraint requires a group ambient");
            }
            const GroupSpec& g = group_of(inst.ambient);
            for (const auto& t : inst.constraint.linear_terms) {
                if (t.m < 0 || t.n < 0) {
                    throw InvalidInput("linear constraint: m and n must be nonnegative");
                }
                if (!conforms(t.d, g)) {
                    throw InvalidInput("linear constraint: d does not conform to the group");
                }
            }
            break;
        }
        case Constraint::Kind::difference: {
            for (const auto& x : inst.constraint.difference_set) {
                if (!element_conforms(x, inst.ambient)) {
                    throw InvalidInput("difference constraint: bad element in S");
                }
            }
            break;
        }
    }
}

// -- sumset operations ------------------------------------------------------------

std::vector<Element> sumset(const std::vector<Element>& a, const std::vector<Element>& b,
                            const Ambient& ambient) {
    if (a.empty() || b.empty()) throw InvalidInput("sumset: A and B must be nonempty");
    std::vector<Element> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            sums.push_back(ambient_add(x, y, ambient));
        }
    }
    return canonical_set(std::move(sums), ambient);
}

long long nu(const std::vector<Element>& a, const std::vector<Element>& b, const Element& c,
             const Ambient& ambient) {
    long long count = 0;
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (ambient_add(x, y, ambient) == c) ++count;
        }
    }
    return count;
}

bool pair_admissible(const Element& a, const Element& b, const Constraint& constraint,
                     const Ambient& ambient) {
    switch (constraint.kind) {
        case Constraint::Kind::none:
            return true;
        case Constraint::Kind::distinct:
            // distinctness is difference-avoidance of S = {identity}
            return !(ambient_sub(a, b, ambient) == ambient_identity(ambient));
        case Constraint::Kind::poly: {
            const FieldElement& fa = std::get<FieldElement>(a);
            const FieldElement& fb = std::get<FieldElement>(b);
            return !fe_is_zero(constraint.poly->eval({fa, fb}));
        }
        case Constraint::Kind::linear: {
            const GroupSpec& g = group_of(ambient);
            const GroupElement& ga = std::get<GroupElement>(a);
            const GroupElement& gb = std::get<GroupElement>(b);
            for (const auto& t : constraint.linear_terms) {
                GroupElement lhs = sub(scalar_mul(BigInt(t.m), ga, g),
                                       scalar_mul(BigInt(t.n), gb, g), g);
                if (lhs == t.d) return false;
            }
            return true;
        }
        case Constraint::Kind::difference:
            return !set_contains(constraint.difference_set, ambient_sub(a, b, ambient));
    }
    return true;
}

std::vector<Element> restricted_sumset(const Instance& inst) {
    validate_instance(inst);
    std::vector<Element> sums;
    for (const auto& x : inst.set_a) {
        for (const auto& y : inst.set_b) {
            if (pair_admissible(x, y, inst.constraint, inst.ambient)) {
                sums.push_back(ambient_add(x, y, inst.ambient));
            }
        }
    }
    return canonical_set(std::move(sums), inst.ambient);
}

std::optional<long long> min_nu_over(const std::vector<Element>& a,
                                     const std::vector<Element>& b,
                                     const std::vector<Element>& target,
                                     const Ambient& ambient) {
    if (target.empty()) return std::nullopt;
    std::optional<long long> best;
    for (const auto& c : target) {
        long long v = nu(a, b, c, ambient);
        if (!best || v < *best) best = v;
    }
    return best;
}

SumsetAnalysis analyze_instance(const Instance& inst) {
    validate_instance(inst);
    SumsetAnalysis out;
    std::vector<Element> sums;
    std::vector<bool> admissible;
    sums.reserve(inst.set_a.size() * inst.set_b.size());
    for (const auto& x : inst.set_a) {
        for (const auto& y : inst.set_b) {
            sums.push_back(ambient_add(x, y, inst.ambient));
            admissible.push_back(pair_admissible(x, y, inst.constraint, inst.ambient));
        }
    }
    std::vector<std::size_t> order(sums.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return element_less(sums[i], sums[j]);
    });
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        long long count = 0;
        bool in_c = false;
        while (j < order.size() && !element_less(sums[order[i]], sums[order[j]])) {
            ++count;
            in_c = in_c || admissible[order[j]];
            ++j;
        }
        out.full_sumset.push_back(sums[order[i]]);
        out.nu_full.push_back(count);
        if (in_c) {
            out.restricted.push_back(sums[order[i]]);
            out.min_nu_c = out.min_nu_c ? std::min(*out.min_nu_c, count) : count;
        }
        i = j;
    }
    out.min_nu_ab = *std::min_element(out.nu_full.begin(), out.nu_full.end());
    return out;
}

} // namespace sumlab
