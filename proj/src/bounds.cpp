#include "sumlab/bounds.hpp"

#include <algorithm>

namespace sumlab {

namespace {

struct TheoremName {
    TheoremId id;
    const char* name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::cauchy_davenport, "cauchy_davenport"},
    {TheoremId::kemperman_scherk, "kemperman_scherk"},
    {TheoremId::erdos_heilbronn, "erdos_heilbronn"},
    {TheoremId::anr, "anr"},
    {TheoremId::lev_conjecture, "lev_conjecture"},
    {TheoremId::thm_1_1, "thm_1_1"},
    {TheoremId::thm_1_2, "thm_1_2"},
    {TheoremId::thm_1_3_i, "thm_1_3_i"},
    {TheoremId::thm_1_3_ii, "thm_1_3_ii"},
    {TheoremId::ps_bound, "ps_bound"},
    {TheoremId::karolyi_style, "karolyi_style"},
    {TheoremId::test_always, "__test_always"},
};

} // namespace

const std::vector<TheoremId>& public_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& t : kTheoremNames) {
            if (t.id != TheoremId::test_always) v.push_back(t.id);
        }
        return v;
    }();
    return ids;
}

std::string to_string(TheoremId id) {
    for (const auto& t : kTheoremNames) {
        if (t.id == id) return t.name;
    }
    return "unknown";
}

TheoremId theorem_from_string(const std::string& name) {
    for (const auto& t : kTheoremNames) {
        if (name == t.name) return t.id;
    }
    throw InvalidInput("unknown theorem id: " + name);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::tight: return "tight";
        case Verdict::violated: return "violated";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

std::string to_string(MinNuDomain d) {
    return d == MinNuDomain::over_c ? "C" : "A+B";
}

AmbientTraits ambient_traits(const Ambient& ambient) {
    AmbientTraits t;
    t.is_field = is_field_ambient(ambient);
    t.cls = ambient_class(ambient);
    t.torsion_cyclic = ambient_has_cyclic_torsion(ambient);
    if (t.is_field) {
        const FieldSpec& f = field_of(ambient);
        t.characteristic = f.is_rationals() ? 0 : f.p;
        if (f.is_finite() && f.degree == 1) t.cyclic_order = f.p;
    } else {
        const GroupSpec& g = group_of(ambient);
        if (g.is_finite() && g.invariant_factors.size() == 1) {
            t.cyclic_order = g.invariant_factors[0];
        } else if (g.is_trivial()) {
            t.cyclic_order = 1;
        }
    }
    if (t.cyclic_order) {
        t.cyclic_prime = is_prime_i64(*t.cyclic_order);
        if (*t.cyclic_order > 1) t.cyclic_prime_base = prime_power_base(*t.cyclic_order);
    }
    return t;
}

InstanceStats instance_stats(const Instance& inst, const SumsetAnalysis& analysis) {
    InstanceStats s;
    s.size_a = static_cast<long long>(inst.set_a.size());
    s.size_b = static_cast<long long>(inst.set_b.size());
    s.size_c = static_cast<long long>(analysis.restricted.size());
    s.min_nu_ab = analysis.min_nu_ab;
    s.min_nu_c = analysis.min_nu_c;
    s.kind = inst.constraint.kind;
    s.a_equals_b = inst.set_a == inst.set_b;
    switch (inst.constraint.kind) {
        case Constraint::Kind::distinct:
            s.s_size = 1;
            break;
        case Constraint::Kind::difference:
            s.s_size = static_cast<long long>(inst.constraint.difference_set.size());
            break;
        case Constraint::Kind::poly:
            if (auto d = inst.constraint.poly->total_degree()) s.poly_deg = *d;
            break;
        case Constraint::Kind::linear:
            for (const auto& t : inst.constraint.linear_terms) s.linear_weight += t.m + t.n;
            break;
        case Constraint::Kind::none:
            break;
    }
    return s;
}

namespace {

BoundReport not_applicable(TheoremId id, long long actual, std::string why) {
    BoundReport r;
    r.theorem = id;
    r.actual = actual;
    r.verdict = Verdict::not_applicable;
    r.note = std::move(why);
    return r;
}

BoundReport finish(TheoremId id, long long predicted, long long actual,
                   std::optional<long long> min_nu, std::optional<MinNuDomain> domain) {
    BoundReport r;
    r.theorem = id;
    r.predicted = predicted;
    r.actual = actual;
    r.min_nu = min_nu;
    r.min_nu_domain = domain;
    if (actual < predicted) {
        r.verdict = Verdict::violated;
        r.note = "actual " + std::to_string(actual) + " < predicted " +
                 std::to_string(predicted);
    } else if (actual == predicted && predicted >= 1) {
        r.verdict = Verdict::tight;
    } else {
        r.verdict = Verdict::satisfied;
    }
    return r;
}

bool difference_like(Constraint::Kind k) {
    return k == Constraint::Kind::difference || k == Constraint::Kind::distinct;
}

/// Largest power of p (including p^0 = 1) not exceeding limit >= 1.
long long largest_prime_power_below(long long p, long long limit) {
    long long q = 1;
    while (q <= limit / p) q *= p;
    return q;
}

} // namespace

BoundReport evaluate_bound(TheoremId id, const AmbientTraits& traits,
                           const InstanceStats& st) {
    const long long actual = st.size_c;
    switch (id) {
        case TheoremId::kemperman_scherk: {
            if (st.kind != Constraint::Kind::none) {
                return not_applicable(id, actual, "applies to the unrestricted sumset only");
            }
            return finish(id, st.size_a + st.size_b - st.min_nu_ab, actual, st.min_nu_ab,
                          MinNuDomain::over_sumset);
        }
        case TheoremId::cauchy_davenport: {
            if (st.kind != Constraint::Kind::none) {
                return not_applicable(id, actual, "applies to the unrestricted sumset only");
            }
            if (!traits.cyclic_prime) {
                return not_applicable(id, actual, "ambient is not Z/p with p prime");
            }
            long long p = *traits.cyclic_order;
            return finish(id, std::min(p, st.size_a + st.size_b - 1), actual, std::nullopt,
                          std::nullopt);
        }
        case TheoremId::erdos_heilbronn: {
            if (st.kind != Constraint::Kind::distinct) {
                return not_applicable(id, actual, "requires the distinct constraint");
            }
            if (!traits.cyclic_prime) {
                return not_applicable(id, actual, "ambient is not Z/p with p prime");
            }
            if (!st.a_equals_b) return not_applicable(id, actual, "requires A = B");
            long long p = *traits.cyclic_order;
            return finish(id, std::min(p, 2 * st.size_a - 3), actual, std::nullopt,
                          std::nullopt);
        }
        case TheoremId::anr: {
            if (st.kind != Constraint::Kind::distinct) {
                return not_applicable(id, actual, "requires the distinct constraint");
            }
            if (!traits.cyclic_prime) {
                return not_applicable(id, actual, "ambient is not Z/p with p prime");
            }
            long long p = *traits.cyclic_order;
            long long delta = st.size_a == st.size_b ? 1 : 0;
            return finish(id, std::min(p, st.size_a + st.size_b - 2 - delta), actual,
                          std::nullopt, std::nullopt);
        }
        case TheoremId::lev_conjecture: {
            if (st.kind != Constraint::Kind::distinct) {
                return not_applicable(id, actual, "requires the distinct constraint");
            }
            if (actual == 0) return not_applicable(id, actual, "restricted sumset is empty");
            return finish(id, st.size_a + st.size_b - 2 - st.min_nu_ab, actual, st.min_nu_ab,
                          MinNuDomain::over_sumset);
        }
        case TheoremId::thm_1_1: {
            if (!traits.is_field) return not_applicable(id, actual, "requires a field ambient");
            if (st.kind != Constraint::Kind::poly) {
                return not_applicable(id, actual, "requires a polynomial constraint");
            }
            if (actual == 0) return not_applicable(id, actual, "C is empty");
            return finish(id, st.size_a + st.size_b - *st.poly_deg - *st.min_nu_c, actual,
                          st.min_nu_c, MinNuDomain::over_c);
        }
        case TheoremId::thm_1_2: {
            if (st.kind != Constraint::Kind::linear) {
                return not_applicable(id, actual, "requires a linear constraint");
            }
            if (!traits.torsion_cyclic) {
                return not_applicable(id, actual, "torsion subgroup is not cyclic");
            }
            if (actual == 0) return not_applicable(id, actual, "C is empty");
            return finish(id, st.size_a + st.size_b - st.linear_weight - *st.min_nu_c, actual,
                          st.min_nu_c, MinNuDomain::over_c);
        }
        case TheoremId::thm_1_3_i: {
            if (!difference_like(st.kind)) {
                return not_applicable(id, actual, "requires a difference or distinct constraint");
            }
            if (st.s_size < 1) return not_applicable(id, actual, "requires nonempty S");
            if (traits.cls.tag != GroupClass::Tag::torsion_free &&
                traits.cls.tag != GroupClass::Tag::elementary_abelian) {
                return not_applicable(id, actual,
                                      "ambient is neither torsion-free nor elementary abelian");
            }
            if (actual == 0) return not_applicable(id, actual, "C is empty");
            return finish(id, st.size_a + st.size_b - st.s_size - *st.min_nu_c, actual,
                          st.min_nu_c, MinNuDomain::over_c);
        }
        case TheoremId::thm_1_3_ii: {
            if (!difference_like(st.kind)) {
                return not_applicable(id, actual, "requires a difference or distinct constraint");
            }
            if (st.s_size < 1) return not_applicable(id, actual, "requires nonempty S");
            if (!traits.torsion_cyclic) {
                return not_applicable(id, actual, "torsion subgroup is not cyclic");
            }
            if (actual == 0) return not_applicable(id, actual, "C is empty");
            return finish(id, st.size_a + st.size_b - 2 * st.s_size - *st.min_nu_c, actual,
                          st.min_nu_c, MinNuDomain::over_c);
        }
        case TheoremId::ps_bound: {
            if (!difference_like(st.kind)) {
                return not_applicable(id, actual, "requires a difference or distinct constraint");
            }
            if (!traits.is_field || traits.characteristic < 3) {
                return not_applicable(id, actual, "requires odd prime characteristic");
            }
            if (st.s_size < 1) return not_applicable(id, actual, "requires nonempty S");
            long long p = traits.characteristic;
            long long q = largest_prime_power_below(p, st.s_size);
            return finish(id, std::min(p, st.size_a + st.size_b - st.s_size - q - 1), actual,
                          std::nullopt, std::nullopt);
        }
        case TheoremId::karolyi_style: {
            if (!difference_like(st.kind)) {
                return not_applicable(id, actual, "requires a difference or distinct constraint");
            }
            if (!traits.cyclic_order || !traits.cyclic_prime_base) {
                return not_applicable(id, actual,
                                      "ambient is not Z/q with q > 1 a prime power");
            }
            if (st.s_size < 1) return not_applicable(id, actual, "requires nonempty S");
            if (std::min(st.size_a, st.size_b) <= st.s_size) {
                return not_applicable(id, actual, "requires min(|A|,|B|) > |S|");
            }
            long long p = *traits.cyclic_prime_base;
            return finish(id, std::min(p, st.size_a + st.size_b - 2 * st.s_size - 1), actual,
                          std::nullopt, std::nullopt);
        }
        case TheoremId::test_always:
            return finish(id, st.size_a + st.size_b, actual, std::nullopt, std::nullopt);
    }
    return not_applicable(id, actual, "unknown theorem");
}

std::optional<long long> predicted_bound(TheoremId id, const Instance& inst) {
    return check_instance(id, inst).predicted;
}

BoundReport check_instance(TheoremId id, const Instance& inst) {
    SumsetAnalysis analysis = analyze_instance(inst);
    return evaluate_bound(id, ambient_traits(inst.ambient), instance_stats(inst, analysis));
}

} // namespace sumlab
