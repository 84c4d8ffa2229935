#pragma once

#include <optional>
#include <string>

#include "sumlab/instance.hpp"

namespace sumlab {

/// Every lower bound the checker knows. test_always is a hidden id predicting
/// |A| + |B| unconditionally, kept so the violation path stays exercisable.
enum class TheoremId {
    cauchy_davenport,
    kemperman_scherk,
    erdos_heilbronn,
    anr,
    lev_conjecture,
    thm_1_1,
    thm_1_2,
    thm_1_3_i,
    thm_1_3_ii,
    ps_bound,
    karolyi_style,
    test_always,
};

/// Theorem ids listed in --help (test_always stays hidden but parseable).
const std::vector<TheoremId>& public_theorems();

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

enum class Verdict { satisfied, tight, violated, not_applicable };
std::string to_string(Verdict v);

enum class MinNuDomain { over_c, over_sumset };
std::string to_string(MinNuDomain d);

struct BoundReport {
    TheoremId theorem = TheoremId::kemperman_scherk;
    std::optional<long long> predicted; // empty when not applicable
    long long actual = 0;               // |C|
    std::optional<long long> min_nu;
    std::optional<MinNuDomain> min_nu_domain;
    Verdict verdict = Verdict::not_applicable;
    std::string note; // reason for inapplicability, or witness summary
};

/// Ambient facts the applicability predicates need, computed once.
struct AmbientTraits {
    bool is_field = false;
    GroupClass cls;
    bool torsion_cyclic = false;
    std::optional<std::int64_t> cyclic_order;     // |G| when ambient is finite cyclic
    bool cyclic_prime = false;                    // ambient additive group is Z/p, p prime
    std::optional<std::int64_t> cyclic_prime_base; // p when cyclic_order = p^j > 1
    std::int64_t characteristic = 0;              // field characteristic (0 over Q)
};

AmbientTraits ambient_traits(const Ambient& ambient);

/// Size-level summary of one instance; everything evaluate_bound consumes.
struct InstanceStats {
    long long size_a = 0;
    long long size_b = 0;
    long long size_c = 0;
    long long min_nu_ab = 0;
    std::optional<long long> min_nu_c;
    Constraint::Kind kind = Constraint::Kind::none;
    long long s_size = 0;               // difference: |S|; distinct: 1
    std::optional<long long> poly_deg;  // poly: deg P (empty for the zero P)
    long long linear_weight = 0;        // linear: sum of (m_i + n_i)
    bool a_equals_b = false;
};

InstanceStats instance_stats(const Instance& inst, const SumsetAnalysis& analysis);

/// The single source of truth for every bound formula and verdict rule.
BoundReport evaluate_bound(TheoremId id, const AmbientTraits& traits,
                           const InstanceStats& stats);

/// The theorem's right-hand side for this instance, or nullopt when the
/// theorem does not apply (preconditions fail, or C is empty where the
/// statement assumes it nonempty).
std::optional<long long> predicted_bound(TheoremId id, const Instance& inst);

/// Computes C, the prediction, and the verdict for one instance.
BoundReport check_instance(TheoremId id, const Instance& inst);

} // namespace sumlab
