#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/bounds.hpp"

namespace sumlab {

/// Constraint generator for sweeps. poly_difference builds the product
/// polynomial of (x - y - s) over every S subset; poly_random draws random
/// bivariate polynomials (sampled sweeps only).
enum class ConstraintFamily { none, distinct, difference, poly_difference, linear, poly_random };

std::string to_string(ConstraintFamily family);
ConstraintFamily family_from_string(const std::string& name);

inline constexpr std::uint64_t kDefaultInstanceCap = 1ull << 62;

struct SweepPlan {
    Ambient ambient;
    int max_a = 3;
    int max_b = 3;
    ConstraintFamily family = ConstraintFamily::none;
    int max_s = 1;       // difference / poly_difference
    int max_l = 1;       // linear: number of terms
    int max_m = 1;       // linear: cap on m_i
    int max_n = 1;       // linear: cap on n_i
    int poly_degree = 3; // poly_random
    std::vector<TheoremId> theorems;
    int box = 0; // free-rank coordinate box, required when free rank > 0
    std::uint64_t instance_cap = kDefaultInstanceCap;
    std::optional<std::uint64_t> samples; // set -> seeded random sweep
    std::uint64_t seed = 0;
    std::size_t tight_cap = 100;
    std::size_t violation_cap = 1000;
    int workers = 0; // 0 -> SUMSET_LAB_WORKERS env or hardware concurrency

    enum class Path { automatic, generic, fast };
    Path path = Path::automatic; // testing knob; automatic picks fast when possible
};

struct SweepHit {
    std::uint64_t index = 0; // global enumeration index of the instance
    TheoremId theorem = TheoremId::kemperman_scherk;
    Instance instance;
    BoundReport report;
};

struct SweepReport {
    std::uint64_t instances_checked = 0; // one per (instance, theorem) pair
    std::uint64_t satisfied = 0;
    std::uint64_t tight = 0;
    std::uint64_t violated = 0;
    std::uint64_t not_applicable = 0;
    std::vector<SweepHit> violations;      // capped at violation_cap; counts stay exact
    std::vector<SweepHit> tight_instances; // capped at tight_cap, first-in-order retention
    bool partial = false;                  // instance cap truncated the enumeration
    double elapsed_seconds = 0.0;
};

using SweepStreamFn = std::function<void(const SweepHit&)>;

/// Runs the plan. Deterministic for a fixed plan: identical reports (modulo
/// elapsed_seconds) across runs and worker counts. When a stream callback is
/// given the sweep runs single-worker on the generic route so records arrive
/// in enumeration order.
SweepReport sweep(const SweepPlan& plan, const SweepStreamFn& stream = nullptr);

/// First (in enumeration order) distinct-constraint instance over the group
/// whose lev_conjecture verdict is violated, or nullopt. max_a/max_b of 0 mean
/// "up to |G|".
std::optional<SweepHit> hunt_lev_counterexample(const GroupSpec& spec, int max_a = 0,
                                                int max_b = 0,
                                                std::uint64_t instance_cap = kDefaultInstanceCap,
                                                int workers = 0);

/// The element universe a sweep enumerates subsets of: the whole ambient when
/// finite, or the box [-box, box]^r x torsion for free rank r > 0.
std::vector<Element> sweep_universe(const Ambient& ambient, int box);

/// All k-element subsets of the universe in colexicographic order over the
/// canonical element order.
std::vector<std::vector<Element>> enumerate_subsets(const Ambient& ambient, int k,
                                                    std::optional<int> box = std::nullopt);

int resolve_workers(int requested);

} // namespace sumlab
