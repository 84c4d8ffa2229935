// Acceptance suite: every criterion below runs end to end at its stated
// tolerance and prints one PASS/FAIL line. Nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sumlab/io.hpp"
#include "sumlab/search.hpp"
#include "support/oracle.hpp"
#include "support/random_instances.hpp"

using namespace sumlab;

namespace {

int g_workers = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

SweepPlan make_plan(const Ambient& ambient, ConstraintFamily family,
                    std::vector<TheoremId> theorems, int max_a, int max_b) {
    SweepPlan plan;
    plan.ambient = ambient;
    plan.family = family;
    plan.theorems = std::move(theorems);
    plan.max_a = max_a;
    plan.max_b = max_b;
    plan.workers = g_workers;
    return plan;
}

std::string describe(std::uint64_t checks, std::uint64_t violated, double secs) {
    std::ostringstream os;
    os << violated << " violations in " << checks << " checks, " << std::fixed;
    os.precision(1);
    os << secs << "s";
    return os.str();
}

// 1. Kemperman-Scherk, exhaustive over Z/n for n <= 7, under 10 s.
Outcome criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0;
    for (int n = 1; n <= 7; ++n) {
        Ambient ambient = parse_group_spec("Z^0");
        if (n > 1) ambient = parse_group_spec("Z/" + std::to_string(n));
        int order = n == 1 ? 1 : n;
        SweepPlan plan = make_plan(ambient, ConstraintFamily::none,
                                   {TheoremId::kemperman_scherk}, order, order);
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0 && secs < 10.0;
    out.detail = describe(checks, violated, secs) + " (limit 10s)";
    return out;
}

// 2. Erdos-Heilbronn and ANR, exhaustive over Z/p for p in {2,3,5,7,11}, under 2 min.
Outcome criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0;
    for (int p : {2, 3, 5, 7, 11}) {
        SweepPlan plan = make_plan(parse_group_spec("Z/" + std::to_string(p)),
                                   ConstraintFamily::distinct,
                                   {TheoremId::erdos_heilbronn, TheoremId::anr}, p, p);
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0 && secs < 120.0;
    out.detail = describe(checks, violated, secs) + " (limit 120s)";
    return out;
}

// 3. Lev's conjecture, exhaustive over all cyclic Z/n with n <= 12, under 10 min;
//    the A = B = {0,1,2} instance over Z/5 must appear as tight.
Outcome criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0;
    for (int n = 1; n <= 12; ++n) {
        Ambient ambient = parse_group_spec(n == 1 ? "Z^0" : "Z/" + std::to_string(n));
        int order = n == 1 ? 1 : n;
        SweepPlan plan = make_plan(ambient, ConstraintFamily::distinct,
                                   {TheoremId::lev_conjecture}, order, order);
        plan.tight_cap = 0;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    // tight witness over Z/5 with |A| = |B| = 3
    bool witness = false;
    {
        SweepPlan plan = make_plan(parse_group_spec("Z/5"), ConstraintFamily::distinct,
                                   {TheoremId::lev_conjecture}, 3, 3);
        plan.tight_cap = 10000;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
        Ambient z5 = parse_group_spec("Z/5");
        std::vector<Element> expect = {parse_element("0", z5), parse_element("1", z5),
                                       parse_element("2", z5)};
        for (const auto& hit : rep.tight_instances) {
            if (hit.instance.set_a == expect && hit.instance.set_b == expect) {
                witness = true;
                break;
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0 && witness && secs < 600.0;
    out.detail = describe(checks, violated, secs) + " (limit 600s), tight {0,1,2}+{0,1,2} " +
                 (witness ? "found" : "MISSING");
    return out;
}

// 4. Theorem 1.1 over GF(p), p in {2,3,5,7}: every difference-product P with
//    |S| <= 2 exhaustively, plus 500 seeded random P of degree <= 3.
Outcome criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0;
    for (int p : {2, 3, 5, 7}) {
        Ambient ambient = FieldSpec::prime_field(p);
        SweepPlan plan = make_plan(ambient, ConstraintFamily::poly_difference,
                                   {TheoremId::thm_1_1}, 3, 3);
        plan.max_s = 2;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;

        SweepPlan random_plan = make_plan(ambient, ConstraintFamily::poly_random,
                                          {TheoremId::thm_1_1}, 3, 3);
        random_plan.poly_degree = 3;
        random_plan.samples = 125;
        random_plan.seed = 20060154 + p;
        SweepReport rnd = sweep(random_plan);
        checks += rnd.instances_checked;
        violated += rnd.violated;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0;
    out.detail = describe(checks, violated, secs) + ", 500 random P";
    return out;
}

// 5. Theorem 1.2: exhaustive over Z/n (n <= 8) with l <= 2, m_i, n_i <= 2,
//    d_i over the whole group, |A|,|B| <= 3; plus 10^4 sampled instances over Z
//    with box 2 (no translation normalization for linear constraints).
Outcome criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0;
    for (int n = 2; n <= 8; ++n) {
        SweepPlan plan = make_plan(parse_group_spec("Z/" + std::to_string(n)),
                                   ConstraintFamily::linear, {TheoremId::thm_1_2}, 3, 3);
        plan.max_l = 2;
        plan.max_m = 2;
        plan.max_n = 2;
        plan.tight_cap = 0;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    {
        SweepPlan plan = make_plan(parse_group_spec("Z"), ConstraintFamily::linear,
                                   {TheoremId::thm_1_2}, 3, 3);
        plan.box = 2;
        plan.max_l = 2;
        plan.max_m = 2;
        plan.max_n = 2;
        plan.samples = 10000;
        plan.seed = 1954;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0;
    out.detail = describe(checks, violated, secs);
    return out;
}

// 6. Theorem 1.3: (i) over GF(p) (p <= 7) and over (Z/2)^2 through
//    embed_elementary; (ii) over Z with box 2 and over Z/n (n <= 8);
//    |A|,|B|,|S| <= 3 throughout; a tight instance for (i) must be recorded.
Outcome criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checks = 0, violated = 0, tight_i = 0;
    for (int p : {2, 3, 5, 7}) {
        SweepPlan plan = make_plan(FieldSpec::prime_field(p), ConstraintFamily::difference,
                                   {TheoremId::thm_1_3_i}, 3, 3);
        plan.max_s = 3;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
        tight_i += rep.tight;
    }
    // (Z/2)^2 through the field embedding: check the bound on the embedded
    // instance and insist the group-side and field-side sumsets match.
    std::uint64_t embed_mismatches = 0;
    {
        GroupSpec z22 = parse_group_spec("Z/2 x Z/2");
        FieldSpec f4 = FieldSpec::extension_field(2, 2);
        Ambient ga = z22, fa = f4;
        std::vector<std::vector<Element>> sides;
        for (int k = 1; k <= 3; ++k) {
            for (auto& s : enumerate_subsets(ga, k)) sides.push_back(s);
        }
        auto embed_set = [&](const std::vector<Element>& xs) {
            std::vector<Element> out;
            for (const auto& x : xs) {
                out.push_back(embed_elementary(std::get<GroupElement>(x), z22, f4));
            }
            return out;
        };
        for (const auto& a : sides) {
            for (const auto& b : sides) {
                for (const auto& s : sides) {
                    Instance group_inst = make_instance(
                        ga, a, b, Constraint::make_difference(s, ga));
                    Instance field_inst = make_instance(
                        fa, embed_set(a), embed_set(b),
                        Constraint::make_difference(embed_set(s), fa));
                    BoundReport rep = check_instance(TheoremId::thm_1_3_i, field_inst);
                    ++checks;
                    if (rep.verdict == Verdict::violated) ++violated;
                    if (rep.verdict == Verdict::tight) ++tight_i;
                    if (restricted_sumset(group_inst).size() !=
                        restricted_sumset(field_inst).size()) {
                        ++embed_mismatches;
                    }
                }
            }
        }
    }
    for (int n = 2; n <= 8; ++n) {
        SweepPlan plan = make_plan(parse_group_spec("Z/" + std::to_string(n)),
                                   ConstraintFamily::difference, {TheoremId::thm_1_3_ii}, 3,
                                   3);
        plan.max_s = 3;
        plan.tight_cap = 0;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    {
        SweepPlan plan = make_plan(parse_group_spec("Z"), ConstraintFamily::difference,
                                   {TheoremId::thm_1_3_ii}, 3, 3);
        plan.box = 2;
        plan.max_s = 3;
        plan.tight_cap = 0;
        SweepReport rep = sweep(plan);
        checks += rep.instances_checked;
        violated += rep.violated;
    }
    // the recorded tight example for (1.10): GF(3), A = B = {0,1}, S = {0}
    Ambient f3 = FieldSpec::prime_field(3);
    Instance tight_example = make_instance(
        f3, {parse_element("0", f3), parse_element("1", f3)},
        {parse_element("0", f3), parse_element("1", f3)},
        Constraint::make_difference({parse_element("0", f3)}, f3));
    bool example_tight =
        check_instance(TheoremId::thm_1_3_i, tight_example).verdict == Verdict::tight;

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = violated == 0 && tight_i > 0 && example_tight && embed_mismatches == 0;
    std::ostringstream extra;
    extra << describe(checks, violated, secs) << ", " << tight_i
          << " tight for (i), embed mismatches " << embed_mismatches;
    out.detail = extra.str();
    return out;
}

// 7. CN engine: 1000 seeded random polynomials over GF(5) with grids up to
//    4x4; exact reconstruction, degree bounds, remainder-zero <=> vanishing;
//    under 30 s.
Outcome criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(57005);
    FieldSpec f5 = FieldSpec::prime_field(5);
    auto elems = enumerate_field(f5);
    std::uint64_t failures = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        auto random_grid = [&] {
            int size = 1 + static_cast<int>(testgen::uniform_below(rng, 4));
            std::vector<FieldElement> g;
            while (static_cast<int>(g.size()) < size) {
                const auto& cand = elems[testgen::uniform_below(rng, elems.size())];
                if (std::find(g.begin(), g.end(), cand) == g.end()) g.push_back(cand);
            }
            return g;
        };
        std::vector<std::vector<FieldElement>> grids{random_grid(), random_grid()};
        MultiPoly f = testgen::random_poly(rng, f5, 6);
        if (trial % 3 == 0) {
            MultiPoly g1 = grid_vanishing_poly(grids[0], 0, 2, f5);
            MultiPoly g2 = grid_vanishing_poly(grids[1], 1, 2, f5);
            f = g1 * testgen::random_poly(rng, f5, 2) + g2 * testgen::random_poly(rng, f5, 2);
        }
        CnDecomposition dec = cn_decompose(f, grids);
        MultiPoly rebuilt = dec.remainder;
        bool ok = true;
        for (int v = 0; v < 2; ++v) {
            rebuilt = rebuilt + grid_vanishing_poly(grids[v], v, 2, f5) * dec.quotients[v];
            auto dr = dec.remainder.degree_in(v);
            if (dr && *dr >= static_cast<int>(grids[v].size())) ok = false;
            if (!dec.quotients[v].is_zero()) {
                if (!f.total_degree() ||
                    *dec.quotients[v].total_degree() >
                        *f.total_degree() - static_cast<int>(grids[v].size())) {
                    ok = false;
                }
            }
        }
        if (!(rebuilt == f)) ok = false;
        if (dec.remainder.is_zero() != vanishes_on_grid(f, grids)) ok = false;
        if (!ok) ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = failures == 0 && secs < 30.0;
    std::ostringstream os;
    os << failures << " failures in " << trials << " decompositions, " << std::fixed;
    os.precision(1);
    os << secs << "s (limit 30s)";
    out.detail = os.str();
    return out;
}

// 8. Lemma 2.1 on 1000 seeded hypothesis-valid instances over GF(p), p <= 11;
//    the Z/5 tight instance must reproduce exactly.
Outcome criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(80088);
    const std::int64_t primes[] = {2, 3, 5, 7, 11};
    std::uint64_t failures = 0;
    int done = 0;
    while (done < 1000) {
        FieldSpec f = FieldSpec::prime_field(primes[testgen::uniform_below(rng, 5)]);
        auto elems = enumerate_field(f);
        auto random_set = [&] {
            int size = 1 + static_cast<int>(testgen::uniform_below(
                               rng, std::min<std::size_t>(5, elems.size())));
            std::vector<FieldElement> g;
            while (static_cast<int>(g.size()) < size) {
                const auto& cand = elems[testgen::uniform_below(rng, elems.size())];
                if (std::find(g.begin(), g.end(), cand) == g.end()) g.push_back(cand);
            }
            return g;
        };
        auto a = random_set();
        auto b = random_set();
        MultiPoly p = testgen::random_poly(rng, f, 3);
        std::vector<FieldElement> mus;
        for (const auto& x : a) {
            for (const auto& y : b) {
                if (fe_is_zero(p.eval({x, y}))) continue;
                FieldElement mu = fe_add(x, y, f);
                if (std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(mu);
            }
        }
        if (mus.empty()) continue;
        std::vector<LemmaLine> lines;
        for (const auto& mu : mus) lines.push_back({fe_one(f), mu});
        Lemma21Report rep = lemma21_check(a, b, lines, p, f);
        if (!rep.hypotheses_ok || !rep.inequality_holds) ++failures;
        ++done;
    }
    // exact reproduction of the tight Z/5 instance
    FieldSpec f5 = FieldSpec::prime_field(5);
    auto fe5 = [&](const char* t) { return parse_field_element(t, f5); };
    Lemma21Report tight = lemma21_check(
        {fe5("0"), fe5("1"), fe5("2")}, {fe5("0"), fe5("1"), fe5("2")},
        {{fe5("1"), fe5("1")}, {fe5("1"), fe5("2")}, {fe5("1"), fe5("3")}},
        parse_poly("x-y", 2, f5), f5);
    bool tight_ok = tight.hypotheses_ok && tight.nu_values == std::vector<long long>{2, 3, 2} &&
                    tight.lhs == 5 && tight.rhs == 5 && tight.inequality_holds &&
                    tight.is_tight;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = failures == 0 && tight_ok;
    std::ostringstream os;
    os << failures << " failures in 1000 instances, tight Z/5 instance "
       << (tight_ok ? "reproduced" : "WRONG") << ", " << std::fixed;
    os.precision(1);
    os << secs << "s";
    out.detail = os.str();
    return out;
}

// 9. Independent naive brute force agrees with restricted_sumset and nu on
//    10^4 random instances.
Outcome criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(90099);
    std::uint64_t mismatches = 0;
    const int trials = 10000;
    for (int trial = 0; trial < trials; ++trial) {
        Instance inst = testgen::random_instance(rng);
        auto mine = oracle::to_string_set(restricted_sumset(inst), inst.ambient);
        auto theirs = oracle::o_restricted_sumset(inst);
        if (mine != theirs) {
            ++mismatches;
            continue;
        }
        for (const auto& c : sumset(inst.set_a, inst.set_b, inst.ambient)) {
            if (nu(inst.set_a, inst.set_b, c, inst.ambient) != oracle::o_nu(inst, c)) {
                ++mismatches;
                break;
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = mismatches == 0;
    std::ostringstream os;
    os << mismatches << " mismatches in " << trials << " instances, " << std::fixed;
    os.precision(1);
    os << secs << "s";
    out.detail = os.str();
    return out;
}

const char* kCriterionNames[] = {
    "kemperman_scherk exhaustive over Z/n, n <= 7",
    "erdos_heilbronn + anr exhaustive over Z/p, p in {2,3,5,7,11}",
    "lev_conjecture exhaustive over Z/n, n <= 12, with tight witness",
    "thm_1_1 over GF(p): difference products |S| <= 2 plus 500 random P",
    "thm_1_2 over Z/n (n <= 8) exhaustive and Z box 2 sampled 10^4",
    "thm_1_3 (i) GF(p), (Z/2)^2 embedded; (ii) Z box 2 and Z/n <= 8",
    "cn_decompose: 1000 random reconstructions over GF(5)",
    "lemma 2.1: 1000 hypothesis-valid instances, tight Z/5 reproduction",
    "independent brute-force oracle agreement on 10^4 instances",
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
            g_workers = std::atoi(argv[++i]);
        }
    }
    Outcome (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                               criterion_5, criterion_6, criterion_7, criterion_8,
                               criterion_9};
    int failures = 0;
    for (int i = 0; i < 9; ++i) {
        if (only != 0 && only != i + 1) continue;
        Outcome out;
        try {
            out = criteria[i]();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s -- %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    kCriterionNames[i], out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("ACCEPTANCE: all criteria passed\n");
    } else {
        std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
