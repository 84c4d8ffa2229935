#include <doctest.h>

#include <random>

#include "sumlab/bounds.hpp"
#include "support/random_instances.hpp"

using namespace sumlab;

namespace {

std::vector<Element> set_of(const std::vector<std::string>& texts, const Ambient& ambient) {
    std::vector<Element> out;
    for (const auto& t : texts) out.push_back(parse_element(t, ambient));
    return out;
}

Instance distinct_instance(const std::string& ambient_text, const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
    Ambient ambient = parse_ambient(ambient_text);
    return make_instance(ambient, set_of(a, ambient), set_of(b, ambient),
                         Constraint::make_distinct());
}

Instance difference_instance(const std::string& ambient_text,
                             const std::vector<std::string>& a,
                             const std::vector<std::string>& b,
                             const std::vector<std::string>& s) {
    Ambient ambient = parse_ambient(ambient_text);
    return make_instance(ambient, set_of(a, ambient), set_of(b, ambient),
                         Constraint::make_difference(set_of(s, ambient), ambient));
}

} // namespace

TEST_CASE("predicted_bound matches the worked examples") {
    CHECK(*predicted_bound(TheoremId::lev_conjecture,
                           distinct_instance("Z/5", {"0", "1", "2"}, {"0", "1", "2"})) == 3);

    Ambient f7 = parse_ambient("GF(7)");
    Instance thm11 = make_instance(f7, set_of({"0", "1"}, f7), set_of({"0", "1"}, f7),
                                   Constraint::make_poly(parse_poly("x-y", 2, field_of(f7))));
    CHECK(*predicted_bound(TheoremId::thm_1_1, thm11) == 1);

    CHECK(*predicted_bound(TheoremId::thm_1_3_ii,
                           difference_instance("Z", {"0", "1"}, {"0", "1"}, {"0"})) == 0);

    Ambient z = parse_ambient("Z");
    Instance ks = make_instance(z, set_of({"0", "1"}, z), set_of({"0", "2"}, z),
                                Constraint::make_none());
    CHECK(*predicted_bound(TheoremId::kemperman_scherk, ks) == 3);
}

TEST_CASE("check_instance matches the worked examples") {
    // GF(3) as the elementary abelian (Z/3)^1
    BoundReport r1 = check_instance(TheoremId::thm_1_3_i,
                                    difference_instance("GF(3)", {"0", "1"}, {"0", "1"},
                                                        {"0"}));
    CHECK(r1.verdict == Verdict::tight);
    CHECK(*r1.predicted == 1);
    CHECK(r1.actual == 1);
    CHECK(*r1.min_nu == 2);
    CHECK(*r1.min_nu_domain == MinNuDomain::over_c);

    // P = g_A(x) kills every pair, so C is empty and Theorem 1.1 does not apply
    Ambient f5 = parse_ambient("GF(5)");
    Instance empty_c = make_instance(
        f5, set_of({"0", "1"}, f5), set_of({"0", "1"}, f5),
        Constraint::make_poly(parse_poly("x^2-x", 2, field_of(f5))));
    BoundReport r2 = check_instance(TheoremId::thm_1_1, empty_c);
    CHECK(r2.verdict == Verdict::not_applicable);
    CHECK(!r2.predicted.has_value());

    BoundReport r3 = check_instance(TheoremId::lev_conjecture,
                                    distinct_instance("Z/5", {"0", "1", "2"}, {"0", "1", "2"}));
    CHECK(r3.verdict == Verdict::tight);
    CHECK(*r3.predicted == 3);
    CHECK(r3.actual == 3);
}

TEST_CASE("applicability gates") {
    // Cauchy-Davenport needs Z/p with p prime and no constraint
    Ambient z4 = parse_ambient("Z/4");
    Instance on_z4 = make_instance(z4, set_of({"0", "1"}, z4), set_of({"0", "1"}, z4),
                                   Constraint::make_none());
    CHECK(check_instance(TheoremId::cauchy_davenport, on_z4).verdict ==
          Verdict::not_applicable);
    Ambient z5 = parse_ambient("Z/5");
    Instance on_z5 = make_instance(z5, set_of({"0", "1"}, z5), set_of({"0", "2"}, z5),
                                   Constraint::make_none());
    CHECK(check_instance(TheoremId::cauchy_davenport, on_z5).verdict == Verdict::satisfied);
    CHECK(*check_instance(TheoremId::cauchy_davenport, on_z5).predicted == 3);

    // Erdos-Heilbronn additionally needs A = B
    CHECK(check_instance(TheoremId::erdos_heilbronn,
                         distinct_instance("Z/5", {"0", "1"}, {"0", "2"}))
              .verdict == Verdict::not_applicable);
    BoundReport eh = check_instance(TheoremId::erdos_heilbronn,
                                    distinct_instance("Z/7", {"0", "1", "2"}, {"0", "1", "2"}));
    CHECK(*eh.predicted == 3);
    CHECK(eh.verdict == Verdict::tight);

    // ANR delta depends on |A| = |B|
    BoundReport anr_eq = check_instance(TheoremId::anr,
                                        distinct_instance("Z/7", {"0", "1", "2"},
                                                          {"0", "1", "2"}));
    CHECK(*anr_eq.predicted == 3);
    BoundReport anr_ne = check_instance(TheoremId::anr,
                                        distinct_instance("Z/7", {"0", "1", "2"}, {"0", "1"}));
    CHECK(*anr_ne.predicted == 3);

    // Theorem 1.2 needs cyclic torsion; Z/2 x Z/4 has rank-2 torsion
    Ambient z24 = parse_ambient("Z/2 x Z/4");
    Instance lin = make_instance(
        z24, set_of({"(0,0)", "(0,1)"}, z24), set_of({"(0,0)"}, z24),
        Constraint::make_linear({LinearTerm{1, 1, parse_group_element("(0,0)", group_of(z24))}}));
    CHECK(check_instance(TheoremId::thm_1_2, lin).verdict == Verdict::not_applicable);

    // Theorem 1.3(i) rejects ambients that are neither torsion-free nor elementary
    CHECK(check_instance(TheoremId::thm_1_3_i,
                         difference_instance("Z/6", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict == Verdict::not_applicable);
    // but Z/5 (elementary abelian by precedence) and Z (torsion-free) qualify
    CHECK(check_instance(TheoremId::thm_1_3_i,
                         difference_instance("Z/5", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);
    CHECK(check_instance(TheoremId::thm_1_3_i,
                         difference_instance("Z", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);
    // Theorem 1.3(ii) applies to Z/5 through its cyclic torsion subgroup
    CHECK(check_instance(TheoremId::thm_1_3_ii,
                         difference_instance("Z/5", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);
    // GF(2^2): elementary abelian but torsion is not cyclic
    CHECK(check_instance(TheoremId::thm_1_3_ii,
                         difference_instance("GF(4)", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict == Verdict::not_applicable);
    CHECK(check_instance(TheoremId::thm_1_3_i,
                         difference_instance("GF(4)", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);

    // ps_bound needs odd characteristic
    CHECK(check_instance(TheoremId::ps_bound,
                         difference_instance("GF(4)", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict == Verdict::not_applicable);
    CHECK(check_instance(TheoremId::ps_bound,
                         difference_instance("GF(5)", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);

    // karolyi_style needs a prime-power cyclic group and min(|A|,|B|) > |S|
    CHECK(check_instance(TheoremId::karolyi_style,
                         difference_instance("Z/6", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict == Verdict::not_applicable);
    CHECK(check_instance(TheoremId::karolyi_style,
                         difference_instance("Z/4", {"0", "1"}, {"0", "1"}, {"0"}))
              .verdict != Verdict::not_applicable);
    CHECK(check_instance(TheoremId::karolyi_style,
                         difference_instance("Z/4", {"0"}, {"0", "1"}, {"0"}))
              .verdict == Verdict::not_applicable);

    // test_always predicts |A| + |B| and is meant to be violated
    CHECK(check_instance(TheoremId::test_always,
                         distinct_instance("Z/5", {"0", "1", "2"}, {"0", "1", "2"}))
              .verdict == Verdict::violated);
}

TEST_CASE("lev_conjecture on an empty restricted sumset is not applicable") {
    BoundReport rep = check_instance(TheoremId::lev_conjecture,
                                     distinct_instance("Z/5", {"2"}, {"2"}));
    CHECK(rep.verdict == Verdict::not_applicable);
    CHECK(!rep.predicted.has_value());
}

TEST_CASE("nonpositive predictions are satisfied but never tight") {
    // singletons: EH bound is min(p, -1) = -1, actual 0
    BoundReport rep = check_instance(TheoremId::erdos_heilbronn,
                                     distinct_instance("Z/5", {"2"}, {"2"}));
    CHECK(*rep.predicted == -1);
    CHECK(rep.actual == 0);
    CHECK(rep.verdict == Verdict::satisfied);
}

TEST_CASE("thm_1_3_ii never predicts above thm_1_3_i") {
    std::mt19937_64 rng(2024);
    int seen = 0;
    while (seen < 200) {
        Instance inst = testgen::random_instance(rng);
        if (inst.constraint.kind != Constraint::Kind::difference &&
            inst.constraint.kind != Constraint::Kind::distinct) {
            continue;
        }
        auto p1 = predicted_bound(TheoremId::thm_1_3_i, inst);
        auto p2 = predicted_bound(TheoremId::thm_1_3_ii, inst);
        if (p1 && p2) {
            CHECK(*p2 <= *p1);
            ++seen;
        }
    }
}

TEST_CASE("difference bounds are invariant under translating A and S together") {
    std::mt19937_64 rng(555);
    int seen = 0;
    while (seen < 150) {
        Instance inst = testgen::random_instance(rng);
        if (inst.constraint.kind != Constraint::Kind::difference) continue;
        Element t = testgen::random_element(rng, inst.ambient);
        std::vector<Element> shifted_a, shifted_s;
        for (const auto& x : inst.set_a) {
            shifted_a.push_back(ambient_add(x, t, inst.ambient));
        }
        for (const auto& x : inst.constraint.difference_set) {
            shifted_s.push_back(ambient_add(x, t, inst.ambient));
        }
        Instance moved = make_instance(
            inst.ambient, std::move(shifted_a), inst.set_b,
            Constraint::make_difference(std::move(shifted_s), inst.ambient));
        // C itself shifts by t
        std::vector<Element> expected_c;
        for (const auto& c : restricted_sumset(inst)) {
            expected_c.push_back(ambient_add(c, t, inst.ambient));
        }
        CHECK(restricted_sumset(moved) == canonical_set(expected_c, inst.ambient));
        for (TheoremId id : {TheoremId::thm_1_3_i, TheoremId::thm_1_3_ii}) {
            BoundReport a = check_instance(id, inst);
            BoundReport b = check_instance(id, moved);
            CHECK(a.verdict == b.verdict);
            CHECK(a.predicted == b.predicted);
            CHECK(a.actual == b.actual);
        }
        ++seen;
    }
}

TEST_CASE("thm_1_3_ii agrees with thm_1_2 through m_i = n_i = 1 terms") {
    std::mt19937_64 rng(909);
    int seen = 0;
    while (seen < 120) {
        Instance inst = testgen::random_instance(rng);
        if (inst.constraint.kind != Constraint::Kind::difference) continue;
        if (is_field_ambient(inst.ambient)) continue;
        if (inst.constraint.difference_set.empty()) continue;
        std::vector<LinearTerm> terms;
        for (const auto& s : inst.constraint.difference_set) {
            terms.push_back(LinearTerm{1, 1, std::get<GroupElement>(s)});
        }
        Instance linear_form = make_instance(inst.ambient, inst.set_a, inst.set_b,
                                             Constraint::make_linear(std::move(terms)));
        CHECK(restricted_sumset(inst) == restricted_sumset(linear_form));
        BoundReport via_diff = check_instance(TheoremId::thm_1_3_ii, inst);
        BoundReport via_linear = check_instance(TheoremId::thm_1_2, linear_form);
        CHECK(via_diff.verdict == via_linear.verdict);
        CHECK(via_diff.predicted == via_linear.predicted);
        CHECK(via_diff.actual == via_linear.actual);
        ++seen;
    }
}

TEST_CASE("theorem names round-trip and hide the test id") {
    for (TheoremId id : public_theorems()) {
        CHECK(theorem_from_string(to_string(id)) == id);
    }
    CHECK(theorem_from_string("__test_always") == TheoremId::test_always);
    CHECK_THROWS_AS(theorem_from_string("no_such"), InvalidInput);
    for (TheoremId id : public_theorems()) CHECK(id != TheoremId::test_always);
}
