#include "sumlab/io.hpp"

namespace sumlab {

namespace {

std::string element_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InvalidInput("element must be a string or integer: " + j.dump());
}

std::vector<Element> parse_element_array(const Json& j, const Ambient& ambient,
                                         const char* name) {
    if (!j.is_array()) throw InvalidInput(std::string(name) + " must be an array");
    std::vector<Element> out;
    for (const auto& item : j) out.push_back(parse_element(element_text(item), ambient));
    return out;
}

Json elements_to_json(const std::vector<Element>& xs, const Ambient& ambient) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(print_element(x, ambient));
    return arr;
}

Ambient ambient_from_json_text(const std::string& text) {
    bool canonical = true;
    Ambient ambient = parse_ambient(text, &canonical);
    if (!canonical) {
        throw InvalidInput("group moduli must be written in invariant-factor form; '" + text +
                           "' canonically is " + print_ambient(ambient));
    }
    return ambient;
}

} // namespace

Json instance_to_json(const Instance& inst) {
    Json j;
    j["ambient"] = print_ambient(inst.ambient);
    j["A"] = elements_to_json(inst.set_a, inst.ambient);
    j["B"] = elements_to_json(inst.set_b, inst.ambient);
    Json c;
    c["type"] = to_string(inst.constraint.kind);
    switch (inst.constraint.kind) {
        case Constraint::Kind::poly:
            c["P"] = print_poly(*inst.constraint.poly);
            break;
        case Constraint::Kind::linear: {
            Json terms = Json::array();
            const GroupSpec& g = group_of(inst.ambient);
            for (const auto& t : inst.constraint.linear_terms) {
                terms.push_back(Json{{"m", t.m},
                                     {"n", t.n},
                                     {"d", print_group_element(t.d, g)}});
            }
            c["terms"] = terms;
            break;
        }
        case Constraint::Kind::difference:
            c["S"] = elements_to_json(inst.constraint.difference_set, inst.ambient);
            break;
        default:
            break;
    }
    j["constraint"] = c;
    return j;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("instance document must be a JSON object");
    if (!j.contains("ambient") || !j.contains("A") || !j.contains("B")) {
        throw InvalidInput("instance document needs ambient, A and B fields");
    }
    Ambient ambient = ambient_from_json_text(j.at("ambient").get<std::string>());
    std::vector<Element> a = parse_element_array(j.at("A"), ambient, "A");
    std::vector<Element> b = parse_element_array(j.at("B"), ambient, "B");

    Constraint constraint;
    if (j.contains("constraint") && !j.at("constraint").is_null()) {
        const Json& c = j.at("constraint");
        std::string type = c.value("type", "none");
        if (type == "none") {
            constraint = Constraint::make_none();
        } else if (type == "distinct") {
            constraint = Constraint::make_distinct();
        } else if (type == "poly") {
            if (!c.contains("P")) throw InvalidInput("poly constraint needs a P field");
            const FieldSpec& f = field_of(ambient);
            constraint = Constraint::make_poly(parse_poly(c.at("P").get<std::string>(), 2, f));
        } else if (type == "linear") {
            if (!c.contains("terms") || !c.at("terms").is_array()) {
                throw InvalidInput("linear constraint needs a terms array");
            }
            const GroupSpec& g = group_of(ambient);
            std::vector<LinearTerm> terms;
            for (const auto& item : c.at("terms")) {
                LinearTerm t;
                t.m = item.at("m").get<std::int64_t>();
                t.n = item.at("n").get<std::int64_t>();
                t.d = parse_group_element(element_text(item.at("d")), g);
                terms.push_back(std::move(t));
            }
            constraint = Constraint::make_linear(std::move(terms));
        } else if (type == "difference") {
            if (!c.contains("S")) throw InvalidInput("difference constraint needs an S field");
            constraint =
                Constraint::make_difference(parse_element_array(c.at("S"), ambient, "S"),
                                            ambient);
        } else {
            throw InvalidInput("unknown constraint type: " + type);
        }
    }
    return make_instance(std::move(ambient), std::move(a), std::move(b), std::move(constraint));
}

Json bound_report_to_json(const BoundReport& report, const Instance* witness) {
    Json j;
    j["theorem"] = to_string(report.theorem);
    j["predicted"] = report.predicted ? Json(*report.predicted) : Json(nullptr);
    j["actual"] = report.actual;
    j["min_nu"] = report.min_nu ? Json(*report.min_nu) : Json(nullptr);
    j["min_nu_domain"] =
        report.min_nu_domain ? Json(to_string(*report.min_nu_domain)) : Json(nullptr);
    j["verdict"] = to_string(report.verdict);
    Json w;
    if (!report.note.empty()) w["note"] = report.note;
    if (witness && report.verdict == Verdict::violated) {
        w["instance"] = instance_to_json(*witness);
    }
    j["witness"] = w.empty() ? Json(nullptr) : w;
    return j;
}

Json lemma21_report_to_json(const Lemma21Report& report) {
    Json j;
    j["hypotheses_ok"] = report.hypotheses_ok;
    j["failure_detail"] = report.failure_detail.empty() ? Json(nullptr)
                                                        : Json(report.failure_detail);
    j["nu_values"] = report.nu_values;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["inequality_holds"] = report.inequality_holds;
    j["is_tight"] = report.is_tight;
    return j;
}

Json cn_to_json(const CnDecomposition& dec, bool vanishes) {
    Json j;
    Json quotients = Json::array();
    for (const auto& h : dec.quotients) quotients.push_back(print_poly(h));
    j["quotients"] = quotients;
    j["remainder"] = print_poly(dec.remainder);
    j["vanishes"] = vanishes;
    return j;
}

Json sweep_plan_to_json(const SweepPlan& plan) {
    Json j;
    j["ambient"] = print_ambient(plan.ambient);
    j["max_a"] = plan.max_a;
    j["max_b"] = plan.max_b;
    Json c;
    c["family"] = to_string(plan.family);
    switch (plan.family) {
        case ConstraintFamily::difference:
        case ConstraintFamily::poly_difference:
            c["max_s"] = plan.max_s;
            break;
        case ConstraintFamily::linear:
            c["max_l"] = plan.max_l;
            c["max_m"] = plan.max_m;
            c["max_n"] = plan.max_n;
            break;
        case ConstraintFamily::poly_random:
            c["degree"] = plan.poly_degree;
            break;
        default:
            break;
    }
    j["constraint"] = c;
    Json theorems = Json::array();
    for (auto id : plan.theorems) theorems.push_back(to_string(id));
    j["theorems"] = theorems;
    if (plan.box > 0) j["box"] = plan.box;
    if (plan.instance_cap != kDefaultInstanceCap) j["instance_cap"] = plan.instance_cap;
    if (plan.samples) j["samples"] = *plan.samples;
    if (plan.seed != 0) j["seed"] = plan.seed;
    j["tight_cap"] = plan.tight_cap;
    return j;
}

SweepPlan sweep_plan_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("sweep plan must be a JSON object");
    SweepPlan plan;
    if (!j.contains("ambient")) throw InvalidInput("sweep plan needs an ambient field");
    plan.ambient = parse_ambient(j.at("ambient").get<std::string>());
    plan.max_a = j.value("max_a", 3);
    plan.max_b = j.value("max_b", 3);
    if (j.contains("constraint")) {
        const Json& c = j.at("constraint");
        plan.family = family_from_string(c.value("family", "none"));
        plan.max_s = c.value("max_s", plan.max_s);
        plan.max_l = c.value("max_l", plan.max_l);
        plan.max_m = c.value("max_m", plan.max_m);
        plan.max_n = c.value("max_n", plan.max_n);
        plan.poly_degree = c.value("degree", plan.poly_degree);
    }
    if (!j.contains("theorems") || !j.at("theorems").is_array() || j.at("theorems").empty()) {
        throw InvalidInput("sweep plan needs a nonempty theorems array");
    }
    for (const auto& name : j.at("theorems")) {
        plan.theorems.push_back(theorem_from_string(name.get<std::string>()));
    }
    plan.box = j.value("box", 0);
    plan.instance_cap = j.value("instance_cap", kDefaultInstanceCap);
    if (j.contains("samples")) plan.samples = j.at("samples").get<std::uint64_t>();
    plan.seed = j.value("seed", std::uint64_t{0});
    plan.tight_cap = j.value("tight_cap", std::size_t{100});
    plan.violation_cap = j.value("violation_cap", std::size_t{1000});
    if (j.contains("path")) {
        std::string p = j.at("path").get<std::string>();
        if (p == "generic") {
            plan.path = SweepPlan::Path::generic;
        } else if (p == "fast") {
            plan.path = SweepPlan::Path::fast;
        } else if (p == "auto") {
            plan.path = SweepPlan::Path::automatic;
        } else {
            throw InvalidInput("unknown sweep path: " + p);
        }
    }
    return plan;
}

Json sweep_hit_to_json(const SweepHit& hit) {
    Json j;
    j["index"] = hit.index;
    j["theorem"] = to_string(hit.theorem);
    j["instance"] = instance_to_json(hit.instance);
    j["report"] = bound_report_to_json(hit.report);
    return j;
}

Json sweep_report_to_json(const SweepReport& report) {
    Json j;
    j["instances_checked"] = report.instances_checked;
    j["satisfied"] = report.satisfied;
    j["tight"] = report.tight;
    j["violated"] = report.violated;
    j["not_applicable"] = report.not_applicable;
    Json violations = Json::array();
    for (const auto& h : report.violations) violations.push_back(sweep_hit_to_json(h));
    j["violations"] = violations;
    Json tights = Json::array();
    for (const auto& h : report.tight_instances) tights.push_back(sweep_hit_to_json(h));
    j["tight_instances"] = tights;
    j["partial"] = report.partial;
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

Json lemma21_input_to_json(const std::vector<FieldElement>& a,
                           const std::vector<FieldElement>& b,
                           const std::vector<LemmaLine>& lines, const MultiPoly& p,
                           const FieldSpec& spec) {
    Json j;
    j["field"] = print_field_spec(spec);
    Json ja = Json::array(), jb = Json::array(), jl = Json::array();
    for (const auto& x : a) ja.push_back(print_field_element(x, spec));
    for (const auto& x : b) jb.push_back(print_field_element(x, spec));
    for (const auto& line : lines) {
        jl.push_back(Json{{"lambda", print_field_element(line.lambda, spec)},
                          {"mu", print_field_element(line.mu, spec)}});
    }
    j["A"] = ja;
    j["B"] = jb;
    j["lines"] = jl;
    j["P"] = print_poly(p);
    return j;
}

Lemma21Input lemma21_input_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("lemma21 document must be a JSON object");
    Lemma21Input in{FieldSpec::rationals_field(), {}, {}, {}, MultiPoly()};
    in.field = parse_field_spec(j.value("field", "Q"));
    auto parse_fe_array = [&](const Json& arr, const char* name) {
        if (!arr.is_array()) throw InvalidInput(std::string(name) + " must be an array");
        std::vector<FieldElement> out;
        for (const auto& item : arr) {
            out.push_back(parse_field_element(element_text(item), in.field));
        }
        return out;
    };
    if (!j.contains("A") || !j.contains("B") || !j.contains("lines") || !j.contains("P")) {
        throw InvalidInput("lemma21 document needs A, B, lines and P fields");
    }
    in.a = parse_fe_array(j.at("A"), "A");
    in.b = parse_fe_array(j.at("B"), "B");
    for (const auto& item : j.at("lines")) {
        LemmaLine line;
        if (item.is_array() && item.size() == 2) {
            line.lambda = parse_field_element(element_text(item[0]), in.field);
            line.mu = parse_field_element(element_text(item[1]), in.field);
        } else if (item.is_object()) {
            line.lambda = parse_field_element(element_text(item.at("lambda")), in.field);
            line.mu = parse_field_element(element_text(item.at("mu")), in.field);
        } else {
            throw InvalidInput("each line must be [lambda, mu] or {lambda, mu}");
        }
        in.lines.push_back(std::move(line));
    }
    in.p = parse_poly(j.at("P").get<std::string>(), 2, in.field);
    return in;
}

} // namespace sumlab
