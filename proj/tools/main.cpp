// sumset-lab: restricted sumsets, lower-bound checks, exhaustive sweeps,
// Combinatorial Nullstellensatz decompositions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sumlab/io.hpp"

namespace {

using namespace sumlab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "text";
    std::string output_path;

    bool json() const { return format == "json"; }
};

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opts.output_path);
    if (!out) throw InvalidInput("cannot open output file: " + opts.output_path);
    out << text << "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Instance load_instance(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) {
        try {
            return instance_from_json(Json::parse(inline_text));
        } catch (const Json::parse_error& e) {
            throw InvalidInput(std::string("malformed inline instance: ") + e.what());
        }
    }
    if (path.empty()) throw InvalidInput("an --instance file or --inline document is required");
    return instance_from_json(load_json_file(path));
}

std::string set_text(const std::vector<Element>& xs, const Ambient& ambient) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ", ";
        os << print_element(xs[i], ambient);
    }
    os << "}";
    return os.str();
}

std::string constraint_text(const Constraint& c, const Ambient& ambient) {
    switch (c.kind) {
        case Constraint::Kind::none:
            return "none";
        case Constraint::Kind::distinct:
            return "distinct (a != b)";
        case Constraint::Kind::poly:
            return "poly P = " + print_poly(*c.poly);
        case Constraint::Kind::linear: {
            std::ostringstream os;
            os << "linear";
            const GroupSpec& g = group_of(ambient);
            for (const auto& t : c.linear_terms) {
                os << " [" << t.m << "a - " << t.n << "b != "
                   << print_group_element(t.d, g) << "]";
            }
            return os.str();
        }
        case Constraint::Kind::difference:
            return "difference, S = " + set_text(c.difference_set, ambient);
    }
    return "none";
}

int run_compute(const OutputOptions& opts, const std::string& path,
                const std::string& inline_text) {
    Instance inst = load_instance(path, inline_text);
    SumsetAnalysis an = analyze_instance(inst);
    if (opts.json()) {
        Json j = instance_to_json(inst);
        j["C"] = Json::array();
        for (const auto& c : an.restricted) j["C"].push_back(print_element(c, inst.ambient));
        j["size_c"] = an.restricted.size();
        Json nu_table = Json::object();
        for (std::size_t i = 0; i < an.full_sumset.size(); ++i) {
            nu_table[print_element(an.full_sumset[i], inst.ambient)] = an.nu_full[i];
        }
        j["nu"] = nu_table;
        j["min_nu_over_sumset"] = an.min_nu_ab;
        j["min_nu_over_c"] = an.min_nu_c ? Json(*an.min_nu_c) : Json(nullptr);
        emit(opts, j.dump(2));
        return kExitOk;
    }
    std::ostringstream os;
    os << "ambient: " << print_ambient(inst.ambient) << "\n";
    os << "A (" << inst.set_a.size() << "): " << set_text(inst.set_a, inst.ambient) << "\n";
    os << "B (" << inst.set_b.size() << "): " << set_text(inst.set_b, inst.ambient) << "\n";
    os << "constraint: " << constraint_text(inst.constraint, inst.ambient) << "\n";
    os << "C (" << an.restricted.size() << "): " << set_text(an.restricted, inst.ambient)
       << "\n";
    os << "nu over A+B:";
    for (std::size_t i = 0; i < an.full_sumset.size(); ++i) {
        os << " nu(" << print_element(an.full_sumset[i], inst.ambient) << ")=" << an.nu_full[i];
    }
    os << "\n";
    os << "min nu over A+B: " << an.min_nu_ab << "\n";
    if (an.min_nu_c) {
        os << "min nu over C: " << *an.min_nu_c;
    } else {
        os << "min nu over C: n/a (C empty)";
    }
    emit(opts, os.str());
    return kExitOk;
}

int run_check(const OutputOptions& opts, const std::string& theorem, const std::string& path,
              const std::string& inline_text) {
    TheoremId id = theorem_from_string(theorem);
    Instance inst = load_instance(path, inline_text);
    BoundReport rep = check_instance(id, inst);
    if (opts.json()) {
        emit(opts, bound_report_to_json(rep, &inst).dump(2));
    } else {
        std::ostringstream os;
        os << "theorem: " << to_string(rep.theorem) << "\n";
        os << "verdict: " << to_string(rep.verdict) << "\n";
        if (rep.predicted) {
            os << "predicted: " << *rep.predicted << "\n";
        } else {
            os << "predicted: n/a\n";
        }
        os << "actual |C|: " << rep.actual;
        if (rep.min_nu) {
            os << "\nmin nu over " << to_string(*rep.min_nu_domain) << ": " << *rep.min_nu;
        }
        if (!rep.note.empty()) os << "\nnote: " << rep.note;
        emit(opts, os.str());
    }
    return rep.verdict == Verdict::violated ? kExitViolation : kExitOk;
}

int run_sweep(const OutputOptions& opts, const std::string& plan_path, int workers,
              std::uint64_t seed, bool seed_set, bool stream) {
    SweepPlan plan = sweep_plan_from_json(load_json_file(plan_path));
    if (workers > 0) plan.workers = workers;
    if (seed_set) plan.seed = seed;
    SweepStreamFn stream_fn;
    if (stream) {
        stream_fn = [](const SweepHit& hit) { std::cout << sweep_hit_to_json(hit).dump() << "\n"; };
    }
    SweepReport report = sweep(plan, stream_fn);
    if (opts.json()) {
        emit(opts, sweep_report_to_json(report).dump(2));
    } else {
        std::ostringstream os;
        os << "checks: " << report.instances_checked << " (satisfied " << report.satisfied
           << ", tight " << report.tight << ", violated " << report.violated
           << ", not_applicable " << report.not_applicable << ")\n";
        os << "partial: " << (report.partial ? "yes" : "no") << "\n";
        os << "elapsed: " << report.elapsed_seconds << "s";
        if (!report.violations.empty()) {
            os << "\nfirst violation: " << sweep_hit_to_json(report.violations.front()).dump();
        }
        if (!report.tight_instances.empty()) {
            os << "\ntight instances kept: " << report.tight_instances.size()
               << " (first: " << sweep_hit_to_json(report.tight_instances.front()).dump()
               << ")";
        }
        emit(opts, os.str());
    }
    return report.violated > 0 ? kExitViolation : kExitOk;
}

int run_cn(const OutputOptions& opts, const std::string& field_text,
           const std::string& poly_text, const std::vector<std::string>& grid_texts) {
    FieldSpec field = parse_field_spec(field_text);
    if (grid_texts.empty()) throw InvalidInput("cn: at least one --grid is required");
    int nvars = static_cast<int>(grid_texts.size());
    std::vector<std::vector<FieldElement>> grids;
    for (const auto& g : grid_texts) {
        std::vector<FieldElement> grid;
        std::stringstream ss(g);
        std::string tok;
        while (std::getline(ss, tok, ',')) grid.push_back(parse_field_element(tok, field));
        grids.push_back(std::move(grid));
    }
    MultiPoly f = parse_poly(poly_text, nvars, field);
    CnDecomposition dec = cn_decompose(f, grids);
    bool vanishes = vanishes_on_grid(f, grids);
    if (vanishes != dec.remainder.is_zero()) {
        throw Error("internal: decomposition remainder disagrees with grid evaluation");
    }
    if (opts.json()) {
        Json j = cn_to_json(dec, vanishes);
        j["f"] = print_poly(f);
        Json gp = Json::array();
        for (int v = 0; v < nvars; ++v) {
            gp.push_back(print_poly(grid_vanishing_poly(grids[v], v, nvars, field)));
        }
        j["grid_polys"] = gp;
        emit(opts, j.dump(2));
        return kExitOk;
    }
    std::ostringstream os;
    os << "f = " << print_poly(f) << "\n";
    for (int v = 0; v < nvars; ++v) {
        os << "g" << (v + 1) << " = "
           << print_poly(grid_vanishing_poly(grids[v], v, nvars, field)) << "\n";
        os << "h" << (v + 1) << " = " << print_poly(dec.quotients[v]) << "\n";
    }
    os << "remainder = " << print_poly(dec.remainder) << "\n";
    os << "vanishes on grid: " << (vanishes ? "yes" : "no");
    emit(opts, os.str());
    return kExitOk;
}

std::vector<FieldElement> parse_fe_list(const std::string& text, const FieldSpec& field) {
    std::vector<FieldElement> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_field_element(tok, field));
    return out;
}

int run_lemma21(const OutputOptions& opts, const std::string& input_path,
                const std::string& field_text, const std::string& a_text,
                const std::string& b_text, const std::string& poly_text,
                const std::vector<std::string>& line_texts) {
    Lemma21Input in{FieldSpec::rationals_field(), {}, {}, {}, MultiPoly()};
    if (!input_path.empty()) {
        in = lemma21_input_from_json(load_json_file(input_path));
    } else {
        if (a_text.empty() || b_text.empty() || poly_text.empty() || line_texts.empty()) {
            throw InvalidInput("lemma21 needs --input or all of --a, --b, --poly, --line");
        }
        in.field = parse_field_spec(field_text);
        in.a = parse_fe_list(a_text, in.field);
        in.b = parse_fe_list(b_text, in.field);
        for (const auto& lt : line_texts) {
            auto comma = lt.find(',');
            if (comma == std::string::npos) {
                throw InvalidInput("--line expects \"lambda,mu\": " + lt);
            }
            LemmaLine line;
            line.lambda = parse_field_element(lt.substr(0, comma), in.field);
            line.mu = parse_field_element(lt.substr(comma + 1), in.field);
            in.lines.push_back(std::move(line));
        }
        in.p = parse_poly(poly_text, 2, in.field);
    }
    Lemma21Report rep = lemma21_check(in.a, in.b, in.lines, in.p, in.field);
    if (opts.json()) {
        emit(opts, lemma21_report_to_json(rep).dump(2));
    } else {
        std::ostringstream os;
        os << "hypotheses: " << (rep.hypotheses_ok ? "ok" : "FAILED") << "\n";
        if (!rep.hypotheses_ok) os << "failure: " << rep.failure_detail << "\n";
        os << "nu:";
        for (auto v : rep.nu_values) os << " " << v;
        os << "\n";
        os << "lhs (k + min nu): " << rep.lhs << "\n";
        os << "rhs (|A| + |B| - deg P): " << rep.rhs << "\n";
        os << "inequality holds: " << (rep.inequality_holds ? "yes" : "no");
        if (rep.is_tight) os << " (tight)";
        emit(opts, os.str());
    }
    // a failed inequality on valid hypotheses would contradict the lemma
    return rep.hypotheses_ok && !rep.inequality_holds ? kExitViolation : kExitOk;
}

int run_hunt(const OutputOptions& opts, const std::string& group_text, int max_a, int max_b,
             std::uint64_t cap, int workers) {
    GroupSpec spec = parse_group_spec(group_text);
    auto hit = hunt_lev_counterexample(spec, max_a, max_b, cap, workers);
    if (opts.json()) {
        Json j;
        j["group"] = print_group_spec(spec);
        j["counterexample"] = hit ? sweep_hit_to_json(*hit) : Json(nullptr);
        emit(opts, j.dump(2));
    } else if (hit) {
        emit(opts, "counterexample found:\n" + sweep_hit_to_json(*hit).dump(2));
    } else {
        emit(opts, "no counterexample found over " + print_group_spec(spec));
    }
    return hit ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted sumsets over abelian groups and finite fields: "
                 "compute, check bounds, sweep, hunt"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--output", opts.output_path, "write the report to a file");

    std::string instance_path, inline_text, theorem, plan_path, field_text = "Q";
    std::string poly_text, a_text, b_text, input_path, group_text;
    std::vector<std::string> grid_texts, line_texts;
    int workers = 0, max_a = 0, max_b = 0;
    std::uint64_t seed = 0, cap = kDefaultInstanceCap;
    bool stream = false;

    auto* compute = app.add_subcommand("compute", "restricted sumset and nu statistics");
    compute->add_option("--instance", instance_path, "instance JSON file");
    compute->add_option("--inline", inline_text, "inline instance JSON");

    auto* check = app.add_subcommand("check", "check one theorem bound on one instance");
    check->add_option("--theorem", theorem, "theorem id")->required();
    check->add_option("--instance", instance_path, "instance JSON file");
    check->add_option("--inline", inline_text, "inline instance JSON");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep plan");
    sweep_cmd->add_option("--plan", plan_path, "plan JSON file")->required();
    sweep_cmd->add_option("--workers", workers, "worker threads (default: SUMSET_LAB_WORKERS)");
    auto* seed_opt = sweep_cmd->add_option("--seed", seed, "override the plan seed");
    sweep_cmd->add_flag("--stream", stream, "print one JSON record per check");

    auto* cn = app.add_subcommand("cn", "Combinatorial Nullstellensatz decomposition");
    cn->add_option("--field", field_text, "field spec (default Q)")->capture_default_str();
    cn->add_option("--poly", poly_text, "polynomial f")->required();
    cn->add_option("--grid", grid_texts, "comma-separated grid, one per variable")->required();

    auto* lemma = app.add_subcommand("lemma21", "line-covering bound check");
    lemma->add_option("--input", input_path, "JSON file {field, A, B, P, lines}");
    lemma->add_option("--field", field_text, "field spec (default Q)");
    lemma->add_option("--a", a_text, "comma-separated A");
    lemma->add_option("--b", b_text, "comma-separated B");
    lemma->add_option("--poly", poly_text, "polynomial P");
    lemma->add_option("--line", line_texts, "line \"lambda,mu\" (repeatable)");

    auto* hunt = app.add_subcommand("hunt", "search for a lev_conjecture counterexample");
    hunt->add_option("--group", group_text, "finite group spec")->required();
    hunt->add_option("--max-a", max_a, "cap on |A| (default |G|)");
    hunt->add_option("--max-b", max_b, "cap on |B| (default |G|)");
    hunt->add_option("--cap", cap, "instance cap");
    hunt->add_option("--workers", workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(opts, instance_path, inline_text);
        if (check->parsed()) return run_check(opts, theorem, instance_path, inline_text);
        if (sweep_cmd->parsed()) {
            return run_sweep(opts, plan_path, workers, seed, seed_opt->count() > 0, stream);
        }
        if (cn->parsed()) return run_cn(opts, field_text, poly_text, grid_texts);
        if (lemma->parsed()) {
            return run_lemma21(opts, input_path, field_text, a_text, b_text, poly_text,
                               line_texts);
        }
        if (hunt->parsed()) return run_hunt(opts, group_text, max_a, max_b, cap, workers);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
