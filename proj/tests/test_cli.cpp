#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef SUMSET_LAB_BIN
#error "SUMSET_LAB_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/sumset_lab_cli_out.txt";
    std::string cmd = std::string(SUMSET_LAB_BIN) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    r.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kLevInstance =
    R"({"ambient":"Z/5","A":["0","1","2"],"B":["0","1","2"],"constraint":{"type":"distinct"}})";

} // namespace

TEST_CASE("exit code 0: successful check, compute, cn, lemma21, hunt") {
    std::string inst = write_temp("lev_tight.json", kLevInstance);
    auto check = run_cli("check --theorem lev_conjecture --instance " + inst);
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("tight") != std::string::npos);

    auto compute = run_cli("compute --instance " + inst);
    CHECK(compute.exit_code == 0);
    CHECK(compute.output.find("{1, 2, 3}") != std::string::npos);

    auto cn = run_cli("cn --poly x^2-x --grid 0,1");
    CHECK(cn.exit_code == 0);
    CHECK(cn.output.find("vanishes on grid: yes") != std::string::npos);

    auto lemma = run_cli("lemma21 --field 'GF(5)' --a 0,1,2 --b 0,1,2 --poly x-y "
                         "--line 1,1 --line 1,2 --line 1,3");
    CHECK(lemma.exit_code == 0);
    CHECK(lemma.output.find("(tight)") != std::string::npos);

    std::string lemma_file = write_temp(
        "lemma_input.json",
        R"x({"field":"GF(5)","A":[0,1,2],"B":[0,1,2],"P":"x-y",
             "lines":[[1,1],[1,2],[1,3]]})x");
    auto lemma_from_file = run_cli("lemma21 --input " + lemma_file + " --format json");
    CHECK(lemma_from_file.exit_code == 0);
    auto lj = nlohmann::json::parse(lemma_from_file.output);
    CHECK(lj["is_tight"] == true);
    CHECK(lj["nu_values"] == nlohmann::json::array({2, 3, 2}));

    auto hunt = run_cli("hunt --group Z/6");
    CHECK(hunt.exit_code == 0);
    CHECK(hunt.output.find("no counterexample") != std::string::npos);
}

TEST_CASE("exit code 0: sweep with no violations") {
    std::string plan = write_temp("plan_ok.json",
                                  R"({"ambient":"Z/5","max_a":3,"max_b":3,
                                      "constraint":{"family":"distinct"},
                                      "theorems":["lev_conjecture"]})");
    auto r = run_cli("sweep --plan " + plan);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("violated 0") != std::string::npos);
}

TEST_CASE("exit code 1: violations and counterexamples") {
    std::string plan = write_temp("plan_violate.json",
                                  R"({"ambient":"Z/4","max_a":2,"max_b":2,
                                      "constraint":{"family":"none"},
                                      "theorems":["__test_always"]})");
    auto r = run_cli("sweep --plan " + plan);
    CHECK(r.exit_code == 1);

    std::string inst = write_temp("lev_tight2.json", kLevInstance);
    auto check = run_cli("check --theorem __test_always --instance " + inst);
    CHECK(check.exit_code == 1);
    CHECK(check.output.find("violated") != std::string::npos);
}

TEST_CASE("exit code 2: usage and input errors") {
    CHECK(run_cli("check --theorem no_such --inline '" + std::string(kLevInstance) + "'")
              .exit_code == 2);
    CHECK(run_cli("check --theorem lev_conjecture --instance /nonexistent.json").exit_code ==
          2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check --theorem lev_conjecture --what").exit_code == 2);
    CHECK(run_cli("compute --inline 'not json'").exit_code == 2);
    CHECK(run_cli("compute --inline '{\"ambient\":\"Z/0\",\"A\":[\"0\"],\"B\":[\"0\"]}'")
              .exit_code == 2);
    CHECK(run_cli("cn --poly x^2-x").exit_code == 2); // missing --grid
    CHECK(run_cli("").exit_code == 2);                // a verb is required
    // non-canonical moduli in an instance file
    std::string bad = write_temp(
        "bad_ambient.json",
        R"x({"ambient":"Z/4 x Z/6","A":["(0;0)"],"B":["(0;0)"]})x");
    auto r = run_cli("compute --instance " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("Z/2 x Z/12") != std::string::npos);
}

TEST_CASE("json output is valid and stable") {
    std::string inst = write_temp("lev_tight3.json", kLevInstance);
    auto r = run_cli("check --theorem lev_conjecture --format json --instance " + inst);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["verdict"] == "tight");
    CHECK(j["predicted"] == 3);
    CHECK(j["actual"] == 3);
    CHECK(j["min_nu"] == 1);
    CHECK(j["min_nu_domain"] == "A+B");

    std::string plan = write_temp("plan_json.json",
                                  R"({"ambient":"Z/3","max_a":1,"max_b":1,
                                      "constraint":{"family":"distinct"},
                                      "theorems":["lev_conjecture","anr"]})");
    auto s = run_cli("sweep --plan " + plan + " --format json");
    CHECK(s.exit_code == 0);
    auto js = nlohmann::json::parse(s.output);
    CHECK(js["instances_checked"] == 9 * 2);
    CHECK(js["violated"] == 0);
    CHECK(js["satisfied"].get<long long>() + js["tight"].get<long long>() +
              js["not_applicable"].get<long long>() ==
          9 * 2);

    // streamed records appear before the summary
    auto streamed = run_cli("sweep --plan " + plan + " --stream --format json");
    CHECK(streamed.exit_code == 0);
    CHECK(streamed.output.find("\"index\":0") != std::string::npos);
}

TEST_CASE("worker env default and --output file") {
    std::string plan = write_temp("plan_env.json",
                                  R"({"ambient":"Z/4","max_a":2,"max_b":2,
                                      "constraint":{"family":"distinct"},
                                      "theorems":["lev_conjecture"]})");
    auto r = run_cli("sweep --plan " + plan + " --format json");
    auto via_env = run_cli("sweep --plan " + plan + " --format json");
    via_env = [&] {
        RunResult rr;
        std::string out_path = "/tmp/sumset_lab_env_out.txt";
        std::string cmd = std::string("SUMSET_LAB_WORKERS=3 ") + SUMSET_LAB_BIN +
                          " sweep --plan " + plan + " --format json > " + out_path + " 2>&1";
        int status = std::system(cmd.c_str());
        if (WIFEXITED(status)) rr.exit_code = WEXITSTATUS(status);
        std::ifstream in(out_path);
        rr.output.assign(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
        return rr;
    }();
    CHECK(via_env.exit_code == 0);
    auto a = nlohmann::json::parse(r.output);
    auto b = nlohmann::json::parse(via_env.output);
    a.erase("elapsed_seconds");
    b.erase("elapsed_seconds");
    CHECK(a == b);

    std::string out_file = "/tmp/sumset_lab_outfile.json";
    auto w = run_cli("sweep --plan " + plan + " --format json --output " + out_file);
    CHECK(w.exit_code == 0);
    std::ifstream in(out_file);
    nlohmann::json j;
    in >> j;
    CHECK(j["violated"] == 0);
}
