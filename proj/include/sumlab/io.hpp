#pragma once

#include <string>

#include <json.hpp>

#include "sumlab/bounds.hpp"
#include "sumlab/search.hpp"

namespace sumlab {

using Json = nlohmann::json;

// Instance files:
//   {"ambient": "Z/5", "A": ["0","1","2"], "B": ["0","1","2"],
//    "constraint": {"type": "distinct"}}
// constraint payloads: poly -> "P"; linear -> "terms": [{"m","n","d"}];
// difference -> "S". Elements may be written as strings or JSON integers.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& report, const Instance* witness = nullptr);

Json lemma21_report_to_json(const Lemma21Report& report);

Json cn_to_json(const CnDecomposition& dec, bool vanishes);

Json sweep_plan_to_json(const SweepPlan& plan);
SweepPlan sweep_plan_from_json(const Json& j);

Json sweep_hit_to_json(const SweepHit& hit);
Json sweep_report_to_json(const SweepReport& report);

Json lemma21_input_to_json(const std::vector<FieldElement>& a,
                           const std::vector<FieldElement>& b,
                           const std::vector<LemmaLine>& lines, const MultiPoly& p,
                           const FieldSpec& spec);

/// Loads the {field, A, B, P, lines} document used by the lemma21 command.
struct Lemma21Input {
    FieldSpec field;
    std::vector<FieldElement> a;
    std::vector<FieldElement> b;
    std::vector<LemmaLine> lines;
    MultiPoly p;
};
Lemma21Input lemma21_input_from_json(const Json& j);

} // namespace sumlab
