#pragma once

#include <json.hpp>

#include "tropical/rank.hpp"
#include "tropical/reduction.hpp"
#include "tropical/verifiers.hpp"

namespace tropical {

using Json = nlohmann::ordered_json;

// Dense coefficient array.
Json to_json(const ModelDivisor& d);
// {label: coefficient} over the support, labels as in point_label().
Json labelled(const ModelGraph& model, const ModelDivisor& d);
Json labelled(const MetricGraph& graph, const MetricDivisor& d);

// {base, divisor: [...], script: [...]}
Json certificate_json(const ReducedForm& form);
// Vertex-value array.
Json witness_json(const PLFunction& f);
// {divisor, rank, obstruction?, method, resolution}
Json rank_report_json(const ModelGraph& model, const ModelDivisor& d, const RankResult& result);

Json model_json(const ModelGraph& model, Vertex base);
Json g12_json(const ModelGraph& model, const std::optional<G12Certificate>& g12);
Json clifford_record_json(const ModelGraph& model, const CliffordRecord& record);
Json clifford_scan_json(const ModelGraph& model, const CliffordScan& scan);
Json hunt_json(const HuntReport& report);

} // namespace tropical
