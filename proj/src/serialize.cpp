#include "tropical/serialize.hpp"

namespace tropical {

Json to_json(const ModelDivisor& d) {
    Json out = Json::array();
    for (auto a : d.coefficients()) out.push_back(a);
    return out;
}

Json labelled(const ModelGraph& model, const ModelDivisor& d) {
    Json out = Json::object();
    for (Vertex v = 0; v < d.size(); ++v)
        if (d[v] != 0) out[model.vertex_label(v)] = d[v];
    return out;
}

Json labelled(const MetricGraph& graph, const MetricDivisor& d) {
    Json out = Json::object();
    for (const auto& [p, a] : d.entries()) out[point_label(graph, p)] = a;
    return out;
}

Json certificate_json(const ReducedForm& form) {
    Json script = Json::array();
    for (auto s : form.script.counts()) script.push_back(s);
    return Json{{"base", form.base}, {"divisor", to_json(form.divisor)}, {"script", script}};
}

Json witness_json(const PLFunction& f) {
    Json out = Json::array();
    for (auto v : f.values()) out.push_back(v);
    return out;
}

Json rank_report_json(const ModelGraph& model, const ModelDivisor& d, const RankResult& result) {
    Json out{{"divisor", to_json(d)}, {"rank", result.rank}};
    if (result.rank >= 0) out["obstruction"] = to_json(result.obstruction);
    out["method"] = std::string(to_string(result.method));
    out["resolution"] = model.resolution();
    return out;
}

Json model_json(const ModelGraph& model, Vertex base) {
    Json labels = Json::array();
    for (Vertex v = 0; v < model.vertex_count(); ++v) labels.push_back(model.vertex_label(v));
    return Json{{"resolution", model.resolution()},
                {"scale", model.scale()},
                {"vertices", model.vertex_count()},
                {"unit_edges", model.edge_count()},
                {"genus", genus(model)},
                {"base", base},
                {"vertex_labels", labels}};
}

Json g12_json(const ModelGraph& model, const std::optional<G12Certificate>& g12) {
    if (!g12) return Json{{"found", false}, {"qualifier", "none supported at resolution " +
                                                              std::to_string(model.resolution())}};
    Json all = Json::array();
    for (const auto& d : g12->all_found) all.push_back(labelled(model, d));
    return Json{{"found", true},
                {"representative", to_json(g12->representative)},
                {"representative_points", labelled(model, g12->representative)},
                {"all_found", all},
                {"unique_class", g12->unique_class}};
}

Json clifford_record_json(const ModelGraph& model, const CliffordRecord& record) {
    Json out{{"degree", record.degree},
             {"representative", labelled(model, record.representative)},
             {"reduced", to_json(record.reduced)},
             {"rank", record.rank.rank},
             {"residual_rank", record.residual.rank},
             {"special", record.special},
             {"equality", record.equality}};
    if (record.rank.rank >= 0) out["rank_obstruction"] = to_json(record.rank.obstruction);
    if (record.residual.rank >= 0) out["residual_obstruction"] = to_json(record.residual.obstruction);
    if (record.multiple_of_g12) out["multiple_of_g12"] = *record.multiple_of_g12;
    return out;
}

Json clifford_scan_json(const ModelGraph& model, const CliffordScan& scan) {
    Json coverage = Json::array();
    for (const auto& c : scan.coverage)
        coverage.push_back(Json{{"degree", c.degree},
                                {"population", c.population},
                                {"examined", c.examined},
                                {"classes", c.classes},
                                {"mode", std::string(to_string(c.mode))}});
    Json equality = Json::array();
    std::size_t special = 0;
    for (const auto& r : scan.records) {
        ++special;
        if (r.equality) equality.push_back(clifford_record_json(model, r));
    }
    return Json{{"base", scan.base},
                {"special_classes", special},
                {"equality_classes", equality},
                {"violations", scan.violations},
                {"characterization_failures", scan.characterization_failures},
                {"evaluations", scan.evaluations},
                {"coverage", coverage},
                {"exhaustive", scan.exhaustive},
                {"complete", scan.complete},
                {"holds", scan.holds}};
}

Json hunt_json(const HuntReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        // Divisors are coefficient arrays indexed like vertex_labels.
        Json entry{{"label", e.label},
                   {"genus", e.genus},
                   {"model_vertices", e.model_vertices},
                   {"vertex_labels", e.vertex_labels},
                   {"hyperelliptic_at_resolution", e.g12.has_value()}};
        if (e.g12) {
            entry["g12_representative"] = to_json(e.g12->representative);
            entry["excluded"] = "carries a g^1_2";
        }
        if (e.scan) {
            Json coverage = Json::array();
            for (const auto& c : e.scan->coverage)
                coverage.push_back(Json{{"degree", c.degree},
                                        {"population", c.population},
                                        {"examined", c.examined},
                                        {"classes", c.classes},
                                        {"mode", std::string(to_string(c.mode))}});
            entry["coverage"] = coverage;
            entry["violations"] = e.scan->violations;
        }
        Json candidates = Json::array();
        for (const auto& c : e.candidates) {
            Json item{{"degree", c.degree},
                      {"representative", to_json(c.representative)},
                      {"reduced", to_json(c.reduced)},
                      {"rank", c.rank.rank},
                      {"rank_obstruction", to_json(c.rank.obstruction)},
                      {"residual_rank", c.residual.rank},
                      {"residual_obstruction", to_json(c.residual.obstruction)}};
            candidates.push_back(item);
        }
        entry["candidates"] = candidates;
        entries.push_back(entry);
    }
    return Json{{"resolution", report.resolution},
                {"budget", report.budget},
                {"evaluations", report.evaluations},
                {"complete", report.complete},
                {"note", "candidates are unverified at other resolutions"},
                {"entries", entries}};
}

} // namespace tropical
