#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossangle/evaluate.hpp"
#include "crossangle/generate.hpp"
#include "crossangle/sampling.hpp"

namespace crossangle {

// One experiment outcome, the unit the evaluate/stats tooling consumes.
struct ResultRecord {
    std::string graph;
    std::string algorithm;
    std::string class_label;  // optional grouping key; empty means "all"
    std::uint64_t seed = 0;
    double crossing_angle_deg = 0.0;
    long long iterations = 0;
    double wall_ms = 0.0;
    long long crossings = 0;
    std::uint64_t tested_pairs = 0;
};

inline nlohmann::json to_json(const ResultRecord& r) {
    nlohmann::json j{{"graph", r.graph},
                     {"algorithm", r.algorithm},
                     {"seed", r.seed},
                     {"crossing_angle_deg", r.crossing_angle_deg},
                     {"iterations", r.iterations},
                     {"wall_ms", r.wall_ms},
                     {"crossings", r.crossings},
                     {"tested_pairs", r.tested_pairs}};
    if (!r.class_label.empty()) j["class"] = r.class_label;
    return j;
}

inline ResultRecord result_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.graph = j.at("graph").get<std::string>();
    r.algorithm = j.value("algorithm", std::string{});
    r.class_label = j.value("class", std::string{});
    r.seed = j.value("seed", std::uint64_t{0});
    r.crossing_angle_deg = j.at("crossing_angle_deg").get<double>();
    r.iterations = j.value("iterations", 0LL);
    r.wall_ms = j.value("wall_ms", 0.0);
    r.crossings = j.value("crossings", 0LL);
    r.tested_pairs = j.value("tested_pairs", std::uint64_t{0});
    return r;
}

inline std::vector<ResultRecord> results_from_json(const nlohmann::json& j) {
    std::vector<ResultRecord> out;
    for (const auto& item : j) out.push_back(result_from_json(item));
    return out;
}

// Families grouped by class label, entries keyed by graph id.
inline std::map<std::string, DrawingFamily> families_by_class(
    const std::vector<ResultRecord>& records, const std::string& label) {
    std::map<std::string, DrawingFamily> out;
    for (const auto& r : records) {
        const std::string cls = r.class_label.empty() ? "all" : r.class_label;
        auto& family = out[cls];
        family.label = label;
        family.entries.emplace_back(r.graph, r.crossing_angle_deg);
    }
    return out;
}

inline nlohmann::json trace_to_json(const OptimizeResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : result.trace.rows)
        rows.push_back({{"iteration", row.iteration},
                        {"vertex", row.vertex},
                        {"pre_local_deg", degrees(row.pre_local_angle)},
                        {"post_local_deg", degrees(row.post_local_angle)},
                        {"global_deg", degrees(row.global_angle)},
                        {"accepted_moves", row.accepted_moves}});
    return {{"iterations", result.iterations},
            {"converged", result.converged},
            {"final_angle_deg", degrees(result.final_angle)},
            {"rows", rows}};
}

inline nlohmann::json certificate_to_json(const OnePlanarCertificate& cert) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [e, f] : cert.crossing_pairs) pairs.push_back({e, f});
    return {{"per_edge_crossings", cert.per_edge_crossings},
            {"max_crossings", cert.max_crossings()},
            {"crossing_pairs", pairs}};
}

inline nlohmann::json certificate_to_json(const TriangulationPlusX& gen) {
    return {{"family", "tri_plus_x"},
            {"n", gen.graph.n},
            {"m", gen.graph.m()},
            {"base_edge_count", gen.base_edge_count},
            {"extra_edges", gen.extra_edges}};
}

inline nlohmann::json certificate_to_json(const GeometricOnePlanar& gen) {
    auto j = certificate_to_json(gen.certificate);
    j["family"] = "oneplanar_geo";
    j["n"] = gen.graph.n;
    j["m"] = gen.graph.m();
    return j;
}

inline nlohmann::json certificate_to_json(const TopologicalOnePlanar& gen) {
    auto j = certificate_to_json(gen.certificate);
    j["family"] = "oneplanar_topo";
    j["n"] = gen.graph.n;
    j["m"] = gen.graph.m();
    j["base_edge_count"] = gen.base_edge_count;
    j["attempts"] = gen.attempts;
    nlohmann::json chords = nlohmann::json::array();
    for (const auto& c : gen.chords)
        chords.push_back({{"u", c.u},
                          {"v", c.v},
                          {"crosses", {c.crossed_edge.first, c.crossed_edge.second}},
                          {"face_a", c.face_a},
                          {"face_b", c.face_b}});
    j["chords"] = chords;
    return j;
}

}  // namespace crossangle
