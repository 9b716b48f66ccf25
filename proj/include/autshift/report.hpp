#pragma once

// Report documents produced by the command-line tool. One stable shape:
// keys command, params, seed, results[], verdict, witnesses[], truncation,
// and (only when requested, so that default output is byte-reproducible)
// runtime_ms. Text mode is a lossy pretty-print of the same document.

#include <string>
#include <utility>

#include <json.hpp>

#include "autshift/boundary.hpp"
#include "autshift/zd_code.hpp"

namespace autshift {

using OrderedJson = nlohmann::ordered_json;

class ReportDocument {
public:
    ReportDocument(std::string command, OrderedJson params, long long seed) {
        doc_["command"] = std::move(command);
        doc_["params"] = std::move(params);
        doc_["seed"] = seed;
        doc_["results"] = OrderedJson::array();
        doc_["verdict"] = nullptr;
        doc_["witnesses"] = OrderedJson::array();
        doc_["truncation"] = nullptr;
    }

    void add_result(OrderedJson r) { doc_["results"].push_back(std::move(r)); }
    void add_witness(OrderedJson w) { doc_["witnesses"].push_back(std::move(w)); }
    void set_truncation(OrderedJson t) { doc_["truncation"] = std::move(t); }
    void set_verdict(bool ok) { doc_["verdict"] = ok ? "pass" : "fail"; }
    void set_error(const std::string& code, const std::string& message) {
        doc_["verdict"] = "error";
        doc_["error"] = OrderedJson{{"code", code}, {"message", message}};
    }
    void set_runtime_ms(long long ms) { doc_["runtime_ms"] = ms; }

    bool passed() const { return doc_["verdict"] == "pass"; }
    const OrderedJson& json() const { return doc_; }

    std::string to_json_text() const { return doc_.dump(2) + "\n"; }

    /// Lossy flat rendering for terminals.
    std::string to_text() const {
        std::string out;
        for (const auto& [key, value] : doc_.items()) {
            if (value.is_array()) {
                out += key + ":";
                out += value.empty() ? " (none)\n" : "\n";
                for (const auto& item : value) out += "  - " + item.dump() + "\n";
            } else {
                out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
                       "\n";
            }
        }
        return out;
    }

private:
    OrderedJson doc_;
};

// ---------------------------------------------------------------------------
// Converters for library structures

inline OrderedJson to_json(const OverlapViolation& v) {
    return OrderedJson{{"rule_i", v.rule_i},
                       {"rule_j", v.rule_j},
                       {"offset", v.offset},
                       {"kind", to_string(v.kind)},
                       {"witness", word_to_string(v.witness)},
                       {"witness_origin", v.witness_origin}};
}

inline OrderedJson to_json(const ProximalityReport& r) {
    OrderedJson cells = OrderedJson::array();
    for (const auto& c : r.cells)
        cells.push_back(OrderedJson{{"m", c.m},
                                    {"k", c.k},
                                    {"samples", c.samples},
                                    {"r_violations", c.r_violations},
                                    {"max_distance", c.max_distance.to_string()},
                                    {"bound", c.bound.to_string()},
                                    {"bound_ok", c.bound_ok}});
    return OrderedJson{{"alphabet", r.alphabet},
                       {"depth", r.depth},
                       {"cells", std::move(cells)},
                       {"ok", r.ok}};
}

inline OrderedJson to_json(const MinimalityReport& r) {
    OrderedJson cells = OrderedJson::array();
    for (const auto& c : r.cells)
        cells.push_back(OrderedJson{{"k", c.k},
                                    {"coordinate", std::string(1, symbol_to_char(c.coordinate))},
                                    {"rule_present", c.rule_present},
                                    {"agreement_depth", c.agreement_depth},
                                    {"law_ok", c.law_ok}});
    return OrderedJson{{"alphabet", r.alphabet}, {"cells", std::move(cells)}, {"ok", r.ok}};
}

inline OrderedJson to_json(const ExtremalCollapseReport& r) {
    OrderedJson stages = OrderedJson::array();
    for (const auto& s : r.stages)
        stages.push_back(OrderedJson{{"kind", s.kind},
                                     {"k", s.k},
                                     {"marker_len", s.marker_len},
                                     {"r_after", s.r_after},
                                     {"max_distance_after", s.max_distance_after.to_string()}});
    OrderedJson out{{"alphabet", r.alphabet},
                    {"budget", r.budget},
                    {"initial", r.initial},
                    {"stages", std::move(stages)},
                    {"final_points", r.final_points},
                    {"final_max_distance", r.final_max_distance.to_string()},
                    {"final_diameter", r.final_diameter.to_string()},
                    {"collapsed", r.collapsed}};
    if (!r.failure.empty()) out["failure"] = r.failure;
    return out;
}

inline OrderedJson to_json(const MeasureCollapseReport& r) {
    OrderedJson stages = OrderedJson::array();
    for (const auto& s : r.stages) {
        OrderedJson diam = OrderedJson::array();
        for (const auto& d : s.diameters) diam.push_back(d.to_string());
        stages.push_back(OrderedJson{{"coordinate", std::string(1, symbol_to_char(s.coordinate))},
                                     {"kind", s.kind},
                                     {"k", s.k},
                                     {"marker_len", s.marker_len},
                                     {"diameters", std::move(diam)}});
    }
    OrderedJson final_diam = OrderedJson::array();
    for (const auto& d : r.final_diameters) final_diam.push_back(d.to_string());
    OrderedJson out{{"alphabet", r.alphabet},
                    {"budget", r.budget},
                    {"weights", r.weights},
                    {"stages", std::move(stages)},
                    {"final_diameters", std::move(final_diam)},
                    {"collapsed", r.collapsed}};
    if (!r.failure.empty()) out["failure"] = r.failure;
    return out;
}

inline OrderedJson to_json(const RelationReport& r) {
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : r.entries) {
        OrderedJson row{{"word", e.word}, {"verdict", e.verdict}};
        if (!e.witness.empty()) row["witness"] = e.witness;
        if (!e.witness_image.empty()) row["witness_image"] = e.witness_image;
        entries.push_back(std::move(row));
    }
    return OrderedJson{{"g", r.g_label},
                       {"h", r.h_label},
                       {"max_len", r.max_len},
                       {"probes", r.probes},
                       {"entries", std::move(entries)},
                       {"sound", r.sound}};
}

inline OrderedJson to_json(const ReductionVerdict& v) {
    OrderedJson out{{"is_translation", v.is_translation},
                    {"memory_radius", v.memory_radius},
                    {"lattice_k", v.lattice_k},
                    {"certificate", v.certificate}};
    if (v.is_translation) {
        out["translation"] = zvec_to_string(v.translation);
        out["line_shift"] = v.line_shift;
    }
    return out;
}

inline OrderedJson to_json(const BoundaryReport& r) {
    OrderedJson panel = OrderedJson::array();
    for (const auto& e : r.panel) {
        OrderedJson row{{"element", e.label}};
        if (e.shift_power) {
            row["classification"] = "shift";
            row["shift_power"] = *e.shift_power;
        } else {
            row["classification"] = "moved-point";
            row["witness"] = e.witness;
        }
        panel.push_back(std::move(row));
    }
    return OrderedJson{{"alphabet", r.alphabet},
                       {"minimality", to_json(r.minimality)},
                       {"proximality", to_json(r.proximality)},
                       {"measure_collapse", to_json(r.collapse)},
                       {"kernel_panel", std::move(panel)},
                       {"ok", r.ok}};
}

}  // namespace autshift
