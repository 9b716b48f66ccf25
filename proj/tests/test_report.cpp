// Report documents: stable key order, byte-reproducible JSON text, error and
// timing channels, and the JSON mirrors of the library result structures.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <autshift/boundary.hpp>
#include <autshift/marker.hpp>
#include <autshift/report.hpp>
#include <autshift/zd_code.hpp>

using namespace autshift;

namespace {

std::vector<std::string> keys_of(const OrderedJson& j) {
    std::vector<std::string> out;
    for (const auto& [key, value] : j.items()) out.push_back(key);
    return out;
}

ReportDocument sample_doc() {
    ReportDocument doc("verify", OrderedJson{{"file", "x.scheme"}}, 42);
    doc.add_result(OrderedJson{{"index", 0}, {"ok", true}});
    doc.set_verdict(true);
    return doc;
}

}  // namespace

TEST_CASE("documents hold one stable key order") {
    ReportDocument doc = sample_doc();
    CHECK(keys_of(doc.json()) == std::vector<std::string>{"command", "params", "seed",
                                                          "results", "verdict", "witnesses",
                                                          "truncation"});
    CHECK(doc.json()["command"] == "verify");
    CHECK(doc.json()["seed"] == 42);
    CHECK(doc.json()["params"]["file"] == "x.scheme");
    CHECK(doc.json()["verdict"] == "pass");
    CHECK(doc.json()["truncation"].is_null());
    CHECK(doc.passed());

    // Timing is opt-in so that default output stays byte-reproducible.
    doc.set_runtime_ms(17);
    CHECK(keys_of(doc.json()).back() == "runtime_ms");
}

TEST_CASE("verdict and error channels") {
    ReportDocument doc("act", OrderedJson::object(), 0);
    CHECK(doc.json()["verdict"].is_null());
    CHECK_FALSE(doc.passed());
    doc.set_verdict(false);
    CHECK(doc.json()["verdict"] == "fail");
    CHECK_FALSE(doc.passed());

    doc.set_error("not_in_omega", "the point left the space");
    CHECK(doc.json()["verdict"] == "error");
    CHECK(doc.json()["error"]["code"] == "not_in_omega");
    CHECK(doc.json()["error"]["message"] == "the point left the space");
    CHECK_FALSE(doc.passed());
}

TEST_CASE("json text is deterministic and newline-terminated") {
    std::string a = sample_doc().to_json_text();
    std::string b = sample_doc().to_json_text();
    CHECK(a == b);
    REQUIRE_FALSE(a.empty());
    CHECK(a.back() == '\n');
    CHECK(a.find("\"command\": \"verify\"") != std::string::npos);

    std::string text = sample_doc().to_text();
    CHECK(text.find("command: verify") != std::string::npos);
    CHECK(text.find("verdict: pass") != std::string::npos);
    CHECK(text.find("witnesses: (none)") != std::string::npos);
    CHECK(text.find("  - {\"index\":0,\"ok\":true}") != std::string::npos);
}

TEST_CASE("overlap violations mirror to json") {
    MarkerScheme bad(2, {make_rule(word_from_string("0"), word_from_string("0"),
                                   {{word_from_string("01"), word_from_string("10")},
                                    {word_from_string("10"), word_from_string("01")}})},
                     "overlapping");
    OverlapVerdict verdict = verify_scheme(bad);
    REQUIRE_FALSE(verdict.ok);
    REQUIRE_FALSE(verdict.violations.empty());
    OrderedJson j = to_json(verdict.violations.front());
    CHECK(keys_of(j) == std::vector<std::string>{"rule_i", "rule_j", "offset", "kind",
                                                 "witness", "witness_origin"});
    CHECK(j["rule_i"] == 0);
    CHECK(j["rule_j"] == 0);
    CHECK(j["offset"] == -2);
    CHECK(j["kind"] == "data-marker");
    CHECK(j["witness"] == "010010");
    CHECK(j["witness_origin"] == -2);

    // Both violation kinds render with their hyphenated tags.
    bool saw_data_data = false;
    for (const auto& v : verdict.violations) {
        OrderedJson vj = to_json(v);
        if (vj["kind"] == "data-data" && vj["witness"] == "00100") saw_data_data = true;
    }
    CHECK(saw_data_data);
}

TEST_CASE("experiment reports mirror to json deterministically") {
    ProximalityReport prox = proximality_experiment(2, 1, 2, 3, 4, 6);
    OrderedJson j = to_json(prox);
    CHECK(keys_of(j) == std::vector<std::string>{"alphabet", "depth", "cells", "ok"});
    CHECK(j["ok"] == prox.ok);
    CHECK(j["alphabet"] == 2);
    REQUIRE(j["cells"].size() == prox.cells.size());
    CHECK(keys_of(j["cells"][0]) == std::vector<std::string>{"m", "k", "samples",
                                                             "r_violations", "max_distance",
                                                             "bound", "bound_ok"});
    CHECK(j["cells"][0]["bound"] == prox.cells[0].bound.to_string());
    CHECK(to_json(proximality_experiment(2, 1, 2, 3, 4, 6)).dump() == j.dump());

    MinimalityReport mini = minimality_experiment(bar_target(2), bar_target_variant(2), 1, 4);
    OrderedJson mj = to_json(mini);
    CHECK(keys_of(mj) == std::vector<std::string>{"alphabet", "cells", "ok"});
    REQUIRE(mj["cells"].size() == mini.cells.size());
    CHECK(keys_of(mj["cells"][0]) == std::vector<std::string>{"k", "coordinate",
                                                              "rule_present",
                                                              "agreement_depth", "law_ok"});
    CHECK(to_json(minimality_experiment(bar_target(2), bar_target_variant(2), 1, 4)).dump() ==
          mj.dump());
}

TEST_CASE("collapse reports carry failure only when present") {
    MeasureCollapseReport ok_run = measure_collapse(default_measure(2), 10);
    OrderedJson j = to_json(ok_run);
    CHECK(keys_of(j) == std::vector<std::string>{"alphabet", "budget", "weights", "stages",
                                                 "final_diameters", "collapsed"});
    CHECK(j["collapsed"] == ok_run.collapsed);

    ExtremalCollapseReport capped =
        extremal_collapse(std::vector<OmegaPoint>{omega_target(2),
                                                  OmegaPoint::from_parts(2, word_from_string("010"),
                                                                         Word{1})},
                          30, 1);
    OrderedJson cj = to_json(capped);
    if (!capped.failure.empty()) {
        CHECK(keys_of(cj).back() == "failure");
        CHECK(cj["failure"] == capped.failure);
    } else {
        CHECK(keys_of(cj).back() == "collapsed");
    }
}

TEST_CASE("reduction verdicts include translation fields only for translations") {
    OrderedJson yes = to_json(radical_reduction_check(shift_zd(2, 2, ZVec{0, 1})));
    CHECK(keys_of(yes) == std::vector<std::string>{"is_translation", "memory_radius",
                                                   "lattice_k", "certificate", "translation",
                                                   "line_shift"});
    CHECK(yes["is_translation"] == true);
    CHECK(yes["translation"] == "(0,1)");
    CHECK(yes["line_shift"] == 1);

    OrderedJson no = to_json(radical_reduction_check(build_cross_swap(3, 2)));
    CHECK(keys_of(no) == std::vector<std::string>{"is_translation", "memory_radius",
                                                  "lattice_k", "certificate"});
    CHECK(no["is_translation"] == false);
}

TEST_CASE("relation reports keep witnesses only on nontrivial entries") {
    Code g = build_proximal_code(2, 2);
    RelationReport rel = relation_search(g, g, shift_code(2, 1), shift_code(2, -1), 2, 16,
                                         Budget{1 << 18, 1 << 16});
    OrderedJson j = to_json(rel);
    CHECK(keys_of(j) == std::vector<std::string>{"g", "h", "max_len", "probes", "entries",
                                                 "sound"});
    REQUIRE(j["entries"].size() == rel.entries.size());
    for (std::size_t i = 0; i < rel.entries.size(); ++i) {
        const auto& e = rel.entries[i];
        const auto& row = j["entries"][i];
        CHECK(row["word"] == e.word);
        CHECK(row["verdict"] == e.verdict);
        CHECK(row.contains("witness") == !e.witness.empty());
    }
    CHECK(to_json(relation_search(g, g, shift_code(2, 1), shift_code(2, -1), 2, 16,
                                  Budget{1 << 18, 1 << 16}))
              .dump() == j.dump());
}

TEST_CASE("boundary reports aggregate the panel") {
    BoundaryReport rep = boundary_report(2, 3, 8);
    OrderedJson j = to_json(rep);
    CHECK(keys_of(j) == std::vector<std::string>{"alphabet", "minimality", "proximality",
                                                 "measure_collapse", "kernel_panel", "ok"});
    REQUIRE(j["kernel_panel"].size() == rep.panel.size());
    for (std::size_t i = 0; i < rep.panel.size(); ++i) {
        const auto& row = j["kernel_panel"][i];
        if (rep.panel[i].shift_power) {
            CHECK(row["classification"] == "shift");
            CHECK(row["shift_power"] == *rep.panel[i].shift_power);
        } else {
            CHECK(row["classification"] == "moved-point");
            CHECK(row["witness"] == rep.panel[i].witness);
        }
    }
    CHECK(j["ok"] == rep.ok);
}
