// Command-line front end: scheme verification and application, the boundary
// action with its minimality / proximality / collapse experiments, relation
// search, and the lattice reduction pipeline. Every command emits one report
// document (text by default, --json for the full structure) and exits 0 when
// all verdicts pass, 1 when a verdict fails or a computation reports an
// error, and 2 on usage or parse errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <autshift/autshift.hpp>
#include <autshift/report.hpp>

namespace {

using namespace autshift;

struct UsageFailure {
    std::string message;
};

struct GlobalOptions {
    bool json = false;
    bool timing = false;
    long long seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

int emit(ReportDocument& doc, const GlobalOptions& opt, int exit_code) {
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - opt.start)
                      .count();
        doc.set_runtime_ms(ms);
    }
    std::cout << (opt.json ? doc.to_json_text() : doc.to_text());
    return exit_code;
}

/// Run `body` and convert library errors into an error verdict (exit 1).
template <class F>
int guarded(ReportDocument& doc, const GlobalOptions& opt, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        doc.set_error(e.code(), e.what());
        return emit(doc, opt, 1);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure{"cannot open file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

/// "A..B" or a single "N" (meaning N..N).
std::pair<int, int> parse_range(const std::string& text, const char* what) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageFailure{std::string(what) + " must be an integer or a range A..B, got '" +
                           text + "'"};
    }
}

/// "(1,-1)" or "1,-1".
ZVec parse_zvec(std::string text) {
    if (!text.empty() && text.front() == '(') text.erase(text.begin());
    if (!text.empty() && text.back() == ')') text.pop_back();
    ZVec out;
    std::stringstream ss(text);
    std::string part;
    try {
        while (std::getline(ss, part, ',')) out.push_back(std::stoll(part));
    } catch (const std::exception&) {
        throw UsageFailure{"cannot read integer vector from '" + text + "'"};
    }
    if (out.empty()) throw UsageFailure{"empty integer vector"};
    return out;
}

Fraction parse_fraction(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Fraction(std::stoll(text), 1);
        return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw UsageFailure{"cannot read fraction from '" + text + "'"};
    }
}

MarkerScheme load_scheme(const std::string& path) {
    return parse_scheme(read_file(path), file_stem(path));
}

/// One boundary-transversal point per line: the line for coordinate a must be
/// an Omega^a literal. '#' comments and blank lines are skipped.
BarOmegaPoint load_bar_point(const std::string& path, int alphabet) {
    std::istringstream in(read_file(path));
    std::vector<OmegaPoint> coords;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        coords.push_back(parse_omega(line, alphabet));
    }
    if ((int)coords.size() != alphabet)
        throw UsageFailure{path + ": expected " + std::to_string(alphabet) +
                           " transversal coordinates, found " + std::to_string(coords.size())};
    return BarOmegaPoint(std::move(coords));
}

/// JSON array of atoms: [{"weight": "1/3", "atom": ["\"1\" (0)*", ...]}, ...]
FiniteMeasure load_measure(const std::string& path, int alphabet) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageFailure{path + ": " + e.what()};
    }
    if (!j.is_array()) throw UsageFailure{path + ": expected a JSON array of atoms"};
    FiniteMeasure measure;
    for (const auto& entry : j) {
        if (!entry.contains("weight") || !entry.contains("atom"))
            throw UsageFailure{path + ": each atom needs 'weight' and 'atom'"};
        std::vector<OmegaPoint> coords;
        for (const auto& lit : entry["atom"])
            coords.push_back(parse_omega(lit.get<std::string>(), alphabet));
        measure.atoms.emplace_back(BarOmegaPoint(std::move(coords)),
                                   parse_fraction(entry["weight"].get<std::string>()));
    }
    return measure;
}

struct ElementPair {
    Code code;
    Code inverse;
};

/// Element specs: "sigma", "sigma^M", "proximal(K)", "proximal(K,TARGET)",
/// "proximal(K,TARGET,MARKER_LEN)", or a scheme file path (compiled; the
/// inverse scheme gives the inverse).
ElementPair parse_element(const std::string& spec, int alphabet) {
    if (spec == "sigma") return {shift_code(alphabet, 1), shift_code(alphabet, -1)};
    if (spec.rfind("sigma^", 0) == 0) {
        long long m = 0;
        try {
            m = std::stoll(spec.substr(6));
        } catch (const std::exception&) {
            throw UsageFailure{"cannot read shift power from '" + spec + "'"};
        }
        return {shift_code(alphabet, m), shift_code(alphabet, -m)};
    }
    if (spec.rfind("proximal(", 0) == 0 && spec.back() == ')') {
        std::string args = spec.substr(9, spec.size() - 10);
        try {
            std::vector<std::string> parts;
            for (std::size_t at = 0; at <= args.size();) {
                std::size_t comma = args.find(',', at);
                if (comma == std::string::npos) comma = args.size();
                parts.push_back(args.substr(at, comma - at));
                at = comma + 1;
            }
            if (parts.empty() || parts.size() > 3)
                throw UsageFailure{"proximal takes 1-3 parameters"};
            int k = std::stoi(parts[0]);
            Sym target = parts.size() > 1 ? (Sym)std::stoi(parts[1]) : Sym(0);
            long long marker_len = parts.size() > 2 ? std::stoll(parts[2]) : 0;
            Code g = build_proximal_code(alphabet, k, target, marker_len);
            return {g, g};  // data permutation is a swap, so g is an involution
        } catch (const Error&) {
            throw;
        } catch (const UsageFailure&) {
            throw;
        } catch (const std::exception&) {
            throw UsageFailure{"cannot read proximal parameters from '" + spec + "'"};
        }
    }
    MarkerScheme s = load_scheme(spec);
    return {compile_scheme(s), compile_scheme(invert_scheme(s))};
}

SlidingBlockCodeZd make_zd_builder(const std::string& name, int alphabet, int d,
                                   const std::string& t_text) {
    if (name == "cross_swap") return build_cross_swap(alphabet, d);
    if (name == "shift") {
        if (t_text.empty()) throw UsageFailure{"builder 'shift' needs --t \"(v1,...,vd)\""};
        return shift_zd(alphabet, d, parse_zvec(t_text));
    }
    if (name == "flip")
        return SlidingBlockCodeZd(alphabet, d, 0,
                                  [](const Sym* v) -> Sym {
                                      if (v[0] == 0) return 1;
                                      if (v[0] == 1) return 0;
                                      return v[0];
                                  },
                                  "flip");
    throw UsageFailure{"unknown builder '" + name + "' (use cross_swap, shift, or flip)"};
}

OrderedJson json_optional(const std::optional<long long>& v) {
    return v ? OrderedJson(*v) : OrderedJson(nullptr);
}

// ---------------------------------------------------------------------------
// Command runners

int run_verify(const GlobalOptions& opt, const std::string& path) {
    MarkerScheme s = load_scheme(path);
    ReportDocument doc("verify", OrderedJson{{"file", path}}, opt.seed);
    return guarded(doc, opt, [&] {
        OverlapVerdict verdict = verify_scheme(s);
        doc.add_result(OrderedJson{{"label", s.label()},
                                   {"alphabet", s.alphabet()},
                                   {"rules", s.rules().size()},
                                   {"status", verdict.ok ? "ok" : "overlap"}});
        const std::size_t cap = 8;
        for (std::size_t i = 0; i < verdict.violations.size() && i < cap; ++i)
            doc.add_witness(to_json(verdict.violations[i]));
        if (verdict.violations.size() > cap)
            doc.set_truncation(OrderedJson{{"witnesses_shown", cap},
                                           {"witnesses_total", verdict.violations.size()}});
        doc.set_verdict(verdict.ok);
        return emit(doc, opt, verdict.ok ? 0 : 1);
    });
}

int run_apply(const GlobalOptions& opt, const std::string& path, const std::string& literal) {
    MarkerScheme s = load_scheme(path);
    BiConfiguration x = parse_biconfig(literal, s.alphabet());
    ReportDocument doc("apply", OrderedJson{{"file", path}, {"config", literal}}, opt.seed);
    return guarded(doc, opt, [&] {
        Code g = compile_scheme(s);
        BiConfiguration y = apply_code(g, x);
        doc.add_result(OrderedJson{{"element", g.label()},
                                   {"input", x.to_literal()},
                                   {"image", y.to_literal()}});
        doc.set_verdict(true);
        return emit(doc, opt, 0);
    });
}

int run_act(const GlobalOptions& opt, const std::string& path, const std::string& literal) {
    MarkerScheme s = load_scheme(path);
    OmegaPoint x = parse_omega(literal, s.alphabet());
    ReportDocument doc("act", OrderedJson{{"file", path}, {"omega", literal}}, opt.seed);
    return guarded(doc, opt, [&] {
        Code g = compile_scheme(s);
        OmegaPoint y = act_omega(g, x);
        OrderedJson row{{"element", g.label()},
                        {"input", x.to_literal()},
                        {"image", y.to_literal()}};
        if (x.value_at(0) == 0) row["r_input"] = json_optional(r_value(x));
        if (y.value_at(0) == 0) row["r_image"] = json_optional(r_value(y));
        doc.add_result(std::move(row));
        doc.set_verdict(true);
        return emit(doc, opt, 0);
    });
}

int run_proximality(const GlobalOptions& opt, int alphabet, const std::string& k_range,
                    const std::string& m_range, int depth) {
    auto [k_lo, k_hi] = parse_range(k_range, "--k");
    auto [m_lo, m_hi] = parse_range(m_range, "--m");
    if (depth <= 0) depth = k_hi + 2;
    ReportDocument doc("proximality",
                       OrderedJson{{"alphabet", alphabet},
                                   {"m", std::to_string(m_lo) + ".." + std::to_string(m_hi)},
                                   {"k", std::to_string(k_lo) + ".." + std::to_string(k_hi)},
                                   {"depth", depth}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        ProximalityReport rep = proximality_experiment(alphabet, m_lo, m_hi, k_lo, k_hi, depth);
        doc.add_result(to_json(rep));
        doc.set_verdict(rep.ok);
        return emit(doc, opt, rep.ok ? 0 : 1);
    });
}

int run_minimality(const GlobalOptions& opt, int alphabet, int k, const std::string& source,
                   const std::string& target) {
    ReportDocument doc("minimality",
                       OrderedJson{{"alphabet", alphabet},
                                   {"k", k},
                                   {"source", source.empty() ? "default" : source},
                                   {"target", target.empty() ? "default" : target}},
                       opt.seed);
    BarOmegaPoint x = source.empty() ? bar_target(alphabet) : load_bar_point(source, alphabet);
    BarOmegaPoint y =
        target.empty() ? bar_target_variant(alphabet) : load_bar_point(target, alphabet);
    return guarded(doc, opt, [&] {
        MinimalityReport rep = minimality_experiment(x, y, 1, k);
        doc.add_result(to_json(rep));
        doc.set_verdict(rep.ok);
        return emit(doc, opt, rep.ok ? 0 : 1);
    });
}

int run_collapse(const GlobalOptions& opt, int alphabet, int budget, const std::string& measure,
                 int stage_cap) {
    ReportDocument doc("collapse",
                       OrderedJson{{"alphabet", alphabet},
                                   {"budget", budget},
                                   {"measure", measure.empty() ? "default" : measure},
                                   {"stage_cap", stage_cap}},
                       opt.seed);
    FiniteMeasure m =
        measure.empty() ? default_measure(alphabet) : load_measure(measure, alphabet);
    return guarded(doc, opt, [&] {
        MeasureCollapseReport rep = measure_collapse(std::move(m), budget, stage_cap);
        doc.add_result(to_json(rep));
        doc.set_verdict(rep.collapsed);
        return emit(doc, opt, rep.collapsed ? 0 : 1);
    });
}

int run_freeness(const GlobalOptions& opt, int alphabet, const std::string& g_spec,
                 const std::string& h_spec, int max_len, int probes, long long max_enum,
                 long long max_table) {
    ReportDocument doc("freeness",
                       OrderedJson{{"alphabet", alphabet},
                                   {"g", g_spec},
                                   {"h", h_spec},
                                   {"max_len", max_len},
                                   {"probes", probes}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        ElementPair g = parse_element(g_spec, alphabet);
        ElementPair h = parse_element(h_spec, alphabet);
        RelationReport rel = relation_search(g.code, g.inverse, h.code, h.inverse, max_len,
                                             probes, Budget{max_enum, max_table});
        doc.add_result(to_json(rel));
        doc.set_verdict(rel.sound);
        return emit(doc, opt, rel.sound ? 0 : 1);
    });
}

int run_zd_norm(const GlobalOptions& opt, int d, int k, long long bound) {
    ReportDocument doc("zd norm", OrderedJson{{"d", d}, {"k", k}, {"bound", bound}}, opt.seed);
    return guarded(doc, opt, [&] {
        NormSearchResult r = min_norm_uk(d, k, bound);
        doc.add_result(
            OrderedJson{{"value", r.value}, {"witness", zvec_to_string(r.witness)}});
        doc.set_verdict(true);
        return emit(doc, opt, 0);
    });
}

int run_zd_threshold(const GlobalOptions& opt, int d, int k, long long rho_max) {
    ReportDocument doc("zd threshold", OrderedJson{{"d", d}, {"k", k}, {"rho_max", rho_max}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        InjectivityResult res = coset_injectivity_threshold(d, k, rho_max);
        OrderedJson row{{"threshold", res.threshold}, {"exhausted", res.exhausted}};
        if (res.collision)
            row["collision"] = OrderedJson::array({zvec_to_string(res.collision->first),
                                                   zvec_to_string(res.collision->second)});
        else
            row["collision"] = nullptr;
        doc.add_result(std::move(row));
        doc.set_verdict(true);
        return emit(doc, opt, 0);
    });
}

int run_zd_phik(const GlobalOptions& opt, int alphabet, int d, int k,
                const std::string& builder, const std::string& t_text) {
    ReportDocument doc("zd phik",
                       OrderedJson{{"alphabet", alphabet},
                                   {"d", d},
                                   {"k", k},
                                   {"builder", builder},
                                   {"t", t_text.empty() ? "-" : t_text}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        SlidingBlockCodeZd g = make_zd_builder(builder, alphabet, d, t_text);
        Code phi = phi_k(g, basis_mk(d, k));
        OrderedJson support = OrderedJson::array();
        for (long long cell : phi.support()) support.push_back(cell);
        OrderedJson row{{"label", phi.label()}, {"support", std::move(support)}};
        try {
            row["line_shift"] = json_optional(is_shift(phi));
        } catch (const WindowTooLarge&) {
            row["line_shift"] = "window-too-large";
        }
        doc.add_result(std::move(row));
        doc.set_verdict(true);
        return emit(doc, opt, 0);
    });
}

int run_zd_reduce(const GlobalOptions& opt, int alphabet, int d, const std::string& builder,
                  const std::string& t_text, const std::string& expect) {
    ReportDocument doc("zd reduce",
                       OrderedJson{{"alphabet", alphabet},
                                   {"d", d},
                                   {"builder", builder},
                                   {"t", t_text.empty() ? "-" : t_text},
                                   {"expect", expect.empty() ? "-" : expect}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        SlidingBlockCodeZd g = make_zd_builder(builder, alphabet, d, t_text);
        ReductionVerdict verdict = radical_reduction_check(g);
        doc.add_result(to_json(verdict));
        bool ok = true;
        if (expect == "translation") ok = verdict.is_translation;
        if (expect == "not-translation") ok = !verdict.is_translation;
        doc.set_verdict(ok);
        return emit(doc, opt, ok ? 0 : 1);
    });
}

int run_report_boundary(const GlobalOptions& opt, int alphabet, int k, int budget) {
    ReportDocument doc("report boundary",
                       OrderedJson{{"alphabet", alphabet}, {"k", k}, {"budget", budget}},
                       opt.seed);
    return guarded(doc, opt, [&] {
        BoundaryReport rep = boundary_report(alphabet, k, budget);
        doc.add_result(to_json(rep));
        doc.set_verdict(rep.ok);
        return emit(doc, opt, rep.ok ? 0 : 1);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invertible cellular automata on the full shift: marker schemes, the "
                 "boundary action, and the lattice reduction to one dimension"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_flag("--json", opt.json, "emit the full JSON report document");
    app.add_flag("--timing", opt.timing, "append runtime_ms to the report");
    app.add_option("--seed", opt.seed, "seed recorded in the report (defaults are fixed)");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check a scheme's rules for overlap conflicts");
    verify->add_option("scheme", verify_path, "scheme file")->required();

    std::string apply_path, apply_config;
    auto* apply = app.add_subcommand("apply", "apply a compiled scheme to a configuration");
    apply->add_option("scheme", apply_path, "scheme file")->required();
    apply->add_option("--config", apply_config, "two-sided literal, e.g. '(0)* \"2332\" @1 (1)*'")
        ->required();

    std::string act_path, act_omega_lit;
    auto* act = app.add_subcommand("act", "act on a one-sided boundary point");
    act->add_option("scheme", act_path, "scheme file")->required();
    act->add_option("--omega", act_omega_lit, "one-sided literal, e.g. '\"010\" (1)*'")
        ->required();

    int prox_alphabet = 2, prox_depth = 0;
    std::string prox_k = "2..3", prox_m = "1..1";
    auto* prox = app.add_subcommand("proximality", "distance-collapse law over the k family");
    prox->add_option("--alphabet", prox_alphabet, "alphabet size");
    prox->add_option("--k", prox_k, "k range A..B");
    prox->add_option("--m", prox_m, "m range C..D");
    prox->add_option("--depth", prox_depth, "enumeration depth (default: k_hi + 2)");

    int mini_alphabet = 2, mini_k = 3;
    std::string mini_source, mini_target;
    auto* mini = app.add_subcommand("minimality", "prefix rewriting toward a target transversal");
    mini->add_option("--alphabet", mini_alphabet, "alphabet size");
    mini->add_option("--k", mini_k, "largest prefix depth");
    mini->add_option("--source", mini_source, "transversal file (one literal per coordinate)");
    mini->add_option("--target", mini_target, "transversal file (one literal per coordinate)");

    int col_alphabet = 2, col_budget = 8, col_stage_cap = 48;
    std::string col_measure;
    auto* col = app.add_subcommand("collapse", "shrink a finite measure's support to one point");
    col->add_option("--alphabet", col_alphabet, "alphabet size");
    col->add_option("--budget", col_budget, "target exponent: diameters below 2^-budget")
        ->required();
    col->add_option("--measure", col_measure, "JSON measure file (default: built-in measure)");
    col->add_option("--stage-cap", col_stage_cap, "maximum number of stages");

    int free_alphabet = 2, free_max_len = 4, free_probes = 16;
    long long free_enum = 1LL << 18, free_table = 1LL << 16;
    std::string free_g, free_h;
    auto* freeness = app.add_subcommand("freeness", "search reduced words for relations");
    // Long-form help only: the short -h would clash with the --h element slot.
    freeness->set_help_flag("--help", "print this help message and exit");
    freeness->add_option("--alphabet", free_alphabet, "alphabet size");
    freeness->add_option("--g", free_g, "element: sigma, sigma^M, proximal(K[,T]), or file")
        ->required();
    freeness->add_option("--h", free_h, "element: sigma, sigma^M, proximal(K[,T]), or file")
        ->required();
    freeness->add_option("--max-len", free_max_len, "maximum reduced word length");
    freeness->add_option("--probes", free_probes, "witness-phase probe configurations");
    freeness->add_option("--max-enum", free_enum, "exhaustive-sweep budget");
    freeness->add_option("--max-table", free_table, "tabulation budget");

    auto* zd = app.add_subcommand("zd", "lattice reduction pipeline");
    zd->require_subcommand(1);
    int zd_d = 2, zd_k = 2, zd_alphabet = 3;
    long long zd_bound = 6, zd_rho = 4;
    std::string zd_builder = "cross_swap", zd_t, zd_expect;
    auto* zd_norm = zd->add_subcommand("norm", "shortest vector of the hyperplane sublattice");
    zd_norm->add_option("--d", zd_d, "dimension");
    zd_norm->add_option("--k", zd_k, "lattice parameter");
    zd_norm->add_option("--bound", zd_bound, "coefficient bound");
    auto* zd_thresh = zd->add_subcommand("threshold", "coset-injectivity radius");
    zd_thresh->add_option("--d", zd_d, "dimension");
    zd_thresh->add_option("--k", zd_k, "lattice parameter");
    zd_thresh->add_option("--rho-max", zd_rho, "largest radius tested");
    auto* zd_phik = zd->add_subcommand("phik", "conjugate a d-dimensional code to the line");
    zd_phik->add_option("--alphabet", zd_alphabet, "alphabet size");
    zd_phik->add_option("--d", zd_d, "dimension");
    zd_phik->add_option("--k", zd_k, "lattice parameter");
    zd_phik->add_option("--builder", zd_builder, "cross_swap, shift, or flip");
    zd_phik->add_option("--t", zd_t, "shift vector for builder 'shift', e.g. \"(1,-1)\"");
    auto* zd_reduce = zd->add_subcommand("reduce", "decide whether a code is a translation");
    zd_reduce->add_option("--alphabet", zd_alphabet, "alphabet size");
    zd_reduce->add_option("--d", zd_d, "dimension");
    zd_reduce->add_option("--builder", zd_builder, "cross_swap, shift, or flip");
    zd_reduce->add_option("--t", zd_t, "shift vector for builder 'shift'");
    zd_reduce->add_option("--expect", zd_expect, "'translation' or 'not-translation'");

    auto* report = app.add_subcommand("report", "aggregated documents");
    report->require_subcommand(1);
    int rep_alphabet = 2, rep_k = 3, rep_budget = 8;
    auto* rep_boundary = report->add_subcommand(
        "boundary", "minimality + proximality + collapse + kernel panel");
    rep_boundary->add_option("--alphabet", rep_alphabet, "alphabet size");
    rep_boundary->add_option("--k", rep_k, "largest family parameter");
    rep_boundary->add_option("--budget", rep_budget, "collapse budget exponent");

    try {
        app.parse(argc, argv);

        if (verify->parsed()) return run_verify(opt, verify_path);
        if (apply->parsed()) return run_apply(opt, apply_path, apply_config);
        if (act->parsed()) return run_act(opt, act_path, act_omega_lit);
        if (prox->parsed())
            return run_proximality(opt, prox_alphabet, prox_k, prox_m, prox_depth);
        if (mini->parsed())
            return run_minimality(opt, mini_alphabet, mini_k, mini_source, mini_target);
        if (col->parsed())
            return run_collapse(opt, col_alphabet, col_budget, col_measure, col_stage_cap);
        if (freeness->parsed())
            return run_freeness(opt, free_alphabet, free_g, free_h, free_max_len, free_probes,
                                free_enum, free_table);
        if (zd->parsed()) {
            if (zd_norm->parsed()) return run_zd_norm(opt, zd_d, zd_k, zd_bound);
            if (zd_thresh->parsed()) return run_zd_threshold(opt, zd_d, zd_k, zd_rho);
            if (zd_phik->parsed())
                return run_zd_phik(opt, zd_alphabet, zd_d, zd_k, zd_builder, zd_t);
            if (zd_reduce->parsed())
                return run_zd_reduce(opt, zd_alphabet, zd_d, zd_builder, zd_t, zd_expect);
        }
        if (report->parsed() && rep_boundary->parsed())
            return run_report_boundary(opt, rep_alphabet, rep_k, rep_budget);

        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const UsageFailure& u) {
        std::cerr << "error[usage]: " << u.message << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
}
