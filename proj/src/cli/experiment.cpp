#include "fracton/cli/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fracton/codes/products.hpp"
#include "fracton/codes/seed_codes.hpp"
#include "fracton/diagnostics/diagnostics.hpp"
#include "fracton/diagnostics/report.hpp"
#include "fracton/gf2/io.hpp"
#include "fracton/graph/graph.hpp"

namespace fracton::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fracton::diagnostics;

// ---------------------------------------------------------------- config

namespace {

json sparsity_grid() { return json(default_sparsities()); }

json fig2_parameters() {
    return {{"typical_ldpc", {{"bit_degree", 3}, {"check_degree", 4}}},
            {"laplacian", {{"degree_low", 3}, {"degree_high", 5}}},
            {"confinement", {{"n", 300}, {"graphs", 200}, {"trials", 1000}, {"sparsities", sparsity_grid()}}}};
}

json fig3_parameters() {
    return {{"periods", {7, 11, 15}},
            {"distance_max_generation", 5},
            {"exhaustive_threshold", 28},
            {"iterations", 2000},
            {"boundary_guard", true},
            {"draw_max_generation", 4},
            {"confinement",
             {{"generation", 5},
              {"period", 7},
              {"max_span", 1},
              {"codeword_pool", 64},
              {"radii", {2, 4, 8, 16}},
              {"sparsities", sparsity_grid()}}}};
}

json square_demo_parameters() {
    return {{"L", 20}, {"max_span", 10}, {"codeword_pool", 64}, {"radii", {2, 4, 8, 16}},
            {"sparsities", sparsity_grid()}};
}

json verdict_parameters() {
    return {{"seed1", seed_family_defaults("repetition")},
            {"seed2", seed_family_defaults("typical-ldpc")},
            {"mode", "biased"},
            {"max_span", 1},
            {"codeword_pool", 64},
            {"radii", {2, 4, 8, 16}},
            {"sparsities", sparsity_grid()}};
}

template <typename T>
T get(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw UsageError(where + ": missing '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(where + ": '" + key + "' has the wrong type");
    }
}

}  // namespace

json ExperimentConfig::to_json() const {
    return {{"kind", kind},       {"parameters", parameters}, {"sizes", sizes},
            {"trials", trials},   {"seed", seed},             {"output_dir", output_dir.generic_string()}};
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    if (!j.is_object()) {
        throw UsageError("config: expected a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        static const std::vector<std::string> known = {"kind", "parameters", "sizes", "trials", "seed", "output_dir"};
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw UsageError("config: unknown field '" + key + "'");
        }
    }
    ExperimentConfig c;
    c.kind = get<std::string>(j, "kind", "config");
    c.parameters = j.value("parameters", json::object());
    if (!c.parameters.is_object()) {
        throw UsageError("config: 'parameters' must be an object");
    }
    if (j.contains("sizes")) {
        c.sizes = get<std::vector<std::size_t>>(j, "sizes", "config");
    }
    if (j.contains("trials")) {
        c.trials = get<std::size_t>(j, "trials", "config");
    }
    if (j.contains("seed")) {
        c.seed = get<std::uint64_t>(j, "seed", "config");
    }
    if (j.contains("output_dir")) {
        c.output_dir = get<std::string>(j, "output_dir", "config");
    }
    return c;
}

util::OutputStamp ExperimentConfig::stamp() const {
    json j = to_json();
    j.erase("output_dir");
    return util::stamp_for(j);
}

bool ExperimentConfig::operator==(const ExperimentConfig& other) const { return to_json() == other.to_json(); }

std::vector<std::string> experiment_kinds() { return {"fig2", "fig3", "laplacian-square-demo", "verdict"}; }

ExperimentConfig default_config(const std::string& kind) {
    ExperimentConfig c;
    c.kind = kind;
    c.output_dir = default_output_dir() / kind;
    if (kind == "fig2") {
        c.parameters = fig2_parameters();
        c.sizes = {100, 200, 300, 400, 500};
        c.trials = 200;
    } else if (kind == "fig3") {
        c.parameters = fig3_parameters();
        c.sizes = {3, 4, 5};
        c.trials = 1000;
    } else if (kind == "laplacian-square-demo") {
        c.parameters = square_demo_parameters();
        c.trials = 1000;
    } else if (kind == "verdict") {
        c.parameters = verdict_parameters();
        c.trials = 1000;
    } else {
        throw UsageError("unknown experiment kind '" + kind + "'");
    }
    return c;
}

ExperimentConfig resolve_config(const std::string& kind, const json& overrides) {
    ExperimentConfig c = default_config(kind);
    if (overrides.is_null()) {
        return c;
    }
    json merged = c.to_json();
    for (const auto& [key, value] : overrides.items()) {
        if (key == "parameters") {
            if (!value.is_object()) {
                throw UsageError("config: 'parameters' must be an object");
            }
            for (const auto& [name, setting] : value.items()) {
                if (!merged["parameters"].contains(name)) {
                    throw UsageError("config: unknown parameter '" + name + "' for " + kind);
                }
                if (setting.is_object() && merged["parameters"][name].is_object()) {
                    merged["parameters"][name].merge_patch(setting);
                } else {
                    merged["parameters"][name] = setting;
                }
            }
        } else {
            merged[key] = value;
        }
    }
    c = ExperimentConfig::from_json(merged);
    if (c.kind != kind) {
        throw UsageError("config describes '" + c.kind + "', not '" + kind + "'");
    }
    return c;
}

json read_config_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config " + path.string() + ": " + e.what());
    }
}

void write_config_file(const fs::path& path, const ExperimentConfig& config) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << config.to_json().dump(2) << '\n';
}

void apply_parameter(ExperimentConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw UsageError("--param expects name=value, got '" + assignment + "'");
    }
    std::string pointer;
    std::stringstream names(assignment.substr(0, eq));
    for (std::string part; std::getline(names, part, '.');) {
        pointer += "/" + part;
    }
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        value = text;
    }
    const json::json_pointer ptr(pointer);
    if (!config.parameters.contains(ptr)) {
        throw UsageError("unknown parameter '" + assignment.substr(0, eq) + "'");
    }
    config.parameters[ptr] = value;
}

fs::path default_output_dir() {
    const char* env = std::getenv("FRACTON_OUT_DIR");
    return (env && *env) ? fs::path(env) : fs::path("out");
}

json seed_family_defaults(const std::string& family) {
    if (family == "pinwheel") {
        return {{"family", family}, {"sizes", {3, 4, 5}}, {"trials_per_size", 1}, {"period", 7}};
    }
    if (family == "repetition") {
        return {{"family", family}, {"sizes", {100, 200, 300}}, {"trials_per_size", 1}};
    }
    if (family == "typical-ldpc" || family == "laplacian") {
        return {{"family", family}, {"sizes", {100, 200, 300}}, {"trials_per_size", 3}};
    }
    throw UsageError("unknown seed family '" + family + "' (repetition, typical-ldpc, laplacian, pinwheel)");
}

// ---------------------------------------------------------------- shared helpers

namespace {

/// Collects the files of one run under its output directory.
class Outputs {
  public:
    Outputs(const ExperimentConfig& config, RunResult& result)
        : dir_(config.output_dir), stamp_(config.stamp()), result_(result) {
        fs::create_directories(dir_);
    }

    const util::OutputStamp& stamp() const { return stamp_; }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        body(out);
        if (!out) {
            throw std::runtime_error("write failed for " + path.string());
        }
        result_.files.push_back(path);
    }

    void finish(const ExperimentConfig& config) {
        write("config.json", [&](std::ostream& out) { out << config.to_json().dump(2) << '\n'; });
        write("summary.json", [&](std::ostream& out) {
            json s = result_.summary;
            s["tool_version"] = stamp_.tool_version;
            s["config_hash"] = stamp_.config_hash;
            out << s.dump(2) << '\n';
        });
    }

  private:
    fs::path dir_;
    util::OutputStamp stamp_;
    RunResult& result_;
};

EnsembleSpec ldpc_spec(const json& p) {
    EnsembleSpec s;
    s.kind = Ensemble::typical_ldpc;
    s.bit_degree = get<std::size_t>(p, "bit_degree", "typical_ldpc");
    s.check_degree = get<std::size_t>(p, "check_degree", "typical_ldpc");
    return s;
}

EnsembleSpec laplacian_spec(const json& p) {
    EnsembleSpec s;
    s.kind = Ensemble::laplacian;
    s.degree_low = get<std::size_t>(p, "degree_low", "laplacian");
    s.degree_high = get<std::size_t>(p, "degree_high", "laplacian");
    return s;
}

std::vector<double> sparsities_of(const json& p, const std::string& where) {
    auto s = get<std::vector<double>>(p, "sparsities", where);
    if (s.empty()) {
        throw UsageError(where + ": empty sparsity grid");
    }
    return s;
}

std::string fixed(double x, int digits = 4) { return format_fixed(x, digits); }

std::string density_text(const std::optional<double>& d) { return d ? fixed(*d) : std::string("-"); }

std::string syndrome_text(const std::optional<std::size_t>& s) { return s ? std::to_string(*s) : std::string("-"); }

Series curve_series(const std::string& label, const ConfinementCurve& curve) {
    Series s{label, {}, {}};
    for (const auto& row : curve.rows) {
        if (const auto d = row.density(curve.m)) {
            s.x.push_back(row.sparsity);
            s.y.push_back(*d);
        }
    }
    return s;
}

void write_curve(Outputs& files, const std::string& stem, const ConfinementCurve& curve) {
    const std::string witnesses = stem + "_witnesses.txt";
    files.write(stem + ".csv",
                [&](std::ostream& out) { write_confinement_csv(out, curve, witnesses, files.stamp()); });
    files.write(witnesses, [&](std::ostream& out) { write_witnesses(out, curve); });
}

json curve_json(const ConfinementCurve& curve) {
    json rows = json::array();
    for (const auto& row : curve.rows) {
        rows.push_back({{"weight", row.weight},
                        {"feasible", row.feasible},
                        {"min_syndrome", row.min_syndrome ? json(*row.min_syndrome) : json(nullptr)},
                        {"min_nonzero_syndrome",
                         row.min_nonzero_syndrome ? json(*row.min_nonzero_syndrome) : json(nullptr)}});
    }
    return {{"code", curve.code}, {"mode", mode_name(curve.mode)}, {"n", curve.n}, {"m", curve.m}, {"rows", rows}};
}

ConfinementOptions confinement_options(const json& p, const ExperimentConfig& c, const std::string& where) {
    ConfinementOptions o;
    o.sparsities = sparsities_of(p, where);
    o.trials = c.trials;
    o.seed = c.seed;
    o.radii = get<std::vector<std::size_t>>(p, "radii", where);
    o.max_span = get<std::size_t>(p, "max_span", where);
    if (o.trials == 0 || o.radii.empty()) {
        throw UsageError(where + ": need trials > 0 and at least one radius");
    }
    return o;
}

}  // namespace

// ---------------------------------------------------------------- fig2

RunResult run_fig2(const ExperimentConfig& c) {
    if (c.sizes.empty() || c.trials == 0) {
        throw UsageError("fig2: need sizes and trials > 0");
    }
    RunResult result;
    Outputs files(c, result);
    const json& p = c.parameters;
    const std::vector<EnsembleSpec> specs = {ldpc_spec(p.at("typical_ldpc")), laplacian_spec(p.at("laplacian"))};
    std::ostringstream text;

    std::vector<RankScanRecord> all;
    std::vector<Series> rank_series;
    for (const auto& spec : specs) {
        const std::string name = ensemble_name(spec.kind);
        const auto records = rank_deficiency_scan(spec, c.sizes, c.trials, c.seed);
        all.insert(all.end(), records.begin(), records.end());
        const auto rows = summarize(records);
        Series s{name, {}, {}};
        double max_mean = 0.0;
        std::size_t min_k = records.front().k;
        for (const auto& r : rows) {
            s.x.push_back(static_cast<double>(r.n));
            s.y.push_back(r.mean_k);
            max_mean = std::max(max_mean, r.mean_k);
            min_k = std::min(min_k, r.min_k);
        }
        const bool positive = std::all_of(s.y.begin(), s.y.end(), [](double y) { return y > 0.0; });
        const double exponent = positive && s.x.size() >= 2 ? fit_loglog_exponent(s.x, s.y) : 0.0;
        const double slope = s.x.size() >= 2 ? fit_slope(s.x, s.y) : 0.0;
        result.summary["rank"][name] = {{"sizes", c.sizes},       {"mean_k", s.y},       {"loglog_exponent", exponent},
                                        {"linear_slope", slope},  {"max_mean_k", max_mean}, {"min_k", min_k}};
        files.write("fig2a_summary_" + name + ".csv",
                    [&](std::ostream& out) { write_rank_summary_csv(out, name, rows, files.stamp()); });
        text << name << ": mean k";
        for (double y : s.y) {
            text << ' ' << fixed(y, 2);
        }
        text << ", log-log exponent " << fixed(exponent) << ", linear slope " << fixed(slope, 5) << '\n';
        rank_series.push_back(std::move(s));
    }
    files.write("fig2a_rank.csv", [&](std::ostream& out) { write_rank_csv(out, all, files.stamp()); });
    files.write("fig2a_rank.svg", [&](std::ostream& out) {
        write_svg_plot(out, rank_series, {"Logical bits vs n", "n", "mean k", false, false}, files.stamp());
    });

    const json& cp = p.at("confinement");
    ConfinementOptions options;
    options.sparsities = sparsities_of(cp, "confinement");
    options.trials = get<std::size_t>(cp, "trials", "confinement");
    const auto n = get<std::size_t>(cp, "n", "confinement");
    const auto graphs = get<std::size_t>(cp, "graphs", "confinement");
    std::vector<Series> conf_series;
    for (const auto& spec : specs) {
        const std::string name = ensemble_name(spec.kind);
        const auto curve = ensemble_confinement_scan(spec, n, graphs, options, c.seed);
        const std::string stem = "fig2b_confinement_" + name;
        const std::string witnesses = stem + "_witnesses.txt";
        files.write(stem + ".csv", [&](std::ostream& out) {
            write_ensemble_confinement_csv(out, curve, witnesses, files.stamp());
        });
        files.write(witnesses, [&](std::ostream& out) { write_witnesses(out, curve); });
        Series s{name + " (n=" + std::to_string(n) + ")", {}, {}};
        for (const auto& row : curve.rows) {
            s.x.push_back(row.sparsity);
            s.y.push_back(row.mean_min_density);
        }
        const std::size_t drops = count_decreases(curve);
        result.summary["confinement"][name] = {
            {"n", n}, {"graphs", graphs}, {"trials", options.trials}, {"mean_min_density", s.y}, {"decreases", drops}};
        text << name << " confinement (n=" << n << ", " << graphs << " graphs x " << options.trials
             << " trials): mean min |s|/m " << fixed(s.y.front()) << " -> " << fixed(s.y.back()) << ", " << drops
             << " decreases\n";
        conf_series.push_back(std::move(s));
    }
    files.write("fig2b_confinement.svg", [&](std::ostream& out) {
        write_svg_plot(out, conf_series, {"Minimum syndrome density", "|e|/n", "mean min |s|/m", false, false},
                       files.stamp());
    });
    files.finish(c);
    result.text = text.str();
    return result;
}

// ---------------------------------------------------------------- fig3

RunResult run_fig3(const ExperimentConfig& c) {
    if (c.sizes.empty()) {
        throw UsageError("fig3: need at least one generation in sizes");
    }
    RunResult result;
    Outputs files(c, result);
    const json& p = c.parameters;
    const auto periods = get<std::vector<std::size_t>>(p, "periods", "fig3");
    const auto max_dist_gen = get<std::size_t>(p, "distance_max_generation", "fig3");
    const auto draw_max_gen = get<std::size_t>(p, "draw_max_generation", "fig3");
    const bool guard = get<bool>(p, "boundary_guard", "fig3");
    gf2::MinWeightOptions budget;
    budget.exhaustive_threshold = get<std::size_t>(p, "exhaustive_threshold", "fig3");
    budget.iterations = get<std::size_t>(p, "iterations", "fig3");
    const json& cp = p.at("confinement");
    const auto conf_gen = get<std::size_t>(cp, "generation", "confinement");
    const auto conf_period = get<std::size_t>(cp, "period", "confinement");
    std::ostringstream text;

    struct Row {
        std::size_t N, p;
        codes::PinwheelCode code;
    };
    std::vector<Row> rows;
    std::optional<codes::PinwheelCode> conf_code;
    std::vector<Series> scaling;
    for (std::size_t period : periods) {
        Series ks{"k (p=" + std::to_string(period) + ")", {}, {}};
        Series ds{"d (p=" + std::to_string(period) + ")", {}, {}};
        json entry = {{"N", json::array()}, {"n", json::array()}, {"k", json::array()},
                      {"d", json::array()}, {"d_exact", json::array()}};
        for (std::size_t N : c.sizes) {
            codes::PinwheelOptions po;
            po.run_boundary_guard = guard;
            po.code.compute_distances = N <= max_dist_gen;
            po.code.distance = budget;
            codes::PinwheelCode pc = codes::pinwheel_code(N, period, po);
            const auto& code = pc.code;
            ks.x.push_back(static_cast<double>(code.n()));
            ks.y.push_back(static_cast<double>(code.k()));
            entry["N"].push_back(N);
            entry["n"].push_back(code.n());
            entry["k"].push_back(code.k());
            text << "pinwheel N=" << N << " p=" << period << ": [" << code.n() << ',' << code.k() << ',';
            if (code.has_distances() && code.distance().weight.is_finite()) {
                ds.x.push_back(static_cast<double>(code.n()));
                ds.y.push_back(static_cast<double>(code.distance().weight.value()));
                entry["d"].push_back(code.distance().weight.value());
                entry["d_exact"].push_back(code.distance().exact);
                text << code.distance().weight.to_string() << (code.distance().exact ? "" : " (upper bound)");
            } else {
                entry["d"].push_back(nullptr);
                entry["d_exact"].push_back(nullptr);
                text << '?';
            }
            text << "], m=" << code.m() << ", " << pc.removed_checks.size() << " checks removed";
            if (pc.guard) {
                text << (pc.guard->flagged ? ", boundary guard FLAGGED" : ", boundary guard clear");
            }
            text << '\n';
            if (N <= draw_max_gen && code.has_distances() && code.distance().weight.is_finite()) {
                std::vector<bool> mark(pc.tiling.num_vertices(), false);
                for (std::size_t v : code.distance().witness.support()) {
                    mark[v] = true;
                }
                files.write("fig3_pinwheel_N" + std::to_string(N) + "_p" + std::to_string(period) + ".svg",
                            [&](std::ostream& out) { tiling::write_svg(out, pc.tiling, mark); });
            }
            if (N == conf_gen && period == conf_period) {
                conf_code = pc;
            }
            rows.push_back({N, period, std::move(pc)});
        }
        const bool positive = std::all_of(ks.y.begin(), ks.y.end(), [](double y) { return y > 0.0; });
        entry["k_exponent"] = positive && ks.x.size() >= 2 ? json(fit_loglog_exponent(ks.x, ks.y)) : json(nullptr);
        entry["d_exponent"] = ds.x.size() >= 2 ? json(fit_loglog_exponent(ds.x, ds.y)) : json(nullptr);
        result.summary["scaling"][std::to_string(period)] = entry;
        if (!entry["k_exponent"].is_null()) {
            text << "p=" << period << ": log-log exponent of k vs n " << fixed(entry["k_exponent"].get<double>());
            if (!entry["d_exponent"].is_null()) {
                text << ", of d vs n " << fixed(entry["d_exponent"].get<double>());
            }
            text << '\n';
        }
        scaling.push_back(std::move(ks));
        scaling.push_back(std::move(ds));
    }
    files.write("fig3_pinwheel.csv", [&](std::ostream& out) {
        out << files.stamp().comment_line() << '\n' << "N,p,n,m,k,d,d_exact,removed_checks,guard_flagged\n";
        for (const auto& r : rows) {
            const auto& code = r.code.code;
            out << r.N << ',' << r.p << ',' << code.n() << ',' << code.m() << ',' << code.k() << ',';
            if (code.has_distances() && code.distance().weight.is_finite()) {
                out << code.distance().weight.value() << ',' << (code.distance().exact ? 1 : 0);
            } else {
                out << ',';
            }
            out << ',' << r.code.removed_checks.size() << ',';
            if (r.code.guard) {
                out << (r.code.guard->flagged ? 1 : 0);
            }
            out << '\n';
        }
    });
    files.write("fig3_scaling.svg", [&](std::ostream& out) {
        write_svg_plot(out, scaling, {"Pinwheel code scaling", "n", "k, d", true, true}, files.stamp());
    });

    if (!conf_code) {
        codes::PinwheelOptions po;
        po.run_boundary_guard = false;
        po.code.distance = budget;
        conf_code = codes::pinwheel_code(conf_gen, conf_period, po);
    }
    ConfinementOptions uniform = confinement_options(cp, c, "confinement");
    ConfinementOptions biased = uniform;
    biased.mode = SamplingMode::biased;
    biased.codewords =
        minimal_codewords(conf_code->code, get<std::size_t>(cp, "codeword_pool", "confinement"), budget);
    const auto uc = confinement_scan(conf_code->code, uniform);
    const auto bc = confinement_scan(conf_code->code, biased);
    write_curve(files, "fig3e_uniform", uc);
    write_curve(files, "fig3e_biased", bc);
    files.write("fig3e_confinement.svg", [&](std::ostream& out) {
        write_svg_plot(out, {curve_series("uniform", uc), curve_series("biased", bc)},
                       {"Pinwheel N=" + std::to_string(conf_gen) + " confinement", "|e|/n", "min |s|/m", false, false},
                       files.stamp());
    });
    result.summary["confinement"] = {{"generation", conf_gen},
                                     {"period", conf_period},
                                     {"pool", biased.codewords.size()},
                                     {"uniform", curve_json(uc)},
                                     {"biased", curve_json(bc)}};
    text << "confinement N=" << conf_gen << " p=" << conf_period << " (pool " << biased.codewords.size()
         << "): uniform min |s|/m " << density_text(uc.rows.front().density(uc.m)) << " -> "
         << density_text(uc.rows.back().density(uc.m)) << ", biased " << density_text(bc.rows.front().density(bc.m))
         << " -> " << density_text(bc.rows.back().density(bc.m)) << '\n';
    files.finish(c);
    result.text = text.str();
    return result;
}

// ---------------------------------------------------------------- square lattice demo

RunResult run_square_demo(const ExperimentConfig& c) {
    RunResult result;
    Outputs files(c, result);
    const json& p = c.parameters;
    const auto L = get<std::size_t>(p, "L", "laplacian-square-demo");
    if (L < 3) {
        throw UsageError("laplacian-square-demo: L must be at least 3");
    }
    const codes::ClassicalCode code = codes::laplacian_code(graph::torus_grid(L, L));
    ConfinementOptions uniform = confinement_options(p, c, "laplacian-square-demo");
    ConfinementOptions biased = uniform;
    biased.mode = SamplingMode::biased;
    biased.codewords = minimal_codewords(code, get<std::size_t>(p, "codeword_pool", "laplacian-square-demo"));
    const auto bc = confinement_scan(code, biased);
    const auto uc = confinement_scan(code, uniform);
    write_curve(files, "square_biased", bc);
    write_curve(files, "square_uniform", uc);
    files.write("square_weights.csv", [&](std::ostream& out) {
        out << files.stamp().comment_line() << '\n'
            << "weight,biased_feasible,biased_min_syndrome,biased_min_nonzero_syndrome,uniform_min_syndrome,"
               "nonzero_witness_file\n";
        for (std::size_t i = 0; i < bc.rows.size(); ++i) {
            const auto& b = bc.rows[i];
            out << b.weight << ',' << b.feasible << ',' << syndrome_text(b.min_syndrome) << ','
                << syndrome_text(b.min_nonzero_syndrome) << ',' << syndrome_text(uc.rows[i].min_syndrome) << ','
                << "square_nonzero_witnesses.txt:" << (i + 1) << '\n';
        }
    });
    files.write("square_nonzero_witnesses.txt", [&](std::ostream& out) {
        for (const auto& row : bc.rows) {
            out << (row.min_nonzero_syndrome ? gf2::support_to_string(row.nonzero_witness) : std::string()) << '\n';
        }
    });
    files.write("square_confinement.svg", [&](std::ostream& out) {
        write_svg_plot(out, {curve_series("uniform", uc), curve_series("biased", bc)},
                       {"Laplacian code on the " + std::to_string(L) + "x" + std::to_string(L) + " torus", "|e|/n",
                        "min |s|/m", false, false},
                       files.stamp());
    });

    std::ostringstream text;
    text << "Laplacian code on the " << L << 'x' << L << " torus: [" << code.n() << ',' << code.k() << ','
         << code.distance().weight.to_string() << (code.distance().exact ? "" : " (upper bound)") << "], "
         << biased.codewords.size() << " minimal codewords in the biasing pool\n";
    text << "weight  biased_min  biased_min_nonzero  uniform_min\n";
    const ConfinementRow* showcase = nullptr;
    json weights = json::array();
    for (std::size_t i = 0; i < bc.rows.size(); ++i) {
        const auto& b = bc.rows[i];
        text << b.weight << "  " << syndrome_text(b.min_syndrome) << "  " << syndrome_text(b.min_nonzero_syndrome)
             << "  " << syndrome_text(uc.rows[i].min_syndrome) << '\n';
        weights.push_back({{"weight", b.weight},
                           {"biased_min_nonzero_syndrome",
                            b.min_nonzero_syndrome ? json(*b.min_nonzero_syndrome) : json(nullptr)},
                           {"uniform_min_syndrome", *uc.rows[i].min_syndrome}});
        if (b.min_nonzero_syndrome && *b.min_nonzero_syndrome == 4) {
            showcase = &b;
        }
    }
    if (showcase) {
        const gf2::BitVector syndrome = code.dense().apply(showcase->nonzero_witness);
        text << "weight-" << showcase->weight << " error with syndrome weight " << syndrome.weight()
             << " ('#' error, '*' violated check, '@' both):\n";
        for (std::size_t y = L; y-- > 0;) {
            for (std::size_t x = 0; x < L; ++x) {
                const std::size_t v = y * L + x;
                const bool e = showcase->nonzero_witness.get(v);
                const bool s = syndrome.get(v);
                text << (e && s ? '@' : e ? '#' : s ? '*' : '.');
            }
            text << '\n';
        }
    }
    result.summary = {{"L", L},
                      {"n", code.n()},
                      {"k", code.k()},
                      {"d", code.distance().weight.to_string()},
                      {"d_exact", code.distance().exact},
                      {"pool", biased.codewords.size()},
                      {"weights", weights}};
    files.finish(c);
    result.text = text.str();
    return result;
}

// ---------------------------------------------------------------- verdict

namespace {

struct FamilySpec {
    std::string name;
    SeedFamily family;
    std::vector<std::size_t> sizes;
    std::size_t trials_per_size = 1;
};

FamilySpec family_spec(const json& j, const std::string& where) {
    const auto family = get<std::string>(j, "family", where);
    for (const auto& [key, value] : j.items()) {
        if (!seed_family_defaults(family).contains(key)) {
            throw UsageError(where + ": parameter '" + key + "' does not apply to " + family);
        }
    }
    FamilySpec s;
    s.name = family;
    s.sizes = get<std::vector<std::size_t>>(j, "sizes", where);
    s.trials_per_size = get<std::size_t>(j, "trials_per_size", where);
    if (s.sizes.empty() || s.trials_per_size == 0) {
        throw UsageError(where + ": need sizes and trials_per_size > 0");
    }
    codes::CodeOptions quiet;
    quiet.compute_distances = false;
    if (family == "repetition") {
        s.family = [quiet](std::size_t n, std::uint64_t) {
            return codes::repetition_code(n, codes::Topology::cyclic, quiet);
        };
    } else if (family == "typical-ldpc") {
        s.family = [quiet](std::size_t n, std::uint64_t seed) {
            return sample_ensemble({Ensemble::typical_ldpc}, n, seed, quiet).code;
        };
    } else if (family == "laplacian") {
        s.family = [quiet](std::size_t n, std::uint64_t seed) {
            return sample_ensemble({Ensemble::laplacian}, n, seed, quiet).code;
        };
    } else {
        const auto period = get<std::size_t>(j, "period", where);
        s.name = "pinwheel(p=" + std::to_string(period) + ")";
        s.family = [quiet, period](std::size_t N, std::uint64_t) {
            codes::PinwheelOptions po;
            po.run_boundary_guard = false;
            po.code = quiet;
            return codes::pinwheel_code(N, period, po).code;
        };
    }
    return s;
}

json evidence_json(const SeedEvidence& e) {
    return {{"name", e.name},
            {"sizes", e.sizes},
            {"mean_k", e.mean_k},
            {"rank_exponent", e.rank_exponent},
            {"rank_deficient", e.rank_deficient},
            {"decreases", e.decreases},
            {"first_density", e.first_density ? json(*e.first_density) : json(nullptr)},
            {"last_density", e.last_density ? json(*e.last_density) : json(nullptr)},
            {"biased_first", e.biased_first ? json(*e.biased_first) : json(nullptr)},
            {"biased_last", e.biased_last ? json(*e.biased_last) : json(nullptr)},
            {"confining", e.confining},
            {"degree_two_checks", e.isolability.degree_two_checks},
            {"isolable", e.isolable}};
}

}  // namespace

RunResult run_verdict(const ExperimentConfig& c) {
    RunResult result;
    Outputs files(c, result);
    const json& p = c.parameters;
    ConfinementOptions confinement = confinement_options(p, c, "verdict");
    confinement.mode = parse_mode(get<std::string>(p, "mode", "verdict"));
    std::vector<SeedEvidence> evidence;
    for (const char* key : {"seed1", "seed2"}) {
        const FamilySpec spec = family_spec(p.at(key), key);
        EvidenceOptions eo;
        eo.sizes = spec.sizes;
        eo.trials_per_size = spec.trials_per_size;
        eo.seed = c.seed;
        eo.confinement = confinement;
        eo.codeword_pool = get<std::size_t>(p, "codeword_pool", "verdict");
        evidence.push_back(gather_evidence(spec.name, spec.family, eo));
        write_curve(files, std::string("verdict_") + key + "_confinement", evidence.back().curve);
        files.write(std::string("verdict_") + key + "_isolability.csv", [&](std::ostream& out) {
            write_isolability_csv(out, evidence.back().isolability, files.stamp());
        });
    }
    const Verdict v = fracton_verdict(evidence[0], evidence[1]);
    result.summary = {{"verdict", fracton_type_name(v.type)},
                      {"seed1", evidence_json(v.seed1)},
                      {"seed2", evidence_json(v.seed2)},
                      {"reasons", v.reasons},
                      {"note", "finite-size proxies for asymptotic criteria"}};
    std::ostringstream text;
    text << "HGP(" << v.seed1.name << ", " << v.seed2.name << "): " << fracton_type_name(v.type) << '\n';
    for (const auto& r : v.reasons) {
        text << "  " << r << '\n';
    }
    files.finish(c);
    result.text = text.str();
    return result;
}

RunResult run_experiment(const ExperimentConfig& config) {
    if (config.kind == "fig2") {
        return run_fig2(config);
    }
    if (config.kind == "fig3") {
        return run_fig3(config);
    }
    if (config.kind == "laplacian-square-demo") {
        return run_square_demo(config);
    }
    if (config.kind == "verdict") {
        return run_verdict(config);
    }
    throw UsageError("unknown experiment kind '" + config.kind + "'");
}

}  // namespace fracton::cli
