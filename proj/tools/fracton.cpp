#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracton/cli/experiment.hpp"
#include "fracton/codes/products.hpp"
#include "fracton/codes/seed_codes.hpp"
#include "fracton/codes/serialization.hpp"
#include "fracton/diagnostics/diagnostics.hpp"
#include "fracton/diagnostics/report.hpp"
#include "fracton/gf2/io.hpp"
#include "fracton/graph/graph.hpp"
#include "fracton/tiling/pinwheel.hpp"
#include "fracton/util/stamp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fracton;
using cli::UsageError;

namespace {

// ---------------------------------------------------------------- code tokens

const char* kTokenHelp =
    "code: rep<N> | rep:<N>[:open] | ising:<L> | square-laplacian:<L> | pinwheel:<N>:<p> | "
    "typical-ldpc:<n>:<seed> | laplacian:<n>:<seed> | path to a matrix file";

std::size_t to_size(const std::string& s, const std::string& token) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument(s);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError("bad number '" + s + "' in code token '" + token + "'");
    }
}

/// Parses a code token into a classical code; see kTokenHelp.
codes::ClassicalCode code_from_token(const std::string& token, const codes::CodeOptions& options) {
    static const std::regex short_rep(R"(rep(\d+))");
    std::smatch m;
    if (std::regex_match(token, m, short_rep)) {
        return codes::repetition_code(to_size(m[1], token), codes::Topology::cyclic, options);
    }
    std::vector<std::string> parts;
    std::stringstream in(token);
    for (std::string part; std::getline(in, part, ':');) {
        parts.push_back(part);
    }
    const std::string& head = parts.front();
    auto arg = [&](std::size_t i) {
        if (i >= parts.size()) {
            throw UsageError("code token '" + token + "' is missing a field");
        }
        return to_size(parts[i], token);
    };
    if (parts.size() > 1) {
        if (head == "rep") {
            const bool open = parts.size() > 2 && parts[2] == "open";
            return codes::repetition_code(arg(1), open ? codes::Topology::open : codes::Topology::cyclic, options);
        }
        if (head == "ising") {
            return codes::ising_code(graph::torus_grid(arg(1), arg(1)), options);
        }
        if (head == "square-laplacian") {
            return codes::laplacian_code(graph::torus_grid(arg(1), arg(1)), options);
        }
        if (head == "pinwheel") {
            codes::PinwheelOptions po;
            po.run_boundary_guard = false;
            po.code = options;
            return codes::pinwheel_code(arg(1), arg(2), po).code;
        }
        if (head == "typical-ldpc" || head == "laplacian") {
            return diagnostics::sample_ensemble({diagnostics::parse_ensemble(head)}, arg(1), arg(2), options).code;
        }
    }
    if (!fs::exists(token)) {
        throw UsageError(std::string("cannot interpret '") + token + "'. " + kTokenHelp);
    }
    return codes::load_code(token, options);
}

std::string params_text(const codes::ClassicalCode& c) {
    std::string d = "?";
    if (c.has_distances()) {
        d = c.distance().weight.to_string() + (c.distance().exact ? "" : "*");
    }
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + d + "]";
}

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

fs::path out_dir_or_default(const std::string& flag) {
    return flag.empty() ? cli::default_output_dir() : fs::path(flag);
}

// ---------------------------------------------------------------- gen-seed

struct GenSeedArgs {
    std::string construction;
    std::optional<std::size_t> n;
    bool cyclic = true;
    std::uint64_t seed = 1;
    std::size_t dv = 3, dc = 4, degree_low = 3, degree_high = 5;
    std::string graph_file;
    std::optional<std::size_t> generation, period;
    std::size_t offset = 0;
    bool no_distance = false;
    std::string out, name;
};

int cmd_gen_seed(const GenSeedArgs& a) {
    codes::CodeOptions options;
    options.compute_distances = !a.no_distance;
    auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
        if (!v) {
            throw UsageError("gen-seed " + a.construction + " requires " + flag);
        }
        return *v;
    };
    const fs::path dir = out_dir_or_default(a.out);
    std::string stem = a.name;
    json extra = json::object();
    std::optional<codes::ClassicalCode> code;
    std::optional<codes::PinwheelCode> pinwheel;
    if (a.construction == "repetition") {
        const std::size_t n = need(a.n, "--n");
        code = codes::repetition_code(n, a.cyclic ? codes::Topology::cyclic : codes::Topology::open, options);
        if (stem.empty()) {
            stem = "repetition_" + std::to_string(n) + (a.cyclic ? "_cyclic" : "_open");
        }
    } else if (a.construction == "laplacian") {
        if (!a.graph_file.empty()) {
            std::ifstream in(a.graph_file);
            if (!in) {
                throw UsageError("cannot read graph " + a.graph_file);
            }
            code = codes::laplacian_code(graph::read_graph(in), options);
            extra["graph_file"] = fs::path(a.graph_file).filename().string();
            if (stem.empty()) {
                stem = "laplacian_" + fs::path(a.graph_file).stem().string();
            }
        } else {
            const std::size_t n = need(a.n, "--n (or --graph)");
            diagnostics::EnsembleSpec spec{diagnostics::Ensemble::laplacian};
            spec.degree_low = a.degree_low;
            spec.degree_high = a.degree_high;
            code = diagnostics::sample_ensemble(spec, n, a.seed, options).code;
            if (stem.empty()) {
                stem = "laplacian_" + std::to_string(n) + "_s" + std::to_string(a.seed);
            }
        }
    } else if (a.construction == "typical-ldpc") {
        const std::size_t n = need(a.n, "--n");
        diagnostics::EnsembleSpec spec{diagnostics::Ensemble::typical_ldpc};
        spec.bit_degree = a.dv;
        spec.check_degree = a.dc;
        code = diagnostics::sample_ensemble(spec, n, a.seed, options).code;
        if (stem.empty()) {
            stem = "typical_ldpc_" + std::to_string(n) + "_s" + std::to_string(a.seed);
        }
    } else if (a.construction == "pinwheel") {
        const std::size_t N = need(a.generation, "--N");
        const std::size_t p = need(a.period, "--p");
        codes::PinwheelOptions po;
        po.depletion_offset = a.offset;
        po.code = options;
        pinwheel = codes::pinwheel_code(N, p, po);
        code = pinwheel->code;
        extra["removed_checks"] = pinwheel->removed_checks;
        extra["check_vertices"] = pinwheel->check_vertices;
        if (pinwheel->guard) {
            const auto& g = *pinwheel->guard;
            extra["boundary_guard"] = {{"region_size", g.region_size},
                                       {"region_kernel_dim", g.region_kernel_dim},
                                       {"shortest", codes::distance_json(g.shortest)},
                                       {"threshold", g.threshold},
                                       {"flagged", g.flagged}};
        }
        if (stem.empty()) {
            stem = "pinwheel_N" + std::to_string(N) + "_p" + std::to_string(p);
        }
    } else {
        throw UsageError("unknown construction '" + a.construction +
                         "' (repetition, laplacian, typical-ldpc, pinwheel)");
    }
    const auto saved = codes::save_code(dir, stem, *code, extra);
    std::vector<fs::path> files = saved.paths;
    if (pinwheel) {
        files.push_back(dir / (stem + "_coords.txt"));
        auto coords = open_out(files.back());
        tiling::write_coordinates(coords, pinwheel->tiling);
        std::vector<bool> mark(pinwheel->tiling.num_vertices(), false);
        if (code->has_distances()) {
            for (std::size_t v : code->distance().witness.support()) {
                mark[v] = true;
            }
        }
        files.push_back(dir / (stem + ".svg"));
        auto svg = open_out(files.back());
        tiling::write_svg(svg, pinwheel->tiling, mark);
    }
    std::cout << code->provenance().construction << ' ' << params_text(*code) << " m=" << code->m()
              << " k^T=" << code->k_transpose() << '\n';
    if (pinwheel && pinwheel->guard) {
        const auto& g = *pinwheel->guard;
        std::cout << "boundary guard: region " << g.region_size << " bits, kernel dim " << g.region_kernel_dim
                  << ", shortest " << g.shortest.weight.to_string() << ", threshold "
                  << diagnostics::format_fixed(g.threshold, 2) << (g.flagged ? ", FLAGGED" : ", clear") << '\n';
    }
    for (const auto& f : files) {
        std::cout << "wrote " << f.string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- product

struct ProductArgs {
    std::string kind;
    std::vector<std::string> seeds;
    std::string model;
    std::optional<std::size_t> L;
    bool no_distance = false;
    std::string out, name;
};

std::string quantum_text(std::size_t n, std::size_t k, const std::string& d) {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]";
}

int cmd_product(const ProductArgs& a) {
    codes::CssOptions css;
    css.compute_distance = !a.no_distance;
    std::optional<codes::CssCode> code;
    std::optional<codes::PredictedParams> predicted;
    std::string stem = a.name;
    if (a.kind == "hgp") {
        if (a.seeds.size() != 2) {
            throw UsageError(std::string("product hgp needs two seed codes; ") + kTokenHelp);
        }
        const auto c1 = code_from_token(a.seeds[0], {});
        const auto c2 = code_from_token(a.seeds[1], {});
        predicted = codes::predicted_hgp_params(c1, c2);
        code = codes::hgp(c1, c2, css);
        if (stem.empty()) {
            stem = "hgp";
        }
    } else if (a.kind == "lp" || a.kind == "threefold") {
        if (!a.L || a.model.empty()) {
            throw UsageError("product " + a.kind + " requires --model and --L");
        }
        const std::size_t L = *a.L;
        if (a.kind == "lp" && a.model == "haah") {
            code = codes::haah_code(L, css);
        } else if (a.kind == "lp" && a.model == "checkerboard") {
            code = codes::checkerboard(L, css);
        } else if (a.kind == "lp" && a.model == "color") {
            code = codes::color_code_lp(L, css);
        } else if (a.kind == "lp" && a.model == "sierpinski") {
            code = codes::sierpinski_prism(L, css);
        } else if (a.kind == "threefold" && a.model == "xcube") {
            code = codes::xcube(L, css);
        } else {
            throw UsageError("unknown model '" + a.model + "' for product " + a.kind +
                             " (lp: haah, checkerboard, color, sierpinski; threefold: xcube)");
        }
        if (stem.empty()) {
            stem = a.model + "_L" + std::to_string(L);
        }
    } else {
        throw UsageError("unknown product '" + a.kind + "' (hgp, lp, threefold)");
    }
    std::string d = "?";
    if (code->distance()) {
        const auto& q = code->distance()->result;
        d = q.weight.to_string() + (q.exact ? "" : "*");
    }
    if (predicted) {
        std::cout << "predicted " << quantum_text(predicted->n_q, predicted->k_q, predicted->d_q.to_string())
                  << " k_X^T=" << predicted->k_x_transpose << " k_Z^T=" << predicted->k_z_transpose << '\n';
    }
    std::cout << "measured  " << quantum_text(code->n(), code->k(), d) << " k_X^T=" << code->k_x_transpose()
              << " k_Z^T=" << code->k_z_transpose() << '\n';
    const auto saved = codes::save_code(out_dir_or_default(a.out), stem, *code);
    for (const auto& f : saved.paths) {
        std::cout << "wrote " << f.string() << '\n';
    }
    if (predicted && (predicted->n_q != code->n() || predicted->k_q != code->k())) {
        std::cerr << "error: measured parameters disagree with the product formula\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- scans

struct ScanArgs {
    std::string ensemble = "typical-ldpc";
    std::vector<std::size_t> sizes;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::size_t dv = 3, dc = 4, degree_low = 3, degree_high = 5;
    std::string code;
    std::string mode = "uniform";
    std::size_t max_span = 1;
    std::size_t pool = 64;
    std::string out, name;
};

diagnostics::EnsembleSpec spec_from(const ScanArgs& a) {
    diagnostics::EnsembleSpec spec{diagnostics::parse_ensemble(a.ensemble)};
    spec.bit_degree = a.dv;
    spec.check_degree = a.dc;
    spec.degree_low = a.degree_low;
    spec.degree_high = a.degree_high;
    return spec;
}

int cmd_rank_scan(const ScanArgs& a) {
    const auto spec = spec_from(a);
    const json recipe = {{"command", "rank-scan"}, {"ensemble", a.ensemble}, {"sizes", a.sizes},
                         {"trials", a.trials},     {"seed", a.seed},         {"dv", a.dv},
                         {"dc", a.dc},             {"degree_low", a.degree_low}, {"degree_high", a.degree_high}};
    const auto records = diagnostics::rank_deficiency_scan(spec, a.sizes, a.trials, a.seed);
    const fs::path path = out_dir_or_default(a.out) / (a.name.empty() ? "rank_scan_" + a.ensemble + ".csv" : a.name);
    auto out = open_out(path);
    diagnostics::write_rank_csv(out, records, util::stamp_for(recipe));
    for (const auto& r : diagnostics::summarize(records)) {
        std::cout << "n=" << r.n << " trials=" << r.trials << " mean k=" << diagnostics::format_fixed(r.mean_k, 3)
                  << " min=" << r.min_k << " max=" << r.max_k << '\n';
    }
    std::cout << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_confinement(const ScanArgs& a) {
    if (a.code.empty()) {
        throw UsageError(std::string("confinement requires --code; ") + kTokenHelp);
    }
    const auto mode = diagnostics::parse_mode(a.mode);
    codes::CodeOptions options;
    options.compute_distances = mode == diagnostics::SamplingMode::biased;
    const auto code = code_from_token(a.code, options);
    diagnostics::ConfinementOptions o;
    o.trials = a.trials;
    o.seed = a.seed;
    o.mode = mode;
    o.max_span = a.max_span;
    if (mode == diagnostics::SamplingMode::biased) {
        o.codewords = diagnostics::minimal_codewords(code, a.pool);
    }
    const auto curve = diagnostics::confinement_scan(code, o);
    const json recipe = {{"command", "confinement"}, {"code", a.code}, {"trials", a.trials}, {"seed", a.seed},
                         {"mode", a.mode},           {"max_span", a.max_span}, {"pool", a.pool}};
    const std::string stem = a.name.empty() ? "confinement_" + a.mode : a.name;
    const fs::path dir = out_dir_or_default(a.out);
    const std::string witnesses = stem + "_witnesses.txt";
    {
        auto out = open_out(dir / (stem + ".csv"));
        diagnostics::write_confinement_csv(out, curve, witnesses, util::stamp_for(recipe));
        auto w = open_out(dir / witnesses);
        diagnostics::write_witnesses(w, curve);
    }
    for (const auto& row : curve.rows) {
        const auto d = row.density(curve.m);
        std::cout << "|e|=" << row.weight << " min |s|=" << (row.min_syndrome ? std::to_string(*row.min_syndrome) : "-")
                  << " density=" << (d ? diagnostics::format_fixed(*d, 4) : "-") << '\n';
    }
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << '\n';
    return 0;
}

int cmd_isolability(const ScanArgs& a) {
    if (a.code.empty()) {
        throw UsageError(std::string("isolability requires --code; ") + kTokenHelp);
    }
    codes::CodeOptions options;
    options.compute_distances = false;
    const auto code = code_from_token(a.code, options);
    const auto report = diagnostics::isolability_check(code);
    const json recipe = {{"command", "isolability"}, {"code", a.code}};
    const fs::path path = out_dir_or_default(a.out) / (a.name.empty() ? "isolability.csv" : a.name);
    auto out = open_out(path);
    diagnostics::write_isolability_csv(out, report, util::stamp_for(recipe));
    std::size_t worst = 0;
    for (const auto& c : report.components) {
        worst = std::max(worst, c.cycle_rank);
    }
    std::cout << report.degree_two_checks << " two-bit checks, " << report.components.size()
              << " Ising components, max cycle rank " << worst << ": " << (report.passes ? "isolable" : "NOT isolable")
              << '\n';
    std::cout << "wrote " << path.string() << '\n';
    return 0;
}

struct DistanceArgs {
    std::string code, hx, hz;
    std::size_t threshold = 28;
    std::size_t iterations = 2000;
};

int cmd_distance(const DistanceArgs& a) {
    gf2::MinWeightOptions budget;
    budget.exhaustive_threshold = a.threshold;
    budget.iterations = a.iterations;
    diagnostics::DistanceReport r;
    if (!a.hx.empty() || !a.hz.empty()) {
        if (a.hx.empty() || a.hz.empty() || !a.code.empty()) {
            throw UsageError("distance takes either --code or both --hx and --hz");
        }
        const codes::CssCode css(gf2::load_matrix(a.hx).to_dense(), gf2::load_matrix(a.hz).to_dense(),
                                 codes::Provenance{"file", {{"hx", a.hx}, {"hz", a.hz}}, std::nullopt});
        r = diagnostics::distance_report(css, budget);
        std::cout << "n=" << css.n() << " k=" << css.k() << '\n';
    } else if (!a.code.empty()) {
        codes::CodeOptions options;
        options.compute_distances = false;
        const auto code = code_from_token(a.code, options);
        r = diagnostics::distance_report(code, budget);
        std::cout << "n=" << code.n() << " k=" << code.k() << '\n';
    } else {
        throw UsageError(std::string("distance requires --code or --hx/--hz; ") + kTokenHelp);
    }
    std::cout << "d=" << r.d.to_string() << (r.exact ? " (exact)" : " (upper bound)") << " kind=" << r.kind
              << " witness " << (r.witness_verified ? "verified" : "NOT verified") << '\n';
    std::cout << "witness: " << gf2::support_to_string(r.witness) << '\n';
    return r.witness_verified || !r.d.is_finite() ? 0 : 1;
}

// ---------------------------------------------------------------- experiments

struct ExperimentArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::vector<std::size_t> sizes;
    std::vector<std::string> params;
    std::string seed1, seed2;
    std::string out;
    bool print_config = false;
};

int cmd_experiment(const std::string& kind, const ExperimentArgs& a) {
    json overrides = a.config.empty() ? json::object() : cli::read_config_file(a.config);
    if (!overrides.contains("kind")) {
        overrides["kind"] = kind;
    }
    cli::ExperimentConfig c = cli::resolve_config(kind, overrides);
    if (a.seed) {
        c.seed = *a.seed;
    }
    if (a.trials) {
        c.trials = *a.trials;
    }
    if (!a.sizes.empty()) {
        c.sizes = a.sizes;
    }
    if (!a.seed1.empty()) {
        c.parameters["seed1"] = cli::seed_family_defaults(a.seed1);
    }
    if (!a.seed2.empty()) {
        c.parameters["seed2"] = cli::seed_family_defaults(a.seed2);
    }
    for (const auto& p : a.params) {
        cli::apply_parameter(c, p);
    }
    if (!a.out.empty()) {
        c.output_dir = a.out;
    }
    if (a.print_config) {
        std::cout << c.to_json().dump(2) << '\n';
        return 0;
    }
    const auto result = cli::run_experiment(c);
    std::cout << result.text;
    std::cout << "config " << c.stamp().config_hash << ", " << result.files.size() << " files in "
              << c.output_dir.string() << '\n';
    return 0;
}

void add_experiment_options(CLI::App* sub, ExperimentArgs& a) {
    sub->add_option("--config", a.config, "JSON config; flags override its fields");
    sub->add_option("--seed", a.seed, "master seed");
    sub->add_option("--trials", a.trials, "main trial count");
    sub->add_option("--sizes", a.sizes, "sizes (or pinwheel generations), space or comma separated")->delimiter(',');
    sub->add_option("--param", a.params, "parameter override name=json, e.g. confinement.graphs=20");
    sub->add_option("--out", a.out, "output directory (default $FRACTON_OUT_DIR/<kind>)");
    sub->add_flag("--print-config", a.print_config, "print the resolved config and exit");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical seed codes, quantum code products and fracton diagnostics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(util::kToolVersion));

    GenSeedArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-seed", "write a classical seed code");
    gen_cmd->add_option("construction", gen.construction, "repetition | laplacian | typical-ldpc | pinwheel")
        ->required();
    gen_cmd->add_option("--n", gen.n, "number of bits");
    gen_cmd->add_flag("--cyclic,!--open", gen.cyclic, "repetition topology (default cyclic)");
    gen_cmd->add_option("--seed", gen.seed, "sampling seed");
    gen_cmd->add_option("--dv", gen.dv, "typical-ldpc bit degree");
    gen_cmd->add_option("--dc", gen.dc, "typical-ldpc check degree");
    gen_cmd->add_option("--degree-low", gen.degree_low, "laplacian minimum degree");
    gen_cmd->add_option("--degree-high", gen.degree_high, "laplacian maximum degree");
    gen_cmd->add_option("--graph", gen.graph_file, "laplacian of a graph file instead of a random graph");
    gen_cmd->add_option("--N", gen.generation, "pinwheel generation");
    gen_cmd->add_option("--p", gen.period, "pinwheel depletion period");
    gen_cmd->add_option("--offset", gen.offset, "pinwheel depletion offset");
    gen_cmd->add_flag("--no-distance", gen.no_distance, "skip the distance search");
    gen_cmd->add_option("--out", gen.out, "output directory (default $FRACTON_OUT_DIR or out)");
    gen_cmd->add_option("--name", gen.name, "file stem");

    ProductArgs prod;
    auto* prod_cmd = app.add_subcommand("product", "build a CSS code from seeds or a named model");
    prod_cmd->add_option("kind", prod.kind, "hgp | lp | threefold")->required();
    prod_cmd->add_option("seeds", prod.seeds, kTokenHelp);
    prod_cmd->add_option("--model", prod.model, "lp: haah | checkerboard | color | sierpinski; threefold: xcube");
    prod_cmd->add_option("--L", prod.L, "period of the translation group");
    prod_cmd->add_flag("--no-distance", prod.no_distance, "skip the quantum distance search");
    prod_cmd->add_option("--out", prod.out, "output directory");
    prod_cmd->add_option("--name", prod.name, "file stem");

    ScanArgs scan;
    auto add_ensemble = [&](CLI::App* sub) {
        sub->add_option("--ensemble", scan.ensemble, "typical-ldpc | laplacian");
        sub->add_option("--dv", scan.dv, "typical-ldpc bit degree");
        sub->add_option("--dc", scan.dc, "typical-ldpc check degree");
        sub->add_option("--degree-low", scan.degree_low, "laplacian minimum degree");
        sub->add_option("--degree-high", scan.degree_high, "laplacian maximum degree");
    };
    auto* rank_cmd = app.add_subcommand("rank-scan", "k and k^T over an ensemble");
    add_ensemble(rank_cmd);
    rank_cmd->add_option("--sizes", scan.sizes, "sizes n, space or comma separated")->delimiter(',')->required();
    rank_cmd->add_option("--trials", scan.trials, "samples per size");
    rank_cmd->add_option("--seed", scan.seed, "master seed");
    rank_cmd->add_option("--out", scan.out, "output directory");
    rank_cmd->add_option("--name", scan.name, "file name");

    auto* conf_cmd = app.add_subcommand("confinement", "minimum syndrome weight of sampled errors");
    conf_cmd->add_option("--code", scan.code, kTokenHelp);
    conf_cmd->add_option("--mode", scan.mode, "uniform | biased");
    conf_cmd->add_option("--trials", scan.trials, "samples per sparsity");
    conf_cmd->add_option("--seed", scan.seed, "seed");
    conf_cmd->add_option("--max-span", scan.max_span, "codewords joined per biased sample");
    conf_cmd->add_option("--pool", scan.pool, "minimal codewords used for biasing");
    conf_cmd->add_option("--out", scan.out, "output directory");
    conf_cmd->add_option("--name", scan.name, "file stem");

    auto* iso_cmd = app.add_subcommand("isolability", "Ising subgraph components and their cycle ranks");
    iso_cmd->add_option("--code", scan.code, kTokenHelp);
    iso_cmd->add_option("--out", scan.out, "output directory");
    iso_cmd->add_option("--name", scan.name, "file name");

    DistanceArgs dist;
    auto* dist_cmd = app.add_subcommand("distance", "distance with exactness flag and witness");
    dist_cmd->add_option("--code", dist.code, kTokenHelp);
    dist_cmd->add_option("--hx", dist.hx, "X check matrix file");
    dist_cmd->add_option("--hz", dist.hz, "Z check matrix file");
    dist_cmd->add_option("--threshold", dist.threshold, "exhaustive search up to this kernel dimension");
    dist_cmd->add_option("--iterations", dist.iterations, "information-set iterations beyond it");

    ExperimentArgs exp;
    std::vector<std::pair<CLI::App*, std::string>> experiments;
    for (const auto& [kind, help] : std::vector<std::pair<std::string, std::string>>{
             {"fig2", "rank deficiency and confinement of typical LDPC and Laplacian ensembles"},
             {"fig3", "pinwheel code scaling and confinement"},
             {"laplacian-square-demo", "bounded syndrome weight on the square-lattice Laplacian code"},
             {"verdict", "fracton classification of the HGP of two seed families"}}) {
        auto* sub = app.add_subcommand(kind, help);
        add_experiment_options(sub, exp);
        if (kind == "verdict") {
            sub->add_option("--seed1", exp.seed1, "repetition | typical-ldpc | laplacian | pinwheel");
            sub->add_option("--seed2", exp.seed2, "repetition | typical-ldpc | laplacian | pinwheel");
        }
        experiments.emplace_back(sub, kind);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen_seed(gen);
        }
        if (prod_cmd->parsed()) {
            return cmd_product(prod);
        }
        if (rank_cmd->parsed()) {
            return cmd_rank_scan(scan);
        }
        if (conf_cmd->parsed()) {
            return cmd_confinement(scan);
        }
        if (iso_cmd->parsed()) {
            return cmd_isolability(scan);
        }
        if (dist_cmd->parsed()) {
            return cmd_distance(dist);
        }
        for (const auto& [sub, kind] : experiments) {
            if (sub->parsed()) {
                return cmd_experiment(kind, exp);
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
