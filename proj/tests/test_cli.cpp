#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "fracton/cli/experiment.hpp"
#include "fracton/codes/seed_codes.hpp"
#include "fracton/diagnostics/report.hpp"
#include "fracton/gf2/io.hpp"
#include "fracton/util/stamp.hpp"

using namespace fracton;
using namespace fracton::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fracton_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(FRACTON_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

ExperimentConfig tiny_fig2(const fs::path& out) {
    ExperimentConfig c = resolve_config(
        "fig2", {{"sizes", {40, 60}},
                 {"trials", 3},
                 {"parameters", {{"confinement", {{"n", 40}, {"graphs", 3}, {"trials", 20}, {"sparsities", {0.05, 0.1}}}}}}});
    c.output_dir = out;
    return c;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("FNV-1a test vectors") {
        CHECK(util::fnv1a_hex("") == "cbf29ce484222325");
        CHECK(util::fnv1a_hex("a") == "af63dc4c8601ec8c");
        CHECK(util::fnv1a_hex("foobar") == "85944171f73967e8");
        const util::OutputStamp s = util::stamp_for(json{{"b", 1}, {"a", 2}});
        CHECK(s.config_hash == util::config_hash(json{{"a", 2}, {"b", 1}}));
        CHECK(s.comment_line() == "# fracton " + std::string(util::kToolVersion) + " config " + s.config_hash);
    }

    TEST_CASE("configs round trip and resolve") {
        for (const auto& kind : experiment_kinds()) {
            const ExperimentConfig c = default_config(kind);
            CHECK(ExperimentConfig::from_json(c.to_json()) == c);
            CHECK(resolve_config(kind, json::object()) == c);
        }
        CHECK_THROWS_AS(default_config("fig9"), UsageError);
        CHECK_THROWS_AS(ExperimentConfig::from_json({{"kind", "fig2"}, {"colour", 1}}), UsageError);
        CHECK_THROWS_AS(ExperimentConfig::from_json({{"kind", "fig2"}, {"trials", "many"}}), UsageError);
        CHECK_THROWS_AS(resolve_config("fig2", {{"parameters", {{"bogus", 1}}}}), UsageError);
        CHECK_THROWS_AS(resolve_config("fig2", {{"kind", "fig3"}}), UsageError);

        const auto merged = resolve_config("fig2", {{"parameters", {{"confinement", {{"graphs", 7}}}}}});
        CHECK(merged.parameters["confinement"]["graphs"] == 7);
        CHECK(merged.parameters["confinement"]["n"] == 300);

        const fs::path dir = scratch("config");
        write_config_file(dir / "c.json", merged);
        CHECK(ExperimentConfig::from_json(read_config_file(dir / "c.json")) == merged);
        CHECK_THROWS_AS(read_config_file(dir / "missing.json"), UsageError);
    }

    TEST_CASE("stamp ignores the output directory") {
        ExperimentConfig a = default_config("fig3");
        ExperimentConfig b = a;
        b.output_dir = "elsewhere";
        CHECK(a.stamp().config_hash == b.stamp().config_hash);
        b.seed = 2;
        CHECK(a.stamp().config_hash != b.stamp().config_hash);
    }

    TEST_CASE("parameter assignments") {
        ExperimentConfig c = default_config("laplacian-square-demo");
        apply_parameter(c, "L=12");
        CHECK(c.parameters["L"] == 12);
        apply_parameter(c, "radii=[1,2]");
        CHECK(c.parameters["radii"] == json({1, 2}));
        ExperimentConfig v = default_config("verdict");
        apply_parameter(v, "mode=uniform");
        CHECK(v.parameters["mode"] == "uniform");
        apply_parameter(v, "seed2.trials_per_size=5");
        CHECK(v.parameters["seed2"]["trials_per_size"] == 5);
        CHECK_THROWS_AS(apply_parameter(c, "nope=1"), UsageError);
        CHECK_THROWS_AS(apply_parameter(c, "L"), UsageError);
        CHECK(seed_family_defaults("pinwheel")["period"] == 7);
        CHECK_THROWS_AS(seed_family_defaults("hexagonal"), UsageError);
    }

    TEST_CASE("report formats") {
        const util::OutputStamp stamp = util::stamp_for(json{{"x", 1}});
        CHECK(diagnostics::format_fixed(0.126, 2) == "0.13");
        CHECK(diagnostics::format_fixed(1.0 / 3.0) == "0.333333");

        std::ostringstream rank;
        diagnostics::write_rank_csv(rank, {{"laplacian", 10, 0, 5, 1, 1}}, stamp);
        const auto rank_lines = lines_of(rank.str());
        REQUIRE(rank_lines.size() == 3);
        CHECK(rank_lines[0] == stamp.comment_line());
        CHECK(rank_lines[1] == "ensemble,n,trial,k,kT");
        CHECK(rank_lines[2] == "laplacian,10,0,1,1");

        diagnostics::ConfinementOptions o;
        o.trials = 5;
        o.sparsities = {0.1, 0.5};
        const auto curve = diagnostics::confinement_scan(codes::repetition_code(10, codes::Topology::cyclic), o);
        std::ostringstream csv;
        diagnostics::write_confinement_csv(csv, curve, "w.txt", stamp);
        const auto csv_lines = lines_of(csv.str());
        REQUIRE(csv_lines.size() == 4);
        CHECK(csv_lines[1] == "sparsity,trials,min_syndrome_density,witness_file");
        CHECK(csv_lines[2].rfind("0.1000,5,", 0) == 0);
        CHECK(csv_lines[2].ends_with(",w.txt:1"));
        std::ostringstream witnesses;
        diagnostics::write_witnesses(witnesses, curve);
        const auto w_lines = lines_of(witnesses.str());
        REQUIRE(w_lines.size() == 2);
        CHECK(w_lines[0] == gf2::support_to_string(curve.rows[0].witness));

        std::ostringstream svg;
        diagnostics::PlotOptions po;
        po.title = "t";
        po.log_x = true;
        diagnostics::write_svg_plot(svg, {{"a", {1, 10, 100}, {1, 2, 3}}, {"b", {0, 1}, {1, 1}}}, po, stamp);
        const std::string s = svg.str();
        CHECK(s.rfind("<?xml", 0) == 0);
        CHECK(s.find("<svg") != std::string::npos);
        CHECK(s.find(stamp.config_hash) != std::string::npos);
        CHECK(s.find("</svg>") != std::string::npos);
        CHECK(s.find("<polyline") != std::string::npos);
    }

    TEST_CASE("small fig2 runs are reproducible") {
        const fs::path a = scratch("fig2a");
        const fs::path b = scratch("fig2b");
        const RunResult ra = run_fig2(tiny_fig2(a));
        const RunResult rb = run_fig2(tiny_fig2(b));
        REQUIRE(ra.files.size() == rb.files.size());
        CHECK(ra.summary == rb.summary);
        std::size_t csv = 0;
        for (const auto& f : ra.files) {
            CHECK(fs::exists(f));
            if (f.extension() == ".csv") {
                ++csv;
                CHECK(slurp(f) == slurp(b / f.filename()));
            }
        }
        CHECK(csv >= 4);
        CHECK(fs::exists(a / "config.json"));
        CHECK(fs::exists(a / "summary.json"));
        const json summary = json::parse(slurp(a / "summary.json"));
        CHECK(summary["config_hash"] == tiny_fig2(a).stamp().config_hash);
        CHECK(summary["rank"]["typical-ldpc"]["mean_k"].size() == 2);
    }

    TEST_CASE("command line exit codes") {
        const fs::path dir = scratch("exit");
        const std::string out = " --out " + dir.string();
        CHECK(run_cli("--help") == 0);
        CHECK(run_cli("gen-seed repetition --n 5 --cyclic --name rep5" + out) == 0);
        const json meta = json::parse(slurp(dir / "rep5.json"));
        CHECK(meta["k"] == 1);
        CHECK(meta["d"]["value"] == 5);
        CHECK(meta["d"]["exact"] == true);
        CHECK(run_cli("distance --code " + (dir / "rep5.mtx").string()) == 0);
        CHECK(run_cli("gen-seed repetition" + out) == 2);
        CHECK(run_cli("no-such-command") == 2);
        CHECK(run_cli("fig2 --param bogus=1" + out) == 2);
        CHECK(run_cli("confinement --code rep8 --mode sideways") == 2);

        // Identity X and Z checks anticommute, which is an internal consistency failure.
        gf2::save_matrix((dir / "hx.mtx").string(), gf2::SparseBitMatrix::from_dense(gf2::BitMatrix::identity(3)));
        CHECK(run_cli("distance --hx " + (dir / "hx.mtx").string() + " --hz " + (dir / "hx.mtx").string()) == 1);
        CHECK(run_cli("distance --code " + (dir / "absent.mtx").string()) != 0);
    }
}
