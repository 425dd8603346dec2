#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracton/util/stamp.hpp"

namespace fracton::cli {

/// Bad user input: unknown kinds or parameters, malformed values. The front end maps it to exit code 2.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Figure and demo recipes. `trials` is the main trial count of the experiment: graphs per
/// size for fig2, samples per sparsity for fig3, the square demo and verdict.
struct ExperimentConfig {
    std::string kind;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::size_t> sizes;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::filesystem::path output_dir;

    nlohmann::json to_json() const;
    /// Throws UsageError on missing or mistyped fields.
    static ExperimentConfig from_json(const nlohmann::json& j);

    /// Provenance stamp. The hash covers every field except the output directory, so the same
    /// recipe written to two places produces identical files.
    util::OutputStamp stamp() const;

    bool operator==(const ExperimentConfig& other) const;
};

/// Kinds with built-in recipes: fig2, fig3, laplacian-square-demo, verdict.
std::vector<std::string> experiment_kinds();

/// The built-in recipe; throws UsageError for an unknown kind.
ExperimentConfig default_config(const std::string& kind);

/// Overlays `overrides` (a partial config document) on the defaults of its kind. Parameter
/// objects are merged key by key; names absent from the defaults are rejected.
ExperimentConfig resolve_config(const std::string& kind, const nlohmann::json& overrides);

/// Reads a config document from disk; throws UsageError if unreadable or malformed.
nlohmann::json read_config_file(const std::filesystem::path& path);

void write_config_file(const std::filesystem::path& path, const ExperimentConfig& config);

/// Sets `parameters` at a dotted path from an assignment "a.b=<json>"; a value that is not
/// valid JSON is stored as a string.
void apply_parameter(ExperimentConfig& config, const std::string& assignment);

/// Defaults of one verdict seed family: repetition, typical-ldpc, laplacian or pinwheel.
nlohmann::json seed_family_defaults(const std::string& family);

/// $FRACTON_OUT_DIR when set and non-empty, otherwise "out".
std::filesystem::path default_output_dir();

struct RunResult {
    std::vector<std::filesystem::path> files;
    /// Numbers the figure is read for; also written to summary.json.
    nlohmann::json summary;
    /// Human-readable report for the terminal.
    std::string text;
};

RunResult run_fig2(const ExperimentConfig& config);
RunResult run_fig3(const ExperimentConfig& config);
RunResult run_square_demo(const ExperimentConfig& config);
RunResult run_verdict(const ExperimentConfig& config);

/// Dispatches on config.kind.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace fracton::cli
