#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracton/codes/classical_code.hpp"
#include "fracton/codes/css_code.hpp"
#include "fracton/gf2/bit_vector.hpp"
#include "fracton/gf2/distance.hpp"

namespace fracton::diagnostics {

// ---------------------------------------------------------------- ensembles

enum class Ensemble { typical_ldpc, laplacian };

std::string ensemble_name(Ensemble e);
/// Accepts "typical-ldpc" and "laplacian"; throws std::invalid_argument otherwise.
Ensemble parse_ensemble(const std::string& name);

struct EnsembleSpec {
    Ensemble kind = Ensemble::typical_ldpc;
    /// Bipartite (D_variable, D_check) for typical LDPC; m = n D_variable / D_check.
    std::size_t bit_degree = 3;
    std::size_t check_degree = 4;
    /// Per-vertex degrees drawn uniformly from [degree_low, degree_high] for Laplacian graphs.
    std::size_t degree_low = 3;
    std::size_t degree_high = 5;
};

struct EnsembleSample {
    codes::ClassicalCode code;
    std::size_t attempts = 0;
    std::size_t min_degree = 0;
};

/// One member of the ensemble at size n, deterministic in `seed`.
EnsembleSample sample_ensemble(const EnsembleSpec& spec, std::size_t n, std::uint64_t seed,
                               const codes::CodeOptions& options = {});

/// Trial index fed to util::trial_seed: size in the high 32 bits, trial in the low 32.
std::uint64_t trial_index(std::size_t n, std::size_t trial);

// ---------------------------------------------------------------- rank scan

struct RankScanRecord {
    std::string ensemble;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t k = 0;
    std::size_t k_transpose = 0;
};

/// Samples `trials` codes per size and records k and k^T. Sampling failures are rethrown
/// as std::runtime_error naming the size and trial.
std::vector<RankScanRecord> rank_deficiency_scan(const EnsembleSpec& spec, const std::vector<std::size_t>& sizes,
                                                 std::size_t trials, std::uint64_t master_seed);

struct RankSummary {
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean_k = 0.0;
    std::size_t min_k = 0;
    std::size_t max_k = 0;
};

/// Per-size aggregates in ascending n.
std::vector<RankSummary> summarize(const std::vector<RankScanRecord>& records);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);
/// Least-squares slope of log y against log x; y values must be positive.
double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------- confinement

enum class SamplingMode { uniform, biased };

std::string mode_name(SamplingMode mode);
SamplingMode parse_mode(const std::string& name);

/// Sparsities 0.01, 0.02, ..., 0.30.
std::vector<double> default_sparsities();

struct ConfinementOptions {
    std::vector<double> sparsities = default_sparsities();
    std::size_t trials = 1000;
    SamplingMode mode = SamplingMode::uniform;
    std::uint64_t seed = 1;
    /// Tanner-graph ball radii swept around each base bit in biased mode.
    std::vector<std::size_t> radii = {2, 4, 8, 16};
    /// Biased mode sums up to this many disjoint minimal codewords linked through shared checks.
    std::size_t max_span = 1;
    /// Codewords to truncate in biased mode; empty means use the code's stored distance witness.
    std::vector<gf2::BitVector> codewords;
};

struct ConfinementRow {
    double sparsity = 0.0;
    /// Target error weight, max(1, round(sparsity * n)).
    std::size_t weight = 0;
    std::size_t trials = 0;
    /// Trials that produced an error of the target weight (always `trials` in uniform mode).
    std::size_t feasible = 0;
    std::optional<std::size_t> min_syndrome;
    gf2::BitVector witness;
    /// Lowest syndrome weight among sampled errors that are not codewords.
    std::optional<std::size_t> min_nonzero_syndrome;
    gf2::BitVector nonzero_witness;

    /// min |s| / m, or nullopt when no trial was feasible.
    std::optional<double> density(std::size_t m) const;
};

struct ConfinementCurve {
    std::string code;
    SamplingMode mode = SamplingMode::uniform;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<ConfinementRow> rows;
};

/// Minimum syndrome weight over sampled errors at each target weight.
/// Uniform: trial t draws one random ordering of the bits and uses its prefixes, so every
/// row sees a uniformly random error of its weight. Biased: trial t picks a base bit and a
/// codeword, keeps the codeword bits inside ball(base, r) for each radius, and truncates
/// them to the `weight` bits closest to the base (ties by index); the best radius wins.
/// Throws std::invalid_argument in biased mode when no codeword is available.
ConfinementCurve confinement_scan(const codes::ClassicalCode& code, const ConfinementOptions& options);

/// Row-wise minimum of two curves over the same code and sparsity grid.
ConfinementCurve elementwise_min(const ConfinementCurve& a, const ConfinementCurve& b);

/// Adjacent feasible rows whose minimum syndrome drops by more than `tolerance`.
std::size_t count_decreases(const ConfinementCurve& curve, std::size_t tolerance = 0);

/// Copy of `curve` with every row heavier than `max_weight` emptied.
ConfinementCurve restrict_weight(const ConfinementCurve& curve, std::size_t max_weight);

struct EnsembleConfinementRow {
    double sparsity = 0.0;
    std::size_t weight = 0;
    /// Graph samples and uniform trials per graph.
    std::size_t graphs = 0;
    std::size_t trials = 0;
    /// Mean over graphs of each graph's minimum syndrome density.
    double mean_min_density = 0.0;
    /// Lowest syndrome weight met on any graph, the graph that produced it, and the error.
    std::size_t min_syndrome = 0;
    std::size_t witness_graph = 0;
    gf2::BitVector witness;
};

struct EnsembleConfinementCurve {
    std::string ensemble;
    std::size_t n = 0;
    std::vector<std::uint64_t> graph_seeds;
    std::vector<EnsembleConfinementRow> rows;
};

/// Uniform confinement scans of `graphs` ensemble members at size n, each with
/// `options.trials` trials per sparsity. Graph g is sampled from
/// trial_seed(master_seed, trial_index(n, g)) and scanned with trial_seed(that seed, 1).
/// Codes of different graphs may differ in m, so densities are averaged, not weights.
EnsembleConfinementCurve ensemble_confinement_scan(const EnsembleSpec& spec, std::size_t n, std::size_t graphs,
                                                   const ConfinementOptions& options, std::uint64_t master_seed);

/// Adjacent rows whose mean minimum density strictly drops.
std::size_t count_decreases(const EnsembleConfinementCurve& curve);

/// Minimal-weight codewords used to seed biased sampling: the stored distance witness and
/// up to `limit` other codewords of the same weight met by a fresh search.
std::vector<gf2::BitVector> minimal_codewords(const codes::ClassicalCode& code, std::size_t limit,
                                              const gf2::MinWeightOptions& options = {});

// ---------------------------------------------------------------- isolability

struct IsingComponent {
    std::size_t id = 0;
    std::size_t size = 0;
    std::size_t edges = 0;
    /// E - V + 1, the number of independent cycles.
    std::size_t cycle_rank = 0;
};

struct IsolabilityReport {
    std::size_t degree_two_checks = 0;
    std::vector<IsingComponent> components;
    /// False iff some component has cycle rank >= 2.
    bool passes = true;
};

/// Ising graph on the bits, one edge per check touching exactly two bits.
IsolabilityReport isolability_check(const codes::ClassicalCode& code);
IsolabilityReport isolability_check(const gf2::SparseBitMatrix& h);

// ---------------------------------------------------------------- sectors and distance

struct SuperselectionReport {
    std::size_t k_x_transpose = 0;
    std::size_t k_z_transpose = 0;
    std::size_t sector_exponent = 0;
    /// For hypergraph products: whether k_X^T = k1^T k2 and k_Z^T = k1 k2^T hold.
    std::optional<bool> hgp_identity;
};

SuperselectionReport superselection_count(const codes::CssCode& c);

struct DistanceReport {
    gf2::Distance d = gf2::Distance::infinite();
    bool exact = true;
    gf2::BitVector witness;
    /// "classical", "X" or "Z".
    std::string kind;
    /// Checked by multiplying the witness back through the relevant matrix.
    bool witness_verified = false;
};

DistanceReport distance_report(const codes::ClassicalCode& code, const gf2::MinWeightOptions& options = {});
DistanceReport distance_report(const codes::CssCode& code, const gf2::MinWeightOptions& options = {});

// ---------------------------------------------------------------- verdict

/// Scan-level evidence about one seed family.
struct SeedEvidence {
    std::string name;
    std::vector<std::size_t> sizes;
    std::vector<double> mean_k;
    double rank_exponent = 0.0;
    bool rank_deficient = false;

    /// Confinement curve used for the decision: uniform, or its row-wise minimum with the
    /// biased curve restricted to weights at most d/2.
    ConfinementCurve curve;
    /// Lightest and heaviest feasible row of the restricted biased curve, when one was run.
    std::optional<std::size_t> biased_first;
    std::optional<std::size_t> biased_last;
    std::size_t decreases = 0;
    std::optional<double> first_density;
    std::optional<double> last_density;
    bool confining = false;

    IsolabilityReport isolability;
    bool isolable = false;
};

struct VerdictThresholds {
    /// Rank deficient iff the fitted exponent of log k vs log n is at least this.
    double rank_exponent = 0.4;
    /// Allowed drops in the confinement curve.
    std::size_t allowed_decreases = 1;
    /// Drops no larger than this fraction of m are treated as sampling noise.
    double drop_tolerance = 0.02;
    /// Last density must exceed this multiple of the first.
    double growth_factor = 3.0;
};

/// Fills the decision flags of `e` from its raw data.
void decide(SeedEvidence& e, const VerdictThresholds& t = {});

/// Builds the member of a seed family at a size parameter, with a per-member seed.
using SeedFamily = std::function<codes::ClassicalCode(std::size_t size, std::uint64_t seed)>;

struct EvidenceOptions {
    std::vector<std::size_t> sizes;
    std::size_t trials_per_size = 1;
    std::uint64_t seed = 1;
    /// Confinement is measured on the first member at the largest size. In biased mode the
    /// uniform curve is also measured and the row-wise minimum of the two is used.
    ConfinementOptions confinement;
    /// Distinct minimal codewords gathered for biased sampling.
    std::size_t codeword_pool = 64;
};

/// Runs the rank, confinement and isolability measurements for one seed family.
SeedEvidence gather_evidence(const std::string& name, const SeedFamily& family, const EvidenceOptions& options,
                             const VerdictThresholds& t = {});

enum class FractonType { none, type_one, type_two };

std::string fracton_type_name(FractonType t);

struct Verdict {
    FractonType type = FractonType::none;
    SeedEvidence seed1;
    SeedEvidence seed2;
    std::vector<std::string> reasons;
};

/// Type-II: both seeds rank deficient, confining and isolable. Type-I: both seeds isolable
/// and at least one seed rank deficient and confining. Otherwise not a fracton candidate.
/// These are finite-size proxies of asymptotic criteria.
Verdict fracton_verdict(SeedEvidence seed1, SeedEvidence seed2, const VerdictThresholds& t = {});

}  // namespace fracton::diagnostics
