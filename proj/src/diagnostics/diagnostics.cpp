#include "fracton/diagnostics/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fracton/codes/seed_codes.hpp"
#include "fracton/gf2/linalg.hpp"
#include "fracton/graph/configuration_model.hpp"
#include "fracton/graph/graph.hpp"
#include "fracton/util/rng.hpp"

namespace fracton::diagnostics {

std::string ensemble_name(Ensemble e) { return e == Ensemble::typical_ldpc ? "typical-ldpc" : "laplacian"; }

Ensemble parse_ensemble(const std::string& name) {
    if (name == "typical-ldpc") {
        return Ensemble::typical_ldpc;
    }
    if (name == "laplacian") {
        return Ensemble::laplacian;
    }
    throw std::invalid_argument("unknown ensemble '" + name + "'");
}

std::uint64_t trial_index(std::size_t n, std::size_t trial) {
    return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(trial);
}

EnsembleSample sample_ensemble(const EnsembleSpec& spec, std::size_t n, std::uint64_t seed,
                               const codes::CodeOptions& options) {
    codes::CodeOptions with_seed = options;
    with_seed.seed = seed;
    if (spec.kind == Ensemble::typical_ldpc) {
        const auto degrees = graph::BipartiteDegreeSpec::regular(n, spec.bit_degree, spec.check_degree);
        graph::SampledTanner s = graph::configuration_model_bipartite(degrees, seed);
        codes::ClassicalCode code = codes::typical_ldpc(s.tanner, with_seed);
        return EnsembleSample{std::move(code), s.metadata.attempts, s.metadata.min_degree};
    }
    util::Rng rng(seed);
    const graph::DegreeSpec degrees = graph::sample_bounded_degrees(n, spec.degree_low, spec.degree_high, rng);
    graph::SampledGraph s = graph::configuration_model(degrees, util::splitmix64(seed));
    codes::ClassicalCode code = codes::laplacian_code(s.graph, with_seed);
    return EnsembleSample{std::move(code), s.metadata.attempts, s.metadata.min_degree};
}

std::vector<RankScanRecord> rank_deficiency_scan(const EnsembleSpec& spec, const std::vector<std::size_t>& sizes,
                                                 std::size_t trials, std::uint64_t master_seed) {
    codes::CodeOptions options;
    options.compute_distances = false;
    std::vector<RankScanRecord> out;
    out.reserve(sizes.size() * trials);
    for (std::size_t n : sizes) {
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = util::trial_seed(master_seed, trial_index(n, t));
            try {
                EnsembleSample s = sample_ensemble(spec, n, seed, options);
                out.push_back(RankScanRecord{ensemble_name(spec.kind), n, t, seed, s.code.k(), s.code.k_transpose()});
            } catch (const std::exception& e) {
                throw std::runtime_error("rank scan: n=" + std::to_string(n) + " trial " + std::to_string(t) + ": " +
                                         e.what());
            }
        }
    }
    return out;
}

std::vector<RankSummary> summarize(const std::vector<RankScanRecord>& records) {
    std::map<std::size_t, RankSummary> by_n;
    std::map<std::size_t, double> sums;
    for (const auto& r : records) {
        auto [it, inserted] = by_n.try_emplace(r.n, RankSummary{r.n, 0, 0.0, r.k, r.k});
        RankSummary& s = it->second;
        ++s.trials;
        s.min_k = std::min(s.min_k, r.k);
        s.max_k = std::max(s.max_k, r.k);
        sums[r.n] += static_cast<double>(r.k);
    }
    std::vector<RankSummary> out;
    for (auto& [n, s] : by_n) {
        s.mean_k = sums[n] / static_cast<double>(s.trials);
        out.push_back(s);
    }
    return out;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_slope: need at least two paired points");
    }
    const double count = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / count;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("fit_slope: x values are all equal");
    }
    return sxy / sxx;
}

double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) {
            throw std::invalid_argument("fit_loglog_exponent: values must be positive");
        }
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_slope(lx, ly);
}

// ---------------------------------------------------------------- confinement

std::string mode_name(SamplingMode mode) { return mode == SamplingMode::uniform ? "uniform" : "biased"; }

SamplingMode parse_mode(const std::string& name) {
    if (name == "uniform") {
        return SamplingMode::uniform;
    }
    if (name == "biased") {
        return SamplingMode::biased;
    }
    throw std::invalid_argument("unknown sampling mode '" + name + "'");
}

std::vector<double> default_sparsities() {
    std::vector<double> out;
    for (int i = 1; i <= 30; ++i) {
        out.push_back(i / 100.0);
    }
    return out;
}

std::optional<double> ConfinementRow::density(std::size_t m) const {
    if (!min_syndrome || m == 0) {
        return std::nullopt;
    }
    return static_cast<double>(*min_syndrome) / static_cast<double>(m);
}

namespace {

// Syndrome weight of a growing error, one bit at a time.
class SyndromeCounter {
  public:
    SyndromeCounter(const graph::TannerGraph& t) : tanner_(t), parity_(t.num_checks(), 0) {}

    void add(std::size_t bit) {
        for (std::size_t c : tanner_.checks_of_bit(bit)) {
            parity_[c] ^= 1;
            weight_ = parity_[c] ? weight_ + 1 : weight_ - 1;
        }
    }
    std::size_t weight() const { return weight_; }
    void reset() {
        std::fill(parity_.begin(), parity_.end(), 0);
        weight_ = 0;
    }

  private:
    const graph::TannerGraph& tanner_;
    std::vector<unsigned char> parity_;
    std::size_t weight_ = 0;
};

std::vector<std::size_t> target_weights(const std::vector<double>& sparsities, std::size_t n) {
    std::vector<std::size_t> out;
    for (double s : sparsities) {
        if (s < 0.0 || s > 1.0) {
            throw std::invalid_argument("confinement_scan: sparsity outside [0, 1]");
        }
        const auto w = static_cast<std::size_t>(std::llround(s * static_cast<double>(n)));
        out.push_back(std::clamp<std::size_t>(w, 1, n));
    }
    return out;
}

// Records `prefix` as the row's witness when it beats the current minimum. Earlier trials
// win ties, so results do not depend on anything but the trial order.
void offer(ConfinementRow& row, std::size_t syndrome, const std::vector<std::size_t>& order, std::size_t n) {
    ++row.feasible;
    const std::span prefix(order.data(), row.weight);
    if (syndrome > 0 && (!row.min_nonzero_syndrome || syndrome < *row.min_nonzero_syndrome)) {
        row.min_nonzero_syndrome = syndrome;
        row.nonzero_witness = gf2::BitVector::from_support(n, prefix);
    }
    if (row.min_syndrome && syndrome >= *row.min_syndrome) {
        return;
    }
    row.min_syndrome = syndrome;
    row.witness = gf2::BitVector::from_support(n, prefix);
}

void scan_uniform(const graph::TannerGraph& tanner, ConfinementCurve& curve, const ConfinementOptions& options) {
    const std::size_t n = curve.n;
    std::size_t max_weight = 0;
    for (const auto& row : curve.rows) {
        max_weight = std::max(max_weight, row.weight);
    }
    SyndromeCounter counter(tanner);
    std::vector<std::size_t> order(n);
    for (std::size_t t = 0; t < options.trials; ++t) {
        util::Rng rng(util::trial_seed(options.seed, t));
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Partial Fisher-Yates: only the first max_weight positions are needed.
        for (std::size_t i = 0; i < max_weight; ++i) {
            std::swap(order[i], order[i + rng.below(n - i)]);
        }
        counter.reset();
        std::vector<std::size_t> syndrome_at(max_weight + 1, 0);
        for (std::size_t i = 0; i < max_weight; ++i) {
            counter.add(order[i]);
            syndrome_at[i + 1] = counter.weight();
        }
        for (auto& row : curve.rows) {
            ++row.trials;
            offer(row, syndrome_at[row.weight], order, n);
        }
    }
}

std::vector<std::optional<std::size_t>> bounded_bfs(const std::vector<std::vector<std::size_t>>& adjacency,
                                                    std::size_t source, std::size_t reach) {
    std::vector<std::optional<std::size_t>> dist(adjacency.size());
    dist[source] = 0;
    std::vector<std::size_t> frontier{source};
    for (std::size_t d = 1; d <= reach && !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            for (std::size_t w : adjacency[v]) {
                if (!dist[w]) {
                    dist[w] = d;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

// Sum of up to `span` disjoint pool codewords, each sharing a check with the ones before.
gf2::BitVector grow_cluster(const graph::TannerGraph& tanner, const std::vector<gf2::BitVector>& pool,
                            std::size_t first, std::size_t span, util::Rng& rng) {
    gf2::BitVector cluster = pool[first];
    std::vector<bool> used(pool.size(), false);
    used[first] = true;
    std::vector<bool> touched(tanner.num_checks(), false);
    auto touch = [&](const gf2::BitVector& v) {
        for (std::size_t b : v.support()) {
            for (std::size_t c : tanner.checks_of_bit(b)) {
                touched[c] = true;
            }
        }
    };
    touch(cluster);
    for (std::size_t s = 1; s < span; ++s) {
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i] || !(pool[i] & cluster).is_zero()) {
                continue;
            }
            bool linked = false;
            for (std::size_t b : pool[i].support()) {
                for (std::size_t c : tanner.checks_of_bit(b)) {
                    linked = linked || touched[c];
                }
            }
            if (linked) {
                candidates.push_back(i);
            }
        }
        if (candidates.empty()) {
            break;
        }
        const std::size_t pick = candidates[rng.below(candidates.size())];
        used[pick] = true;
        cluster ^= pool[pick];
        touch(pool[pick]);
    }
    return cluster;
}

void scan_biased(const graph::TannerGraph& tanner, ConfinementCurve& curve, const ConfinementOptions& options,
                 const std::vector<gf2::BitVector>& pool) {
    const std::size_t n = curve.n;
    if (options.radii.empty()) {
        throw std::invalid_argument("confinement_scan: biased mode needs at least one radius");
    }
    // The w nearest codeword bits inside the smallest radius holding at least w of them are
    // also the w nearest inside every larger radius, so the sweep reduces to one search out
    // to the largest radius.
    const std::size_t reach = *std::max_element(options.radii.begin(), options.radii.end());
    const auto adjacency = tanner.unified_adjacency();
    SyndromeCounter counter(tanner);
    for (std::size_t t = 0; t < options.trials; ++t) {
        util::Rng rng(util::trial_seed(options.seed, t));
        const std::size_t base = rng.below(n);
        const auto dist = bounded_bfs(adjacency, base, reach);

        std::vector<std::size_t> reachable;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t b : pool[i].support()) {
                if (dist[b]) {
                    reachable.push_back(i);
                    break;
                }
            }
        }
        for (auto& row : curve.rows) {
            ++row.trials;
        }
        if (reachable.empty()) {
            continue;
        }
        const std::size_t first = reachable[rng.below(reachable.size())];
        const std::size_t span = options.max_span <= 1 ? 1 : 1 + rng.below(options.max_span);
        const gf2::BitVector cluster = grow_cluster(tanner, pool, first, span, rng);

        std::vector<std::pair<std::size_t, std::size_t>> near;
        for (std::size_t b : cluster.support()) {
            if (dist[b]) {
                near.emplace_back(*dist[b], b);
            }
        }
        std::sort(near.begin(), near.end());
        std::vector<std::size_t> order;
        std::vector<std::size_t> syndrome_at(near.size() + 1, 0);
        counter.reset();
        for (const auto& [d, b] : near) {
            counter.add(b);
            order.push_back(b);
            syndrome_at[order.size()] = counter.weight();
        }
        for (auto& row : curve.rows) {
            if (row.weight <= order.size()) {
                offer(row, syndrome_at[row.weight], order, n);
            }
        }
    }
}

}  // namespace

std::vector<gf2::BitVector> minimal_codewords(const codes::ClassicalCode& code, std::size_t limit,
                                              const gf2::MinWeightOptions& options) {
    gf2::MinWeightOptions collect = options;
    collect.collect_minimal = limit;
    gf2::MinWeightResult r = gf2::min_weight_nonzero(code.dense(), collect);
    std::vector<gf2::BitVector> out;
    if (code.has_distances() && code.distance().weight.is_finite()) {
        out.push_back(code.distance().witness);
    }
    for (auto& v : r.minimal) {
        if (out.empty() || (v.weight() == out.front().weight() && std::find(out.begin(), out.end(), v) == out.end())) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

ConfinementCurve confinement_scan(const codes::ClassicalCode& code, const ConfinementOptions& options) {
    ConfinementCurve curve;
    curve.code = code.provenance().construction;
    curve.mode = options.mode;
    curve.n = code.n();
    curve.m = code.m();
    const auto weights = target_weights(options.sparsities, code.n());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        ConfinementRow row;
        row.sparsity = options.sparsities[i];
        row.weight = weights[i];
        curve.rows.push_back(std::move(row));
    }
    const graph::TannerGraph tanner = graph::tanner_from_matrix(code.h());
    if (options.mode == SamplingMode::uniform) {
        scan_uniform(tanner, curve, options);
        return curve;
    }
    std::vector<gf2::BitVector> pool = options.codewords;
    if (pool.empty() && code.has_distances() && code.distance().weight.is_finite()) {
        pool.push_back(code.distance().witness);
    }
    if (pool.empty()) {
        throw std::invalid_argument("confinement_scan: biased mode needs a nonzero codeword");
    }
    for (const auto& v : pool) {
        if (v.size() != code.n() || v.is_zero() || !code.dense().apply(v).is_zero()) {
            throw std::invalid_argument("confinement_scan: biasing vector is not a nonzero codeword");
        }
    }
    scan_biased(tanner, curve, options, pool);
    return curve;
}

ConfinementCurve elementwise_min(const ConfinementCurve& a, const ConfinementCurve& b) {
    if (a.n != b.n || a.m != b.m || a.rows.size() != b.rows.size()) {
        throw std::invalid_argument("elementwise_min: curves describe different scans");
    }
    ConfinementCurve out = a;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].weight != b.rows[i].weight) {
            throw std::invalid_argument("elementwise_min: sparsity grids differ");
        }
        ConfinementRow& row = out.rows[i];
        const ConfinementRow& other = b.rows[i];
        row.trials += other.trials;
        row.feasible += other.feasible;
        if (other.min_syndrome && (!row.min_syndrome || *other.min_syndrome < *row.min_syndrome)) {
            row.min_syndrome = other.min_syndrome;
            row.witness = other.witness;
        }
        if (other.min_nonzero_syndrome &&
            (!row.min_nonzero_syndrome || *other.min_nonzero_syndrome < *row.min_nonzero_syndrome)) {
            row.min_nonzero_syndrome = other.min_nonzero_syndrome;
            row.nonzero_witness = other.nonzero_witness;
        }
    }
    return out;
}

std::size_t count_decreases(const ConfinementCurve& curve, std::size_t tolerance) {
    std::size_t drops = 0;
    std::optional<std::size_t> previous;
    for (const auto& row : curve.rows) {
        if (!row.min_syndrome) {
            continue;
        }
        if (previous && *row.min_syndrome + tolerance < *previous) {
            ++drops;
        }
        previous = row.min_syndrome;
    }
    return drops;
}

ConfinementCurve restrict_weight(const ConfinementCurve& curve, std::size_t max_weight) {
    ConfinementCurve out = curve;
    for (auto& row : out.rows) {
        if (row.weight > max_weight) {
            row.feasible = 0;
            row.min_syndrome.reset();
            row.witness = gf2::BitVector();
            row.min_nonzero_syndrome.reset();
            row.nonzero_witness = gf2::BitVector();
        }
    }
    return out;
}

EnsembleConfinementCurve ensemble_confinement_scan(const EnsembleSpec& spec, std::size_t n, std::size_t graphs,
                                                   const ConfinementOptions& options, std::uint64_t master_seed) {
    if (graphs == 0) {
        throw std::invalid_argument("ensemble_confinement_scan: no graphs requested");
    }
    ConfinementOptions scan = options;
    scan.mode = SamplingMode::uniform;
    EnsembleConfinementCurve out;
    out.ensemble = ensemble_name(spec.kind);
    out.n = n;
    codes::CodeOptions code_options;
    code_options.compute_distances = false;
    for (std::size_t g = 0; g < graphs; ++g) {
        const std::uint64_t seed = util::trial_seed(master_seed, trial_index(n, g));
        out.graph_seeds.push_back(seed);
        const codes::ClassicalCode code = sample_ensemble(spec, n, seed, code_options).code;
        scan.seed = util::trial_seed(seed, 1);
        const ConfinementCurve curve = confinement_scan(code, scan);
        if (out.rows.empty()) {
            for (const auto& row : curve.rows) {
                EnsembleConfinementRow r;
                r.sparsity = row.sparsity;
                r.weight = row.weight;
                r.graphs = graphs;
                r.trials = row.trials;
                r.min_syndrome = code.m() + 1;
                out.rows.push_back(std::move(r));
            }
        }
        for (std::size_t i = 0; i < curve.rows.size(); ++i) {
            const ConfinementRow& row = curve.rows[i];
            EnsembleConfinementRow& r = out.rows[i];
            r.mean_min_density += *row.density(curve.m) / static_cast<double>(graphs);
            if (*row.min_syndrome < r.min_syndrome) {
                r.min_syndrome = *row.min_syndrome;
                r.witness_graph = g;
                r.witness = row.witness;
            }
        }
    }
    return out;
}

std::size_t count_decreases(const EnsembleConfinementCurve& curve) {
    std::size_t drops = 0;
    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
        if (curve.rows[i].mean_min_density < curve.rows[i - 1].mean_min_density) {
            ++drops;
        }
    }
    return drops;
}

// ---------------------------------------------------------------- isolability

IsolabilityReport isolability_check(const codes::ClassicalCode& code) { return isolability_check(code.h()); }

IsolabilityReport isolability_check(const gf2::SparseBitMatrix& h) {
    const std::size_t n = h.cols();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<graph::Edge> edges;
    std::vector<bool> in_graph(n, false);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        const auto& bits = h.row(r);
        if (bits.size() != 2) {
            continue;
        }
        edges.emplace_back(bits[0], bits[1]);
        in_graph[bits[0]] = in_graph[bits[1]] = true;
        const std::size_t a = find(bits[0]);
        const std::size_t b = find(bits[1]);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    IsolabilityReport report;
    report.degree_two_checks = edges.size();
    std::map<std::size_t, IsingComponent> by_root;
    for (std::size_t v = 0; v < n; ++v) {
        if (in_graph[v]) {
            ++by_root[find(v)].size;
        }
    }
    for (const auto& [u, v] : edges) {
        ++by_root[find(u)].edges;
    }
    std::size_t id = 0;
    for (auto& [root, comp] : by_root) {
        comp.id = id++;
        comp.cycle_rank = comp.edges + 1 - comp.size;
        if (comp.cycle_rank >= 2) {
            report.passes = false;
        }
        report.components.push_back(comp);
    }
    return report;
}

// ---------------------------------------------------------------- sectors and distance

SuperselectionReport superselection_count(const codes::CssCode& c) {
    SuperselectionReport r;
    r.k_x_transpose = c.k_x_transpose();
    r.k_z_transpose = c.k_z_transpose();
    r.sector_exponent = c.sector_exponent();
    const auto& p = c.provenance();
    if (p.construction == "hgp" && p.parameters.contains("seed1") && p.parameters.contains("seed2")) {
        const auto& s1 = p.parameters["seed1"];
        const auto& s2 = p.parameters["seed2"];
        const std::size_t k1 = s1["k"], k1t = s1["k_transpose"], k2 = s2["k"], k2t = s2["k_transpose"];
        r.hgp_identity = r.k_x_transpose == k1t * k2 && r.k_z_transpose == k1 * k2t;
    }
    return r;
}

DistanceReport distance_report(const codes::ClassicalCode& code, const gf2::MinWeightOptions& options) {
    gf2::MinWeightResult r = code.has_distances() ? code.distance() : gf2::min_weight_nonzero(code.dense(), options);
    DistanceReport out{r.weight, r.exact, r.witness, "classical", true};
    if (r.weight.is_finite()) {
        out.witness_verified = r.witness.weight() == r.weight.value() && code.dense().apply(r.witness).is_zero();
    }
    return out;
}

DistanceReport distance_report(const codes::CssCode& code, const gf2::MinWeightOptions& options) {
    const codes::QuantumDistance q = code.distance() ? *code.distance() : codes::quantum_distance(code.hx(), code.hz(), options);
    const bool is_x = q.type == codes::LogicalType::x;
    DistanceReport out{q.result.weight, q.result.exact, q.result.witness, is_x ? "X" : "Z", true};
    if (q.result.weight.is_finite()) {
        const gf2::BitMatrix& checks = is_x ? code.hz() : code.hx();
        const gf2::BitMatrix& stabilizers = is_x ? code.hx() : code.hz();
        out.witness_verified = q.result.witness.weight() == q.result.weight.value() &&
                               checks.apply(q.result.witness).is_zero() &&
                               !gf2::RowSpace(stabilizers).contains(q.result.witness);
    }
    return out;
}

// ---------------------------------------------------------------- verdict

void decide(SeedEvidence& e, const VerdictThresholds& t) {
    e.rank_exponent = 0.0;
    const bool positive = !e.mean_k.empty() && std::all_of(e.mean_k.begin(), e.mean_k.end(), [](double k) { return k > 0.0; });
    if (positive && e.sizes.size() >= 2) {
        std::vector<double> x(e.sizes.begin(), e.sizes.end());
        e.rank_exponent = fit_loglog_exponent(x, e.mean_k);
    }
    e.rank_deficient = e.rank_exponent >= t.rank_exponent;

    const auto tolerance = static_cast<std::size_t>(t.drop_tolerance * static_cast<double>(e.curve.m));
    e.decreases = count_decreases(e.curve, tolerance);
    e.first_density.reset();
    e.last_density.reset();
    for (const auto& row : e.curve.rows) {
        if (auto d = row.density(e.curve.m)) {
            if (!e.first_density) {
                e.first_density = d;
            }
            e.last_density = d;
        }
    }
    e.confining = e.first_density && *e.first_density > 0.0 && e.decreases <= t.allowed_decreases &&
                  *e.last_density > t.growth_factor * *e.first_density &&
                  (!e.biased_first || *e.biased_last > *e.biased_first);
    e.isolable = e.isolability.passes;
}

SeedEvidence gather_evidence(const std::string& name, const SeedFamily& family, const EvidenceOptions& options,
                             const VerdictThresholds& t) {
    if (options.sizes.empty() || options.trials_per_size == 0) {
        throw std::invalid_argument("gather_evidence: need at least one size and one trial");
    }
    SeedEvidence e;
    e.name = name;
    std::optional<codes::ClassicalCode> largest;
    for (std::size_t size : options.sizes) {
        double total = 0.0;
        std::size_t n = 0;
        for (std::size_t trial = 0; trial < options.trials_per_size; ++trial) {
            codes::ClassicalCode c = family(size, util::trial_seed(options.seed, trial_index(size, trial)));
            total += static_cast<double>(c.k());
            n = c.n();
            if (size == options.sizes.back() && trial == 0) {
                largest.emplace(std::move(c));
            }
        }
        e.sizes.push_back(n);
        e.mean_k.push_back(total / static_cast<double>(options.trials_per_size));
    }
    ConfinementOptions uniform = options.confinement;
    uniform.mode = SamplingMode::uniform;
    e.curve = confinement_scan(*largest, uniform);
    if (options.confinement.mode == SamplingMode::biased) {
        ConfinementOptions biased = options.confinement;
        if (biased.codewords.empty()) {
            biased.codewords = minimal_codewords(*largest, options.codeword_pool);
        }
        if (!biased.codewords.empty()) {
            // Truncations heavier than d/2 approach a logical operator and leave the regime
            // where confinement is defined.
            const std::size_t d = biased.codewords.front().weight();
            const ConfinementCurve restricted = restrict_weight(confinement_scan(*largest, biased), d / 2);
            for (const auto& row : restricted.rows) {
                if (row.min_syndrome) {
                    if (!e.biased_first) {
                        e.biased_first = row.min_syndrome;
                    }
                    e.biased_last = row.min_syndrome;
                }
            }
            e.curve = elementwise_min(e.curve, restricted);
        }
    }
    e.isolability = isolability_check(*largest);
    decide(e, t);
    return e;
}

std::string fracton_type_name(FractonType t) {
    switch (t) {
        case FractonType::type_one:
            return "type-I";
        case FractonType::type_two:
            return "type-II";
        case FractonType::none:
            break;
    }
    return "none";
}

Verdict fracton_verdict(SeedEvidence seed1, SeedEvidence seed2, const VerdictThresholds& t) {
    decide(seed1, t);
    decide(seed2, t);
    Verdict v;
    auto describe = [&](const SeedEvidence& e) {
        v.reasons.push_back(e.name + ": rank exponent " + std::to_string(e.rank_exponent) +
                            (e.rank_deficient ? " (rank deficient)" : " (not rank deficient)"));
        v.reasons.push_back(e.name + ": " + std::to_string(e.decreases) + " curve drops, density " +
                            (e.first_density ? std::to_string(*e.first_density) : std::string("n/a")) + " -> " +
                            (e.last_density ? std::to_string(*e.last_density) : std::string("n/a")) +
                            (e.confining ? " (confining)" : " (not confining)"));
        v.reasons.push_back(e.name + ": " + std::to_string(e.isolability.degree_two_checks) + " two-bit checks" +
                            (e.isolable ? " (isolable)" : " (not isolable)"));
    };
    describe(seed1);
    describe(seed2);
    const bool both_isolable = seed1.isolable && seed2.isolable;
    auto strong = [](const SeedEvidence& e) { return e.rank_deficient && e.confining; };
    if (both_isolable && strong(seed1) && strong(seed2)) {
        v.type = FractonType::type_two;
    } else if (both_isolable && (strong(seed1) || strong(seed2))) {
        v.type = FractonType::type_one;
    }
    v.seed1 = std::move(seed1);
    v.seed2 = std::move(seed2);
    return v;
}

}  // namespace fracton::diagnostics
