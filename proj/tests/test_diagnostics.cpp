#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "fracton/codes/products.hpp"
#include "fracton/codes/seed_codes.hpp"
#include "fracton/diagnostics/diagnostics.hpp"
#include "fracton/graph/graph.hpp"

using namespace fracton;
using namespace fracton::codes;
using namespace fracton::diagnostics;

namespace {

CodeOptions no_distance() {
    CodeOptions o;
    o.compute_distances = false;
    return o;
}

ConfinementOptions small_scan(SamplingMode mode, std::size_t trials) {
    ConfinementOptions o;
    o.mode = mode;
    o.trials = trials;
    o.sparsities = {0.02, 0.05, 0.1, 0.2};
    return o;
}

void check_witnesses(const ClassicalCode& code, const ConfinementCurve& curve) {
    for (const auto& row : curve.rows) {
        if (!row.min_syndrome) {
            CHECK(row.feasible == 0);
            continue;
        }
        CHECK(row.witness.weight() == row.weight);
        CHECK(code.dense().apply(row.witness).weight() == *row.min_syndrome);
        if (row.min_nonzero_syndrome) {
            CHECK(row.nonzero_witness.weight() == row.weight);
            CHECK(code.dense().apply(row.nonzero_witness).weight() == *row.min_nonzero_syndrome);
            CHECK(*row.min_nonzero_syndrome > 0);
        }
    }
}

SeedEvidence synthetic(std::vector<double> mean_k, std::vector<std::size_t> syndromes, std::size_t m, bool isolable) {
    SeedEvidence e;
    e.name = "synthetic";
    for (std::size_t i = 0; i < mean_k.size(); ++i) {
        e.sizes.push_back(100 * (i + 1));
    }
    e.mean_k = std::move(mean_k);
    e.curve.m = m;
    for (std::size_t s : syndromes) {
        ConfinementRow row;
        row.min_syndrome = s;
        row.feasible = 1;
        e.curve.rows.push_back(row);
    }
    e.isolability.passes = isolable;
    decide(e);
    return e;
}

}  // namespace

TEST_SUITE("diagnostics") {
    TEST_CASE("rank scan is deterministic and independent of the size list") {
        const EnsembleSpec spec{Ensemble::typical_ldpc};
        const auto a = rank_deficiency_scan(spec, {40, 80}, 4, 11);
        const auto b = rank_deficiency_scan(spec, {40, 80}, 4, 11);
        const auto c = rank_deficiency_scan(spec, {80}, 4, 11);
        REQUIRE(a.size() == 8);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].k == b[i].k);
            CHECK(a[i].seed == b[i].seed);
        }
        for (std::size_t t = 0; t < 4; ++t) {
            CHECK(c[t].n == 80);
            CHECK(c[t].seed == a[4 + t].seed);
            CHECK(c[t].k == a[4 + t].k);
            CHECK(c[t].seed == util::trial_seed(11, trial_index(80, t)));
            const auto code = sample_ensemble(spec, 80, c[t].seed, no_distance()).code;
            CHECK(code.k() == c[t].k);
            CHECK(code.k_transpose() == c[t].k_transpose);
            // Rank-nullity for an m x n matrix with m = 3n/4.
            CHECK(c[t].k - c[t].k_transpose == 80 - 60);
        }
        const auto summary = summarize(a);
        REQUIRE(summary.size() == 2);
        double total = 0;
        for (std::size_t t = 0; t < 4; ++t) {
            total += static_cast<double>(a[t].k);
        }
        CHECK(summary[0].mean_k == doctest::Approx(total / 4));
        CHECK(summary[0].min_k <= summary[0].max_k);
        const auto laplacian = rank_deficiency_scan({Ensemble::laplacian}, {50}, 3, 2);
        for (const auto& r : laplacian) {
            CHECK(r.k == r.k_transpose);
            CHECK(r.k >= 1);
        }
    }

    TEST_CASE("slope fits") {
        CHECK(fit_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
        CHECK(fit_loglog_exponent({10, 100, 1000}, {3, 30, 300}) == doctest::Approx(1.0));
        CHECK(fit_loglog_exponent({4, 16}, {2, 4}) == doctest::Approx(0.5));
        CHECK_THROWS_AS(fit_slope({1}, {1}), std::invalid_argument);
        CHECK_THROWS_AS(fit_loglog_exponent({1, 2}, {0, 1}), std::invalid_argument);
    }

    TEST_CASE("uniform confinement witnesses reproduce their syndromes") {
        const auto code = sample_ensemble({Ensemble::typical_ldpc}, 120, 3).code;
        const auto curve = confinement_scan(code, small_scan(SamplingMode::uniform, 200));
        REQUIRE(curve.rows.size() == 4);
        CHECK(curve.rows[0].weight == 2);
        CHECK(curve.rows[3].weight == 24);
        for (const auto& row : curve.rows) {
            CHECK(row.feasible == 200);
        }
        check_witnesses(code, curve);
        const auto again = confinement_scan(code, small_scan(SamplingMode::uniform, 200));
        for (std::size_t i = 0; i < curve.rows.size(); ++i) {
            CHECK(curve.rows[i].min_syndrome == again.rows[i].min_syndrome);
            CHECK(curve.rows[i].witness == again.rows[i].witness);
        }
    }

    TEST_CASE("biased sampling needs a codeword") {
        const ClassicalCode full(gf2::SparseBitMatrix::from_dense(gf2::BitMatrix::identity(6)), Provenance{"identity", {}, std::nullopt});
        CHECK_THROWS_AS(confinement_scan(full, small_scan(SamplingMode::biased, 10)), std::invalid_argument);
        const auto rep = repetition_code(8, Topology::cyclic);
        auto o = small_scan(SamplingMode::biased, 10);
        o.codewords = {gf2::BitVector(8)};
        CHECK_THROWS_AS(confinement_scan(rep, o), std::invalid_argument);
        o.codewords = {gf2::BitVector::from_support(8, std::vector<std::size_t>{0, 1})};
        CHECK_THROWS_AS(confinement_scan(rep, o), std::invalid_argument);
    }

    TEST_CASE("biased sampling finds the square-lattice string operators") {
        const auto code = laplacian_code(graph::torus_grid(12, 12));
        CHECK(code.k() == 24);
        const auto pool = minimal_codewords(code, 16);
        REQUIRE_FALSE(pool.empty());
        for (const auto& w : pool) {
            CHECK(w.weight() == pool.front().weight());
            CHECK(code.dense().apply(w).is_zero());
        }
        auto o = small_scan(SamplingMode::biased, 300);
        o.codewords = pool;
        o.sparsities = {0.03, 0.05, 0.07};
        const auto biased = confinement_scan(code, o);
        const auto uniform = confinement_scan(code, small_scan(SamplingMode::uniform, 300));
        check_witnesses(code, biased);
        for (const auto& row : biased.rows) {
            REQUIRE(row.min_nonzero_syndrome.has_value());
            // A truncated diagonal string violates only the checks at its two ends.
            CHECK(*row.min_nonzero_syndrome <= 4);
        }
        const auto merged = elementwise_min(uniform, uniform);
        CHECK(merged.rows.size() == uniform.rows.size());
        // Uniform errors of the same weight are far from string-like.
        CHECK(*uniform.rows.back().min_syndrome > 4);
    }

    TEST_CASE("curve utilities") {
        ConfinementCurve c;
        c.m = 100;
        for (std::size_t s : {4, 8, 7, 12, 3, 20}) {
            ConfinementRow row;
            row.min_syndrome = s;
            row.weight = c.rows.size() + 1;
            c.rows.push_back(row);
        }
        CHECK(count_decreases(c) == 2);
        CHECK(count_decreases(c, 1) == 1);
        CHECK(count_decreases(c, 9) == 0);
        const auto r = restrict_weight(c, 3);
        CHECK(r.rows[2].min_syndrome.has_value());
        CHECK_FALSE(r.rows[3].min_syndrome.has_value());
        CHECK(count_decreases(r) == 1);
        CHECK(*c.rows[0].density(100) == doctest::Approx(0.04));
    }

    TEST_CASE("ensemble confinement is deterministic") {
        ConfinementOptions o = small_scan(SamplingMode::uniform, 50);
        const EnsembleSpec spec{Ensemble::laplacian};
        const auto a = ensemble_confinement_scan(spec, 60, 5, o, 7);
        const auto b = ensemble_confinement_scan(spec, 60, 5, o, 7);
        REQUIRE(a.rows.size() == 4);
        CHECK(a.graph_seeds == b.graph_seeds);
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            CHECK(a.rows[i].mean_min_density == b.rows[i].mean_min_density);
            CHECK(a.rows[i].witness == b.rows[i].witness);
            CHECK(a.rows[i].graphs == 5);
            const auto code = sample_ensemble(spec, 60, a.graph_seeds[a.rows[i].witness_graph], no_distance()).code;
            CHECK(code.dense().apply(a.rows[i].witness).weight() == a.rows[i].min_syndrome);
        }
        CHECK(count_decreases(a) <= a.rows.size());
        CHECK_THROWS_AS(ensemble_confinement_scan(spec, 60, 0, o, 7), std::invalid_argument);
    }

    TEST_CASE("isolability") {
        const auto rep = isolability_check(repetition_code(8, Topology::cyclic));
        CHECK(rep.passes);
        CHECK(rep.degree_two_checks == 8);
        REQUIRE(rep.components.size() == 1);
        CHECK(rep.components[0].cycle_rank == 1);

        const auto ising = isolability_check(ising_code(graph::torus_grid(4, 4), no_distance()));
        CHECK_FALSE(ising.passes);
        CHECK(ising.components[0].cycle_rank == 17);

        const auto open = isolability_check(repetition_code(5, Topology::open));
        CHECK(open.passes);
        CHECK(open.components[0].cycle_rank == 0);

        std::size_t failures = 0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto code = sample_ensemble({Ensemble::typical_ldpc}, 100, util::trial_seed(99, s), no_distance()).code;
            failures += isolability_check(code).passes ? 0 : 1;
        }
        CHECK(failures == 0);
    }

    TEST_CASE("superselection sectors") {
        const auto rep = repetition_code(4, Topology::cyclic);
        const auto toric = superselection_count(hgp(rep, rep));
        CHECK(toric.k_x_transpose == 1);
        CHECK(toric.k_z_transpose == 1);
        CHECK(toric.sector_exponent == 2);
        CHECK(hgp(rep, rep).sector_count() == 4u);
        REQUIRE(toric.hgp_identity.has_value());
        CHECK(*toric.hgp_identity);

        const auto open = repetition_code(4, Topology::open);
        const auto planar = superselection_count(hgp(open, open));
        CHECK(planar.sector_exponent == 0);
        CHECK(hgp(open, open).sector_count() == 1u);

        PinwheelOptions po;
        po.run_boundary_guard = false;
        po.code = no_distance();
        const auto pin = pinwheel_code(3, 7, po).code;
        const auto mixed = superselection_count(hgp(pin, repetition_code(8, Topology::cyclic, no_distance())));
        REQUIRE(mixed.hgp_identity.has_value());
        CHECK(*mixed.hgp_identity);
        CHECK(mixed.k_x_transpose == pin.k_transpose() * 1);
        CHECK(mixed.k_z_transpose == pin.k() * 1);
        CHECK_FALSE(superselection_count(xcube(2)).hgp_identity.has_value());
    }

    TEST_CASE("distance reports") {
        const auto r7 = distance_report(repetition_code(7, Topology::cyclic));
        CHECK(r7.d.value() == 7);
        CHECK(r7.exact);
        CHECK(r7.witness_verified);
        CHECK(r7.kind == "classical");

        const auto rep = repetition_code(4, Topology::cyclic);
        const auto toric = distance_report(hgp(rep, rep));
        CHECK(toric.d.value() == 4);
        CHECK(toric.exact);
        CHECK(toric.witness_verified);

        PinwheelOptions po;
        po.run_boundary_guard = false;
        const auto pin = distance_report(pinwheel_code(4, 7, po).code);
        CHECK(pin.d.value() == 352);
        CHECK(pin.witness_verified);
    }

    TEST_CASE("verdict rules") {
        const auto flat = synthetic({5, 5, 5}, {2, 2, 2, 2}, 100, true);
        const auto deficient = synthetic({10, 20, 30}, {2, 5, 9, 14}, 100, true);
        const auto noisy = synthetic({10, 20, 30}, {2, 12, 3, 14, 4, 20}, 100, true);
        const auto tangled = synthetic({10, 20, 30}, {2, 5, 9, 14}, 100, false);
        CHECK_FALSE(flat.rank_deficient);
        CHECK_FALSE(flat.confining);
        CHECK(deficient.rank_deficient);
        CHECK(deficient.confining);
        CHECK_FALSE(noisy.confining);
        CHECK(fracton_verdict(deficient, deficient).type == FractonType::type_two);
        CHECK(fracton_verdict(flat, deficient).type == FractonType::type_one);
        CHECK(fracton_verdict(flat, flat).type == FractonType::none);
        CHECK(fracton_verdict(deficient, tangled).type == FractonType::none);
        CHECK(fracton_type_name(FractonType::type_two) == "type-II");
    }

    TEST_CASE("verdicts on the reference seed pairs") {
        EvidenceOptions o;
        o.sizes = {100, 200, 300};
        o.confinement.mode = SamplingMode::biased;
        o.confinement.trials = 300;
        const SeedFamily rep = [](std::size_t n, std::uint64_t) {
            return repetition_code(n, Topology::cyclic, no_distance());
        };
        const SeedFamily ldpc = [](std::size_t n, std::uint64_t seed) {
            return sample_ensemble({Ensemble::typical_ldpc}, n, seed, no_distance()).code;
        };
        const SeedFamily lap = [](std::size_t n, std::uint64_t seed) {
            return sample_ensemble({Ensemble::laplacian}, n, seed, no_distance()).code;
        };
        o.trials_per_size = 1;
        const auto rep_e = gather_evidence("repetition", rep, o);
        o.trials_per_size = 3;
        const auto ldpc_e = gather_evidence("typical-ldpc", ldpc, o);
        const auto lap_e = gather_evidence("laplacian", lap, o);
        CHECK(rep_e.isolable);
        CHECK_FALSE(rep_e.rank_deficient);
        CHECK(ldpc_e.rank_deficient);
        CHECK(ldpc_e.confining);
        CHECK(fracton_verdict(rep_e, ldpc_e).type == FractonType::type_one);
        CHECK(fracton_verdict(rep_e, lap_e).type == FractonType::none);
    }
}
