#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "fracton/gf2/distance.hpp"
#include "fracton/gf2/io.hpp"
#include "fracton/gf2/linalg.hpp"

using namespace fracton;
using gf2::BitMatrix;
using gf2::BitVector;

TEST_SUITE("gf2") {
    TEST_CASE("bit vector basics") {
        BitVector v(130);
        v.set(0);
        v.set(64);
        v.set(129);
        CHECK(v.weight() == 3);
        CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
        v.flip(64);
        CHECK(v.weight() == 2);
        const BitVector ones = BitVector::ones(130);
        CHECK(ones.weight() == 130);
        CHECK((ones ^ ones).is_zero());
        CHECK(v.dot(ones) == false);
        const std::vector<std::size_t> sup = {3, 5};
        CHECK(BitVector::from_support(8, sup).support() == sup);
    }

    TEST_CASE("rank and kernel agree with enumeration") {
        util::Rng rng(11);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t rows = 1 + rng.below(10);
            const std::size_t cols = 1 + rng.below(12);
            const BitMatrix m = oracle::random_matrix(rows, cols, 0.35, rng);
            const std::size_t r = gf2::rank(m);
            CHECK(r == oracle::rank(m));
            CHECK(r == gf2::rank(gf2::SparseBitMatrix::from_dense(m)));
            CHECK(r == gf2::rank(gf2::transpose(m)));

            const auto kernel = gf2::kernel_basis(m);
            CHECK(kernel.size() == cols - r);
            for (const auto& v : kernel) {
                CHECK(m.apply(v).is_zero());
            }
            if (!kernel.empty()) {
                CHECK(gf2::rank(BitMatrix::from_rows(cols, kernel)) == kernel.size());
            }
            const auto cokernel = gf2::cokernel_basis(m);
            CHECK(cokernel.size() == rows - r);
            for (const auto& y : cokernel) {
                CHECK(m.apply_left(y).is_zero());
            }
        }
    }

    TEST_CASE("rref is reduced") {
        util::Rng rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const BitMatrix m = oracle::random_matrix(7, 9, 0.4, rng);
            const gf2::Echelon e = gf2::rref(m);
            CHECK(e.rows.rows() == e.rank());
            for (std::size_t i = 0; i < e.rank(); ++i) {
                for (std::size_t j = 0; j < e.rank(); ++j) {
                    CHECK(e.rows.get(j, e.pivots[i]) == (i == j));
                }
                if (i > 0) {
                    CHECK(e.pivots[i] > e.pivots[i - 1]);
                }
            }
            // Same row space as the input.
            for (std::size_t r = 0; r < m.rows(); ++r) {
                CHECK(gf2::RowSpace(e.rows).contains(m.row(r)));
            }
        }
    }

    TEST_CASE("solve and row-space membership agree with enumeration") {
        util::Rng rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const BitMatrix m = oracle::random_matrix(6, 8, 0.3, rng);
            const gf2::RowSpace space(m);
            for (const auto& v : oracle::all_vectors(8)) {
                CHECK(space.contains(v) == oracle::in_span(m, v));
            }
            const BitMatrix t = gf2::transpose(m);
            for (const auto& s : oracle::all_vectors(6)) {
                const auto e = gf2::solve(m, s);
                CHECK(e.has_value() == oracle::in_span(t, s));
                if (e) {
                    CHECK(m.apply(*e) == s);
                }
            }
        }
    }

    TEST_CASE("products and concatenation match direct formulas") {
        util::Rng rng(3);
        const BitMatrix a = oracle::random_matrix(4, 5, 0.5, rng);
        const BitMatrix b = oracle::random_matrix(5, 3, 0.5, rng);
        CHECK(gf2::matmul(a, b) == oracle::naive_product(a, b));
        CHECK(gf2::transpose(gf2::transpose(a)) == a);
        const BitMatrix k = gf2::kronecker(a, b);
        REQUIRE(k.rows() == 20);
        REQUIRE(k.cols() == 15);
        for (std::size_t i = 0; i < 20; ++i) {
            for (std::size_t j = 0; j < 15; ++j) {
                CHECK(k.get(i, j) == (a.get(i / 5, j / 3) && b.get(i % 5, j % 3)));
            }
        }
        const BitMatrix c = oracle::random_matrix(4, 3, 0.5, rng);
        const BitMatrix h = gf2::hconcat({a, c});
        CHECK(h.cols() == 8);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(h.get(2, 5 + j) == c.get(2, j));
        }
        const BitMatrix v = gf2::vconcat({a, a});
        CHECK(gf2::add(v.select_rows({0, 1, 2, 3}), v.select_rows({4, 5, 6, 7})).is_zero());
    }

    TEST_CASE("minimum weight matches enumeration") {
        util::Rng rng(13);
        int with_codewords = 0;
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t cols = 4 + rng.below(10);
            const BitMatrix m = oracle::random_matrix(1 + rng.below(cols), cols, 0.4, rng);
            const auto expected = oracle::min_weight(m);
            const auto got = gf2::min_weight_nonzero(m);
            CHECK(got.exact);
            if (!expected) {
                CHECK_FALSE(got.weight.is_finite());
                continue;
            }
            ++with_codewords;
            REQUIRE(got.weight.is_finite());
            CHECK(got.weight.value() == *expected);
            CHECK(got.witness.weight() == *expected);
            CHECK(m.apply(got.witness).is_zero());
        }
        CHECK(with_codewords > 40);
    }

    TEST_CASE("minimum weight outside a row space matches enumeration") {
        util::Rng rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const BitMatrix m = oracle::random_matrix(3, 9, 0.4, rng);
            // Exclude a random subspace of ker(m).
            const auto kernel = gf2::kernel_basis(m);
            std::vector<BitVector> some;
            for (const auto& v : kernel) {
                if (rng.below(2) == 0) {
                    some.push_back(v);
                }
            }
            const BitMatrix exclude = some.empty() ? BitMatrix(0, 9) : BitMatrix::from_rows(9, some);
            const auto expected = oracle::min_weight(m, exclude);
            const auto got = gf2::min_weight_nonzero(m, exclude);
            if (!expected) {
                CHECK_FALSE(got.weight.is_finite());
                continue;
            }
            REQUIRE(got.weight.is_finite());
            CHECK(got.weight.value() == *expected);
            CHECK_FALSE(gf2::RowSpace(exclude).contains(got.witness));
        }
    }

    TEST_CASE("collected minimal vectors are every minimum-weight codeword") {
        util::Rng rng(19);
        for (int trial = 0; trial < 30; ++trial) {
            const BitMatrix m = oracle::random_matrix(4, 11, 0.3, rng);
            gf2::MinWeightOptions o;
            o.collect_minimal = 1000;
            const auto got = gf2::min_weight_nonzero(m, o);
            if (!got.weight.is_finite()) {
                continue;
            }
            std::size_t count = 0;
            for (const auto& v : oracle::kernel(m)) {
                count += (v.weight() == got.weight.value()) ? 1 : 0;
            }
            CHECK(got.minimal.size() == count);
            CHECK(std::is_sorted(got.minimal.begin(), got.minimal.end(), gf2::support_less));
            CHECK(got.witness == got.minimal.front());
        }
    }

    TEST_CASE("information-set search returns a valid upper bound") {
        util::Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const BitMatrix m = oracle::random_matrix(5, 14, 0.3, rng);
            const auto exact = gf2::min_weight_nonzero(m);
            gf2::MinWeightOptions o;
            o.exhaustive_threshold = 0;
            o.iterations = 200;
            const auto bound = gf2::min_weight_nonzero(m, o);
            if (!exact.weight.is_finite()) {
                continue;
            }
            CHECK_FALSE(bound.exact);
            REQUIRE(bound.weight.is_finite());
            CHECK(bound.weight.value() >= exact.weight.value());
            CHECK(m.apply(bound.witness).is_zero());
            CHECK(bound.witness.weight() == bound.weight.value());
        }
    }

    TEST_CASE("matrix text format round-trips and rejects malformed input") {
        util::Rng rng(29);
        const auto m = gf2::SparseBitMatrix::from_dense(oracle::random_matrix(6, 10, 0.3, rng));
        CHECK(gf2::matrix_from_string(gf2::matrix_to_string(m)) == m);
        CHECK(gf2::matrix_from_string("2 3\n0 2\n\n").to_dense().count_ones() == 2);
        CHECK_THROWS(gf2::matrix_from_string("2 3\n0 5\n\n"));
        CHECK_THROWS(gf2::matrix_from_string("2 3\n0 1\n"));
        CHECK_THROWS(gf2::matrix_from_string("x y\n"));
        CHECK(gf2::support_to_string(BitVector::from_support(8, std::vector<std::size_t>{1, 4})) == "1 4");
    }
}
