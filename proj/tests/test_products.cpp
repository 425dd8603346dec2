#include "doctest.h"
#include "oracles.hpp"

#include "fracton/codes/products.hpp"
#include "fracton/codes/seed_codes.hpp"
#include "fracton/gf2/linalg.hpp"

using namespace fracton;
using namespace fracton::codes;
using gf2::BitMatrix;

namespace {

ClassicalCode from_dense(const BitMatrix& h) {
    return ClassicalCode(gf2::SparseBitMatrix::from_dense(h), Provenance{"test", {}, std::nullopt});
}

bool commutes_by_hand(const CssCode& c) {
    return oracle::naive_product(c.hx(), gf2::transpose(c.hz())).is_zero();
}

/// Brute-force quantum distance: lightest X or Z logical.
std::optional<std::size_t> brute_quantum_distance(const CssCode& c) {
    const auto dx = oracle::min_weight(c.hz(), c.hx());
    const auto dz = oracle::min_weight(c.hx(), c.hz());
    if (!dx) {
        return dz;
    }
    if (!dz) {
        return dx;
    }
    return std::min(*dx, *dz);
}

PolynomialF2 random_poly(std::size_t dimension, std::size_t period, util::Rng& rng) {
    PolynomialF2 f(dimension, period);
    for (std::size_t i = 0; i < f.group_order(); ++i) {
        if (rng.below(3) == 0) {
            f.toggle(f.monomial_at(i));
        }
    }
    return f;
}

}  // namespace

TEST_SUITE("products") {
    TEST_CASE("toric codes from cyclic repetition codes") {
        for (std::size_t n = 3; n <= 5; ++n) {
            const auto rep = repetition_code(n, Topology::cyclic);
            CssOptions o;
            o.compute_distance = true;
            const auto toric = hgp(rep, rep, o);
            CHECK(toric.n() == 2 * n * n);
            CHECK(toric.k() == 2);
            REQUIRE(toric.distance().has_value());
            CHECK(toric.distance()->result.weight.value() == n);
            CHECK(toric.distance()->result.exact);
            CHECK(toric.k_x_transpose() == 1);
            CHECK(toric.k_z_transpose() == 1);
            const auto p = predicted_hgp_params(rep, rep);
            CHECK(p.n_q == toric.n());
            CHECK(p.k_q == toric.k());
            CHECK(p.d_q.value() == n);
            CHECK(p.d_exact);
        }
    }

    TEST_CASE("toric quantum distance matches enumeration") {
        const auto rep = repetition_code(3, Topology::cyclic);
        const auto toric = hgp(rep, rep);
        const auto q = quantum_distance(toric.hx(), toric.hz());
        CHECK(brute_quantum_distance(toric) == q.result.weight.value());
        CHECK(q.result.weight.value() == 3);
        const auto open = repetition_code(3, Topology::open);
        const auto planar = hgp(open, open);
        CHECK(planar.n() == 9 + 4);
        CHECK(planar.k() == 1);
        CHECK(brute_quantum_distance(planar) == quantum_distance(planar.hx(), planar.hz()).result.weight.value());
    }

    TEST_CASE("hypergraph product identities on random seeds") {
        util::Rng rng(2024);
        int compared = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n1 = 2 + rng.below(3), m1 = 1 + rng.below(3);
            const std::size_t n2 = 2 + rng.below(3), m2 = 1 + rng.below(3);
            const auto h1 = oracle::random_matrix(m1, n1, 0.5, rng);
            const auto h2 = oracle::random_matrix(m2, n2, 0.5, rng);
            const auto c1 = from_dense(h1);
            const auto c2 = from_dense(h2);
            const auto q = hgp(c1, c2);
            CAPTURE(trial);
            CHECK(commutes_by_hand(q));
            CHECK(q.n() == n1 * n2 + m1 * m2);

            const std::size_t k1 = oracle::kernel_dim(h1), k2 = oracle::kernel_dim(h2);
            const std::size_t k1t = oracle::kernel_dim(gf2::transpose(h1));
            const std::size_t k2t = oracle::kernel_dim(gf2::transpose(h2));
            CHECK(q.k() == k1 * k2 + k1t * k2t);
            CHECK(q.k_x_transpose() == k1t * k2);
            CHECK(q.k_z_transpose() == k1 * k2t);

            const auto p = predicted_hgp_params(c1, c2);
            CHECK(p.k_q == q.k());
            CHECK(p.k_x_transpose == q.k_x_transpose());
            CHECK(p.k_z_transpose == q.k_z_transpose());
            // The plain four-way minimum is the product distance when all four seed spaces
            // are nontrivial; degenerate cases are outside the formula's scope.
            if (q.n() <= 20 && k1 > 0 && k2 > 0 && k1t > 0 && k2t > 0) {
                ++compared;
                const auto brute = brute_quantum_distance(q);
                REQUIRE(brute.has_value());
                CHECK(p.d_q.value() == *brute);
            }
        }
        CHECK(compared >= 5);
    }

    TEST_CASE("every constructor yields commuting checks") {
        util::Rng rng(5);
        const auto rep = repetition_code(3, Topology::cyclic);
        const auto open = repetition_code(4, Topology::open);
        CHECK(commutes_by_hand(hgp(rep, open)));
        CHECK(commutes_by_hand(threefold_product(rep, open, rep)));
        CHECK(commutes_by_hand(haah_code(2)));
        CHECK(commutes_by_hand(checkerboard(2)));
        CHECK(commutes_by_hand(color_code_lp(3)));
        CHECK(commutes_by_hand(sierpinski_prism(2)));
        CHECK(commutes_by_hand(xcube(2)));
        for (int trial = 0; trial < 10; ++trial) {
            Protograph a(2, 3, 1, 3), b(1, 2, 1, 3);
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 3; ++c) {
                    a.set(r, c, random_poly(1, 3, rng));
                }
            }
            b.set(0, 0, random_poly(1, 3, rng));
            b.set(0, 1, random_poly(1, 3, rng));
            CHECK(commutes_by_hand(lifted_product(a, b)));
            CHECK(commutes_by_hand(hgp_fsl(random_poly(2, 2, rng), random_poly(2, 2, rng))));
        }
        CHECK_THROWS_AS(CssCode(BitMatrix::identity(3), BitMatrix::identity(3), Provenance{}), std::logic_error);
    }

    TEST_CASE("threefold product chain condition and sizes") {
        util::Rng rng(77);
        for (int trial = 0; trial < 10; ++trial) {
            const auto c1 = from_dense(oracle::random_matrix(2, 3, 0.5, rng));
            const auto c2 = from_dense(oracle::random_matrix(2, 2, 0.5, rng));
            const auto c3 = from_dense(oracle::random_matrix(1, 3, 0.6, rng));
            const auto q = threefold_product(c1, c2, c3);
            CHECK(commutes_by_hand(q));
            CHECK(q.n() == 3 * 2 * 1 + 2 * 2 * 1 + 2 * 2 * 3);
            CHECK(q.hx().rows() == 3 * 2 * 3);
        }
    }

    TEST_CASE("Haah and X-cube parameters") {
        const auto h2 = haah_code(2);
        CHECK(h2.n() == 16);
        CHECK(h2.hx().rows() == 8);
        CHECK(h2.k() == 6);
        CHECK(haah_code(3).k() == 2);
        for (std::size_t L = 2; L <= 3; ++L) {
            const auto x = xcube(L);
            CHECK(x.n() == 3 * L * L * L);
            CHECK(x.k() == 6 * L - 3);
        }
        const auto x2 = xcube(2);
        CHECK(x2.k_x_transpose() == 4);
        CHECK(x2.k_z_transpose() == 13);
        CHECK(checkerboard(2).n() == 16);
    }

    TEST_CASE("circulants are a ring homomorphism") {
        util::Rng rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t dim = 1 + rng.below(3);
            const std::size_t L = 2 + rng.below(2);
            const auto f = random_poly(dim, L, rng);
            const auto g = random_poly(dim, L, rng);
            CHECK(poly_to_circulant(f * g) == oracle::naive_product(poly_to_circulant(f), poly_to_circulant(g)));
            CHECK(poly_to_circulant(f + g).row_vectors() == [&] {
                auto m = poly_to_circulant(f);
                const auto n = poly_to_circulant(g);
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    m.row(r) ^= n.row(r);
                }
                return m.row_vectors();
            }());
            CHECK(poly_to_circulant(f.conjugate()) == gf2::transpose(poly_to_circulant(f)));
            CHECK(f * g == g * f);
        }
        const auto f = PolynomialF2::parse("1+x+x", 1, 4);
        CHECK(f == PolynomialF2::one(1, 4));
        CHECK(PolynomialF2::parse("x^2y", 2, 3).to_string() == "x^2y");
        CHECK_THROWS(PolynomialF2::parse("1+q", 2, 3));
    }

    TEST_CASE("lifted product of 1x1 protographs is the fsl map") {
        const auto f = PolynomialF2::parse("1+x+y", 2, 3);
        const auto g = PolynomialF2::parse("1+xy", 2, 3);
        const auto lp = lifted_product(Protograph::single(f), Protograph::single(g.conjugate()));
        const auto fsl = hgp_fsl(f, g);
        CHECK(lp.hx() == fsl.hx());
        CHECK(lp.hz() == fsl.hz());
    }
}
