#include "fracton/codes/products.hpp"

#include <algorithm>
#include <stdexcept>

#include "fracton/gf2/linalg.hpp"

namespace fracton::codes {

namespace {

using gf2::BitMatrix;

BitMatrix eye(std::size_t n) { return BitMatrix::identity(n); }

BitMatrix kron3(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    return gf2::kronecker(gf2::kronecker(a, b), c);
}

nlohmann::json seed_summary(const ClassicalCode& c) {
    return {{"construction", c.provenance().construction},
            {"parameters", c.provenance().parameters},
            {"n", c.n()},
            {"m", c.m()},
            {"k", c.k()},
            {"k_transpose", c.k_transpose()}};
}

}  // namespace

CssCode hgp(const ClassicalCode& c1, const ClassicalCode& c2, const CssOptions& options) {
    const BitMatrix& h1 = c1.dense();
    const BitMatrix& h2 = c2.dense();
    BitMatrix hx = gf2::hconcat({gf2::kronecker(h1, eye(c2.n())), gf2::kronecker(eye(c1.m()), gf2::transpose(h2))});
    BitMatrix hz = gf2::hconcat({gf2::kronecker(eye(c1.n()), h2), gf2::kronecker(gf2::transpose(h1), eye(c2.m()))});
    Provenance p{"hgp", {{"seed1", seed_summary(c1)}, {"seed2", seed_summary(c2)}}, std::nullopt};
    return CssCode(std::move(hx), std::move(hz), std::move(p), options);
}

PredictedParams predicted_hgp_params(const ClassicalCode& c1, const ClassicalCode& c2) {
    PredictedParams out;
    out.n_q = c1.n() * c2.n() + c1.m() * c2.m();
    out.k_q = c1.k() * c2.k() + c1.k_transpose() * c2.k_transpose();
    out.k_x_transpose = c1.k_transpose() * c2.k();
    out.k_z_transpose = c1.k() * c2.k_transpose();
    if (c1.has_distances() && c2.has_distances()) {
        out.d_q = std::min({c1.distance().weight, c2.distance().weight, c1.distance_transpose().weight,
                            c2.distance_transpose().weight});
        out.d_exact = c1.distance().exact && c2.distance().exact && c1.distance_transpose().exact &&
                      c2.distance_transpose().exact;
    }
    return out;
}

CssCode lifted_product(const Protograph& a, const Protograph& b, const CssOptions& options) {
    if (a.dimension() != b.dimension() || a.period() != b.period()) {
        throw std::invalid_argument("lifted_product: protographs live in different rings");
    }
    const std::size_t d = a.dimension();
    const std::size_t period = a.period();
    const Protograph hx = hconcat(kronecker(a, Protograph::identity(b.cols(), d, period)),
                                  kronecker(Protograph::identity(a.rows(), d, period), b.conjugate_transpose()));
    const Protograph hz = hconcat(kronecker(Protograph::identity(a.cols(), d, period), b),
                                  kronecker(a.conjugate_transpose(), Protograph::identity(b.rows(), d, period)));
    nlohmann::json params = {{"D", d}, {"L", period}};
    if (a.rows() == 1 && a.cols() == 1 && b.rows() == 1 && b.cols() == 1) {
        params["a"] = a.at(0, 0).to_string();
        params["b"] = b.at(0, 0).to_string();
    }
    Provenance p{"lifted-product", std::move(params), std::nullopt};
    return CssCode(hx.expand(), hz.expand(), std::move(p), options);
}

CssCode hgp_fsl(const PolynomialF2& f, const PolynomialF2& g, const CssOptions& options) {
    return lifted_product(Protograph::single(f), Protograph::single(g.conjugate()), options);
}

CssCode threefold_product(const ClassicalCode& c1, const ClassicalCode& c2, const ClassicalCode& c3,
                          const CssOptions& options) {
    const BitMatrix t1 = gf2::transpose(c1.dense());
    const BitMatrix t2 = gf2::transpose(c2.dense());
    const BitMatrix t3 = gf2::transpose(c3.dense());
    const std::size_t n1 = c1.n(), n2 = c2.n(), n3 = c3.n();
    const std::size_t m1 = c1.m(), m2 = c2.m(), m3 = c3.m();

    BitMatrix d1 = gf2::hconcat({kron3(eye(n1), t2, t3), kron3(t1, eye(n2), t3), kron3(t1, t2, eye(n3))});

    const BitMatrix a = kron3(t1, eye(m2), eye(m3));
    const BitMatrix b = kron3(eye(m1), t2, eye(m3));
    const BitMatrix c = kron3(eye(m1), eye(m2), t3);
    const BitMatrix za(a.rows(), a.cols());
    const BitMatrix zb(b.rows(), b.cols());
    const BitMatrix zc(c.rows(), c.cols());
    BitMatrix d2 = gf2::block({{a, a, za}, {b, zb, b}, {zc, c, c}});

    if (!gf2::matmul(d1, d2).is_zero()) {
        throw std::logic_error("threefold_product: chain condition failed");
    }
    Provenance p{"threefold",
                 {{"seed1", seed_summary(c1)}, {"seed2", seed_summary(c2)}, {"seed3", seed_summary(c3)}},
                 std::nullopt};
    return CssCode(std::move(d1), gf2::transpose(d2), std::move(p), options);
}

namespace {

CssCode relabel(const CssCode& code, const char* model, std::size_t L, const CssOptions& options) {
    Provenance p = code.provenance();
    p.construction = model;
    p.parameters["L"] = L;
    return CssCode(code.hx(), code.hz(), std::move(p), options);
}

}  // namespace

CssCode haah_code(std::size_t L, const CssOptions& options) {
    const auto f = PolynomialF2::parse("1+x+y+z", 3, L);
    const auto g = PolynomialF2::parse("1+xy+yz+xz", 3, L);
    return relabel(lifted_product(Protograph::single(f), Protograph::single(g.conjugate())), "haah", L, options);
}

CssCode checkerboard(std::size_t L, const CssOptions& options) {
    const auto f = PolynomialF2::parse("1+x+y+z", 3, L);
    return relabel(lifted_product(Protograph::single(f), Protograph::single(f)), "checkerboard", L, options);
}

CssCode color_code_lp(std::size_t L, const CssOptions& options) {
    const auto f = PolynomialF2::parse("1+x+y", 2, L);
    return relabel(lifted_product(Protograph::single(f), Protograph::single(f)), "color-code", L, options);
}

CssCode sierpinski_prism(std::size_t L, const CssOptions& options) {
    const auto f = PolynomialF2::parse("1+z", 3, L);
    const auto g = PolynomialF2::parse("1+x+y", 3, L);
    return relabel(hgp_fsl(f, g), "sierpinski-prism", L, options);
}

CssCode xcube(std::size_t L, const CssOptions& options) {
    CodeOptions seed_options;
    seed_options.compute_distances = false;
    const auto f = PolynomialF2::parse("1+x", 1, L);
    const auto h = gf2::SparseBitMatrix::from_dense(poly_to_circulant(f));
    ClassicalCode c(h, Provenance{"circulant", {{"f", "1+x"}, {"L", L}}, std::nullopt}, seed_options);
    return relabel(threefold_product(c, c, c), "xcube", L, options);
}

}  // namespace fracton::codes
