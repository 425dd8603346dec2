#include "fracton/codes/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace fracton::codes {

PolynomialF2::PolynomialF2(std::size_t dimension, std::size_t period) : dimension_(dimension), period_(period) {
    if (dimension == 0 || period == 0) {
        throw std::invalid_argument("PolynomialF2: dimension and period must be positive");
    }
}

PolynomialF2 PolynomialF2::one(std::size_t dimension, std::size_t period) {
    PolynomialF2 f(dimension, period);
    f.toggle(Monomial(dimension, 0));
    return f;
}

PolynomialF2 PolynomialF2::parse(const std::string& text, std::size_t dimension, std::size_t period) {
    static const std::string kVariables = "xyzw";
    PolynomialF2 f(dimension, period);
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compact.push_back(ch);
        }
    }
    if (compact.empty()) {
        throw std::invalid_argument("PolynomialF2::parse: empty polynomial");
    }
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        const std::size_t end = std::min(compact.find('+', pos), compact.size());
        const std::string term = compact.substr(pos, end - pos);
        if (term.empty()) {
            throw std::invalid_argument("PolynomialF2::parse: empty term in '" + text + "'");
        }
        Monomial m(dimension, 0);
        if (term != "1" && term != "0") {
            std::size_t i = 0;
            while (i < term.size()) {
                const std::size_t axis = kVariables.find(term[i]);
                if (axis == std::string::npos || axis >= dimension) {
                    throw std::invalid_argument("PolynomialF2::parse: bad variable in '" + term + "'");
                }
                ++i;
                std::size_t power = 1;
                if (i < term.size() && term[i] == '^') {
                    ++i;
                    std::size_t digits = 0;
                    power = 0;
                    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                        power = power * 10 + static_cast<std::size_t>(term[i] - '0');
                        ++i;
                        ++digits;
                    }
                    if (digits == 0) {
                        throw std::invalid_argument("PolynomialF2::parse: missing exponent in '" + term + "'");
                    }
                }
                m[axis] += power;
            }
        }
        if (term != "0") {
            f.toggle(std::move(m));
        }
        pos = end + 1;
    }
    return f;
}

std::size_t PolynomialF2::group_order() const {
    std::size_t order = 1;
    for (std::size_t i = 0; i < dimension_; ++i) {
        order *= period_;
    }
    return order;
}

void PolynomialF2::toggle(Monomial m) {
    if (m.size() != dimension_) {
        throw std::invalid_argument("PolynomialF2::toggle: monomial has the wrong dimension");
    }
    for (auto& e : m) {
        e %= period_;
    }
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) {
        terms_.erase(it);
    }
}

PolynomialF2 PolynomialF2::conjugate() const {
    PolynomialF2 out(dimension_, period_);
    for (const auto& m : terms_) {
        Monomial inv(dimension_);
        for (std::size_t i = 0; i < dimension_; ++i) {
            inv[i] = (period_ - m[i]) % period_;
        }
        out.toggle(std::move(inv));
    }
    return out;
}

std::size_t PolynomialF2::index_of(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t e : m) {
        idx = idx * period_ + e % period_;
    }
    return idx;
}

Monomial PolynomialF2::monomial_at(std::size_t index) const {
    Monomial m(dimension_);
    for (std::size_t i = dimension_; i-- > 0;) {
        m[i] = index % period_;
        index /= period_;
    }
    return m;
}

void PolynomialF2::require_same_ring(const PolynomialF2& other) const {
    if (dimension_ != other.dimension_ || period_ != other.period_) {
        throw std::invalid_argument("PolynomialF2: operands live in different rings");
    }
}

PolynomialF2 PolynomialF2::operator+(const PolynomialF2& other) const {
    require_same_ring(other);
    PolynomialF2 out = *this;
    for (const auto& m : other.terms_) {
        out.toggle(m);
    }
    return out;
}

PolynomialF2 PolynomialF2::operator*(const PolynomialF2& other) const {
    require_same_ring(other);
    PolynomialF2 out(dimension_, period_);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Monomial m(dimension_);
            for (std::size_t i = 0; i < dimension_; ++i) {
                m[i] = a[i] + b[i];
            }
            out.toggle(std::move(m));
        }
    }
    return out;
}

std::string PolynomialF2::to_string() const {
    static const std::string kVariables = "xyzw";
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& m : terms_) {
        if (!out.empty()) {
            out += "+";
        }
        std::string term;
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (m[i] == 0) {
                continue;
            }
            term.push_back(kVariables[i]);
            if (m[i] > 1) {
                term += "^" + std::to_string(m[i]);
            }
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

gf2::BitMatrix poly_to_circulant(const PolynomialF2& f) {
    const std::size_t order = f.group_order();
    const std::size_t d = f.dimension();
    const std::size_t period = f.period();
    gf2::BitMatrix out(order, order);
    for (std::size_t c = 0; c < order; ++c) {
        const Monomial shift = f.monomial_at(c);
        for (const auto& term : f.terms()) {
            Monomial r(d);
            for (std::size_t i = 0; i < d; ++i) {
                r[i] = (term[i] + shift[i]) % period;
            }
            out.flip(f.index_of(r), c);
        }
    }
    return out;
}

Protograph::Protograph(std::size_t rows, std::size_t cols, std::size_t dimension, std::size_t period)
    : rows_(rows),
      cols_(cols),
      dimension_(dimension),
      period_(period),
      entries_(rows * cols, PolynomialF2(dimension, period)) {}

Protograph Protograph::single(const PolynomialF2& f) {
    Protograph p(1, 1, f.dimension(), f.period());
    p.set(0, 0, f);
    return p;
}

Protograph Protograph::identity(std::size_t n, std::size_t dimension, std::size_t period) {
    Protograph p(n, n, dimension, period);
    for (std::size_t i = 0; i < n; ++i) {
        p.set(i, i, PolynomialF2::one(dimension, period));
    }
    return p;
}

void Protograph::set(std::size_t r, std::size_t c, PolynomialF2 f) {
    if (f.dimension() != dimension_ || f.period() != period_) {
        throw std::invalid_argument("Protograph::set: entry lives in a different ring");
    }
    entries_.at(r * cols_ + c) = std::move(f);
}

Protograph Protograph::conjugate_transpose() const {
    Protograph out(cols_, rows_, dimension_, period_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.set(c, r, at(r, c).conjugate());
        }
    }
    return out;
}

gf2::BitMatrix Protograph::expand() const {
    const std::size_t order = PolynomialF2(dimension_, period_).group_order();
    gf2::BitMatrix out(rows_ * order, cols_ * order);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero()) {
                continue;
            }
            const gf2::BitMatrix blk = poly_to_circulant(at(r, c));
            for (std::size_t i = 0; i < order; ++i) {
                for (std::size_t j : blk.row(i).support()) {
                    out.set(r * order + i, c * order + j, true);
                }
            }
        }
    }
    return out;
}

Protograph kronecker(const Protograph& a, const Protograph& b) {
    if (a.dimension() != b.dimension() || a.period() != b.period()) {
        throw std::invalid_argument("kronecker: protographs live in different rings");
    }
    Protograph out(a.rows() * b.rows(), a.cols() * b.cols(), a.dimension(), a.period());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
                }
            }
        }
    }
    return out;
}

Protograph hconcat(const Protograph& a, const Protograph& b) {
    if (a.dimension() != b.dimension() || a.period() != b.period()) {
        throw std::invalid_argument("hconcat: protographs live in different rings");
    }
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hconcat: row counts differ");
    }
    Protograph out(a.rows(), a.cols() + b.cols(), a.dimension(), a.period());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out.set(r, c, a.at(r, c));
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out.set(r, a.cols() + c, b.at(r, c));
        }
    }
    return out;
}

}  // namespace fracton::codes
