#include "fracton/gf2/distance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracton/gf2/linalg.hpp"
#include "fracton/util/rng.hpp"

namespace fracton::gf2 {

bool support_less(const BitVector& a, const BitVector& b) {
    auto aw = a.words();
    auto bw = b.words();
    for (std::size_t w = 0; w < aw.size(); ++w) {
        Word diff = aw[w] ^ bw[w];
        if (diff != 0) {
            Word lowest = diff & (~diff + 1);
            return (aw[w] & lowest) != 0;
        }
    }
    return false;
}

namespace {

class Tracker {
  public:
    Tracker(const RowSpace* exclude, std::size_t collect) : exclude_(exclude), collect_(collect) {}

    void offer(const BitVector& v, std::size_t w) {
        if (w == 0) {
            return;
        }
        if (best_.is_finite() && w > best_.value()) {
            return;
        }
        const bool tie = best_.is_finite() && w == best_.value();
        if (tie && !support_less(v, witness_) && !wants(v)) {
            return;
        }
        if (exclude_ != nullptr && exclude_->contains(v)) {
            return;
        }
        if (!tie) {
            best_ = Distance(w);
            witness_ = v;
            minimal_.clear();
        } else if (support_less(v, witness_)) {
            witness_ = v;
        }
        if (wants(v)) {
            minimal_.push_back(v);
        }
    }

    MinWeightResult result(bool exact) const {
        MinWeightResult r{best_, witness_, exact, minimal_};
        std::sort(r.minimal.begin(), r.minimal.end(), support_less);
        return r;
    }

  private:
    bool wants(const BitVector& v) const {
        return minimal_.size() < collect_ && std::find(minimal_.begin(), minimal_.end(), v) == minimal_.end();
    }

    const RowSpace* exclude_;
    std::size_t collect_;
    Distance best_ = Distance::infinite();
    BitVector witness_;
    std::vector<BitVector> minimal_;
};

void enumerate_all(const std::vector<BitVector>& basis, Tracker& tracker) {
    const std::size_t k = basis.size();
    BitVector current(basis.front().size());
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        tracker.offer(current, current.weight());
    }
}

// Random information sets: bring the basis into systematic form on a random column order,
// then score every row and every pair of rows.
void information_set_search(std::vector<BitVector> basis, const MinWeightOptions& options, Tracker& tracker) {
    const std::size_t n = basis.front().size();
    const std::size_t k = basis.size();
    util::Rng rng(options.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    for (const auto& b : basis) {
        tracker.offer(b, b.weight());
    }
    for (std::size_t it = 0; it < options.iterations; ++it) {
        rng.shuffle(order);
        std::size_t r = 0;
        for (std::size_t c : order) {
            if (r == k) {
                break;
            }
            std::size_t p = r;
            while (p < k && !basis[p].get(c)) {
                ++p;
            }
            if (p == k) {
                continue;
            }
            std::swap(basis[r], basis[p]);
            for (std::size_t i = 0; i < k; ++i) {
                if (i != r && basis[i].get(c)) {
                    basis[i] ^= basis[r];
                }
            }
            ++r;
        }
        for (std::size_t i = 0; i < k; ++i) {
            tracker.offer(basis[i], basis[i].weight());
        }
        if (k <= 96) {
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = i + 1; j < k; ++j) {
                    BitVector s = basis[i] ^ basis[j];
                    tracker.offer(s, s.weight());
                }
            }
        }
    }
}

MinWeightResult search(const BitMatrix& m, const RowSpace* exclude, const MinWeightOptions& options) {
    std::vector<BitVector> basis = kernel_basis(m);
    Tracker tracker(exclude, options.collect_minimal);
    if (basis.empty()) {
        return tracker.result(true);
    }
    if (basis.size() <= options.exhaustive_threshold) {
        enumerate_all(basis, tracker);
        return tracker.result(true);
    }
    information_set_search(std::move(basis), options, tracker);
    return tracker.result(false);
}

}  // namespace

MinWeightResult min_weight_nonzero(const BitMatrix& m, const MinWeightOptions& options) {
    return search(m, nullptr, options);
}

MinWeightResult min_weight_nonzero(const BitMatrix& m, const BitMatrix& exclude, const MinWeightOptions& options) {
    if (exclude.cols() != m.cols()) {
        throw std::invalid_argument("min_weight_nonzero: exclude matrix has the wrong width");
    }
    RowSpace space(exclude);
    return search(m, &space, options);
}

}  // namespace fracton::gf2
