#include "rmspectrum/witness_search.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "rmspectrum/truth_table.hpp"

namespace rmspec {

namespace {

constexpr int kKicksPerRestart = 8;

std::int64_t gap(std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }

class LocalSearch {
public:
    explicit LocalSearch(const SearchOptions& o) : opts_(o), rng_(o.seed) {
        const std::uint32_t limit = std::uint32_t{1} << o.n;
        by_degree_.resize(static_cast<std::size_t>(o.r) + 1);
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            const int d = std::popcount(mask);
            if (d > o.r) continue;
            by_degree_[static_cast<std::size_t>(d)].push_back(masks_.size());
            masks_.push_back(mask);
            tables_.push_back(TruthTable::monomial(o.n, mask));
        }
    }

    std::optional<Anf> run() {
        while (evaluations_ < opts_.budget) {
            restart();
            for (int kick = 0; kick <= kKicksPerRestart && evaluations_ < opts_.budget; ++kick) {
                if (descend()) return current_anf();
                toggle(random_term());
                toggle(random_term());
            }
        }
        return std::nullopt;
    }

private:
    // Degree r with probability 1/2, r-1 with 1/4, and so on.
    std::size_t random_term() {
        std::size_t d = static_cast<std::size_t>(opts_.r);
        while (d > 0 && (rng_() & 1u) == 0) --d;
        const auto& bucket = by_degree_[d];
        return bucket[rng_() % bucket.size()];
    }

    void restart() {
        present_.assign(masks_.size(), false);
        current_ = TruthTable(opts_.n);
        const int terms = 1 + static_cast<int>(rng_() % 4);
        for (int i = 0; i < terms; ++i) toggle(random_term());
    }

    void toggle(std::size_t j) {
        present_[j] = !present_[j];
        current_ ^= tables_[j];
    }

    /// Greedy best-improvement toggling; true once the target is hit.
    bool descend() {
        std::int64_t current_gap = gap(static_cast<std::int64_t>(current_.weight()), opts_.target_weight);
        while (current_gap != 0) {
            std::size_t best = masks_.size();
            std::int64_t best_gap = current_gap;
            const std::size_t offset = rng_() % masks_.size();
            for (std::size_t s = 0; s < masks_.size(); ++s) {
                if (evaluations_++ >= opts_.budget) return false;
                const std::size_t j = (s + offset) % masks_.size();
                const auto w = static_cast<std::int64_t>(distance(current_, tables_[j]));
                const std::int64_t g = gap(w, opts_.target_weight);
                if (g < best_gap) {
                    best_gap = g;
                    best = j;
                }
            }
            if (best == masks_.size()) return false;
            toggle(best);
            current_gap = best_gap;
        }
        return true;
    }

    Anf current_anf() const {
        std::vector<std::uint32_t> terms;
        for (std::size_t j = 0; j < masks_.size(); ++j) {
            if (present_[j]) terms.push_back(masks_[j]);
        }
        return Anf(opts_.n, std::move(terms));
    }

    SearchOptions opts_;
    std::mt19937_64 rng_;
    std::vector<std::uint32_t> masks_;
    std::vector<TruthTable> tables_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::vector<bool> present_;
    TruthTable current_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace

bool weight_ruled_out(std::int64_t target, int r, int n) {
    const std::int64_t full = std::int64_t{1} << n;
    if (target < 0 || target > full) return true;
    if (r >= n) return false;
    if (r <= 0) return r < 0 ? target != 0 : (target != 0 && target != full);
    const std::int64_t divisor = std::int64_t{1} << ((n - 1) / r);
    return target % divisor != 0;
}

std::optional<Anf> find_witness(const SearchOptions& options) {
    if (options.n < 0 || options.n > kMaxSearchVars) {
        throw std::invalid_argument("find_witness: n must be in [0, " +
                                    std::to_string(kMaxSearchVars) + "]");
    }
    if (options.r < 0) throw std::invalid_argument("find_witness: r must be >= 0");
    const int r = std::min(options.r, options.n);
    if (weight_ruled_out(options.target_weight, r, options.n)) return std::nullopt;
    if (options.target_weight == 0) return Anf::zero(options.n);
    if (options.target_weight == std::int64_t{1} << options.n) return Anf::one(options.n);
    // A single monomial of degree d has weight 2^(n-d).
    for (int d = r; d >= 0; --d) {
        if (options.target_weight == std::int64_t{1} << (options.n - d)) {
            return Anf(options.n, {(std::uint32_t{1} << d) - 1});
        }
    }
    SearchOptions clamped = options;
    clamped.r = r;
    return LocalSearch(clamped).run();
}

}  // namespace rmspec
