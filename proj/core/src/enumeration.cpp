#include "rmspectrum/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rmspectrum/formulas.hpp"
#include "rmspectrum/truth_table.hpp"

namespace rmspec {

namespace {

constexpr std::uint64_t kNoTuple = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kEarlyExitBatchRows = 64;

/// Tables of g = X + Mi + Mj for every ordered pair (i, j), W words each.
struct PairTables {
    int m = 0;
    std::size_t supports = 0;  // K
    std::size_t words = 0;     // W
    std::int64_t block_len = 0;
    std::vector<std::uint64_t> bits;   // K*K*W
    std::vector<std::int64_t> weight;  // K*K

    explicit PairTables(int m_) : m(m_) {
        const int n = 2 * m;
        const auto masks = degree_d_supports(n, m);
        supports = masks.size();
        const TruthTable prefix = TruthTable::monomial(n, (std::uint32_t{1} << m) - 1);
        words = prefix.words().size();
        block_len = std::int64_t{1} << n;
        std::vector<TruthTable> tables;
        tables.reserve(supports);
        for (auto s : masks) tables.push_back(TruthTable::monomial(n, s));
        bits.resize(supports * supports * words);
        weight.resize(supports * supports);
        for (std::size_t i = 0; i < supports; ++i) {
            const TruthTable xi = prefix ^ tables[i];
            for (std::size_t j = 0; j < supports; ++j) {
                const TruthTable g = xi ^ tables[j];
                const auto src = g.words();
                std::copy(src.begin(), src.end(),
                          bits.begin() + static_cast<std::ptrdiff_t>((i * supports + j) * words));
                weight[i * supports + j] = static_cast<std::int64_t>(g.weight());
            }
        }
    }

    std::size_t rows() const { return supports * supports; }
};

struct Tally {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> first;
    std::uint64_t total = 0;

    explicit Tally(std::size_t slots) : counts(slots, 0), first(slots, kNoTuple) {}

    void merge_into(Tally& dst) const {
        for (std::size_t w = 0; w < counts.size(); ++w) {
            dst.counts[w] += counts[w];
            dst.first[w] = std::min(dst.first[w], first[w]);
        }
        dst.total += total;
    }
};

template <std::size_t W>
void sweep_row(const PairTables& t, Convention convention, std::size_t p, Tally& tally) {
    const std::size_t rows = t.rows();
    const std::uint64_t* g1 = t.bits.data() + p * W;
    const std::int64_t w1 = t.weight[p];
    const std::int64_t len = t.block_len;
    const std::size_t q_begin = convention == Convention::SwapQuotient ? p : 0;
    for (std::size_t q = q_begin; q < rows; ++q) {
        const std::uint64_t* g2 = t.bits.data() + q * W;
        std::int64_t w3 = 0;
        for (std::size_t i = 0; i < W; ++i) w3 += std::popcount(g1[i] ^ g2[i]);
        if (convention == Convention::NonDegenerate && w3 == 0) continue;
        const std::int64_t w2 = t.weight[q];
        const std::uint64_t base = (static_cast<std::uint64_t>(p) * rows + q) * 4;
        const std::int64_t totals[4] = {w1 + w2 + w3, w1 + w2 + (len - w3),
                                        (len - w1) + w2 + w3, (len - w1) + w2 + (len - w3)};
        for (unsigned f = 0; f < 4; ++f) {
            const auto slot = static_cast<std::size_t>(totals[f]);
            ++tally.counts[slot];
            if (tally.first[slot] == kNoTuple) tally.first[slot] = base + f;
        }
        tally.total += 4;
    }
}

void sweep_row(const PairTables& t, Convention convention, std::size_t p, Tally& tally) {
    switch (t.words) {
        case 1: return sweep_row<1>(t, convention, p, tally);
        case 4: return sweep_row<4>(t, convention, p, tally);
        case 16: return sweep_row<16>(t, convention, p, tally);
        default: throw std::logic_error("unsupported table width");
    }
}

/// Rows [begin, end) across `threads` workers; each worker folds into its own
/// tally, then tallies merge by addition and min.
void sweep_rows(const PairTables& t, Convention convention, std::size_t begin, std::size_t end,
                unsigned threads, Tally& out) {
    std::atomic<std::size_t> next{begin};
    std::vector<Tally> partial(threads, Tally(out.counts.size()));
    auto worker = [&](unsigned id) {
        for (std::size_t p = next.fetch_add(1); p < end; p = next.fetch_add(1)) {
            sweep_row(t, convention, p, partial[id]);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }
    for (const auto& tally : partial) tally.merge_into(out);
}

bool covers(const Tally& tally, const std::set<std::int64_t>& targets) {
    return std::all_of(targets.begin(), targets.end(), [&](std::int64_t w) {
        return w >= 0 && static_cast<std::size_t>(w) < tally.counts.size() &&
               tally.counts[static_cast<std::size_t>(w)] > 0;
    });
}

}  // namespace

std::string_view convention_id(Convention c) {
    switch (c) {
        case Convention::Ordered: return "ordered";
        case Convention::NonDegenerate: return "nondegenerate";
        case Convention::SwapQuotient: return "swap-quotient";
    }
    return "unknown";
}

Convention parse_convention(std::string_view id) {
    for (auto c : {Convention::Ordered, Convention::NonDegenerate, Convention::SwapQuotient}) {
        if (convention_id(c) == id) return c;
    }
    throw std::invalid_argument("unknown enumeration convention: " + std::string(id));
}

ConstructionSpec decode_tuple(int m, std::uint64_t code) {
    const auto masks = degree_d_supports(2 * m, m);
    const std::uint64_t k = masks.size();
    const bool a2 = code & 1;
    const bool a1 = (code >> 1) & 1;
    code >>= 2;
    std::array<std::size_t, 4> idx{};
    for (int slot = 3; slot >= 0; --slot) {
        idx[static_cast<std::size_t>(slot)] = code % k;
        code /= k;
    }
    if (code != 0) throw std::invalid_argument("decode_tuple: code out of range");
    const int n = 2 * m;
    return general_concat_spec(m,
                               {Monomial(n, masks[idx[0]]), Monomial(n, masks[idx[1]]),
                                Monomial(n, masks[idx[2]]), Monomial(n, masks[idx[3]])},
                               a1, a2);
}

WeightHistogram enumerate_general_concat(const EnumerationOptions& options) {
    if (options.m < 3 || options.m > 5) {
        throw std::invalid_argument("enumerate_general_concat: m must be 3, 4 or 5");
    }
    if (options.threads < 1) throw std::invalid_argument("enumerate_general_concat: threads >= 1");

    const PairTables tables(options.m);
    Tally tally(static_cast<std::size_t>(3 * tables.block_len + 1));
    const std::size_t rows = tables.rows();

    WeightHistogram hist;
    hist.m = options.m;
    hist.convention = options.convention;
    if (options.mode == EnumerationMode::Full) {
        sweep_rows(tables, options.convention, 0, rows, options.threads, tally);
    } else {
        std::size_t done = 0;
        while (done < rows && !(covers(tally, options.targets) && done > 0)) {
            const std::size_t end = std::min(rows, done + kEarlyExitBatchRows);
            sweep_rows(tables, options.convention, done, end, options.threads, tally);
            done = end;
        }
        hist.complete = done == rows;
    }

    hist.total = tally.total;
    for (std::size_t w = 0; w < tally.counts.size(); ++w) {
        if (tally.counts[w] == 0) continue;
        hist.counts.emplace(static_cast<std::int64_t>(w), tally.counts[w]);
        hist.first_tuple.emplace(static_cast<std::int64_t>(w), tally.first[w]);
    }
    return hist;
}

std::set<std::int64_t> coverage_targets(int m) {
    if (m < 1 || 2 * m > 60) throw std::invalid_argument("coverage_targets: m out of range");
    std::set<std::int64_t> out;
    const std::int64_t span = std::int64_t{1} << m;
    for (std::int64_t i = 0; i < span; ++i) {
        out.insert((std::int64_t{1} << (m + 2)) + span + 2 * i);
        out.insert((std::int64_t{1} << (2 * m)) + span + 2 * i);
    }
    return out;
}

std::size_t CoverageReport::covered() const {
    return static_cast<std::size_t>(
        std::count_if(targets.begin(), targets.end(), [](const auto& t) { return t.count > 0; }));
}

CoverageReport check_coverage(int m, const WeightHistogram& hist) {
    CoverageReport report;
    report.m = m;
    for (auto w : coverage_targets(m)) {
        TargetCoverage t;
        t.weight = w;
        if (auto it = hist.counts.find(w); it != hist.counts.end()) t.count = it->second;
        if (auto it = hist.first_tuple.find(w); it != hist.first_tuple.end() && t.count > 0) {
            t.witness = decode_tuple(m, it->second);
        }
        report.targets.push_back(std::move(t));
    }
    return report;
}

const std::map<std::int64_t, std::uint64_t>& published_m4_counts() {
    static const std::map<std::int64_t, std::uint64_t> table = {
        {80, 1426248},  {82, 85248},   {84, 1680384},  {86, 208224},  {88, 2789312},
        {90, 351872},   {92, 3152040}, {94, 541824},   {96, 3690240}, {98, 516192},
        {100, 3553440}, {102, 465024}, {104, 2186472}, {106, 190080}, {108, 940032},
        {110, 33696},   {272, 2801168}, {274, 323648}, {276, 4203144}, {278, 601632},
        {280, 6844464}, {282, 849888}, {284, 7165472}, {286, 916336}, {288, 7051536},
        {290, 816576},  {292, 5449440}, {294, 629808}, {296, 3956448}, {298, 373984},
        {300, 2145576}, {302, 173088},
    };
    return table;
}

}  // namespace rmspec
