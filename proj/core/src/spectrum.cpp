#include "rmspectrum/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "rmspectrum/formulas.hpp"
#include "rmspectrum/truth_table.hpp"

namespace rmspec {

namespace {

constexpr int kMaxSpectrumVars = 22;
constexpr std::int64_t kShiftWeight = 152;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

Provenance tagged(Provenance::Source source, std::string detail = {}) {
    return Provenance{source, std::move(detail)};
}

void close_under_complement(SpectrumSet& s) {
    const std::int64_t full = pow2(s.m);
    std::vector<std::int64_t> present;
    present.reserve(s.weights.size());
    for (const auto& [w, p] : s.weights) present.push_back(w);
    for (auto w : present) {
        s.add(full - w, tagged(Provenance::Source::Complement, std::to_string(full) + " - " +
                                                                   std::to_string(w)));
    }
}

std::string describe(const ConstructionSpec& spec) {
    std::string out = "g1 = X";
    for (auto m : spec.g1_terms) out += " + " + to_string(Monomial(spec.block_vars(), m));
    out += "; g2 = X";
    for (auto m : spec.g2_terms) out += " + " + to_string(Monomial(spec.block_vars(), m));
    out += "; flips ";
    for (bool f : spec.flips) out += f ? '1' : '0';
    return out;
}

}  // namespace

std::string Provenance::tag() const {
    switch (source) {
        case Source::LowSetConstant: return "low-set-constant";
        case Source::Formula: return "formula";
        case Source::Witness: return "witness:" + detail;
        case Source::Axiom: return "axiom";
        case Source::Complement: return "complement";
    }
    return "unknown";
}

WeightSet SpectrumSet::weight_set() const {
    WeightSet out;
    for (const auto& [w, p] : weights) out.insert(out.end(), w);
    return out;
}

bool SpectrumSet::add(std::int64_t w, Provenance p) {
    if (w < 0 || w > pow2(m)) throw std::out_of_range("weight outside [0, 2^m]");
    return weights.emplace(w, std::move(p)).second;
}

bool SpectrumSet::complement_closed() const {
    const std::int64_t full = pow2(m);
    return std::all_of(weights.begin(), weights.end(),
                       [&](const auto& entry) { return contains(full - entry.first); });
}

WeightSet kasami_range1_weights(int r, int m) {
    if (r < 1 || r > m - 1) throw std::invalid_argument("kasami_range1_weights: need 1 <= r <= m-1");
    if (r == 1) return {pow2(m - 1)};
    const int bound = std::min(std::max(std::min(m - r, r), (m - r + 2) / 2), m - r);
    WeightSet out;
    for (int i = 1; i <= bound; ++i) out.insert(pow2(m - r + 1) - pow2(m - r + 1 - i));
    return out;
}

const WeightSet& rm6_12_low_set() {
    static const WeightSet low = {0, 64, 96, 112, 120, 124, 126, 128,
                                  136, 144, 148, 152, 154, 156, 158};
    return low;
}

const WeightSet& rm_m6_low_part() {
    static const WeightSet part = {0, 64, 96, 112, 120, 124, 126, 128, 136, 144, 148};
    return part;
}

SpectrumSet predicted_spectrum(int m) {
    if (m < 12 || m > kMaxSpectrumVars) {
        throw std::invalid_argument("predicted_spectrum: need 12 <= m <= " +
                                    std::to_string(kMaxSpectrumVars));
    }
    SpectrumSet s;
    s.r = m - 6;
    s.m = m;
    for (auto a : rm_m6_low_part()) s.add(a, tagged(Provenance::Source::LowSetConstant));
    for (std::int64_t w = kShiftWeight; w <= pow2(m) - kShiftWeight; w += 2) {
        s.add(w, tagged(Provenance::Source::Formula, "152 + 2i"));
    }
    close_under_complement(s);
    return s;
}

SpectrumSet conjectured_spectrum_shape(int c, int m, const WeightSet& a, const WeightSet& b) {
    if (c < 1 || m < 2 * c || m > kMaxSpectrumVars) {
        throw std::invalid_argument("conjectured_spectrum_shape: need c >= 1 and 2c <= m <= " +
                                    std::to_string(kMaxSpectrumVars));
    }
    const std::int64_t a_lo = pow2(c);
    const std::int64_t a_hi = pow2(c + 1);
    const std::int64_t b_hi = pow2(c + 1) + pow2(c - 1);
    for (auto w : a) {
        if (w < a_lo || w > a_hi) throw std::invalid_argument("A-part weight outside [2^c, 2^(c+1)]");
    }
    for (auto w : b) {
        if (w < a_hi || w > b_hi) {
            throw std::invalid_argument("B-part weight outside [2^(c+1), 2^(c+1) + 2^(c-1)]");
        }
    }
    SpectrumSet s;
    s.r = m - c;
    s.m = m;
    s.add(0, tagged(Provenance::Source::LowSetConstant));
    for (auto w : a) s.add(w, tagged(Provenance::Source::LowSetConstant));
    for (auto w : b) s.add(w, tagged(Provenance::Source::LowSetConstant));
    std::int64_t start = b_hi + (b_hi % 2);
    for (std::int64_t w = start; w <= pow2(m - 1); w += 2) {
        s.add(w, tagged(Provenance::Source::Formula, "consecutive even"));
    }
    close_under_complement(s);
    return s;
}

SpectrumSet induction_step(const SpectrumSet& s) {
    if (!s.contains(kShiftWeight)) {
        throw std::invalid_argument("induction_step: spectrum lacks the weight-152 shift codeword");
    }
    if (s.m + 1 > kMaxSpectrumVars) throw std::invalid_argument("induction_step: m too large");
    SpectrumSet next;
    next.r = s.r + 1;
    next.m = s.m + 1;
    for (const auto& [w, p] : s.weights) next.add(w, p);
    for (const auto& [w, p] : s.weights) {
        next.add(kShiftWeight + w,
                 tagged(Provenance::Source::Formula, "152 + " + std::to_string(w)));
    }
    close_under_complement(next);
    return next;
}

std::vector<SizedWitness> coset_witnesses_rm4_8() {
    constexpr int n = 8;
    std::vector<SizedWitness> out;
    Anf acc = Anf::zero(n);
    out.push_back({0, acc});
    // Coset v of span(x5..x8): indicator prod_k (x_k + v_k + 1), k = 1..4.
    for (int v = 15; v >= 0; --v) {
        Anf indicator = Anf::one(n);
        for (int k = 0; k < 4; ++k) {
            Anf factor(n, {std::uint32_t{1} << k});
            if (((v >> k) & 1) == 0) factor = factor.complemented();
            indicator = indicator * factor;
        }
        acc += indicator;
        out.push_back({16 * static_cast<std::int64_t>(out.size()), acc});
    }
    return out;
}

std::map<std::int64_t, ConstructionSpec> pair_concat_family() {
    constexpr int n = 10;
    constexpr std::int64_t block_len = 1024;
    const auto supports = degree_d_supports(n, 5);
    const std::size_t k = supports.size();
    const TruthTable prefix = TruthTable::monomial(n, 0x1Fu);
    std::vector<TruthTable> tables;
    tables.reserve(k);
    for (auto s : supports) tables.push_back(TruthTable::monomial(n, s));

    // with_prefix[a*k+b] = wt(X + A + B); pair[b*k+c] = wt(B + C).
    std::vector<std::int64_t> with_prefix(k * k);
    std::vector<std::int64_t> pair(k * k);
    for (std::size_t a = 0; a < k; ++a) {
        const TruthTable xa = prefix ^ tables[a];
        for (std::size_t b = 0; b < k; ++b) {
            with_prefix[a * k + b] = static_cast<std::int64_t>(distance(xa, tables[b]));
            pair[a * k + b] = static_cast<std::int64_t>(distance(tables[a], tables[b]));
        }
    }

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> first(3 * block_len + 1, kNone);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            const std::int64_t w1 = with_prefix[a * k + b];
            for (std::size_t c = 0; c < k; ++c) {
                const std::int64_t w2 = with_prefix[a * k + c];
                const std::int64_t w3 = pair[b * k + c];
                for (unsigned f = 0; f < 8; ++f) {
                    const std::int64_t total = flipped_total(
                        block_len, w1, w2, w3, {(f & 4) != 0, (f & 2) != 0, (f & 1) != 0});
                    auto& slot = first[static_cast<std::size_t>(total)];
                    if (slot == kNone) slot = ((a * k + b) * k + c) * 8 + f;
                }
            }
        }
    }

    std::map<std::int64_t, ConstructionSpec> out;
    for (std::size_t w = 0; w < first.size(); ++w) {
        if (first[w] == kNone) continue;
        std::uint64_t code = first[w];
        const unsigned f = code % 8;
        code /= 8;
        const std::size_t c = code % k;
        code /= k;
        const std::size_t b = code % k;
        const std::size_t a = code / k;
        out.emplace(static_cast<std::int64_t>(w),
                    pair_concat_spec(Monomial(n, supports[a]), Monomial(n, supports[b]),
                                     Monomial(n, supports[c]),
                                     {(f & 4) != 0, (f & 2) != 0, (f & 1) != 0}));
    }
    return out;
}

namespace {

// Block totals with an all-zero first block, before any g0 shift.
bool in_construction_ranges(std::int64_t w) {
    return (w >= 154 && w <= 214) || (w >= 1050 && w <= 1116);
}

}  // namespace

SpectrumSet assemble_rm6_12_achieved(const AssemblyOptions& options) {
    SpectrumSet s;
    s.r = 6;
    s.m = 12;
    for (const auto& entry : witness_catalog()) {
        s.add(block_weights(entry.spec).total, tagged(Provenance::Source::Witness, entry.name));
    }
    // g0 = f||f||f||f with wt(f) = 16i gives a degree-4 block of weight 64i.
    const auto family = pair_concat_family();
    for (const auto& coset : coset_witnesses_rm4_8()) {
        const std::int64_t offset = 4 * coset.weight;
        const std::string prefix = "g0 weight " + std::to_string(offset) + "; ";
        for (const auto& entry : witness_catalog()) {
            s.add(offset + entry.expected_weight, tagged(Provenance::Source::Formula, prefix + entry.name));
        }
        for (const auto& [w, spec] : family) {
            if (!in_construction_ranges(w)) continue;
            s.add(offset + w, tagged(Provenance::Source::Formula, prefix + describe(spec)));
        }
    }
    for (auto w : rm6_12_low_set()) s.add(w, tagged(Provenance::Source::LowSetConstant));
    if (options.rm5_10_axiom) {
        // 0||0||f||f with f in RM(5,10) has weight 2 wt(f).
        for (std::int64_t w = 72; w <= 952; w += 2) {
            s.add(2 * w, tagged(Provenance::Source::Axiom, "2 * " + std::to_string(w)));
        }
    }
    close_under_complement(s);
    return s;
}

}  // namespace rmspec
