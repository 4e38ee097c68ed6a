#include "rmspectrum/constructions.hpp"

#include <bit>
#include <stdexcept>

#include "rmspectrum/formulas.hpp"

namespace rmspec {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Anf variable(int n, int k) { return Anf(n, {std::uint32_t{1} << (k - 1)}); }

Anf sum_with_prefix(const ConstructionSpec& spec, const std::vector<std::uint32_t>& terms) {
    std::vector<std::uint32_t> masks = terms;
    masks.push_back(spec.prefix_mask());
    return Anf(spec.block_vars(), std::move(masks));
}

TruthTable table_with_prefix(const ConstructionSpec& spec, const std::vector<std::uint32_t>& terms) {
    const int n = spec.block_vars();
    TruthTable t = TruthTable::monomial(n, spec.prefix_mask());
    for (auto m : terms) t ^= TruthTable::monomial(n, m);
    return t;
}

void check_spec(const ConstructionSpec& spec) {
    require(spec.base_m >= 1 && spec.codeword_vars() <= kMaxTableVars,
            "construction: base variable count out of range");
    const std::uint32_t allowed = (std::uint32_t{1} << spec.block_vars()) - 1;
    for (const auto* terms : {&spec.g1_terms, &spec.g2_terms}) {
        for (auto m : *terms) {
            require((m & ~allowed) == 0, "construction: term uses a variable beyond the block");
            require(std::popcount(m) <= spec.base_m, "construction: term degree exceeds base_m");
        }
    }
}

void check_support(const Monomial& m, int n, int d, const char* what) {
    require(m.num_vars() == n && m.degree() == d,
            std::string(what) + ": expected a degree-" + std::to_string(d) + " support in " +
                std::to_string(n) + " variables, got " + to_string(m));
}

std::uint32_t mask_of(std::initializer_list<int> vars) {
    std::uint32_t mask = 0;
    for (int v : vars) mask |= std::uint32_t{1} << (v - 1);
    return mask;
}

std::string label(std::uint32_t mask) { return to_string(Monomial(10, mask)); }

}  // namespace

Anf block_concat(const Anf& f1, const Anf& f2, const Anf& f3, const Anf& f4) {
    const int n = f1.num_vars();
    require(f2.num_vars() == n && f3.num_vars() == n && f4.num_vars() == n,
            "block_concat: variable count mismatch");
    require(n + 2 <= kMaxAnfVars, "block_concat: too many variables");
    const Anf a = f1.lifted(n + 2);
    const Anf b = f2.lifted(n + 2);
    const Anf c = f3.lifted(n + 2);
    const Anf d = f4.lifted(n + 2);
    const Anf x = variable(n + 2, n + 1);
    const Anf y = variable(n + 2, n + 2);
    return a + x * (a + b) + y * (a + c) + x * y * (a + b + c + d);
}

Anf four_block_concat(const Anf& g0, const Anf& g1, const Anf& g2, const Anf& g3, int r) {
    require(degree(g0) <= r - 2 && degree(g3) <= r - 2,
            "four_block_concat: outer blocks must have degree <= " + std::to_string(r - 2));
    require(degree(g1) <= r - 1 && degree(g2) <= r - 1,
            "four_block_concat: middle blocks must have degree <= " + std::to_string(r - 1));
    Anf g = block_concat(g0, g1, g2, g1 + g2 + g3);
    if (degree(g) > r) throw std::logic_error("four_block_concat: degree bound violated");
    return g;
}

ConstructionSpec pair_concat_spec(const Monomial& a, const Monomial& b, const Monomial& c,
                                  std::array<bool, 3> flips) {
    check_support(a, 10, 5, "pair_concat");
    check_support(b, 10, 5, "pair_concat");
    check_support(c, 10, 5, "pair_concat");
    ConstructionSpec spec;
    spec.kind = ConstructionKind::PairConcat;
    spec.base_m = 5;
    spec.g1_terms = {a.mask(), b.mask()};
    spec.g2_terms = {a.mask(), c.mask()};
    spec.flips = flips;
    return spec;
}

ConstructionSpec general_concat_spec(int m, const std::array<Monomial, 4>& monomials, bool a1,
                                     bool a2) {
    require(m >= 2 && 2 * m + 2 <= kMaxTableVars, "general_concat: m out of range");
    for (const auto& mono : monomials) check_support(mono, 2 * m, m, "general_concat");
    ConstructionSpec spec;
    spec.kind = ConstructionKind::GeneralConcat;
    spec.base_m = m;
    spec.g1_terms = {monomials[0].mask(), monomials[1].mask()};
    spec.g2_terms = {monomials[2].mask(), monomials[3].mask()};
    spec.flips = {a1, false, a2};
    return spec;
}

Anf block_g1(const ConstructionSpec& spec) {
    check_spec(spec);
    return sum_with_prefix(spec, spec.g1_terms);
}

Anf block_g2(const ConstructionSpec& spec) {
    check_spec(spec);
    return sum_with_prefix(spec, spec.g2_terms);
}

Anf build(const ConstructionSpec& spec) {
    const Anf g1 = block_g1(spec);
    const Anf g2 = block_g2(spec);
    const auto flip = [](const Anf& f, bool on) { return on ? f.complemented() : f; };
    Anf g = block_concat(Anf::zero(spec.block_vars()), flip(g1, spec.flips[0]),
                         flip(g2, spec.flips[1]), flip(g1 + g2, spec.flips[2]));
    if (degree(g) > spec.base_m + 1) throw std::logic_error("construction: degree bound violated");
    return g;
}

TruthTable codeword_table(const ConstructionSpec& spec) {
    check_spec(spec);
    const TruthTable g1 = table_with_prefix(spec, spec.g1_terms);
    const TruthTable g2 = table_with_prefix(spec, spec.g2_terms);
    const auto flip = [](const TruthTable& t, bool on) { return on ? ~t : t; };
    return concat4(TruthTable(spec.block_vars()), flip(g1, spec.flips[0]), flip(g2, spec.flips[1]),
                   flip(g1 ^ g2, spec.flips[2]));
}

Anf pair_concat(const Monomial& a, const Monomial& b, const Monomial& c) {
    return build(pair_concat_spec(a, b, c));
}

Anf general_concat(int m, const std::array<Monomial, 4>& monomials, bool a1, bool a2) {
    return build(general_concat_spec(m, monomials, a1, a2));
}

std::int64_t flipped_total(std::int64_t block_len, std::int64_t g1, std::int64_t g2,
                           std::int64_t sum, std::array<bool, 3> flips) {
    return (flips[0] ? block_len - g1 : g1) + (flips[1] ? block_len - g2 : g2) +
           (flips[2] ? block_len - sum : sum);
}

BlockWeights block_weights(const ConstructionSpec& spec) {
    check_spec(spec);
    const TruthTable g1 = table_with_prefix(spec, spec.g1_terms);
    const TruthTable g2 = table_with_prefix(spec, spec.g2_terms);
    BlockWeights w;
    w.g1 = static_cast<std::int64_t>(g1.weight());
    w.g2 = static_cast<std::int64_t>(g2.weight());
    w.sum = static_cast<std::int64_t>(distance(g1, g2));
    w.total = flipped_total(std::int64_t{1} << spec.block_vars(), w.g1, w.g2, w.sum, spec.flips);
    return w;
}

BlockWeights formula_block_weights(const ConstructionSpec& spec) {
    require(spec.kind == ConstructionKind::PairConcat && spec.base_m == 5 &&
                spec.g1_terms.size() == 2 && spec.g2_terms.size() == 2 &&
                spec.g1_terms[0] == spec.g2_terms[0],
            "formula_block_weights: needs a pair-concat spec");
    const Monomial x(10, spec.prefix_mask());
    const Monomial a(10, spec.g1_terms[0]);
    const Monomial b(10, spec.g1_terms[1]);
    const Monomial c(10, spec.g2_terms[1]);
    BlockWeights w;
    w.g1 = three_monomial_weight(profile_of(x, a, b));
    w.g2 = three_monomial_weight(profile_of(x, a, c));
    w.sum = two_monomial_weight(10, 5, std::popcount(b.mask() & c.mask()));
    w.total = flipped_total(1024, w.g1, w.g2, w.sum, spec.flips);
    return w;
}

const std::vector<CatalogEntry>& witness_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> out;
        const auto mono = [](std::uint32_t mask) { return Monomial(10, mask); };
        const auto pair = [&](std::string name, CatalogGroup group, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, std::array<bool, 3> flips, std::int64_t total,
                              std::int64_t g1, std::int64_t g2, std::int64_t sum) {
            out.push_back({std::move(name), group, pair_concat_spec(mono(a), mono(b), mono(c), flips),
                           total, g1, g2, sum});
        };
        const auto explicit_blocks = [&](std::string name, std::vector<std::uint32_t> g1_terms,
                                         std::vector<std::uint32_t> g2_terms, std::int64_t total,
                                         std::int64_t g1, std::int64_t g2, std::int64_t sum) {
            ConstructionSpec spec;
            spec.base_m = 5;
            spec.g1_terms = std::move(g1_terms);
            spec.g2_terms = std::move(g2_terms);
            out.push_back({std::move(name), CatalogGroup::Witness, std::move(spec), total, g1, g2, sum});
        };
        constexpr std::array<bool, 3> kNone{false, false, false};
        constexpr std::array<bool, 3> kFlipG1{true, false, false};
        constexpr std::array<bool, 3> kFlipG2{false, true, false};
        constexpr std::array<bool, 3> kFlipSum{false, false, true};
        const auto W = CatalogGroup::Witness;
        const auto F = CatalogGroup::Flipped;

        // Two-monomial blocks: 62 + 56 + 48.
        explicit_blocks("two-term/166", {mask_of({6, 7, 8, 9, 10})}, {mask_of({1, 2, 6, 7, 8})},
                        166, 62, 56, 48);

        // Shared prefix x1x2x3x4.
        const auto p6 = mask_of({1, 2, 3, 4, 6});
        const auto p7 = mask_of({1, 2, 3, 4, 7});
        pair("prefix1234/h=" + label(mask_of({5, 6, 8, 9, 10})), W, p6, p7,
             mask_of({5, 6, 8, 9, 10}), kNone, 158, 32, 64, 62);
        pair("prefix1234/h=" + label(mask_of({5, 7, 8, 9, 10})), W, p6, p7,
             mask_of({5, 7, 8, 9, 10}), kNone, 154, 32, 62, 60);

        // g1 = X + x1x2x3x6x7 + x4x5x8x9x10 (weight 74) against ten choices of h.
        const auto a = mask_of({1, 2, 3, 6, 7});
        const auto b = mask_of({4, 5, 8, 9, 10});
        struct HRow {
            std::uint32_t h;
            std::int64_t g2;
            std::int64_t sum;
        };
        const std::vector<HRow> split_rows = {
            {mask_of({1, 2, 3, 4, 5}), 32, 56}, {mask_of({1, 4, 5, 8, 9}), 68, 32},
            {mask_of({1, 2, 3, 4, 8}), 48, 56}, {mask_of({1, 2, 3, 4, 6}), 48, 60},
            {mask_of({1, 2, 3, 8, 9}), 56, 56}, {mask_of({1, 2, 6, 7, 8}), 56, 60},
            {mask_of({1, 2, 4, 5, 6}), 64, 56}, {mask_of({1, 2, 4, 6, 7}), 64, 60},
            {mask_of({1, 4, 6, 7, 8}), 72, 56}, {mask_of({1, 4, 5, 6, 7}), 80, 56},
        };
        for (const auto& row : split_rows) {
            pair("split/h=" + label(row.h), W, a, b, row.h, kNone, 74 + row.g2 + row.sum, 74, row.g2,
                 row.sum);
        }
        // Shares x4x5x8x9x10 between g1 and g2 instead of x1x2x3x6x7.
        pair("split/shared-b/c=" + label(mask_of({1, 6, 8, 9, 10})), W, b, a,
             mask_of({1, 6, 8, 9, 10}), kNone, 206, 74, 76, 56);
        // g1 + g2 keeps four monomials.
        explicit_blocks("four-term/214", {a, b}, {mask_of({1, 6, 7, 8, 9}), mask_of({6, 7, 8, 9, 10})},
                        214, 74, 62, 78);

        // Flipped blocks, weights = 2 mod 4 in [1050, 1110].
        for (std::size_t i = 1; i < split_rows.size(); ++i) {
            const auto& row = split_rows[i];
            pair("split/flip-g1/h=" + label(row.h), F, a, b, row.h, kFlipG1,
                 950 + row.g2 + row.sum, 74, row.g2, row.sum);
        }
        struct FlipRow {
            std::uint32_t h;
            std::array<bool, 3> flips;
            std::int64_t total;
            std::int64_t g2;
            std::int64_t sum;
        };
        const std::vector<FlipRow> split_flips = {
            {mask_of({1, 4, 6, 7, 8}), kFlipG2, 1082, 72, 56},
            {mask_of({1, 2, 3, 4, 8}), kFlipG2, 1106, 48, 56},
            {mask_of({1, 2, 3, 4, 8}), kFlipSum, 1090, 48, 56},
            {mask_of({1, 2, 6, 7, 8}), kFlipG2, 1102, 56, 60},
            {mask_of({1, 2, 6, 7, 8}), kFlipSum, 1094, 56, 60},
            {mask_of({1, 2, 3, 8, 9}), kFlipG2, 1098, 56, 56},
            {mask_of({1, 2, 3, 4, 6}), kFlipG2, 1110, 48, 60},
        };
        const auto flip_name = [](const std::array<bool, 3>& f) {
            return f[0] ? "flip-g1" : f[1] ? "flip-g2" : "flip-sum";
        };
        for (const auto& row : split_flips) {
            pair(std::string("split/") + flip_name(row.flips) + "/h=" + label(row.h), F, a, b, row.h,
                 row.flips, row.total, 74, row.g2, row.sum);
        }

        // g1 = X + x1x2x3x6x7 + x1x7x8x9x10 (weight 72), weights = 0 mod 4 in [1056, 1116].
        const auto b7 = mask_of({1, 7, 8, 9, 10});
        const std::vector<FlipRow> b7_flips = {
            {mask_of({1, 2, 3, 4, 7}), kFlipG1, 1056, 48, 56},
            {mask_of({1, 2, 3, 4, 7}), kFlipG2, 1104, 48, 56},
            {mask_of({1, 2, 3, 4, 7}), kFlipSum, 1088, 48, 56},
            {mask_of({1, 2, 3, 4, 6}), kFlipG1, 1060, 48, 60},
            {mask_of({1, 2, 3, 4, 6}), kFlipG2, 1108, 48, 60},
            {mask_of({1, 2, 3, 4, 6}), kFlipSum, 1084, 48, 60},
            {mask_of({1, 2, 4, 5, 8}), kFlipG1, 1064, 56, 56},
            {mask_of({1, 2, 4, 5, 8}), kFlipG2, 1096, 56, 56},
            {mask_of({1, 4, 5, 8, 9}), kFlipG1, 1068, 68, 48},
            {mask_of({1, 4, 5, 8, 9}), kFlipG2, 1076, 68, 48},
            {mask_of({1, 4, 5, 8, 9}), kFlipSum, 1116, 68, 48},
            {mask_of({1, 2, 4, 5, 7}), kFlipG1, 1072, 64, 56},
            {mask_of({1, 2, 4, 5, 6}), kFlipG2, 1092, 64, 60},
            {mask_of({1, 2, 4, 5, 6}), kFlipSum, 1100, 64, 60},
            {mask_of({1, 4, 5, 6, 8}), kFlipG2, 1080, 72, 56},
            {mask_of({1, 4, 5, 6, 8}), kFlipSum, 1112, 72, 56},
        };
        for (const auto& row : b7_flips) {
            pair(std::string("split-b7/") + flip_name(row.flips) + "/h=" + label(row.h), F, a, b7,
                 row.h, row.flips, row.total, 72, row.g2, row.sum);
        }
        return out;
    }();
    return catalog;
}

}  // namespace rmspec
