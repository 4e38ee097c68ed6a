#include "rmspectrum/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rmspec {

namespace {

constexpr std::size_t kMaxMismatchSamples = 16;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

bool IntersectionProfile::valid() const {
    if (d < 0 || n < 0) return false;
    if (c4 < 0 || c4 > std::min({c1, c2, c3}) || std::max({c1, c2, c3}) > d) return false;
    if (c1 + c2 - c4 > d || c1 + c3 - c4 > d || c2 + c3 - c4 > d) return false;
    return union_size() <= n;
}

IntersectionProfile profile_of(const Monomial& i, const Monomial& j, const Monomial& k) {
    require(i.num_vars() == j.num_vars() && j.num_vars() == k.num_vars(),
            "profile_of: supports live in different variable counts");
    require(i.degree() == j.degree() && j.degree() == k.degree(),
            "profile_of: supports have different degrees");
    IntersectionProfile p;
    p.c1 = std::popcount(i.mask() & j.mask());
    p.c2 = std::popcount(i.mask() & k.mask());
    p.c3 = std::popcount(j.mask() & k.mask());
    p.c4 = std::popcount(i.mask() & j.mask() & k.mask());
    p.d = i.degree();
    p.n = i.num_vars();
    return p;
}

std::int64_t two_monomial_weight(int n, int d, int c) {
    require(d >= 0 && c >= 0 && c <= d && 2 * d - c <= n && n <= 62,
            "two_monomial_weight: need 0 <= c <= d and 2d - c <= n");
    return pow2(n - d + 1) - pow2(n - 2 * d + c + 1);
}

std::set<std::int64_t> two_monomial_weight_set(int n, int d) {
    require(d >= 0 && 2 * d <= n, "two_monomial_weight_set: need 2d <= n");
    std::set<std::int64_t> out;
    for (int c = std::max(0, 2 * d - n); c <= d; ++c) out.insert(two_monomial_weight(n, d, c));
    return out;
}

std::int64_t three_monomial_weight(const IntersectionProfile& p) {
    require(p.n == 10 && p.d == 5, "three_monomial_weight: closed form only covers n = 10, d = 5");
    require(p.valid(), "three_monomial_weight: profile is not realizable");
    // valid() forces c1 + c2 + c3 - c4 >= 5, so the first exponent is >= 2.
    return pow2(p.c1 + p.c2 + p.c3 - p.c4 - 3) - pow2(p.c1 + 1) - pow2(p.c2 + 1) -
           pow2(p.c3 + 1) + 96;
}

std::set<std::int64_t> three_monomial_weight_set() {
    std::set<std::int64_t> out;
    IntersectionProfile p;
    p.n = 10;
    p.d = 5;
    for (p.c1 = 0; p.c1 <= 5; ++p.c1)
        for (p.c2 = 0; p.c2 <= 5; ++p.c2)
            for (p.c3 = 0; p.c3 <= 5; ++p.c3)
                for (p.c4 = 0; p.c4 <= 5; ++p.c4)
                    if (p.valid()) out.insert(three_monomial_weight(p));
    return out;
}

std::int64_t oracle_weight(const Anf& f) {
    return static_cast<std::int64_t>(anf_to_table_by_terms(f).weight());
}

std::vector<std::uint32_t> degree_d_supports(int n, int d) {
    require(n >= 0 && n < 32 && d >= 0 && d <= n, "degree_d_supports: bad (n, d)");
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) == d) out.push_back(mask);
    }
    return out;
}

FormulaCheckReport check_two_monomial_formula(int n, int d) {
    const auto supports = degree_d_supports(n, d);
    std::vector<TruthTable> tables;
    tables.reserve(supports.size());
    for (auto s : supports) tables.push_back(TruthTable::monomial(n, s));

    FormulaCheckReport report;
    for (std::size_t a = 0; a < supports.size(); ++a) {
        for (std::size_t b = 0; b < supports.size(); ++b) {
            const auto oracle = static_cast<std::int64_t>(distance(tables[a], tables[b]));
            const auto formula =
                two_monomial_weight(n, d, std::popcount(supports[a] & supports[b]));
            ++report.cases;
            report.oracle_weights.insert(oracle);
            if (oracle != formula) {
                ++report.mismatches;
                if (report.samples.size() < kMaxMismatchSamples) {
                    report.samples.push_back({{supports[a], supports[b]}, formula, oracle});
                }
            }
        }
    }
    return report;
}

FormulaCheckReport check_three_monomial_formula() {
    constexpr int n = 10;
    constexpr int d = 5;
    const auto supports = degree_d_supports(n, d);
    const Monomial fixed(n, 0x1Fu);
    const TruthTable fixed_table = TruthTable::monomial(n, fixed.mask());
    std::vector<TruthTable> tables;
    tables.reserve(supports.size());
    for (auto s : supports) tables.push_back(TruthTable::monomial(n, s));

    FormulaCheckReport report;
    for (std::size_t j = 0; j < supports.size(); ++j) {
        const TruthTable partial = fixed_table ^ tables[j];
        for (std::size_t k = 0; k < supports.size(); ++k) {
            const auto oracle = static_cast<std::int64_t>(distance(partial, tables[k]));
            const auto profile =
                profile_of(fixed, Monomial(n, supports[j]), Monomial(n, supports[k]));
            const auto formula = three_monomial_weight(profile);
            ++report.cases;
            report.oracle_weights.insert(oracle);
            if (oracle != formula) {
                ++report.mismatches;
                if (report.samples.size() < kMaxMismatchSamples) {
                    report.samples.push_back({{fixed.mask(), supports[j], supports[k]}, formula, oracle});
                }
            }
        }
    }
    return report;
}

}  // namespace rmspec
