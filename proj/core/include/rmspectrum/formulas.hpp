#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rmspectrum/anf.hpp"

namespace rmspec {

/// Pairwise and triple intersection sizes of three degree-d monomial supports
/// I, J, K in n variables: c1 = |I&J|, c2 = |I&K|, c3 = |J&K|, c4 = |I&J&K|.
struct IntersectionProfile {
    int c1 = 0;
    int c2 = 0;
    int c3 = 0;
    int c4 = 0;
    int d = 0;
    int n = 0;

    /// True iff every Venn region is non-negative and the union fits in n
    /// variables, i.e. some triple of supports realizes the profile.
    bool valid() const;
    int union_size() const { return 3 * d - c1 - c2 - c3 + c4; }

    friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

IntersectionProfile profile_of(const Monomial& i, const Monomial& j, const Monomial& k);

/// Weight of x^I + x^J for degree-d supports with |I&J| = c in n variables:
/// 2^(n-d+1) - 2^(n-2d+c+1), by inclusion-exclusion on the two supports.
std::int64_t two_monomial_weight(int n, int d, int c);
std::set<std::int64_t> two_monomial_weight_set(int n, int d);

/// Closed form for x1x2x3x4x5 + x^J + x^K in 10 variables:
/// 2^(c1+c2+c3-c4-3) - 2^(c1+1) - 2^(c2+1) - 2^(c3+1) + 96.
/// Only defined for (n, d) = (10, 5); other arities go through `oracle_weight`.
std::int64_t three_monomial_weight(const IntersectionProfile& p);
/// Closed-form values over every realizable (10, 5) profile.
std::set<std::int64_t> three_monomial_weight_set();

/// Brute-force weight: evaluate the full truth table and count ones.
std::int64_t oracle_weight(const Anf& f);

struct FormulaMismatch {
    std::vector<std::uint32_t> supports;  // monomial masks of the checked sum
    std::int64_t formula = 0;
    std::int64_t oracle = 0;
};

struct FormulaCheckReport {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::vector<FormulaMismatch> samples;  // first few mismatches, verbatim
    std::set<std::int64_t> oracle_weights;
};

/// All ordered pairs of degree-d supports in n variables, closed form vs oracle.
FormulaCheckReport check_two_monomial_formula(int n, int d);
/// All (J, K) degree-5 supports in 10 variables with I = {1..5}, closed form vs oracle.
FormulaCheckReport check_three_monomial_formula();

/// Every degree-d support in n variables as a mask, ascending.
std::vector<std::uint32_t> degree_d_supports(int n, int d);

}  // namespace rmspec
