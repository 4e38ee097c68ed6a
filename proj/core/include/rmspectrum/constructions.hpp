#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rmspectrum/anf.hpp"
#include "rmspectrum/truth_table.hpp"

namespace rmspec {

/// Literal f1 || f2 || f3 || f4 on ANFs over n variables, giving n+2 variables:
/// f1 + x(f1+f2) + y(f1+f3) + xy(f1+f2+f3+f4) with x = x_(n+1), y = x_(n+2).
Anf block_concat(const Anf& f1, const Anf& f2, const Anf& f3, const Anf& f4);

/// g0 || g1 || g2 || (g1+g2+g3). With deg g0, g3 <= r-2 and deg g1, g2 <= r-1
/// the result has degree <= r; inputs outside those bounds are rejected.
Anf four_block_concat(const Anf& g0, const Anf& g1, const Anf& g2, const Anf& g3, int r = 6);

enum class ConstructionKind {
    FourBlock,      // explicit g1, g2 term lists
    PairConcat,     // g1 = X+A+B, g2 = X+A+C over 10 variables
    GeneralConcat,  // g1 = X+M1+M2, g2 = X+M3+M4 over 2m variables
};

/// Codeword 0 || (g1+a1) || (g2+a2) || (g1+g2+a3) over 2*base_m + 2 variables,
/// where g1 = X + sum(g1_terms), g2 = X + sum(g2_terms), X = x_1...x_base_m.
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::FourBlock;
    int base_m = 5;
    std::vector<std::uint32_t> g1_terms;
    std::vector<std::uint32_t> g2_terms;
    std::array<bool, 3> flips{false, false, false};

    int block_vars() const { return 2 * base_m; }
    int codeword_vars() const { return 2 * base_m + 2; }
    std::uint32_t prefix_mask() const { return (std::uint32_t{1} << base_m) - 1; }
};

/// g1 = X + A + B, g2 = X + A + C with A, B, C degree-5 supports in 10 variables.
ConstructionSpec pair_concat_spec(const Monomial& a, const Monomial& b, const Monomial& c,
                                  std::array<bool, 3> flips = {false, false, false});
/// g1 = X + M1 + M2, g2 = X + M3 + M4 in 2m variables, flips (a1, 0, a2).
ConstructionSpec general_concat_spec(int m, const std::array<Monomial, 4>& monomials,
                                     bool a1 = false, bool a2 = false);

Anf block_g1(const ConstructionSpec& spec);
Anf block_g2(const ConstructionSpec& spec);
/// The codeword as an ANF over codeword_vars() variables.
Anf build(const ConstructionSpec& spec);
/// The codeword's truth table assembled block by block.
TruthTable codeword_table(const ConstructionSpec& spec);

Anf pair_concat(const Monomial& a, const Monomial& b, const Monomial& c);
Anf general_concat(int m, const std::array<Monomial, 4>& monomials, bool a1, bool a2);

struct BlockWeights {
    std::int64_t g1 = 0;   // wt(g1), before flips
    std::int64_t g2 = 0;   // wt(g2)
    std::int64_t sum = 0;  // wt(g1 + g2)
    std::int64_t total = 0;  // codeword weight, flips applied per block
};

/// Block weights from truth tables of g1, g2 and g1 + g2.
BlockWeights block_weights(const ConstructionSpec& spec);
/// Block weights from the two- and three-monomial closed forms. Only for
/// PairConcat specs (base_m = 5).
BlockWeights formula_block_weights(const ConstructionSpec& spec);

/// Codeword weight given unflipped block weights; block length is 2^block_vars.
std::int64_t flipped_total(std::int64_t block_len, std::int64_t g1, std::int64_t g2,
                           std::int64_t sum, std::array<bool, 3> flips);

enum class CatalogGroup { Witness, Flipped };

struct CatalogEntry {
    std::string name;
    CatalogGroup group = CatalogGroup::Witness;
    ConstructionSpec spec;
    std::int64_t expected_weight = 0;
    // Published intermediate block weights; -1 where none is stated.
    std::int64_t expected_g1 = -1;
    std::int64_t expected_g2 = -1;
    std::int64_t expected_sum = -1;
};

/// Explicit weight witnesses for RM(6,12): the low two-block and three-term
/// instances (weights 154..214) and the flipped instances (1050..1116).
const std::vector<CatalogEntry>& witness_catalog();

}  // namespace rmspec
