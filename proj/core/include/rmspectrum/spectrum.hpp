#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rmspectrum/anf.hpp"
#include "rmspectrum/constructions.hpp"

namespace rmspec {

using WeightSet = std::set<std::int64_t>;

/// Why a weight belongs to a spectrum set.
struct Provenance {
    enum class Source { LowSetConstant, Formula, Witness, Axiom, Complement };
    Source source = Source::Formula;
    std::string detail;  // witness name or construction description

    /// "low-set-constant", "formula", "witness:<name>", "axiom", "complement".
    std::string tag() const;
};

/// Weights attained in RM(r, m), each with the reason it is included.
struct SpectrumSet {
    int r = 0;
    int m = 0;
    std::map<std::int64_t, Provenance> weights;

    bool contains(std::int64_t w) const { return weights.count(w) != 0; }
    std::size_t size() const { return weights.size(); }
    WeightSet weight_set() const;
    /// Inserts w unless already present; returns true on insertion.
    bool add(std::int64_t w, Provenance p);
    bool complement_closed() const;
};

/// Weights of RM(r, m) in [2^(m-r), 2^(m-r+1)): 2^(m-r+1) - 2^(m-r+1-i) for
/// 1 <= i <= max(min(m-r, r), (m-r+2)/2). First-order codes only have 2^(m-1).
WeightSet kasami_range1_weights(int r, int m);

/// Every weight of RM(6,12) below 160.
const WeightSet& rm6_12_low_set();
/// The low part {0, 64, ..., 148} shared by every RM(m-6, m), m >= 12.
const WeightSet& rm_m6_low_part();

/// A u {152 + 2i : 0 <= i <= 2^(m-1) - 152} u {2^m - a : a in A} for RM(m-6, m).
SpectrumSet predicted_spectrum(int m);

/// {0} u A u B u C u comp(B) u comp(A) u {2^m} where C holds every even weight
/// in [2^(c+1) + 2^(c-1), 2^(m-1)] and its complement.
SpectrumSet conjectured_spectrum_shape(int c, int m, const WeightSet& a, const WeightSet& b);

/// Spectrum of RM(m-7, m+1) from that of RM(m-6, m): w (via 0||f), 152 + w
/// (via g1||f with wt(g1) = 152) and complements.
SpectrumSet induction_step(const SpectrumSet& s);

/// Degree-<=4 functions in 8 variables of weight 16i, i = 0..16: XORs of i
/// indicators of distinct cosets of the subspace spanned by x5..x8.
struct SizedWitness {
    std::int64_t weight = 0;
    Anf function;
};
std::vector<SizedWitness> coset_witnesses_rm4_8();

/// One realizing (A, B, C, flips) per weight of the pair-concat family
/// 0||(g1+a1)||(g2+a2)||(g1+g2+a3), g1 = X+A+B, g2 = X+A+C, over all
/// degree-5 supports A, B, C in 10 variables.
std::map<std::int64_t, ConstructionSpec> pair_concat_family();

struct AssemblyOptions {
    /// Take as given that RM(5,10) attains every even weight in [72, 952].
    bool rm5_10_axiom = true;
};

/// Weights of RM(6,12) realized by g0||g1||g2||(g1+g2+g3) with coset-witness
/// g0 blocks, the pair-concat family, doubled RM(5,10) weights (axiom), the
/// low set, and complements.
SpectrumSet assemble_rm6_12_achieved(const AssemblyOptions& options = {});

}  // namespace rmspec
