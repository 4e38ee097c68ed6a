#pragma once

#include <cstdint>
#include <optional>

#include "rmspectrum/anf.hpp"

namespace rmspec {

inline constexpr int kMaxSearchVars = 12;

struct SearchOptions {
    std::int64_t target_weight = 0;
    int r = 0;
    int n = 0;
    /// Number of candidate weight evaluations before giving up.
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
};

/// True when no degree-<=r function in n variables can have this weight by
/// parity or divisibility alone.
bool weight_ruled_out(std::int64_t target, int r, int n);

/// Seeded local search for a degree-<=r function of the target weight: sparse
/// random starts refined by greedy single-term toggles. Deterministic per seed.
std::optional<Anf> find_witness(const SearchOptions& options);

}  // namespace rmspec
