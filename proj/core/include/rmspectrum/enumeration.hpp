#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rmspectrum/constructions.hpp"

namespace rmspec {

/// Which (M1, M2, M3, M4, a1, a2) tuples of the general concat construction
/// are counted.
enum class Convention {
    Ordered,        // every ordered tuple, repeats allowed
    NonDegenerate,  // drop tuples with g1 + g2 = 0
    SwapQuotient,   // keep (M1,M2) <= (M3,M4) only
};

std::string_view convention_id(Convention c);
Convention parse_convention(std::string_view id);

enum class EnumerationMode { Full, EarlyExit };

struct EnumerationOptions {
    int m = 4;
    EnumerationMode mode = EnumerationMode::Full;
    Convention convention = Convention::Ordered;
    unsigned threads = 1;
    /// EarlyExit stops after the first batch of rows that covers all of these.
    std::set<std::int64_t> targets;
};

/// Weight counts for general_concat over 2m+2 variables.
struct WeightHistogram {
    int m = 0;
    Convention convention = Convention::Ordered;
    std::uint64_t total = 0;     // tuples visited
    bool complete = true;        // false when EarlyExit stopped before the end
    std::map<std::int64_t, std::uint64_t> counts;
    /// Smallest tuple code realizing each weight (see `decode_tuple`).
    std::map<std::int64_t, std::uint64_t> first_tuple;
};

/// Tuple code ((((i1*K + i2)*K + i3)*K + i4)*4 + 2*a1 + a2), K = C(2m, m),
/// indices into the ascending list of degree-m supports in 2m variables.
ConstructionSpec decode_tuple(int m, std::uint64_t code);

/// Exhaustive sweep of general_concat(m, M1..M4, a1, a2). The result depends
/// only on (m, mode, convention, targets), never on the thread count.
WeightHistogram enumerate_general_concat(const EnumerationOptions& options);

/// Targets {2^(m+2) + 2^m + 2i} u {2^(2m) + 2^m + 2i}, 0 <= i < 2^m.
std::set<std::int64_t> coverage_targets(int m);

struct TargetCoverage {
    std::int64_t weight = 0;
    std::uint64_t count = 0;
    std::optional<ConstructionSpec> witness;
};

struct CoverageReport {
    int m = 0;
    std::vector<TargetCoverage> targets;
    std::size_t covered() const;
    bool all_covered() const { return covered() == targets.size(); }
};

CoverageReport check_coverage(int m, const WeightHistogram& hist);

/// Published counts for m = 4 at the 32 coverage targets.
const std::map<std::int64_t, std::uint64_t>& published_m4_counts();

}  // namespace rmspec
