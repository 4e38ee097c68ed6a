#pragma once

#include <string>

#include "rmspectrum/enumeration.hpp"
#include "rmspectrum/formulas.hpp"
#include "rmspectrum/spectrum.hpp"

namespace rmspec {

/// "weight,count" header, then one line per weight, ascending.
std::string histogram_csv(const WeightHistogram& hist);

struct RunInfo {
    std::string mode;  // "full" or "early_exit"
    unsigned threads = 1;
    double wall_seconds = 0.0;
};
/// Sidecar for `histogram_csv`: m, convention, total, complete, mode, threads, wall time.
std::string histogram_metadata_json(const WeightHistogram& hist, const RunInfo& run);

/// {"r", "m", "weights": [...], "provenance": {"<weight>": "<tag>"}}.
std::string spectrum_json(const SpectrumSet& s);

/// Catalog entries with g1, g2 and codeword ANF text and expected weights.
std::string catalog_json();

std::string coverage_json(const CoverageReport& report);

}  // namespace rmspec
