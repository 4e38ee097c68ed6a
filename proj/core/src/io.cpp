#include "rmspectrum/io.hpp"

#include <sstream>

#include "json.hpp"

namespace rmspec {

namespace {

using nlohmann::json;

std::string group_id(CatalogGroup g) { return g == CatalogGroup::Witness ? "witness" : "flipped"; }

json spec_json(const ConstructionSpec& spec) {
    json out;
    out["base_m"] = spec.base_m;
    out["g1"] = to_string(block_g1(spec));
    out["g2"] = to_string(block_g2(spec));
    out["flips"] = {spec.flips[0], spec.flips[1], spec.flips[2]};
    return out;
}

}  // namespace

std::string histogram_csv(const WeightHistogram& hist) {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, c] : hist.counts) out << w << ',' << c << '\n';
    return out.str();
}

std::string histogram_metadata_json(const WeightHistogram& hist, const RunInfo& run) {
    json out;
    out["m"] = hist.m;
    out["convention"] = std::string(convention_id(hist.convention));
    out["total"] = hist.total;
    out["complete"] = hist.complete;
    out["mode"] = run.mode;
    out["threads"] = run.threads;
    out["wall_time_seconds"] = run.wall_seconds;
    return out.dump(2) + "\n";
}

std::string spectrum_json(const SpectrumSet& s) {
    json weights = json::array();
    json provenance = json::object();
    for (const auto& [w, p] : s.weights) {
        weights.push_back(w);
        provenance[std::to_string(w)] = p.tag();
    }
    json out;
    out["r"] = s.r;
    out["m"] = s.m;
    out["weights"] = std::move(weights);
    out["provenance"] = std::move(provenance);
    return out.dump(2) + "\n";
}

std::string catalog_json() {
    json entries = json::array();
    for (const auto& entry : witness_catalog()) {
        json e = spec_json(entry.spec);
        e["name"] = entry.name;
        e["group"] = group_id(entry.group);
        e["codeword"] = to_string(build(entry.spec));
        e["expected_weight"] = entry.expected_weight;
        entries.push_back(std::move(e));
    }
    return entries.dump(2) + "\n";
}

std::string coverage_json(const CoverageReport& report) {
    json targets = json::array();
    for (const auto& t : report.targets) {
        json e;
        e["weight"] = t.weight;
        e["count"] = t.count;
        e["covered"] = t.count > 0;
        if (t.witness) e["witness"] = spec_json(*t.witness);
        targets.push_back(std::move(e));
    }
    json out;
    out["m"] = report.m;
    out["covered"] = report.covered();
    out["targets_total"] = report.targets.size();
    out["targets"] = std::move(targets);
    return out.dump(2) + "\n";
}

}  // namespace rmspec
