#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmspectrum/anf.hpp"
#include "rmspectrum/constructions.hpp"
#include "rmspectrum/enumeration.hpp"
#include "rmspectrum/formulas.hpp"
#include "rmspectrum/io.hpp"
#include "rmspectrum/spectrum.hpp"
#include "rmspectrum/witness_search.hpp"

using nlohmann::json;
using namespace rmspec;

namespace {

struct RunConfig {
    std::string anf_text;
    std::string target = "all";
    std::string mode = "full";
    std::string format = "text";
    std::string convention = "ordered";
    std::string out;
    int m = 4;
    int r = 6;
    int n = 10;
    std::int64_t weight = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    bool no_axiom = false;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
    if (!cfg.out.empty()) write_file(cfg.out, report.dump(2) + "\n");
    if (cfg.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json mask_list(const std::vector<std::uint32_t>& masks, int n) {
    json out = json::array();
    for (auto mask : masks) out.push_back(to_string(Anf(n, {mask})));
    return out;
}

// ---- weight ----

int cmd_weight(const RunConfig& cfg) {
    Anf f;
    try {
        f = parse_anf(cfg.anf_text, cfg.n);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const auto w = oracle_weight(f);
    const int d = degree(f);
    std::string closed_form = "none";
    std::int64_t closed_value = -1;
    const auto& t = f.terms();
    const bool uniform = t.size() >= 2 && std::all_of(t.begin(), t.end(), [&](std::uint32_t s) {
        return std::popcount(s) == std::popcount(t.front());
    });
    if (uniform && t.size() == 2) {
        closed_form = "two-monomial";
        closed_value = two_monomial_weight(cfg.n, d, std::popcount(t[0] & t[1]));
    } else if (uniform && t.size() == 3 && cfg.n == 10 && d == 5) {
        closed_form = "three-monomial";
        closed_value = three_monomial_weight(
            profile_of(Monomial(cfg.n, t[0]), Monomial(cfg.n, t[1]), Monomial(cfg.n, t[2])));
    }
    json report{{"anf", to_string(f)}, {"n", cfg.n}, {"weight", w}, {"degree", d},
                {"closed_form", closed_form}};
    if (closed_value >= 0) report["closed_form_weight"] = closed_value;
    std::string text = "weight " + std::to_string(w) + "\ndegree " + std::to_string(d) + "\n";
    if (closed_value >= 0) {
        text += closed_form + " closed form " + std::to_string(closed_value) + "\n";
    }
    emit(cfg, report, text);
    return closed_value < 0 || closed_value == w ? 0 : 1;
}

// ---- verify ----

struct CheckResult {
    std::string target;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    json details = json::array();

    bool passed() const { return mismatches == 0 && cases > 0; }
    json to_json() const {
        return {{"target", target}, {"cases", cases}, {"mismatches", mismatches},
                {"passed", passed()}, {"details", details}};
    }
};

CheckResult from_formula_report(std::string name, const FormulaCheckReport& r, int n) {
    CheckResult out{std::move(name), r.cases, r.mismatches, json::array()};
    for (const auto& s : r.samples) {
        out.details.push_back({{"monomials", mask_list(s.supports, n)},
                               {"formula", s.formula},
                               {"oracle", s.oracle}});
    }
    return out;
}

CheckResult verify_catalog(CatalogGroup group, std::string name) {
    CheckResult out{std::move(name)};
    for (const auto& e : witness_catalog()) {
        if (e.group != group) continue;
        const auto bw = block_weights(e.spec);
        const bool ok = bw.total == e.expected_weight &&
                        (e.expected_g1 < 0 || e.expected_g1 == bw.g1) &&
                        (e.expected_g2 < 0 || e.expected_g2 == bw.g2) &&
                        (e.expected_sum < 0 || e.expected_sum == bw.sum);
        ++out.cases;
        out.mismatches += !ok;
        out.details.push_back({{"name", e.name}, {"expected", e.expected_weight},
                               {"actual", bw.total}, {"match", ok}});
    }
    return out;
}

CheckResult verify_cosets() {
    CheckResult out{"cosets"};
    for (const auto& w : coset_witnesses_rm4_8()) {
        const auto actual = oracle_weight(w.function);
        const bool ok = actual == w.weight && degree(w.function) <= 4;
        ++out.cases;
        out.mismatches += !ok;
        out.details.push_back({{"weight", w.weight}, {"actual", actual},
                               {"degree", degree(w.function)}, {"match", ok}});
    }
    return out;
}

CheckResult verify_induction() {
    CheckResult out{"induction"};
    auto s = predicted_spectrum(12);
    for (int m = 12; m < 20; ++m) {
        s = induction_step(s);
        const bool ok = s.weight_set() == predicted_spectrum(m + 1).weight_set();
        ++out.cases;
        out.mismatches += !ok;
        out.details.push_back({{"m", m + 1}, {"size", s.size()}, {"match", ok}});
    }
    return out;
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> targets{"two-monomial", "three-monomial", "witnesses",
                                                  "flipped", "cosets", "induction"};
    return targets;
}

CheckResult run_check(const std::string& target) {
    if (target == "two-monomial") {
        return from_formula_report(target, check_two_monomial_formula(10, 5), 10);
    }
    if (target == "three-monomial") {
        return from_formula_report(target, check_three_monomial_formula(), 10);
    }
    if (target == "witnesses") return verify_catalog(CatalogGroup::Witness, target);
    if (target == "flipped") return verify_catalog(CatalogGroup::Flipped, target);
    if (target == "cosets") return verify_cosets();
    return verify_induction();
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<std::string> targets;
    if (cfg.target == "all") {
        targets = verify_targets();
    } else {
        targets = {cfg.target};
    }
    json reports = json::array();
    std::string text;
    bool ok = true;
    for (const auto& t : targets) {
        const auto r = run_check(t);
        ok &= r.passed();
        reports.push_back(r.to_json());
        text += (r.passed() ? "PASS " : "FAIL ") + t + ": " +
                std::to_string(r.cases - r.mismatches) + "/" + std::to_string(r.cases) +
                " match\n";
    }
    emit(cfg, json{{"passed", ok}, {"checks", reports}}, text);
    return ok ? 0 : 1;
}

// ---- enumerate ----

int cmd_enumerate(const RunConfig& cfg) {
    EnumerationOptions opts;
    opts.m = cfg.m;
    opts.threads = cfg.threads;
    opts.convention = parse_convention(cfg.convention);
    opts.mode = cfg.mode == "full" ? EnumerationMode::Full : EnumerationMode::EarlyExit;
    if (opts.mode == EnumerationMode::EarlyExit) opts.targets = coverage_targets(cfg.m);

    const auto start = std::chrono::steady_clock::now();
    const auto hist = enumerate_general_concat(opts);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string prefix = cfg.out.empty() ? "weights_m" + std::to_string(cfg.m) : cfg.out;
    write_file(prefix + ".csv", histogram_csv(hist));
    write_file(prefix + ".json", histogram_metadata_json(hist, {cfg.mode, cfg.threads, seconds}));

    std::cout << "m=" << hist.m << " convention=" << convention_id(hist.convention)
              << " total=" << hist.total << (hist.complete ? "" : " (stopped early)") << "\n";
    bool ok = true;
    const auto coverage = check_coverage(cfg.m, hist);
    std::cout << "coverage " << coverage.covered() << "/" << coverage.targets.size() << "\n";
    if (opts.mode == EnumerationMode::EarlyExit) {
        write_file(prefix + ".coverage.json", coverage_json(coverage));
        ok = coverage.all_covered();
    }
    if (cfg.m == 4 && hist.complete && opts.convention == Convention::Ordered) {
        std::size_t matched = 0;
        std::cout << "weight expected actual\n";
        for (const auto& [w, expected] : published_m4_counts()) {
            const auto it = hist.counts.find(w);
            const std::uint64_t actual = it == hist.counts.end() ? 0 : it->second;
            matched += actual == expected;
            std::cout << w << ' ' << expected << ' ' << actual
                      << (actual == expected ? "" : "  MISMATCH") << "\n";
        }
        std::cout << "published counts matched " << matched << "/" << published_m4_counts().size()
                  << "\n";
        ok = matched == published_m4_counts().size();
    }
    std::cout << "wrote " << prefix << ".csv\n";
    return ok ? 0 : 1;
}

// ---- spectrum ----

const char* source_id(Provenance::Source s) {
    switch (s) {
        case Provenance::Source::LowSetConstant: return "low-set-constant";
        case Provenance::Source::Formula: return "formula";
        case Provenance::Source::Witness: return "witness";
        case Provenance::Source::Axiom: return "axiom";
        case Provenance::Source::Complement: return "complement";
    }
    return "unknown";
}

int cmd_spectrum(const RunConfig& cfg) {
    if (cfg.m < 12) {
        std::cerr << "spectrum: --m must be at least 12\n";
        return 2;
    }
    const auto predicted = predicted_spectrum(cfg.m);
    auto achieved = assemble_rm6_12_achieved({!cfg.no_axiom});
    while (achieved.m < cfg.m) achieved = induction_step(achieved);

    json difference = json::array();
    for (const auto& [w, p] : predicted.weights) {
        if (!achieved.contains(w)) difference.push_back(w);
    }
    std::size_t outside = 0;
    std::map<std::string, std::size_t> breakdown;
    for (const auto& [w, p] : achieved.weights) {
        outside += !predicted.contains(w);
        ++breakdown[source_id(p.source)];
    }
    json achieved_json = json::parse(spectrum_json(achieved));
    json report{{"r", predicted.r},
                {"m", predicted.m},
                {"rm510_axiom", !cfg.no_axiom},
                {"predicted", {{"size", predicted.size()}, {"weights", predicted.weight_set()}}},
                {"achieved", {{"size", achieved.size()},
                              {"weights", achieved_json["weights"]},
                              {"provenance", achieved_json["provenance"]}}},
                {"difference", difference},
                {"achieved_outside_predicted", outside},
                {"provenance_breakdown", breakdown}};
    std::string text = "RM(" + std::to_string(predicted.r) + "," + std::to_string(predicted.m) +
                       ")\npredicted " + std::to_string(predicted.size()) + "\nachieved " +
                       std::to_string(achieved.size()) + "\nmissing " +
                       std::to_string(difference.size()) + "\n";
    for (const auto& [k, v] : breakdown) text += "  " + k + " " + std::to_string(v) + "\n";
    emit(cfg, report, text);
    return outside == 0 ? 0 : 1;
}

// ---- search ----

int cmd_search(const RunConfig& cfg) {
    SearchOptions o;
    o.target_weight = cfg.weight;
    o.r = cfg.r;
    o.n = cfg.n;
    o.budget = cfg.budget;
    o.seed = cfg.seed;
    const auto f = find_witness(o);
    json report{{"weight", cfg.weight}, {"r", cfg.r}, {"n", cfg.n}, {"seed", cfg.seed},
                {"found", f.has_value()}};
    if (f) report["anf"] = to_string(*f);
    emit(cfg, report, f ? to_string(*f) + "\n" : std::string("not found\n"));
    return f ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg) {
    const auto text = catalog_json();
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        write_file(cfg.out, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Reed-Muller weight spectrum toolkit"};
    app.require_subcommand(1);
    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "stdout format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write the JSON report here");
    };

    auto* weight = app.add_subcommand("weight", "weight and degree of an ANF expression");
    weight->add_option("anf", cfg.anf_text, "ANF text, e.g. x1*x2 + x3")->required();
    weight->add_option("--n", cfg.n, "number of variables")->check(CLI::Range(0, kMaxAnfVars));
    format_opt(weight);

    std::vector<std::string> targets = verify_targets();
    targets.push_back("all");
    auto* verify = app.add_subcommand("verify", "run closed-form and catalog checks");
    verify->add_option("target", cfg.target)->check(CLI::IsMember(targets));
    format_opt(verify);

    auto* enumerate = app.add_subcommand("enumerate", "weight histogram of the concat family");
    enumerate->add_option("--m", cfg.m)->check(CLI::Range(3, 5));
    enumerate->add_option("--mode", cfg.mode)->check(CLI::IsMember({"full", "early_exit"}));
    enumerate->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    enumerate->add_option("--convention", cfg.convention)
        ->check(CLI::IsMember({"ordered", "nondegenerate", "swap-quotient"}));
    enumerate->add_option("--out", cfg.out, "output prefix for .csv and .json");

    auto* spectrum = app.add_subcommand("spectrum", "predicted and achieved RM(m-6,m) weights");
    spectrum->add_option("--m", cfg.m)->check(CLI::Range(12, 22));
    spectrum->add_flag("--no-rm510-axiom", cfg.no_axiom,
                       "drop doubled RM(5,10) weights from the achieved set");
    format_opt(spectrum);

    auto* search = app.add_subcommand("search", "local search for a codeword of given weight");
    search->add_option("weight", cfg.weight)->required();
    search->add_option("--r", cfg.r)->check(CLI::NonNegativeNumber);
    search->add_option("--n", cfg.n)->check(CLI::Range(0, kMaxSearchVars));
    search->add_option("--budget", cfg.budget);
    search->add_option("--seed", cfg.seed);
    format_opt(search);

    auto* catalog = app.add_subcommand("catalog", "export the witness catalog as JSON");
    catalog->add_option("--out", cfg.out);

    CLI11_PARSE(app, argc, argv);
    if (app.got_subcommand(spectrum) && spectrum->count("--m") == 0) cfg.m = 12;
    try {
        if (app.got_subcommand(weight)) return cmd_weight(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(cfg);
        if (app.got_subcommand(search)) return cmd_search(cfg);
        return cmd_catalog(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
