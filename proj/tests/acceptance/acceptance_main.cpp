#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include "../support/oracles.hpp"
#include "rmspectrum/anf.hpp"
#include "rmspectrum/constructions.hpp"
#include "rmspectrum/enumeration.hpp"
#include "rmspectrum/formulas.hpp"
#include "rmspectrum/io.hpp"
#include "rmspectrum/spectrum.hpp"
#include "rmspectrum/truth_table.hpp"

using namespace rmspec;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

const WeightHistogram& m4_histogram() {
    static const WeightHistogram hist = [] {
        EnumerationOptions opts;
        opts.m = 4;
        opts.threads = worker_count();
        return enumerate_general_concat(opts);
    }();
    return hist;
}

std::set<std::int64_t> predicted_by_parts(int m) {
    const std::int64_t a[] = {0, 64, 96, 112, 120, 124, 126, 128, 136, 144, 148};
    std::set<std::int64_t> out(std::begin(a), std::end(a));
    for (std::int64_t w = 152; w <= (std::int64_t{1} << m) - 152; w += 2) out.insert(w);
    for (auto w : a) out.insert((std::int64_t{1} << m) - w);
    return out;
}

Outcome published_counts() {
    const auto& hist = m4_histogram();
    std::size_t matched = 0;
    for (const auto& [w, expected] : published_m4_counts()) {
        const auto it = hist.counts.find(w);
        matched += it != hist.counts.end() && it->second == expected;
    }
    const bool pass = hist.total == 96'040'000 && matched == 32 &&
                      hist.counts.at(80) == 1'426'248 && hist.counts.at(110) == 33'696 &&
                      hist.counts.at(272) == 2'801'168 && hist.counts.at(302) == 173'088;
    return {pass, std::to_string(matched) + "/32 counts over " + std::to_string(hist.total) +
                      " candidates"};
}

Outcome two_monomial() {
    const auto report = check_two_monomial_formula(10, 5);
    std::uint64_t cases = 0;
    std::uint64_t bad = 0;
    const auto s = oracle::supports(10, 5);
    for (auto a : s) {
        for (auto b : s) {
            ++cases;
            const std::int64_t expect = a == b ? 0 : oracle::weight({a, b}, 10);
            bad += two_monomial_weight(10, 5, std::popcount(a & b)) != expect;
        }
    }
    return {report.cases == 63'504 && report.mismatches == 0 && cases == 63'504 && bad == 0,
            std::to_string(report.cases - report.mismatches) + "/" + std::to_string(report.cases) +
                " library, " + std::to_string(cases - bad) + "/" + std::to_string(cases) +
                " brute force"};
}

Outcome three_monomial() {
    const auto report = check_three_monomial_formula();
    const auto s = oracle::supports(10, 5);
    const Monomial i(10, oracle::mask({1, 2, 3, 4, 5}));
    std::uint64_t cases = 0;
    std::uint64_t bad = 0;
    for (auto j : s) {
        for (auto k : s) {
            const Monomial mj(10, j);
            const Monomial mk(10, k);
            ++cases;
            bad += three_monomial_weight(profile_of(i, mj, mk)) !=
                   oracle::weight({i.mask(), j, k}, 10);
        }
    }
    return {report.cases == 63'504 && report.mismatches == 0 && cases == 63'504 && bad == 0,
            "mismatches " + std::to_string(report.mismatches) + " of " +
                std::to_string(report.cases) + "; brute force " + std::to_string(bad) + " of " +
                std::to_string(cases)};
}

Outcome catalog() {
    std::set<std::int64_t> witness;
    std::set<std::int64_t> flipped;
    std::size_t bad = 0;
    for (const auto& e : witness_catalog()) {
        const auto f = build(e.spec);
        const auto w = oracle::weight(f.terms(), 12);
        bad += w != e.expected_weight || block_weights(e.spec).total != w ||
               oracle::degree(f.terms()) > 6;
        (e.group == CatalogGroup::Witness ? witness : flipped).insert(w);
    }
    const std::set<std::int64_t> want_witness{154, 158, 162, 166, 174, 178, 182, 186,
                                              190, 194, 198, 202, 206, 210, 214};
    std::set<std::int64_t> want_flipped;
    for (std::int64_t w = 1050; w <= 1110; w += 4) want_flipped.insert(w);
    for (std::int64_t w = 1056; w <= 1116; w += 4) want_flipped.insert(w);
    return {bad == 0 && witness == want_witness && flipped == want_flipped,
            std::to_string(witness_catalog().size() - bad) + "/" +
                std::to_string(witness_catalog().size()) + " entries reproduce"};
}

Outcome coverage() {
    const auto report = check_coverage(4, m4_histogram());
    std::size_t verified = 0;
    for (const auto& t : report.targets) {
        if (!t.witness) continue;
        const auto f = build(*t.witness);
        verified += oracle::weight(f.terms(), 10) == t.weight && oracle::degree(f.terms()) <= 5;
    }
    return {report.all_covered() && report.targets.size() == 32 && verified == 32,
            std::to_string(report.covered()) + "/" + std::to_string(report.targets.size()) +
                " targets, " + std::to_string(verified) + " witnesses checked"};
}

Outcome spectrum() {
    const auto predicted = predicted_spectrum(12);
    bool pass = predicted.size() == 1919 && predicted.weight_set() == predicted_by_parts(12);
    for (std::int64_t w : {0, 64, 96, 112, 120, 124, 126, 128, 136, 144, 148, 152, 154, 156, 158}) {
        pass &= predicted.contains(w);
    }
    pass &= !predicted.contains(150);
    const auto achieved = assemble_rm6_12_achieved({true});
    std::size_t uncovered = 0;
    for (std::int64_t w = 152; w <= 4096 - 152; w += 2) uncovered += !achieved.contains(w);
    std::size_t outside = 0;
    for (const auto& [w, p] : achieved.weights) outside += !predicted.contains(w);
    auto s = predicted;
    int induction_ok = 0;
    for (int m = 12; m < 20; ++m) {
        s = induction_step(s);
        induction_ok += s.weight_set() == predicted_spectrum(m + 1).weight_set() &&
                        s.weight_set() == predicted_by_parts(m + 1);
    }
    pass &= uncovered == 0 && outside == 0 && induction_ok == 8;
    return {pass, "predicted " + std::to_string(predicted.size()) + ", achieved " +
                      std::to_string(achieved.size()) + ", uncovered " +
                      std::to_string(uncovered) + ", outside " + std::to_string(outside) +
                      ", induction " + std::to_string(induction_ok) + "/8"};
}

Outcome cosets() {
    const auto ws = coset_witnesses_rm4_8();
    std::size_t ok = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        ok += ws[i].weight == static_cast<std::int64_t>(16 * i) &&
              oracle::weight(ws[i].function.terms(), 8) == ws[i].weight &&
              oracle::degree(ws[i].function.terms()) <= 4;
    }
    return {ws.size() == 17 && ok == 17, std::to_string(ok) + "/17 valid"};
}

TruthTable random_table(int n, std::mt19937_64& rng) {
    TruthTable t(n);
    for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
    return t;
}

Outcome properties() {
    std::mt19937_64 rng(2024);
    std::size_t failures = 0;
    std::size_t cases = 0;
    auto check = [&](bool ok) {
        ++cases;
        failures += !ok;
    };
    auto table_laws = [&](const TruthTable& t) {
        const int n = t.num_vars();
        const auto f = table_to_anf(t);
        check(anf_to_table(f) == t);
        check((weight(t) % 2 == 1) == (degree(f) == n));
        check(weight(complement(t)) == t.size() - weight(t));
        for (int k = 0; k < 4; ++k) {
            const std::uint32_t x = static_cast<std::uint32_t>(rng() % t.size());
            check(oracle::eval_point(f.terms(), x) == t.get(x));
        }
    };
    for (int n = 0; n <= 4; ++n) {
        const std::uint64_t functions = std::uint64_t{1} << (1u << n);
        for (std::uint64_t bits = 0; bits < functions; ++bits) {
            TruthTable t(n);
            for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, (bits >> i) & 1u);
            table_laws(t);
            check(oracle::weight(table_to_anf(t).terms(), n) == static_cast<std::int64_t>(weight(t)));
        }
    }
    for (int i = 0; i < 10'000; ++i) {
        const auto t = random_table(10, rng);
        table_laws(t);
        const auto u = random_table(10, rng);
        check(weight(concat2(t, u)) == weight(t) + weight(u));
    }

    EnumerationOptions opts;
    opts.m = 4;
    std::string reference;
    for (unsigned threads : {1u, 2u, 8u}) {
        opts.threads = threads;
        const auto csv = histogram_csv(enumerate_general_concat(opts));
        if (reference.empty()) reference = csv;
        check(csv == reference);
    }
    return {failures == 0, std::to_string(cases - failures) + "/" + std::to_string(cases) +
                               " property checks"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1", "m=4 enumeration reproduces published counts", published_counts},
        {"AC2", "two-monomial closed form, exhaustive", two_monomial},
        {"AC3", "three-monomial closed form, exhaustive", three_monomial},
        {"AC4", "witness catalog regression", catalog},
        {"AC5", "m=4 coverage targets", coverage},
        {"AC6", "RM(6,12) spectrum assembly and induction", spectrum},
        {"AC7", "RM(4,8) weights 16i by explicit functions", cosets},
        {"AC8", "round trip, additivity, complement, parity, thread invariance", properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
                  << o.detail << "; " << secs << " s)" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
