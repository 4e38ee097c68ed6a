#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's transform or table code.

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace rmspec::oracle {

inline bool eval_point(const std::vector<std::uint32_t>& terms, std::uint32_t x) {
    bool v = false;
    for (auto t : terms) v ^= (x & t) == t;
    return v;
}

inline std::int64_t weight(const std::vector<std::uint32_t>& terms, int n) {
    std::int64_t w = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) w += eval_point(terms, x);
    return w;
}

inline int degree(const std::vector<std::uint32_t>& terms) {
    int d = -1;
    for (auto t : terms) d = std::max(d, std::popcount(t));
    return d;
}

inline std::vector<std::uint32_t> supports(int n, int d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        if (std::popcount(s) == d) out.push_back(s);
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

inline std::uint32_t mask(std::initializer_list<int> vars) {
    std::uint32_t m = 0;
    for (int v : vars) m |= std::uint32_t{1} << (v - 1);
    return m;
}

}  // namespace rmspec::oracle
