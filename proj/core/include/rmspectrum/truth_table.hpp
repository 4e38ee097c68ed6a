#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmspec {

/// Largest variable count for which a truth table may be materialized.
inline constexpr int kMaxTableVars = 26;

/// Truth table of an n-variable Boolean function, packed 64 points per word.
///
/// The point x = (x_1, ..., x_n) lives at index sum_k x_k * 2^(k-1), so x_1 is
/// the least significant index bit. With that layout, concatenating two
/// tables along a new top variable is a plain append of the word vectors.
/// For n < 6 only the low 2^n bits of the single word are meaningful; the
/// rest are kept zero.
class TruthTable {
public:
    TruthTable() : TruthTable(0) {}
    explicit TruthTable(int n);

    static TruthTable zeros(int n) { return TruthTable(n); }
    static TruthTable ones(int n);
    /// Table of the monomial prod_{k in mask} x_k (bit k-1 of `mask` set for x_k).
    static TruthTable monomial(int n, std::uint32_t mask);

    /// Parses the lowercase hex serialization written by `to_hex`.
    static TruthTable from_hex(int n, std::string_view hex);

    int num_vars() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }

    bool get(std::uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1u;
    }
    void set(std::uint64_t index, bool value);
    void flip(std::uint64_t index) { words_[index >> 6] ^= std::uint64_t{1} << (index & 63); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::uint64_t weight() const;

    TruthTable& operator^=(const TruthTable& other);
    TruthTable& operator&=(const TruthTable& other);
    friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
    friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
    TruthTable operator~() const;

    /// Sub-table of variables x_1..x_(n-k) for a fixed assignment of the top k
    /// variables; block i of 2^k in concatenation order.
    TruthTable block(int k, std::uint64_t i) const;

    /// Two hex chars per byte, byte j holds indices 8j..8j+7 with index 8j in
    /// bit 0. Tables shorter than a byte occupy the low bits of one byte.
    std::string to_hex() const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    void clear_padding();

    int n_;
    std::vector<std::uint64_t> words_;
};

std::uint64_t weight(const TruthTable& t);
TruthTable add(const TruthTable& f, const TruthTable& g);
TruthTable complement(const TruthTable& f);
/// Hamming distance, weight(f + g).
std::uint64_t distance(const TruthTable& f, const TruthTable& g);

/// f1 || f2: the (n+1)-variable function equal to f1 when x_(n+1) = 0 and
/// f2 when x_(n+1) = 1.
TruthTable concat2(const TruthTable& f1, const TruthTable& f2);
/// f1 || f2 || f3 || f4 over n+2 variables, selected by (x_(n+1), x_(n+2)).
TruthTable concat4(const TruthTable& f1, const TruthTable& f2,
                   const TruthTable& f3, const TruthTable& f4);

}  // namespace rmspec
