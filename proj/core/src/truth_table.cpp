#include "rmspectrum/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rmspec {

namespace {

std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

std::uint64_t low_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

void require_same_vars(const TruthTable& a, const TruthTable& b, const char* op) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument(std::string(op) + ": variable count mismatch (" +
                                    std::to_string(a.num_vars()) + " vs " +
                                    std::to_string(b.num_vars()) + ")");
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
    if (n < 0 || n > kMaxTableVars) {
        throw std::invalid_argument("truth table variable count out of range: " + std::to_string(n));
    }
    words_.assign(word_count(n), 0);
}

TruthTable TruthTable::ones(int n) {
    TruthTable t(n);
    std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
    t.clear_padding();
    return t;
}

TruthTable TruthTable::monomial(int n, std::uint32_t mask) {
    TruthTable t(n);
    if (n < 32 && (mask >> n) != 0) {
        throw std::invalid_argument("monomial mask uses variables beyond x" + std::to_string(n));
    }
    // Within a word the low six variables select a fixed bit pattern; the
    // remaining variables select which words carry it.
    static constexpr std::uint64_t kVarPattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    std::uint64_t pattern = ~std::uint64_t{0};
    for (int k = 0; k < std::min(n, 6); ++k) {
        if (mask & (1u << k)) pattern &= kVarPattern[k];
    }
    const std::uint64_t high = mask >> 6;
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
        if ((w & high) == high) t.words_[w] = pattern;
    }
    t.clear_padding();
    return t;
}

TruthTable TruthTable::from_hex(int n, std::string_view hex) {
    TruthTable t(n);
    const std::size_t bytes = std::max<std::size_t>(1, t.size() / 8);
    if (hex.size() != 2 * bytes) {
        throw std::invalid_argument("hex table length " + std::to_string(hex.size()) +
                                    " does not match 2^" + std::to_string(n) + " bits");
    }
    for (std::size_t j = 0; j < bytes; ++j) {
        const int hi = hex_value(hex[2 * j]);
        const int lo = hex_value(hex[2 * j + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("invalid hex digit at position " + std::to_string(2 * j));
        }
        const std::uint64_t byte = static_cast<std::uint64_t>(hi * 16 + lo);
        t.words_[j / 8] |= byte << (8 * (j % 8));
    }
    const std::uint64_t before = t.words_[0];
    t.clear_padding();
    if (t.words_[0] != before) {
        throw std::invalid_argument("hex table sets bits beyond 2^" + std::to_string(n));
    }
    return t;
}

void TruthTable::set(std::uint64_t index, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= bit;
    } else {
        words_[index >> 6] &= ~bit;
    }
}

std::uint64_t TruthTable::weight() const {
    std::uint64_t w = 0;
    for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
    require_same_vars(*this, other, "add");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
    require_same_vars(*this, other, "and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

TruthTable TruthTable::operator~() const {
    TruthTable t = *this;
    for (auto& word : t.words_) word = ~word;
    t.clear_padding();
    return t;
}

TruthTable TruthTable::block(int k, std::uint64_t i) const {
    if (k < 0 || k > n_ || i >= (std::uint64_t{1} << k)) {
        throw std::invalid_argument("block index out of range");
    }
    const int sub_vars = n_ - k;
    TruthTable out(sub_vars);
    if (sub_vars >= 6) {
        const std::size_t len = out.words_.size();
        std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(i * len), len, out.words_.begin());
    } else {
        const std::uint64_t len = out.size();
        const std::uint64_t start = i * len;
        out.words_[0] = (words_[start >> 6] >> (start & 63)) & low_mask(sub_vars);
    }
    return out;
}

std::string TruthTable::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t bytes = std::max<std::size_t>(1, size() / 8);
    std::string out;
    out.reserve(2 * bytes);
    for (std::size_t j = 0; j < bytes; ++j) {
        const auto byte = static_cast<unsigned>((words_[j / 8] >> (8 * (j % 8))) & 0xFF);
        out.push_back(kDigits[byte >> 4]);
        out.push_back(kDigits[byte & 15]);
    }
    return out;
}

void TruthTable::clear_padding() {
    if (n_ < 6) words_[0] &= low_mask(n_);
}

std::uint64_t weight(const TruthTable& t) { return t.weight(); }

TruthTable add(const TruthTable& f, const TruthTable& g) { return f ^ g; }

TruthTable complement(const TruthTable& f) { return ~f; }

std::uint64_t distance(const TruthTable& f, const TruthTable& g) { return (f ^ g).weight(); }

TruthTable concat2(const TruthTable& f1, const TruthTable& f2) {
    require_same_vars(f1, f2, "concat2");
    const int n = f1.num_vars();
    TruthTable out(n + 1);
    auto dst = out.words();
    if (n >= 6) {
        std::copy(f1.words().begin(), f1.words().end(), dst.begin());
        std::copy(f2.words().begin(), f2.words().end(),
                  dst.begin() + static_cast<std::ptrdiff_t>(f1.words().size()));
    } else {
        dst[0] = f1.words()[0] | (f2.words()[0] << (std::uint64_t{1} << n));
    }
    return out;
}

TruthTable concat4(const TruthTable& f1, const TruthTable& f2,
                   const TruthTable& f3, const TruthTable& f4) {
    return concat2(concat2(f1, f2), concat2(f3, f4));
}

}  // namespace rmspec
