#include "rmspectrum/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace rmspec {

namespace {

void check_vars(int n) {
    if (n < 0 || n > kMaxAnfVars) {
        throw std::invalid_argument("variable count out of range: " + std::to_string(n));
    }
}

std::uint32_t var_bits(int n) {
    return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

class AnfParser {
public:
    AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

    Anf parse() {
        std::vector<std::uint32_t> masks;
        parse_term(masks);
        skip_space();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '+') fail("expected '+' or end of input");
            ++pos_;
            parse_term(masks);
            skip_space();
        }
        return Anf(n_, std::move(masks));
    }

private:
    void parse_term(std::vector<std::uint32_t>& masks) {
        skip_space();
        if (pos_ >= text_.size()) fail("expected a term");
        const char c = text_[pos_];
        if (c == '0' || c == '1') {
            ++pos_;
            if (c == '1') masks.push_back(0);
            return;
        }
        std::uint32_t mask = parse_factor();
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            skip_space();
            mask |= parse_factor();
            skip_space();
        }
        masks.push_back(mask);
    }

    std::uint32_t parse_factor() {
        if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected variable 'x<index>'");
        ++pos_;
        const std::size_t start = pos_;
        long long index = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            index = index * 10 + (text_[pos_] - '0');
            if (index > kMaxAnfVars) index = kMaxAnfVars + 1;  // saturate; rejected below
            ++pos_;
        }
        if (pos_ == start) fail("expected variable index");
        if (index < 1 || index > n_) {
            throw ParseError("variable index x" + std::string(text_.substr(start, pos_ - start)) +
                                 " out of range [1," + std::to_string(n_) + "]",
                             start);
        }
        return std::uint32_t{1} << (index - 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Monomial::Monomial(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    check_vars(n);
    if ((mask & ~var_bits(n)) != 0) {
        throw std::invalid_argument("monomial uses a variable beyond x" + std::to_string(n));
    }
}

Monomial::Monomial(int n, std::initializer_list<int> vars)
    : Monomial(from_vars(n, std::span<const int>(vars.begin(), vars.size()))) {}

Monomial Monomial::from_vars(int n, std::span<const int> vars) {
    check_vars(n);
    std::uint32_t mask = 0;
    for (int v : vars) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("variable index " + std::to_string(v) + " out of range [1," +
                                        std::to_string(n) + "]");
        }
        mask |= std::uint32_t{1} << (v - 1);
    }
    return Monomial(n, mask);
}

int Monomial::degree() const { return std::popcount(mask_); }

std::vector<int> Monomial::vars() const {
    std::vector<int> out;
    for (int k = 0; k < 32; ++k) {
        if (mask_ & (std::uint32_t{1} << k)) out.push_back(k + 1);
    }
    return out;
}

Anf::Anf(int n) : n_(n) { check_vars(n); }

Anf::Anf(int n, std::vector<std::uint32_t> masks) : n_(n), terms_(std::move(masks)) {
    check_vars(n);
    const std::uint32_t allowed = var_bits(n);
    for (auto m : terms_) {
        if ((m & ~allowed) != 0) {
            throw std::invalid_argument("term uses a variable beyond x" + std::to_string(n));
        }
    }
    std::sort(terms_.begin(), terms_.end());
    // Keep a mask iff it occurs an odd number of times.
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2 == 1) terms_[out++] = terms_[i];
        i = j;
    }
    terms_.resize(out);
}

int Anf::degree() const {
    int d = kZeroDegree;
    for (auto m : terms_) d = std::max(d, std::popcount(m));
    return d;
}

Anf Anf::lifted(int n) const {
    if (n < n_) throw std::invalid_argument("cannot lift to fewer variables");
    Anf out(n);
    out.terms_ = terms_;
    return out;
}

Anf& Anf::operator+=(const Anf& other) {
    if (n_ != other.n_) throw std::invalid_argument("add: variable count mismatch");
    std::vector<std::uint32_t> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Anf Anf::complemented() const { return *this + Anf::one(n_); }

Anf operator*(const Anf& a, const Anf& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("multiply: variable count mismatch");
    std::vector<std::uint32_t> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (auto x : a.terms_) {
        for (auto y : b.terms_) products.push_back(x | y);
    }
    return Anf(a.n_, std::move(products));
}

Anf parse_anf(std::string_view text, int n) {
    check_vars(n);
    return AnfParser(text, n).parse();
}

std::string to_string(const Monomial& m) {
    if (m.mask() == 0) return "1";
    std::string out;
    for (int v : m.vars()) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v);
    }
    return out;
}

std::string to_string(const Anf& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto mask : f.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(Monomial(f.num_vars(), mask));
    }
    return out;
}

void moebius_transform(TruthTable& t) {
    // Stage k folds the half of the table with x_(k+1) = 0 into the half with
    // x_(k+1) = 1. The first six stages act inside each word.
    static constexpr std::uint64_t kUpper[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    const int n = t.num_vars();
    auto words = t.words();
    for (int k = 0; k < std::min(n, 6); ++k) {
        const int shift = 1 << k;
        for (auto& w : words) w ^= (w << shift) & kUpper[k];
    }
    for (int k = 6; k < n; ++k) {
        const std::size_t stride = std::size_t{1} << (k - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) words[i + stride] ^= words[i];
        }
    }
}

TruthTable anf_to_table(const Anf& f) {
    TruthTable t(f.num_vars());
    for (auto mask : f.terms()) t.flip(mask);
    moebius_transform(t);
    return t;
}

TruthTable anf_to_table_by_terms(const Anf& f) {
    TruthTable t(f.num_vars());
    for (auto mask : f.terms()) t ^= TruthTable::monomial(f.num_vars(), mask);
    return t;
}

Anf table_to_anf(const TruthTable& t) {
    TruthTable coeffs = t;
    moebius_transform(coeffs);
    std::vector<std::uint32_t> masks;
    const auto words = coeffs.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            masks.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return Anf(t.num_vars(), std::move(masks));
}

int degree(const Anf& f) { return f.degree(); }

int degree(const TruthTable& t) { return table_to_anf(t).degree(); }

}  // namespace rmspec
