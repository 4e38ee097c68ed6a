#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rmspectrum/truth_table.hpp"

namespace rmspec {

/// Largest ambient variable count an Anf may carry (one mask bit per variable).
inline constexpr int kMaxAnfVars = 32;

/// Degree reported for the zero function. `degree(f) <= r` holds for it at
/// every r >= 0.
inline constexpr int kZeroDegree = -1;

/// A product of distinct variables x_k, k in 1..n. Bit k-1 of `mask` marks x_k;
/// the empty product is the constant 1.
class Monomial {
public:
    Monomial(int n, std::uint32_t mask);
    /// Builds from 1-based indices; repeated indices collapse (x*x = x).
    Monomial(int n, std::initializer_list<int> vars);
    static Monomial from_vars(int n, std::span<const int> vars);

    int num_vars() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int degree() const;
    std::vector<int> vars() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    int n_;
    std::uint32_t mask_;
};

/// A GF(2) polynomial in algebraic normal form: an XOR of distinct monomials.
/// Terms are stored as masks, sorted ascending, each appearing at most once.
class Anf {
public:
    explicit Anf(int n = 0);
    /// Canonicalizes: terms occurring an even number of times cancel.
    Anf(int n, std::vector<std::uint32_t> masks);

    static Anf zero(int n) { return Anf(n); }
    static Anf one(int n) { return Anf(n, {0u}); }
    static Anf from_monomial(const Monomial& m) { return Anf(m.num_vars(), {m.mask()}); }

    int num_vars() const { return n_; }
    const std::vector<std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    /// Same polynomial over a larger ambient variable count.
    Anf lifted(int n) const;

    Anf& operator+=(const Anf& other);
    friend Anf operator+(Anf a, const Anf& b) { return a += b; }
    /// Adds the constant 1.
    Anf complemented() const;
    friend Anf operator*(const Anf& a, const Anf& b);

    friend bool operator==(const Anf&, const Anf&) = default;

private:
    int n_;
    std::vector<std::uint32_t> terms_;
};

/// Thrown by `parse_anf`; `position()` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar: expr := term ('+' term)* ; term := '0' | '1' | factor ('*' factor)* ;
/// factor := 'x' integer. Whitespace is ignored; products need an explicit '*'.
Anf parse_anf(std::string_view text, int n);
/// Inverse of `parse_anf`: "0" for the zero function, terms joined by " + ".
std::string to_string(const Anf& f);
std::string to_string(const Monomial& m);

/// Evaluates f on every point by a fast Moebius (zeta) transform.
TruthTable anf_to_table(const Anf& f);
/// Evaluates f by OR-ing the table of each term separately.
TruthTable anf_to_table_by_terms(const Anf& f);
/// Recovers the unique ANF of a table (the transform is an involution).
Anf table_to_anf(const TruthTable& t);

/// In-place binary Moebius transform over GF(2). Applied twice it is the identity.
void moebius_transform(TruthTable& t);

int degree(const Anf& f);
int degree(const TruthTable& t);

}  // namespace rmspec
