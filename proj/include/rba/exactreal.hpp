#pragma once

// Exact arithmetic in the ring of Q-linear combinations of square roots of
// square-free positive integers. Every scalar in the library is a
// RadicalNumber; floating point never enters a correctness path.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rba {

using Integer = mpz_class;
using Rational = mpq_class;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

/// Trial-division limit for square-free factorization. Initialized from the
/// environment variable RBA_FORGE_FACTOR_BOUND (default 10^6).
std::uint64_t factor_bound();
void set_factor_bound(std::uint64_t bound);

/// n = square² · squarefree, with squarefree ≥ 1. Throws DomainError when n
/// has a cofactor that trial division up to factor_bound() cannot resolve.
struct SquareFreeSplit {
    Integer square_root;
    Integer squarefree;
};
SquareFreeSplit split_square_free(const Integer& n);

/// Distinct primes of a positive integer, ascending.
std::vector<Integer> prime_factors(const Integer& n);

/// √q = coeff · √radicand with coeff ≥ 0 and radicand square-free.
struct RootForm {
    Rational coeff;
    Integer radicand;
};
RootForm normalize_root(const Rational& q);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class RadicalNumber {
public:
    struct Term {
        Integer radicand;  // square-free, ≥ 1
        Rational coeff;    // nonzero
        bool operator==(const Term&) const = default;
    };

    RadicalNumber() = default;
    RadicalNumber(long value);  // NOLINT(google-explicit-constructor)
    RadicalNumber(const Rational& value);  // NOLINT(google-explicit-constructor)
    RadicalNumber(const Integer& value);  // NOLINT(google-explicit-constructor)

    /// coeff · √radicand for an arbitrary positive integer radicand.
    static RadicalNumber root_term(const Rational& coeff, const Integer& radicand);
    /// √q for rational q ≥ 0.
    static RadicalNumber sqrt(const Rational& q);
    /// Sums the given terms; radicands need not be square-free.
    static RadicalNumber from_terms(const std::vector<Term>& terms);

    /// Sorted by radicand; the radicand-1 term, if any, comes first.
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_integer() const;
    Rational rational_part() const;
    std::optional<Rational> to_rational() const;
    Integer denominator_lcm() const;
    std::vector<Integer> radicands() const;

    RadicalNumber operator-() const;
    RadicalNumber& operator+=(const RadicalNumber& rhs);
    RadicalNumber& operator-=(const RadicalNumber& rhs);
    RadicalNumber& operator*=(const RadicalNumber& rhs);
    RadicalNumber& operator/=(const RadicalNumber& rhs);

    friend RadicalNumber operator+(RadicalNumber lhs, const RadicalNumber& rhs) { return lhs += rhs; }
    friend RadicalNumber operator-(RadicalNumber lhs, const RadicalNumber& rhs) { return lhs -= rhs; }
    friend RadicalNumber operator*(const RadicalNumber& lhs, const RadicalNumber& rhs);
    friend RadicalNumber operator/(const RadicalNumber& lhs, const RadicalNumber& rhs);

    bool operator==(const RadicalNumber& rhs) const = default;
    friend std::strong_ordering operator<=>(const RadicalNumber& lhs, const RadicalNumber& rhs);

    RadicalNumber inverse() const;
    /// Image under the automorphism √p ↦ −√p for the prime p.
    RadicalNumber galois_flip(const Integer& prime) const;

    /// Exact sign: −1, 0 or +1.
    int sign() const;

    /// Rational interval [lo, hi] containing the value; each square root is
    /// enclosed to within 2^-bits.
    std::pair<Rational, Rational> enclose(unsigned bits) const;

    /// Correctly rounded decimal with `digits` fractional digits.
    std::string to_decimal(int digits) const;

    /// Plain-text form, e.g. "-1/4 + 5/4*sqrt(3)".
    std::string str() const;

private:
    explicit RadicalNumber(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

    std::vector<Term> terms_;
};

RadicalNumber abs(const RadicalNumber& x);

std::ostream& operator<<(std::ostream& os, const RadicalNumber& x);

}  // namespace rba
