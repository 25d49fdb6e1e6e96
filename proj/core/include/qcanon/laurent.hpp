#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qcanon {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in q over arbitrary-precision integers.
///
/// Terms are kept sorted by exponent with no zero coefficients, so equality,
/// hashing and serialization are canonical. All arithmetic is exact; there is
/// no division except the restricted exact_div below.
class LaurentPoly {
public:
    using Term = std::pair<int, BigInt>;  // (exponent, coefficient)

    LaurentPoly() = default;
    LaurentPoly(long long c);  // constant polynomial
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(int exponent, BigInt coeff = BigInt(1));
    /// Builds from arbitrary (exponent, coefficient) pairs; merges and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True if the polynomial is c*q^e for a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }
    BigInt coeff(int exponent) const;
    int min_exponent() const;  // requires !is_zero()
    int max_exponent() const;  // requires !is_zero()

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiplies by q^shift.
    LaurentPoly shifted(int shift) const;

    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt eval_at_one() const;

private:
    std::vector<Term> terms_;
    void normalize();
};

/// The bar map q -> q^{-1}; an involutive ring automorphism of Z[q,q^{-1}].
LaurentPoly bar(const LaurentPoly& p);

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// Gaussian binomial coefficient in the variable v = q^{base_exponent},
/// i.e. the polynomial \prod_{i=1}^{k} (1 - v^{n-k+i})/(1 - v^i) evaluated
/// through the v-Pascal recurrence (no division is performed).
/// Throws std::invalid_argument("binomial undefined") when k > n.
LaurentPoly gauss_binomial(unsigned n, unsigned k, int base_exponent);

/// [m] = (q^{-4m} - 1)/(q^{-4} - 1), exposed as gauss_binomial(m, 1, -4).
LaurentPoly q_bracket(unsigned m);

/// Solves h - bar(h) = p for the unique h with all exponents >= 1.
/// Requires bar(p) = -p; otherwise throws
/// std::invalid_argument("not skew-symmetric").
/// The solution is the strictly-positive-exponent part of p.
LaurentPoly solve_skew(const LaurentPoly& p);

/// All exponents >= 1 (membership in q*Z[q]).
bool in_qZq(const LaurentPoly& p);
/// All exponents >= 0 (membership in Z[q]).
bool in_Zq(const LaurentPoly& p);
/// All coefficients nonnegative.
bool has_nonnegative_coeffs(const LaurentPoly& p);

/// Exact quotient a / b; throws std::domain_error if b does not divide a
/// (or b == 0).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Inverse of a unit +-q^m; throws std::domain_error otherwise.
LaurentPoly unit_inverse(const LaurentPoly& u);

/// Rendered with ascending exponents, e.g. "q^-2 + 3 - 2*q^4".
std::string to_string(const LaurentPoly& p);

}  // namespace qcanon
