#pragma once

#include "qcanon/exponent_matrix.hpp"
#include "qcanon/laurent.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcanon {

/// A scalar multiple of a product of generators x_{ij}, not necessarily in
/// sorted order. Letters are 0-based (row, col) pairs.
struct Word {
    std::vector<std::pair<int, int>> letters;
    LaurentPoly scalar{1};
};

/// Which basis the coefficients of an AlgebraElement refer to:
///   plain     x^A           (sorted generator products)
///   modified  x(A) = q^{-pair_statistic(A)} x^A
///   canonical b(A)          (bar-invariant basis)
enum class BasisTag { plain, modified, canonical };

/// Finite linear combination of basis monomials of O_q(M_n), with coefficients
/// in Z[q, q^-1]. Purely a coefficient container; products and bar are free
/// functions and only defined for the plain basis.
class AlgebraElement {
public:
    AlgebraElement(int n, BasisTag basis) : n_(n), basis_(basis) {}

    static AlgebraElement unit(int n, BasisTag basis);
    static AlgebraElement monomial(const ExponentMatrix& a, const LaurentPoly& c, BasisTag basis);

    int n() const { return n_; }
    BasisTag basis() const { return basis_; }
    const std::map<ExponentMatrix, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const ExponentMatrix& a) const;

    void add_term(const ExponentMatrix& a, const LaurentPoly& c);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const LaurentPoly& s);
    AlgebraElement operator-() const;
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const LaurentPoly& s) { return a *= s; }
    friend AlgebraElement operator*(const LaurentPoly& s, AlgebraElement a) { return a *= s; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
    int n_;
    BasisTag basis_;
    std::map<ExponentMatrix, LaurentPoly> terms_;
};

/// The generator x_{ij} (0-based) as a plain-basis element.
AlgebraElement generator_element(int n, int i, int j);

/// Termination certificate for straightening: (sum over letters of
/// (i+1)*(j+1), number of out-of-order letter pairs). Every rewrite step
/// strictly decreases this pair lexicographically.
std::pair<long long, long long> termination_measure(const Word& w);

/// Rewrites an arbitrary word into the sorted PBW basis using the defining
/// relations. With checked == true, asserts the termination measure decreases
/// at every rewrite (slow; for tests).
AlgebraElement straighten(int n, const Word& w, bool checked = false);

/// Product in the plain basis.
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

/// The bar involution: q -> q^-1 on coefficients, fixes the generators,
/// reverses products. Input and output in the plain basis.
AlgebraElement bar_map(const AlgebraElement& a);

/// The transpose automorphism x_{ij} -> x_{ji}; acts on PBW monomials by
/// transposing the exponent matrix (the reordering needs no corrections).
AlgebraElement transpose_map(const AlgebraElement& a);

/// Conversions between coefficient conventions (plain <-> modified).
AlgebraElement to_modified(const AlgebraElement& a);
AlgebraElement to_plain_from_modified(const AlgebraElement& a);

/// All exponent matrices with the given row and column sums, ordered by
/// decreasing stat() with row-major lex as tie break. The first entry of a
/// nonempty block is the unique stat-maximal element used as the block label.
std::vector<ExponentMatrix> enumerate_block(const std::vector<int>& ro, const std::vector<int>& co);

/// Strict partial order generated by the 2x2 defect moves
/// (i,j),(s,t) -> (i,t),(s,j) with i<s, j<t. Decided by downward search
/// from a; both arguments must share row and column sums to be comparable.
bool move_less(const ExponentMatrix& b, const ExponentMatrix& a);

/// Rendering such as "(q^-2) x[1,1]^2 x[2,2] + (1) x[1,2] x[2,1]",
/// terms by decreasing stat then lex, letters 1-based.
std::string to_string(const AlgebraElement& a);

}  // namespace qcanon
