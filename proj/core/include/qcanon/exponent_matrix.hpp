#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qcanon {

/// Square matrix of nonnegative integer exponents indexing a PBW monomial
/// x^A = prod x_{ij}^{a_ij} with factors in row-major order. Indices are
/// 0-based internally; rendering is 1-based.
class ExponentMatrix {
public:
    explicit ExponentMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

    static ExponentMatrix identity(int n);
    static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

    /// Total degree, the sum of all entries.
    int degree() const;
    /// sum a_ij * i * j with 1-based indices; strictly decreases along the
    /// 2x2 defect moves that generate the block partial order.
    long long stat() const;

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    int min_diagonal() const;

    ExponentMatrix transposed() const;
    /// A + k * Id (k may be negative; entries must stay nonnegative).
    ExponentMatrix plus_identity(int k) const;

    /// Letters (i, j) of the sorted monomial word, with multiplicities.
    std::vector<std::pair<int, int>> word() const;

    friend bool operator==(const ExponentMatrix& x, const ExponentMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const ExponentMatrix& x, const ExponentMatrix& y) { return !(x == y); }
    /// Row-major lexicographic order; used for deterministic map iteration.
    friend bool operator<(const ExponentMatrix& x, const ExponentMatrix& y) {
        if (x.n_ != y.n_) return x.n_ < y.n_;
        return x.a_ < y.a_;
    }

private:
    int n_;
    std::vector<int> a_;
};

/// Number of ordered same-row pairs plus same-column pairs of letters,
/// i.e. sum_i sum_{j>k} a_ij a_ik + sum_j sum_{i>k} a_ij a_kj.
/// The modified monomial is x(A) = q^{-pair_statistic(A)} x^A.
long long pair_statistic(const ExponentMatrix& a);

std::string to_string(const ExponentMatrix& a);

}  // namespace qcanon
