#pragma once

#include "qcanon/laurent.hpp"

#include <vector>

namespace qcanon {

/// Dense matrix over Z[q, q^-1]. Just enough for representation checks and
/// fraction-free rank computations; not a general linear algebra library.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const LaurentPoly& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    LaurentPoly& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const LaurentPoly& s, PolyMatrix a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<LaurentPoly> data_;
};

/// Rank over the fraction field Q(q), computed by fraction-free Bareiss
/// elimination; every division along the way is exact in Z[q, q^-1].
int bareiss_rank(PolyMatrix m);

}  // namespace qcanon
