#include "qcanon/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qcanon {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("size mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("size mismatch");
    PolyMatrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("size mismatch");
    PolyMatrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

PolyMatrix operator*(const LaurentPoly& s, PolyMatrix a) {
    for (auto& p : a.data_) p *= s;
    return a;
}

int bareiss_rank(PolyMatrix m) {
    int rank = 0;
    LaurentPoly prev(1);
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const LaurentPoly piv = m.at(rank, col);
        for (int i = rank + 1; i < m.rows(); ++i) {
            const LaurentPoly head = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = exact_div(piv * m.at(i, j) - head * m.at(rank, j), prev);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace qcanon
