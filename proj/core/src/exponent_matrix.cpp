#include "qcanon/exponent_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qcanon {

ExponentMatrix ExponentMatrix::identity(int n) {
    ExponentMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    ExponentMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix not square");
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] < 0) throw std::invalid_argument("negative exponent");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

int ExponentMatrix::degree() const {
    int d = 0;
    for (int v : a_) d += v;
    return d;
}

long long ExponentMatrix::stat() const {
    long long s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += static_cast<long long>(at(i, j)) * (i + 1) * (j + 1);
    return s;
}

std::vector<int> ExponentMatrix::row_sums() const {
    std::vector<int> r(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += at(i, j);
    return r;
}

std::vector<int> ExponentMatrix::col_sums() const {
    std::vector<int> c(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) c[j] += at(i, j);
    return c;
}

int ExponentMatrix::min_diagonal() const {
    int m = at(0, 0);
    for (int i = 1; i < n_; ++i) m = std::min(m, at(i, i));
    return m;
}

ExponentMatrix ExponentMatrix::transposed() const {
    ExponentMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExponentMatrix ExponentMatrix::plus_identity(int k) const {
    ExponentMatrix m(*this);
    for (int i = 0; i < n_; ++i) {
        m.at(i, i) += k;
        if (m.at(i, i) < 0) throw std::invalid_argument("negative exponent");
    }
    return m;
}

std::vector<std::pair<int, int>> ExponentMatrix::word() const {
    std::vector<std::pair<int, int>> w;
    w.reserve(static_cast<size_t>(degree()));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int r = 0; r < at(i, j); ++r) w.emplace_back(i, j);
    return w;
}

long long pair_statistic(const ExponentMatrix& a) {
    long long s = 0;
    int n = a.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = a.at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < j; ++k) s += v * a.at(i, k);  // same row
            for (int k = 0; k < i; ++k) s += v * a.at(k, j);  // same column
        }
    return s;
}

std::string to_string(const ExponentMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.n(); ++i) {
        if (i) os << ";";
        for (int j = 0; j < a.n(); ++j) {
            if (j) os << ",";
            os << a.at(i, j);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace qcanon
