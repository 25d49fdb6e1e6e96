#include "qcanon/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcanon {

AlgebraElement AlgebraElement::unit(int n, BasisTag basis) {
    return monomial(ExponentMatrix(n), LaurentPoly(1), basis);
}

AlgebraElement AlgebraElement::monomial(const ExponentMatrix& a, const LaurentPoly& c, BasisTag basis) {
    AlgebraElement e(a.n(), basis);
    e.add_term(a, c);
    return e;
}

LaurentPoly AlgebraElement::coeff(const ExponentMatrix& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgebraElement::add_term(const ExponentMatrix& a, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    if (n_ != rhs.n_ || basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch");
    for (const auto& [a, c] : rhs.terms_) add_term(a, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    if (n_ != rhs.n_ || basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch");
    for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e(n_, basis_);
    for (const auto& [a, c] : terms_) e.terms_.emplace(a, -c);
    return e;
}

AlgebraElement generator_element(int n, int i, int j) {
    ExponentMatrix a(n);
    a.at(i, j) = 1;
    return AlgebraElement::monomial(a, LaurentPoly(1), BasisTag::plain);
}

std::pair<long long, long long> termination_measure(const Word& w) {
    long long weight = 0, inversions = 0;
    const auto& L = w.letters;
    for (const auto& [i, j] : L) weight += static_cast<long long>(i + 1) * (j + 1);
    for (size_t p = 0; p < L.size(); ++p)
        for (size_t r = p + 1; r < L.size(); ++r)
            if (L[r] < L[p]) ++inversions;
    return {weight, inversions};
}

namespace {

struct WorkItem {
    std::vector<std::pair<int, int>> letters;
    LaurentPoly scalar;
    size_t pos;  // letters[0..pos] are known sorted
};

void require_measure_decrease(const std::pair<long long, long long>& before,
                              const std::vector<std::pair<int, int>>& letters,
                              const LaurentPoly& scalar) {
    auto after = termination_measure({letters, scalar});
    if (after >= before) throw std::logic_error("straightening measure failed to decrease");
}

}  // namespace

AlgebraElement straighten(int n, const Word& w, bool checked) {
    AlgebraElement out(n, BasisTag::plain);
    if (w.scalar.is_zero()) return out;
    for (const auto& [i, j] : w.letters)
        if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("letter out of range");

    const LaurentPoly q2 = LaurentPoly::monomial(2);
    const LaurentPoly qm2 = LaurentPoly::monomial(-2);
    const LaurentPoly correction_scalar = qm2 - q2;

    std::vector<WorkItem> stack;
    stack.push_back({w.letters, w.scalar, 0});
    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        auto& L = item.letters;
        size_t p = item.pos;
        auto measure = checked ? termination_measure({L, item.scalar})
                               : std::pair<long long, long long>{};
        while (p + 1 < L.size()) {
            const auto [i, j] = L[p];
            const auto [s, t] = L[p + 1];
            if (std::pair(i, j) <= std::pair(s, t)) {
                ++p;
                continue;
            }
            if (i == s || j == t) {
                // same row or same column: swap costs q^-2
                std::swap(L[p], L[p + 1]);
                item.scalar *= qm2;
            } else if (j < t) {
                // i > s here, so the letters commute
                std::swap(L[p], L[p + 1]);
            } else {
                // i > s, j > t: swap freely but emit the defect correction
                WorkItem corr;
                corr.letters = L;
                corr.letters[p] = {s, j};
                corr.letters[p + 1] = {i, t};
                corr.scalar = item.scalar * correction_scalar;
                corr.pos = p > 0 ? p - 1 : 0;
                if (checked) require_measure_decrease(measure, corr.letters, corr.scalar);
                stack.push_back(std::move(corr));
                std::swap(L[p], L[p + 1]);
            }
            if (checked) {
                require_measure_decrease(measure, L, item.scalar);
                measure = termination_measure({L, item.scalar});
            }
            p = p > 0 ? p - 1 : 0;
        }
        ExponentMatrix a(n);
        for (const auto& [i, j] : L) ++a.at(i, j);
        out.add_term(a, item.scalar);
    }
    return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("size mismatch");
    if (x.basis() != BasisTag::plain || y.basis() != BasisTag::plain)
        throw std::invalid_argument("products need the plain basis");
    AlgebraElement out(x.n(), BasisTag::plain);
    for (const auto& [a, ca] : x.terms()) {
        auto wa = a.word();
        for (const auto& [b, cb] : y.terms()) {
            Word w;
            w.letters = wa;
            auto wb = b.word();
            w.letters.insert(w.letters.end(), wb.begin(), wb.end());
            w.scalar = ca * cb;
            out += straighten(x.n(), w);
        }
    }
    return out;
}

AlgebraElement bar_map(const AlgebraElement& a) {
    if (a.basis() != BasisTag::plain) throw std::invalid_argument("bar needs the plain basis");
    AlgebraElement out(a.n(), BasisTag::plain);
    for (const auto& [m, c] : a.terms()) {
        Word w;
        w.letters = m.word();
        std::reverse(w.letters.begin(), w.letters.end());
        w.scalar = bar(c);
        out += straighten(a.n(), w);
    }
    return out;
}

AlgebraElement transpose_map(const AlgebraElement& a) {
    AlgebraElement out(a.n(), a.basis());
    for (const auto& [m, c] : a.terms()) out.add_term(m.transposed(), c);
    return out;
}

AlgebraElement to_modified(const AlgebraElement& a) {
    if (a.basis() != BasisTag::plain) throw std::invalid_argument("expected plain basis");
    AlgebraElement out(a.n(), BasisTag::modified);
    for (const auto& [m, c] : a.terms())
        out.add_term(m, c.shifted(static_cast<int>(pair_statistic(m))));
    return out;
}

AlgebraElement to_plain_from_modified(const AlgebraElement& a) {
    if (a.basis() != BasisTag::modified) throw std::invalid_argument("expected modified basis");
    AlgebraElement out(a.n(), BasisTag::plain);
    for (const auto& [m, c] : a.terms())
        out.add_term(m, c.shifted(static_cast<int>(-pair_statistic(m))));
    return out;
}

namespace {

void fill_rows(ExponentMatrix& m, int row, std::vector<int>& colrem, const std::vector<int>& ro,
               std::vector<ExponentMatrix>& out) {
    int n = m.n();
    if (row == n) {
        for (int v : colrem)
            if (v != 0) return;
        out.push_back(m);
        return;
    }
    // enumerate row `row` summing to ro[row] within column budgets
    auto rec = [&](auto&& self, int col, int rem) -> void {
        if (col == n - 1) {
            if (rem > colrem[col]) return;
            m.at(row, col) = rem;
            colrem[col] -= rem;
            fill_rows(m, row + 1, colrem, ro, out);
            colrem[col] += rem;
            m.at(row, col) = 0;
            return;
        }
        for (int v = 0; v <= std::min(rem, colrem[col]); ++v) {
            m.at(row, col) = v;
            colrem[col] -= v;
            self(self, col + 1, rem - v);
            colrem[col] += v;
            m.at(row, col) = 0;
        }
    };
    rec(rec, 0, ro[row]);
}

}  // namespace

std::vector<ExponentMatrix> enumerate_block(const std::vector<int>& ro, const std::vector<int>& co) {
    if (ro.size() != co.size()) throw std::invalid_argument("size mismatch");
    int n = static_cast<int>(ro.size());
    int total = 0;
    for (int v : ro) total += v;
    int ctotal = 0;
    for (int v : co) ctotal += v;
    if (total != ctotal) return {};
    ExponentMatrix m(n);
    std::vector<int> colrem = co;
    std::vector<ExponentMatrix> out;
    fill_rows(m, 0, colrem, ro, out);
    std::sort(out.begin(), out.end(), [](const ExponentMatrix& x, const ExponentMatrix& y) {
        long long sx = x.stat(), sy = y.stat();
        if (sx != sy) return sx > sy;
        return x < y;
    });
    return out;
}

bool move_less(const ExponentMatrix& b, const ExponentMatrix& a) {
    if (a.n() != b.n()) return false;
    if (a == b) return false;
    if (a.row_sums() != b.row_sums() || a.col_sums() != b.col_sums()) return false;
    if (b.stat() >= a.stat()) return false;
    // downward closure of a under single defect moves
    std::set<ExponentMatrix> seen{a};
    std::queue<ExponentMatrix> todo;
    todo.push(a);
    int n = a.n();
    while (!todo.empty()) {
        ExponentMatrix cur = todo.front();
        todo.pop();
        for (int i = 0; i < n; ++i)
            for (int s = i + 1; s < n; ++s)
                for (int j = 0; j < n; ++j)
                    for (int t = j + 1; t < n; ++t) {
                        if (cur.at(i, j) == 0 || cur.at(s, t) == 0) continue;
                        ExponentMatrix next = cur;
                        --next.at(i, j);
                        --next.at(s, t);
                        ++next.at(i, t);
                        ++next.at(s, j);
                        if (next == b) return true;
                        if (seen.insert(next).second) todo.push(next);
                    }
    }
    return false;
}

std::string to_string(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::vector<const std::pair<const ExponentMatrix, LaurentPoly>*> ts;
    for (const auto& t : e.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
        long long sx = x->first.stat(), sy = y->first.stat();
        if (sx != sy) return sx > sy;
        return x->first < y->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(t->second) << ")";
        const auto& m = t->first;
        for (int i = 0; i < m.n(); ++i)
            for (int j = 0; j < m.n(); ++j) {
                int v = m.at(i, j);
                if (v == 0) continue;
                os << " x[" << (i + 1) << "," << (j + 1) << "]";
                if (v > 1) os << "^" << v;
            }
    }
    return os.str();
}

}  // namespace qcanon
