#include "qcanon/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcanon {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
            if (merged.back().second == 0) merged.pop_back();
        } else if (t.second != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return BigInt(0);
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.back().first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            BigInt c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::map<int, BigInt> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    std::vector<LaurentPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, std::move(c));
    LaurentPoly p;
    p = LaurentPoly::from_terms(std::move(out));
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.first += shift;
    return p;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly bar(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms(p.terms().rbegin(), p.terms().rend());
    for (auto& t : terms) t.first = -t.first;
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
    LaurentPoly r(1);
    LaurentPoly b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

LaurentPoly gauss_binomial(unsigned n, unsigned k, int base_exponent) {
    if (k > n) throw std::invalid_argument("binomial undefined");
    // Pascal recurrence in v = q^{base_exponent}:
    //   [n,k] = [n-1,k] + v^{n-k} [n-1,k-1]
    // Row-by-row keeps everything polynomial even for base_exponent = 0.
    std::vector<LaurentPoly> row{LaurentPoly(1)};  // row m holds [m,0..m]
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<LaurentPoly> next(m + 1);
        next[0] = LaurentPoly(1);
        next[m] = LaurentPoly(1);
        for (unsigned j = 1; j < m; ++j)
            next[j] = row[j] + row[j - 1].shifted(base_exponent * static_cast<int>(m - j));
        row = std::move(next);
    }
    return row[k];
}

LaurentPoly q_bracket(unsigned m) { return gauss_binomial(m, 1, -4); }

LaurentPoly solve_skew(const LaurentPoly& p) {
    if (bar(p) != -p) throw std::invalid_argument("not skew-symmetric");
    std::vector<LaurentPoly::Term> pos;
    for (const auto& t : p.terms())
        if (t.first >= 1) pos.push_back(t);
    return LaurentPoly::from_terms(std::move(pos));
}

bool in_qZq(const LaurentPoly& p) { return p.is_zero() || p.min_exponent() >= 1; }

bool in_Zq(const LaurentPoly& p) { return p.is_zero() || p.min_exponent() >= 0; }

bool has_nonnegative_coeffs(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c < 0) return false;
    return true;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Long division from the top; exactness requires every leading coefficient
    // along the way to be divisible by b's leading coefficient.
    LaurentPoly rem = a;
    const int eb = b.max_exponent();
    const BigInt& cb = b.terms().back().second;
    std::vector<LaurentPoly::Term> quot;
    while (!rem.is_zero()) {
        const int ea = rem.max_exponent();
        const BigInt& ca = rem.terms().back().second;
        if (ea - eb < (a.min_exponent() - b.min_exponent())) throw std::domain_error("inexact polynomial division");
        if (ca % cb != 0) throw std::domain_error("inexact polynomial division");
        BigInt c = ca / cb;
        quot.emplace_back(ea - eb, c);
        rem -= b.shifted(ea - eb) * LaurentPoly(c);
    }
    return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly unit_inverse(const LaurentPoly& u) {
    if (!u.is_monomial()) throw std::domain_error("not a unit");
    const auto& [e, c] = u.terms()[0];
    if (c != 1 && c != -1) throw std::domain_error("not a unit");
    return LaurentPoly::monomial(-e, c);
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

}  // namespace qcanon
