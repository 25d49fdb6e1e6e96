#include "qcanon/kashiwara.hpp"

#include "qcanon/uq.hpp"

#include <stdexcept>

namespace qcanon {

namespace {

void check_row_index(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("row index out of range");
}

void require_modified(const AlgebraElement& f) {
    if (f.basis() != BasisTag::modified)
        throw std::invalid_argument("modified basis required");
}

// modified monomial x(B) as a plain-basis element
AlgebraElement modified_monomial(const ExponentMatrix& b) {
    return AlgebraElement::monomial(b, LaurentPoly::monomial(-pair_statistic(b)), BasisTag::plain);
}

ExponentMatrix embed_core(int n, int i, const std::array<std::vector<int>, 2>& core) {
    ExponentMatrix b(n);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < n; ++c) b.at(i - 1 + r, c) = core[r][c];
    return b;
}

// the product before q_power normalization, with the given core in place
AlgebraElement realize_raw(const RowPairFactorization& f, const std::array<std::vector<int>, 2>& core) {
    const int n = f.n;
    const int i = f.row_index;
    ExponentMatrix pre(n), post(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r < i - 1) pre.at(r, c) = f.spectators.at(r, c);
            if (r > i) post.at(r, c) = f.spectators.at(r, c);
        }
    AlgebraElement out = modified_monomial(pre);
    for (const auto& [j, k] : f.minors)
        out = out * quantum_minor(n, {i - 1, i}, {j, k});
    out = out * modified_monomial(embed_core(n, i, core));
    return out * modified_monomial(post);
}

AlgebraElement to_modified_basis(const AlgebraElement& plain) { return to_modified(plain); }

}  // namespace

RowPairFactorization factorize(const ExponentMatrix& a, int i) {
    const int n = a.n();
    check_row_index(n, i);

    RowPairFactorization f;
    f.n = n;
    f.row_index = i;
    f.core[0].resize(n);
    f.core[1].resize(n);
    for (int c = 0; c < n; ++c) {
        f.core[0][c] = a.at(i - 1, c);
        f.core[1][c] = a.at(i, c);
    }
    f.spectators = a;
    for (int c = 0; c < n; ++c) {
        f.spectators.at(i - 1, c) = 0;
        f.spectators.at(i, c) = 0;
    }

    for (int k = n - 1; k >= 1; --k) {
        for (int j = k - 1; j >= 0; --j) {
            const int cnt = std::min(f.core[0][j], f.core[1][k]);
            for (int t = 0; t < cnt; ++t) f.minors.emplace_back(j, k);
            f.core[0][j] -= cnt;
            f.core[1][k] -= cnt;
        }
    }
    // leftover shape: top core row lives right of the bottom row's support
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (f.core[0][j] > 0 && f.core[1][k] > 0)
                throw std::logic_error("row pair factorization incomplete");

    const AlgebraElement raw = to_modified_basis(realize_raw(f, f.core));
    const LaurentPoly lead = raw.coeff(a);
    if (!lead.is_monomial() || lead.terms().front().second != 1)
        throw std::logic_error("row pair normalization failed");
    f.q_power = -lead.terms().front().first;
    return f;
}

AlgebraElement realize(const RowPairFactorization& f) {
    return to_modified_basis(realize_raw(f, f.core)) * LaurentPoly::monomial(f.q_power);
}

std::map<ExponentMatrix, LaurentPoly> expand_row_pair_basis(const AlgebraElement& f, int i) {
    require_modified(f);
    check_row_index(f.n(), i);
    std::map<ExponentMatrix, LaurentPoly> out;
    AlgebraElement rest = f;
    while (!rest.is_zero()) {
        // highest stat first; the realized elements are unitriangular in this order
        auto best = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (it->first.stat() > best->first.stat()) best = it;
        const ExponentMatrix a = best->first;
        const LaurentPoly c = best->second;
        if (!out.emplace(a, c).second)
            throw std::logic_error("row pair basis expansion failed to triangularize");
        rest -= c * realize(factorize(a, i));
    }
    return out;
}

namespace {

AlgebraElement tilde_apply(int i, const AlgebraElement& f, bool raising) {
    require_modified(f);
    check_row_index(f.n(), i);
    AlgebraElement out(f.n(), BasisTag::modified);
    for (const auto& [a, c] : expand_row_pair_basis(f, i)) {
        RowPairFactorization fact = factorize(a, i);
        const int src = raising ? 1 : 0;
        for (int k = 0; k < fact.n; ++k) {
            if (fact.core[src][k] < 1) continue;
            long long shift = 0;
            if (raising) {
                for (int t = 0; t < k; ++t) shift += 2 * fact.core[1][t];
            } else {
                for (int t = k + 1; t < fact.n; ++t) shift += 2 * fact.core[0][t];
            }
            auto core = fact.core;
            --core[src][k];
            ++core[1 - src][k];
            AlgebraElement term = to_modified_basis(realize_raw(fact, core)) *
                                  LaurentPoly::monomial(fact.q_power + static_cast<int>(shift));
            out += c * term;
        }
    }
    return out;
}

AlgebraElement transpose_modified(const AlgebraElement& f) {
    require_modified(f);
    AlgebraElement out(f.n(), BasisTag::modified);
    for (const auto& [a, c] : f.terms()) out.add_term(a.transposed(), c);
    return out;
}

}  // namespace

AlgebraElement tilde_E(int i, const AlgebraElement& f) { return tilde_apply(i, f, true); }
AlgebraElement tilde_F(int i, const AlgebraElement& f) { return tilde_apply(i, f, false); }

AlgebraElement tilde_E_right(int i, const AlgebraElement& f) {
    return transpose_modified(tilde_E(i, transpose_modified(f)));
}

AlgebraElement tilde_F_right(int i, const AlgebraElement& f) {
    return transpose_modified(tilde_F(i, transpose_modified(f)));
}

namespace {

VanishingPair kernel_agreement(int i, const AlgebraElement& f_modified, bool raising) {
    require_modified(f_modified);
    VanishingPair out;
    out.tilde_vanishes =
        (raising ? tilde_E(i, f_modified) : tilde_F(i, f_modified)).is_zero();
    GeneratorSymbol partner{raising ? GenKind::E : GenKind::F, i};
    out.action_vanishes =
        act_L(theta(partner), to_plain_from_modified(f_modified)).is_zero();
    return out;
}

}  // namespace

VanishingPair kernel_agreement_E(int i, const AlgebraElement& f_modified) {
    return kernel_agreement(i, f_modified, true);
}

VanishingPair kernel_agreement_F(int i, const AlgebraElement& f_modified) {
    return kernel_agreement(i, f_modified, false);
}

LeadingTermStatus leading_term_check(BlockCache& cache, const ExponentMatrix& a, int i) {
    AlgebraElement image = tilde_E(i, canonical_modified(cache, a));
    if (image.is_zero()) return LeadingTermStatus::not_applicable;
    AlgebraElement coords = expand_in_canonical(cache, image);
    int units = 0;
    for (const auto& [b, c] : coords.terms()) {
        if (!in_Zq(c)) return LeadingTermStatus::fail;
        const BigInt c0 = c.coeff(0);
        if (c0 == 0) continue;
        if (c0 != 1) return LeadingTermStatus::fail;
        ++units;
    }
    return units == 1 ? LeadingTermStatus::pass : LeadingTermStatus::fail;
}

}  // namespace qcanon
