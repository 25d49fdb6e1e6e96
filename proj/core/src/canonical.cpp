#include "qcanon/canonical.hpp"

#include "qcanon/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcanon {

namespace {

std::unique_ptr<SolvedBlock> solve_block(const std::vector<int>& ro, const std::vector<int>& co,
                                         size_t cap) {
    auto blk = std::make_unique<SolvedBlock>();
    blk->ro = ro;
    blk->co = co;
    blk->order = enumerate_block(ro, co);
    if (cap > 0 && blk->order.size() > cap) throw std::length_error("block size limit exceeded");
    const size_t m = blk->order.size();
    for (size_t k = 0; k < m; ++k) blk->index.emplace(blk->order[k], static_cast<int>(k));

    // bar matrix on modified monomials: bar_modified[i][j] is the coefficient
    // of x(order[j]) in bar(x(order[i])); upper triangular with unit diagonal
    std::vector<std::vector<LaurentPoly>> r(m, std::vector<LaurentPoly>(m));
    for (size_t i = 0; i < m; ++i) {
        const auto& a = blk->order[i];
        const int sa = static_cast<int>(pair_statistic(a));
        auto barred = bar_map(AlgebraElement::monomial(a, LaurentPoly(1), BasisTag::plain));
        for (const auto& [b, c] : barred.terms()) {
            auto it = blk->index.find(b);
            if (it == blk->index.end()) throw std::logic_error("bar matrix inconsistent");
            size_t j = static_cast<size_t>(it->second);
            if (j < i) throw std::logic_error("bar matrix inconsistent");
            r[i][j] = c.shifted(sa + static_cast<int>(pair_statistic(b)));
        }
        if (!r[i][i].is_one()) throw std::logic_error("bar matrix inconsistent");
    }

    // triangular solve: h_B - bar(h_B) = sum over intermediate C of
    // r_{BC} bar(h_C), row by row below each top
    blk->transition.assign(m, std::vector<LaurentPoly>(m));
    for (size_t a = 0; a < m; ++a) {
        blk->transition[a][a] = LaurentPoly(1);
        for (size_t b = a + 1; b < m; ++b) {
            LaurentPoly p;
            for (size_t c = a; c < b; ++c) {
                if (r[c][b].is_zero() || blk->transition[a][c].is_zero()) continue;
                p += r[c][b] * bar(blk->transition[a][c]);
            }
            if (p.is_zero()) continue;
            try {
                blk->transition[a][b] = solve_skew(p);
            } catch (const std::invalid_argument&) {
                throw std::logic_error("bar matrix inconsistent");
            }
        }
    }
    return blk;
}

std::string cache_file_name(const std::vector<int>& ro, const std::vector<int>& co) {
    std::ostringstream os;
    os << "block-n" << ro.size() << "-ro";
    for (size_t k = 0; k < ro.size(); ++k) os << (k ? "." : "") << ro[k];
    os << "-co";
    for (size_t k = 0; k < co.size(); ++k) os << (k ? "." : "") << co[k];
    os << ".json";
    return os.str();
}

void validate_margins(const std::vector<int>& ro, const std::vector<int>& co) {
    if (ro.empty() || ro.size() != co.size()) throw std::invalid_argument("size mismatch");
    for (int v : ro)
        if (v < 0) throw std::invalid_argument("negative row sum");
    for (int v : co)
        if (v < 0) throw std::invalid_argument("negative column sum");
}

}  // namespace

BlockCache::BlockCache() {
    if (const char* dir = std::getenv("QCANON_CACHE_DIR"); dir && *dir)
        dir_ = std::filesystem::path(dir);
}

BlockCache::BlockCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

const SolvedBlock& BlockCache::block(const std::vector<int>& ro, const std::vector<int>& co) {
    validate_margins(ro, co);
    auto key = std::make_pair(ro, co);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = blocks_.find(key);
        if (it != blocks_.end()) return *it->second;
    }
    std::unique_ptr<SolvedBlock> solved;
    if (dir_) {
        std::ifstream in(*dir_ / cache_file_name(ro, co));
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                auto loaded = std::make_unique<SolvedBlock>(block_from_json(buf.str()));
                if (loaded->ro == ro && loaded->co == co) solved = std::move(loaded);
            } catch (const std::exception&) {
                // stale or corrupt cache entry; fall through and recompute
            }
        }
    }
    bool fresh = !solved;
    if (fresh) solved = solve_block(ro, co, cap_);
    if (fresh && dir_) {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (!ec) {
            auto path = *dir_ / cache_file_name(ro, co);
            std::ofstream out(path, std::ios::trunc);
            if (out) out << to_json(*solved);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = blocks_.try_emplace(std::move(key), std::move(solved));
    return *it->second;
}

const LaurentPoly& BlockCache::det_shift_scalar(const ExponentMatrix& a) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = shift_scalars_.find(a);
        if (it != shift_scalars_.end()) return it->second;
    }
    auto scalar = detq_shift_check(*this, a);
    if (!scalar) throw std::domain_error("quotient reduction unavailable");
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = shift_scalars_.try_emplace(a, std::move(*scalar));
    return it->second;
}

CanonicalExpansion canonical_element(BlockCache& cache, const ExponentMatrix& a) {
    const SolvedBlock& blk = cache.block(a.row_sums(), a.col_sums());
    size_t row = static_cast<size_t>(blk.index.at(a));
    CanonicalExpansion out{a, {}};
    for (size_t k = row; k < blk.order.size(); ++k)
        if (!blk.transition[row][k].is_zero()) out.coeffs.emplace(blk.order[k], blk.transition[row][k]);
    return out;
}

AlgebraElement canonical_modified(BlockCache& cache, const ExponentMatrix& a) {
    AlgebraElement e(a.n(), BasisTag::modified);
    for (auto& [b, h] : canonical_element(cache, a).coeffs) e.add_term(b, h);
    return e;
}

AlgebraElement canonical_plain(BlockCache& cache, const ExponentMatrix& a) {
    return to_plain_from_modified(canonical_modified(cache, a));
}

AlgebraElement expand_in_canonical(BlockCache& cache, const AlgebraElement& e) {
    AlgebraElement work = e.basis() == BasisTag::plain ? to_modified(e) : e;
    if (work.basis() != BasisTag::modified) throw std::invalid_argument("expected plain or modified basis");
    // group the support by block
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::map<ExponentMatrix, LaurentPoly>>
        by_block;
    for (const auto& [a, c] : work.terms())
        by_block[{a.row_sums(), a.col_sums()}].emplace(a, c);
    AlgebraElement out(e.n(), BasisTag::canonical);
    for (auto& [key, coeffs] : by_block) {
        const SolvedBlock& blk = cache.block(key.first, key.second);
        // forward elimination down the unitriangular transition
        for (size_t k = 0; k < blk.order.size(); ++k) {
            auto it = coeffs.find(blk.order[k]);
            if (it == coeffs.end() || it->second.is_zero()) continue;
            LaurentPoly c = it->second;
            out.add_term(blk.order[k], c);
            for (size_t j = k; j < blk.order.size(); ++j) {
                if (blk.transition[k][j].is_zero()) continue;
                auto [jt, inserted] = coeffs.try_emplace(blk.order[j]);
                jt->second -= c * blk.transition[k][j];
            }
        }
        for (const auto& [m, c] : coeffs)
            if (!c.is_zero()) throw std::logic_error("canonical expansion did not terminate");
    }
    return out;
}

AlgebraElement canonical_to_plain(BlockCache& cache, const AlgebraElement& e) {
    if (e.basis() != BasisTag::canonical) throw std::invalid_argument("expected canonical basis");
    AlgebraElement out(e.n(), BasisTag::plain);
    for (const auto& [a, c] : e.terms()) out += c * canonical_plain(cache, a);
    return out;
}

AlgebraElement quantum_determinant(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return quantum_minor(n, all, all);
}

AlgebraElement quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty() || rows.size() != cols.size()) throw std::invalid_argument("size mismatch");
    auto check = [n](const std::vector<int>& v) {
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k] < 0 || v[k] >= n) throw std::invalid_argument("index out of range");
            if (k > 0 && v[k] <= v[k - 1]) throw std::invalid_argument("indices must be ascending");
        }
    };
    check(rows);
    check(cols);
    const size_t k = rows.size();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    AlgebraElement out(n, BasisTag::plain);
    do {
        int inv = 0;
        for (size_t u = 0; u < k; ++u)
            for (size_t v = u + 1; v < k; ++v)
                if (perm[u] > perm[v]) ++inv;
        ExponentMatrix m(n);
        for (size_t t = 0; t < k; ++t) ++m.at(rows[t], cols[static_cast<size_t>(perm[t])]);
        out.add_term(m, LaurentPoly::monomial(2 * inv, (inv % 2) ? BigInt(-1) : BigInt(1)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::optional<LaurentPoly> detq_shift_check(BlockCache& cache, const ExponentMatrix& a) {
    auto product = quantum_determinant(a.n()) * canonical_plain(cache, a);
    auto expanded = expand_in_canonical(cache, product);
    if (expanded.terms().size() != 1) return std::nullopt;
    const auto& [label, scalar] = *expanded.terms().begin();
    if (label != a.plus_identity(1)) return std::nullopt;
    return scalar;
}

AlgebraElement sl_reduce(BlockCache& cache, const AlgebraElement& e) {
    if (e.basis() != BasisTag::canonical) throw std::invalid_argument("expected canonical basis");
    AlgebraElement out(e.n(), BasisTag::canonical);
    for (const auto& [a, c] : e.terms()) {
        int k = a.min_diagonal();
        if (k == 0) {
            out.add_term(a, c);
            continue;
        }
        LaurentPoly unit(1);
        for (int j = 1; j <= k; ++j) unit *= cache.det_shift_scalar(a.plus_identity(-j));
        try {
            out.add_term(a.plus_identity(-k), c * unit_inverse(unit));
        } catch (const std::domain_error&) {
            throw std::domain_error("quotient reduction unavailable");
        }
    }
    return out;
}

}  // namespace qcanon
