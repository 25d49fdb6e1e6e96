#include "qcanon/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace qcanon {

namespace {

void check_root_index(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
}

/// All ways to write total as an ordered sum of `parts` nonnegative ints,
/// ascending lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Non-decreasing index tuples of length m over {0..choices-1}.
std::vector<std::vector<int>> multisets(int choices, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v < choices; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool torus_generator(const GeneratorSymbol& g) {
    return g.kind == GenKind::K || g.kind == GenKind::Kinv;
}

/// The torus part of the condition depends only on the row sums: the twisted
/// action of K_i^{+-1} scales the whole (ro, co) block by a power of q that
/// vanishes exactly when ro_i = ro_{i+1}.
bool torus_prefilter(const CoidealSpec& s, const std::vector<int>& ro) {
    for (const auto& g : s.generators)
        if (torus_generator(g) && ro[g.index - 1] != ro[g.index]) return false;
    return true;
}

std::vector<std::vector<int>> row_runs(int n, const std::vector<int>& levi_roots) {
    std::set<int> linked;
    for (int i : levi_roots) {
        check_root_index(n, i);
        linked.insert(i);
    }
    std::vector<std::vector<int>> runs;
    int row = 1;
    while (row <= n) {
        int end = row;
        while (end <= n - 1 && linked.count(end)) ++end;
        std::vector<int> run;
        for (int r = row; r <= end; ++r) run.push_back(r - 1);
        runs.push_back(std::move(run));
        row = end + 1;
    }
    return runs;
}

}  // namespace

CoidealSpec CoidealSpec::lowering(int n) {
    CoidealSpec s;
    for (int i = 1; i < n; ++i) s.generators.push_back({GenKind::F, i});
    return s;
}

CoidealSpec CoidealSpec::torus(int n) {
    CoidealSpec s;
    for (int i = 1; i < n; ++i) {
        s.generators.push_back({GenKind::K, i});
        s.generators.push_back({GenKind::Kinv, i});
    }
    return s;
}

CoidealSpec CoidealSpec::levi(int n, const std::vector<int>& levi_roots) {
    CoidealSpec s;
    for (int i : levi_roots) {
        check_root_index(n, i);
        s.generators.push_back({GenKind::E, i});
        s.generators.push_back({GenKind::F, i});
    }
    CoidealSpec t = torus(n);
    s.generators.insert(s.generators.end(), t.generators.begin(), t.generators.end());
    return s;
}

bool invariance_holds(const GeneratorSymbol& x, const AlgebraElement& plain_b) {
    AlgebraElement image = act_L(theta(x), plain_b);
    if (torus_generator(x)) return image == plain_b;
    return image.is_zero();
}

bool is_invariant(BlockCache& cache, const CoidealSpec& s, const ExponentMatrix& a) {
    const AlgebraElement b = canonical_plain(cache, a);
    for (const auto& g : s.generators)
        if (!invariance_holds(g, b)) return false;
    return true;
}

std::vector<InvariantBlock> invariant_basis(BlockCache& cache, int n, const CoidealSpec& s,
                                            int truncation) {
    for (const auto& g : s.generators) check_root_index(n, g.index);
    std::vector<InvariantBlock> out;
    for (int d = 0; d <= truncation; ++d) {
        for (const auto& ro : compositions(d, n)) {
            if (!torus_prefilter(s, ro)) continue;
            for (const auto& co : compositions(d, n)) {
                InvariantBlock blk{ro, co, {}};
                for (const auto& a : enumerate_block(ro, co)) {
                    if (a.min_diagonal() != 0) continue;
                    if (is_invariant(cache, s, a)) blk.members.push_back(a);
                }
                if (!blk.members.empty()) out.push_back(std::move(blk));
            }
        }
    }
    return out;
}

int invariant_kernel_dimension(BlockCache& cache, const CoidealSpec& s, const std::vector<int>& ro,
                               const std::vector<int>& co) {
    std::vector<ExponentMatrix> members;
    for (const auto& a : enumerate_block(ro, co))
        if (a.min_diagonal() == 0) members.push_back(a);
    const int m = static_cast<int>(members.size());
    if (m == 0 || s.generators.empty()) return m;

    // Condition coordinates are pairs (generator position, reduced canonical
    // index); one column per member.
    std::map<std::pair<int, ExponentMatrix>, std::map<int, LaurentPoly>> rows;
    for (int j = 0; j < m; ++j) {
        const AlgebraElement b = canonical_plain(cache, members[j]);
        for (size_t xi = 0; xi < s.generators.size(); ++xi) {
            const GeneratorSymbol& x = s.generators[xi];
            AlgebraElement image = act_L(theta(x), b);
            if (torus_generator(x)) image -= b;
            if (image.is_zero()) continue;
            const AlgebraElement reduced = sl_reduce(cache, expand_in_canonical(cache, image));
            for (const auto& [c, coeff] : reduced.terms())
                rows[{static_cast<int>(xi), c}][j] = coeff;
        }
    }
    if (rows.empty()) return m;

    PolyMatrix mat(static_cast<int>(rows.size()), m);
    int r = 0;
    for (const auto& [key, entries] : rows) {
        for (const auto& [j, coeff] : entries) mat.at(r, j) = coeff;
        ++r;
    }
    return m - bareiss_rank(std::move(mat));
}

ModulePresentation borel_weil_module(BlockCache& cache, int n, const std::vector<int>& fundamental) {
    if (static_cast<int>(fundamental.size()) != n - 1)
        throw std::invalid_argument("weight not dominant");
    for (int l : fundamental)
        if (l < 0) throw std::invalid_argument("weight not dominant");

    ModulePresentation mod;
    mod.n = n;
    mod.fundamental = fundamental;

    // Row sums of the block: reversed suffix sums of the fundamental
    // coordinates, so the first row is empty and act_L(K_i) has eigenvalue
    // q^{l_{n-i}} on every member.
    std::vector<int> suffix(n, 0);
    for (int j = n - 2; j >= 0; --j) suffix[j] = suffix[j + 1] + fundamental[j];
    mod.row_weight.assign(suffix.rbegin(), suffix.rend());

    int d = 0;
    for (int r : mod.row_weight) d += r;
    for (const auto& co : compositions(d, n)) {
        for (const auto& a : enumerate_block(mod.row_weight, co)) {
            const AlgebraElement b = canonical_plain(cache, a);
            bool killed = true;
            for (int i = 1; i < n && killed; ++i)
                killed = act_L(GeneratorSymbol{GenKind::E, i}, b).is_zero();
            if (killed) mod.members.push_back(a);
        }
    }
    std::sort(mod.members.begin(), mod.members.end());

    std::map<ExponentMatrix, int> index;
    for (size_t j = 0; j < mod.members.size(); ++j) index.emplace(mod.members[j], static_cast<int>(j));

    const int dim = static_cast<int>(mod.members.size());
    auto action_matrix = [&](const GeneratorSymbol& g) {
        PolyMatrix mat(dim, dim);
        for (int j = 0; j < dim; ++j) {
            const AlgebraElement image =
                expand_in_canonical(cache, act_R(g, canonical_plain(cache, mod.members[j])));
            for (const auto& [c, coeff] : image.terms()) {
                auto it = index.find(c);
                if (it == index.end()) throw std::logic_error("module closure failed");
                mat.at(it->second, j) = coeff;
            }
        }
        return mat;
    };
    for (int i = 1; i < n; ++i) {
        mod.raise_action.push_back(action_matrix({GenKind::E, i}));
        mod.lower_action.push_back(action_matrix({GenKind::F, i}));
        mod.torus_action.push_back(action_matrix({GenKind::K, i}));
    }

    std::vector<int> highest;
    for (int j = 0; j < dim; ++j) {
        bool zero_column = true;
        for (const auto& mat : mod.raise_action)
            for (int r = 0; r < dim && zero_column; ++r) zero_column = mat.at(r, j).is_zero();
        if (zero_column) highest.push_back(j);
    }
    if (highest.size() != 1) throw std::logic_error("highest weight member not unique");
    mod.highest = static_cast<size_t>(highest.front());
    return mod;
}

AlgebraElement highest_weight_monomial(int n, const std::vector<int>& fundamental) {
    if (static_cast<int>(fundamental.size()) != n - 1)
        throw std::invalid_argument("weight not dominant");
    for (int l : fundamental)
        if (l < 0) throw std::invalid_argument("weight not dominant");

    AlgebraElement result = AlgebraElement::unit(n, BasisTag::plain);
    for (int s = 1; s < n; ++s) {
        if (fundamental[s - 1] == 0) continue;
        std::vector<int> rows, cols;
        for (int r = n - s; r < n; ++r) rows.push_back(r);
        for (int c = 0; c < s; ++c) cols.push_back(c);
        const AlgebraElement minor = quantum_minor(n, rows, cols);
        for (int t = 0; t < fundamental[s - 1]; ++t) result = result * minor;
    }
    return result;
}

CheckReport string_property_check(BlockCache& cache, int n, const CoidealSpec& s, int truncation) {
    const std::vector<InvariantBlock> blocks = invariant_basis(cache, n, s, truncation);
    std::vector<ExponentMatrix> members;
    for (const auto& blk : blocks)
        members.insert(members.end(), blk.members.begin(), blk.members.end());

    std::map<ExponentMatrix, bool> memo;
    auto invariant_index = [&](const ExponentMatrix& a) {
        auto it = memo.find(a);
        if (it == memo.end()) it = memo.emplace(a, is_invariant(cache, s, a)).first;
        return it->second;
    };
    for (const auto& a : members) memo.emplace(a, true);

    CheckReport report;
    auto verify_expansion = [&](const AlgebraElement& canonical, const std::string& label) {
        for (const auto& [c, coeff] : canonical.terms()) {
            if (!has_nonnegative_coeffs(coeff)) {
                report.passed = false;
                report.detail = label + ": negative coefficient at " + to_string(c);
                return false;
            }
            if (!invariant_index(c)) {
                report.passed = false;
                report.detail = label + ": support leaves the invariant set at " + to_string(c);
                return false;
            }
        }
        return true;
    };

    const size_t pair_limit = 12, action_limit = 24;
    size_t pairs = 0, images = 0;
    for (size_t i = 0; i < members.size() && i < pair_limit; ++i) {
        const AlgebraElement f = canonical_plain(cache, members[i]);
        for (size_t j = 0; j < members.size() && j < pair_limit; ++j) {
            const AlgebraElement product = f * canonical_plain(cache, members[j]);
            ++pairs;
            if (!verify_expansion(expand_in_canonical(cache, product),
                                  "product " + to_string(members[i]) + " * " + to_string(members[j])))
                return report;
        }
    }
    for (size_t i = 0; i < members.size() && i < action_limit; ++i) {
        const AlgebraElement f = canonical_plain(cache, members[i]);
        for (int k = 1; k < n; ++k) {
            const AlgebraElement image = act_R(GeneratorSymbol{GenKind::E, k}, f);
            ++images;
            if (image.is_zero()) continue;
            if (!verify_expansion(expand_in_canonical(cache, image),
                                  "raising image of " + to_string(members[i])))
                return report;
        }
    }
    report.detail = "members=" + std::to_string(members.size()) +
                    " products=" + std::to_string(pairs) + " images=" + std::to_string(images);
    return report;
}

std::vector<MinorSpec> homogeneous_generators(int n, const std::vector<int>& levi_roots) {
    std::vector<MinorSpec> out;
    for (const auto& run : row_runs(n, levi_roots)) {
        const int k = static_cast<int>(run.size());
        for (const auto& cols : k_subsets(n, k)) out.push_back({run, cols});
    }
    return out;
}

GenerationReport generation_check(BlockCache& cache, int n, const std::vector<int>& levi_roots,
                                  int truncation) {
    const CoidealSpec s = CoidealSpec::levi(n, levi_roots);
    const std::vector<InvariantBlock> inv = invariant_basis(cache, n, s, truncation);
    std::vector<int> count_at(truncation + 1, 0);
    for (const auto& blk : inv) {
        int d = 0;
        for (int r : blk.ro) d += r;
        count_at[d] += static_cast<int>(blk.members.size());
    }

    // One list of column choices per row run; a balanced product takes the
    // same power m of every run, which is forced by the torus condition.
    std::vector<std::vector<AlgebraElement>> run_minors;
    for (const auto& run : row_runs(n, levi_roots)) {
        std::vector<AlgebraElement> minors;
        for (const auto& cols : k_subsets(n, static_cast<int>(run.size())))
            minors.push_back(quantum_minor(n, run, cols));
        run_minors.push_back(std::move(minors));
    }

    // Reduced canonical expansions of all balanced products, with degrees.
    std::vector<std::pair<int, AlgebraElement>> products;
    products.emplace_back(0, sl_reduce(cache, expand_in_canonical(
                                                  cache, AlgebraElement::unit(n, BasisTag::plain))));
    for (int m = 1; m * n <= truncation; ++m) {
        std::vector<std::vector<std::vector<int>>> per_run;
        for (const auto& minors : run_minors)
            per_run.push_back(multisets(static_cast<int>(minors.size()), m));
        std::vector<size_t> pick(per_run.size(), 0);
        while (true) {
            AlgebraElement acc = AlgebraElement::unit(n, BasisTag::plain);
            for (size_t r = 0; r < per_run.size(); ++r)
                for (int choice : per_run[r][pick[r]]) acc = acc * run_minors[r][choice];
            products.emplace_back(m * n, sl_reduce(cache, expand_in_canonical(cache, acc)));
            size_t pos = 0;
            while (pos < pick.size() && ++pick[pos] == per_run[pos].size()) pick[pos++] = 0;
            if (pos == pick.size()) break;
        }
    }

    std::map<ExponentMatrix, int> coord;
    for (const auto& [d, e] : products)
        for (const auto& [c, coeff] : e.terms())
            coord.emplace(c, static_cast<int>(coord.size()));

    GenerationReport report;
    int cumulative = 0;
    for (int cap = 0; cap <= truncation; ++cap) {
        cumulative += count_at[cap];
        std::vector<const AlgebraElement*> rows;
        for (const auto& [d, e] : products)
            if (d <= cap) rows.push_back(&e);
        PolyMatrix mat(static_cast<int>(rows.size()), static_cast<int>(coord.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, coeff] : rows[r]->terms()) mat.at(static_cast<int>(r), coord.at(c)) = coeff;
        const int rank = bareiss_rank(std::move(mat));
        report.degrees.push_back({cap, cumulative, rank});
        if (rank != cumulative) {
            report.passed = false;
            if (report.detail.empty())
                report.detail = "degree cap " + std::to_string(cap) + ": product rank " +
                                std::to_string(rank) + " vs invariant count " +
                                std::to_string(cumulative);
        }
    }
    if (report.passed)
        report.detail = "products=" + std::to_string(products.size()) +
                        " caps=" + std::to_string(truncation + 1);
    return report;
}

}  // namespace qcanon
