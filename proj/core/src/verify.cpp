#include "qcanon/verify.hpp"

#include "qcanon/invariants.hpp"
#include "qcanon/kashiwara.hpp"
#include "qcanon/uq.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcanon {
namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

GeneratorSymbol E(int i) { return {GenKind::E, i}; }
GeneratorSymbol F(int i) { return {GenKind::F, i}; }
GeneratorSymbol K(int i) { return {GenKind::K, i}; }
GeneratorSymbol Kinv(int i) { return {GenKind::Kinv, i}; }

int cartan(int i, int j) {
    if (i == j) return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
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
    rec(rec, 0, total);
    return out;
}

/// Every exponent matrix with total degree <= dmax, degree-major order.
std::vector<ExponentMatrix> matrices_up_to(int n, int dmax) {
    std::vector<ExponentMatrix> out;
    for (int d = 0; d <= dmax; ++d) {
        for (const auto& flat : compositions(d, n * n)) {
            ExponentMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.at(i, j) = flat[static_cast<size_t>(i) * n + j];
            out.push_back(a);
        }
    }
    return out;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string mat_str(const ExponentMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.n(); ++i) {
        os << (i ? ";" : "");
        for (int j = 0; j < a.n(); ++j) os << (j ? "," : "") << a.at(i, j);
    }
    os << "]";
    return os.str();
}

AlgebraElement x_gen(int n, int i, int j) { return generator_element(n, i, j); }

AlgebraElement pow_elem(const AlgebraElement& base, int s) {
    AlgebraElement acc = AlgebraElement::unit(base.n(), base.basis());
    for (int k = 0; k < s; ++k) acc = acc * base;
    return acc;
}

ExponentMatrix random_matrix(std::mt19937& rng, int n, int max_degree) {
    ExponentMatrix a(n);
    const int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    for (int k = 0; k < d; ++k) ++a.at(rng() % n, rng() % n);
    return a;
}

AlgebraElement random_element(std::mt19937& rng, int n, int max_degree, int nterms) {
    AlgebraElement e(n, BasisTag::plain);
    for (int t = 0; t < nterms; ++t) {
        const int expo = static_cast<int>(rng() % 7) - 3;
        const int coef = static_cast<int>(rng() % 9) - 4;
        e.add_term(random_matrix(rng, n, max_degree), LaurentPoly::monomial(expo, coef));
    }
    return e;
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

// ---------------------------------------------------------------------------

CheckResult check_associativity(BlockCache&, unsigned seed) {
    const std::string name = "associativity";
    std::mt19937 rng(seed);
    const int n = 3, trials = 200, dmax = 4;
    for (int it = 0; it < trials; ++it) {
        auto fa = AlgebraElement::monomial(random_matrix(rng, n, dmax), LaurentPoly(1), BasisTag::plain);
        auto fb = AlgebraElement::monomial(random_matrix(rng, n, dmax), LaurentPoly(1), BasisTag::plain);
        auto fc = AlgebraElement::monomial(random_matrix(rng, n, dmax), LaurentPoly(1), BasisTag::plain);
        if ((fa * fb) * fc != fa * (fb * fc))
            return fail(name, "associativity failed on triple " + std::to_string(it) +
                                  ", seed=" + std::to_string(seed));
    }
    return pass(name, std::to_string(trials) + " random monomial triples, n=3, factor degree <= " +
                          std::to_string(dmax) + ", zero failures, seed=" + std::to_string(seed));
}

CheckResult check_bar_leading(BlockCache&, unsigned seed) {
    const std::string name = "bar-leading";
    long long monomials = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& a : matrices_up_to(n, 5)) {
            auto xa = AlgebraElement::monomial(a, LaurentPoly(1), BasisTag::plain);
            auto barred = bar_map(xa);
            if (bar_map(barred) != xa)
                return fail(name, "bar is not an involution at " + mat_str(a));
            if (barred.coeff(a) != q(-2 * static_cast<int>(pair_statistic(a))))
                return fail(name, "leading coefficient of bar differs from q^{-2 stat} at " + mat_str(a));
            ++monomials;
        }
    }
    std::mt19937 rng(seed);
    const int pairs = 50;
    for (int it = 0; it < pairs; ++it) {
        auto f = AlgebraElement::monomial(random_matrix(rng, 3, 3), LaurentPoly(1), BasisTag::plain);
        auto g = AlgebraElement::monomial(random_matrix(rng, 3, 3), LaurentPoly(1), BasisTag::plain);
        if (bar_map(f * g) != bar_map(g) * bar_map(f))
            return fail(name, "bar failed to reverse a product on pair " + std::to_string(it) +
                                  ", seed=" + std::to_string(seed));
    }
    return pass(name, "involution and leading coefficient on " + std::to_string(monomials) +
                          " monomials (n <= 3, degree <= 5); product reversal on " +
                          std::to_string(pairs) + " random pairs, seed=" + std::to_string(seed));
}

CheckResult check_canonical_blocks(BlockCache& cache, unsigned) {
    const std::string name = "canonical-blocks";
    long long blocks = 0, elements = 0;
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 5; ++d) {
            for (const auto& ro : compositions(d, n)) {
                for (const auto& co : compositions(d, n)) {
                    const auto& blk = cache.block(ro, co);
                    if (blk.order.empty()) continue;
                    ++blocks;
                    const size_t m = blk.order.size();
                    for (size_t r = 0; r + 1 < m; ++r)
                        if (blk.order[r].stat() < blk.order[r + 1].stat())
                            return fail(name, "block order not stat-decreasing in a degree " +
                                                  std::to_string(d) + " block of n=" +
                                                  std::to_string(n));
                    for (size_t r = 0; r < m; ++r) {
                        for (size_t c = 0; c < m; ++c) {
                            const auto& t = blk.transition[r][c];
                            if (c < r && !t.is_zero())
                                return fail(name, "transition not upper triangular at " +
                                                      mat_str(blk.order[r]));
                            if (c == r && !t.is_one())
                                return fail(name, "transition diagonal not 1 at " + mat_str(blk.order[r]));
                            if (c > r && !in_qZq(t))
                                return fail(name, "off-diagonal transition outside qZ[q] at " +
                                                      mat_str(blk.order[r]));
                        }
                        auto b = canonical_plain(cache, blk.order[r]);
                        if (bar_map(b) != b)
                            return fail(name, "canonical element not bar-invariant at " +
                                                  mat_str(blk.order[r]));
                        ++elements;
                    }
                }
            }
        }
    }
    const auto& two = cache.block({1, 1}, {1, 1});
    if (canonical_plain(cache, two.order[0]) != quantum_determinant(2))
        return fail(name, "top of the n=2 (1,1)x(1,1) block is not det_q");
    return pass(name, std::to_string(elements) + " canonical elements in " + std::to_string(blocks) +
                          " blocks (n <= 3, degree <= 5) bar-invariant and unitriangular; n=2 (1,1) " +
                          "block tops out at det_q");
}

CheckResult check_minors_sigma(BlockCache& cache, unsigned) {
    const std::string name = "minors-sigma";
    int minors = 0;
    for (int k = 1; k <= 3; ++k) {
        for (const auto& rows : k_subsets(3, k)) {
            for (const auto& cols : k_subsets(3, k)) {
                auto exp = expand_in_canonical(cache, quantum_minor(3, rows, cols));
                if (exp.terms().size() != 1 || !exp.terms().begin()->second.is_one())
                    return fail(name, "a " + std::to_string(k) + "x" + std::to_string(k) +
                                          " quantum minor did not expand to one canonical term");
                ++minors;
            }
        }
    }
    long long indices = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& a : matrices_up_to(n, 5)) {
            if (transpose_map(canonical_plain(cache, a)) != canonical_plain(cache, a.transposed()))
                return fail(name, "transpose did not map b(" + mat_str(a) + ") to b(transpose)");
            ++indices;
        }
    }
    return pass(name, std::to_string(minors) + " quantum minors of n=3 expand to single canonical " +
                          "terms; transpose permutes the basis on " + std::to_string(indices) +
                          " indices (n <= 3, degree <= 5)");
}

CheckResult check_power_identity(BlockCache&, unsigned) {
    const std::string name = "power-identity";
    // 2x2 minor power formula: the -q^2 minor expands with coefficients
    // (-q^2)^m [s,m] in base q^-4 and no extra power of q. The base q^4
    // binomial times q^{4m(m-s)} is the same polynomial, so either reading
    // works but not both at once; the -q minor satisfies neither.
    auto rhs_power = [](int s) {
        AlgebraElement rhs(2, BasisTag::plain);
        for (int m = 0; m <= s; ++m) {
            ExponentMatrix a(2);
            a.at(0, 0) = s - m;
            a.at(0, 1) = m;
            a.at(1, 0) = m;
            a.at(1, 1) = s - m;
            auto coeff = pow(-q(2), static_cast<unsigned>(m)) *
                         gauss_binomial(static_cast<unsigned>(s), static_cast<unsigned>(m), -4);
            rhs.add_term(a, coeff);
        }
        return rhs;
    };
    auto minor = x_gen(2, 0, 0) * x_gen(2, 1, 1) - q(2) * (x_gen(2, 0, 1) * x_gen(2, 1, 0));
    for (int s = 1; s <= 3; ++s) {
        if (pow_elem(minor, s) != rhs_power(s))
            return fail(name, "minor power formula failed at s=" + std::to_string(s));
        for (int m = 0; m <= s; ++m)
            if (gauss_binomial(s, m, -4) != gauss_binomial(s, m, 4) * q(4 * m * (m - s)))
                return fail(name, "binomial base change identity failed at s=" + std::to_string(s));
    }
    auto variant = x_gen(2, 0, 0) * x_gen(2, 1, 1) - q(1) * (x_gen(2, 0, 1) * x_gen(2, 1, 0));
    if (variant == rhs_power(1))
        return fail(name, "the -q normalization unexpectedly satisfies the power formula");

    // commutation of a generator past a power of a strictly north-west one
    const int n = 3;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                for (int l = j + 1; l < n; ++l) {
                    for (int s = 1; s <= 4; ++s) {
                        const auto gap = q(2 - 4 * s) - q(2);
                        auto lhs1 = x_gen(n, k, l) * pow_elem(x_gen(n, i, j), s);
                        auto rhs1 = pow_elem(x_gen(n, i, j), s) * x_gen(n, k, l) +
                                    gap * (pow_elem(x_gen(n, i, j), s - 1) * x_gen(n, i, l) *
                                           x_gen(n, k, j));
                        if (lhs1 != rhs1)
                            return fail(name, "first commutation identity failed at s=" +
                                                  std::to_string(s));
                        auto lhs2 = pow_elem(x_gen(n, k, l), s) * x_gen(n, i, j);
                        auto rhs2 = x_gen(n, i, j) * pow_elem(x_gen(n, k, l), s) +
                                    gap * (x_gen(n, i, l) * x_gen(n, k, j) *
                                           pow_elem(x_gen(n, k, l), s - 1));
                        if (lhs2 != rhs2)
                            return fail(name, "second commutation identity failed at s=" +
                                                  std::to_string(s));
                    }
                }
            }
        }
    }
    // the q^{2-4s} - q^{-2} variant of the first identity is inconsistent already at s=1
    auto variant_rhs = x_gen(2, 0, 0) * x_gen(2, 1, 1) +
                       (q(2 - 4 * 1) - q(-2)) * (x_gen(2, 0, 1) * x_gen(2, 1, 0));
    if (x_gen(2, 1, 1) * x_gen(2, 0, 0) == variant_rhs)
        return fail(name, "the q^{2-4s}-q^{-2} coefficient unexpectedly satisfies the first identity");
    return pass(name, "minor powers s=1..3 match with the -q^2 minor and base q^-4 binomials "
                      "(-q fails at s=1); both commutation identities hold for s=1..4 on every n=3 "
                      "index pair with coefficient q^{2-4s}-q^2 (q^{2-4s}-q^{-2} fails at s=1)");
}

CheckResult check_positivity(BlockCache& cache, unsigned) {
    const std::string name = "positivity";
    long long pairs_checked = 0;
    for (int n = 1; n <= 3; ++n) {
        auto idx = matrices_up_to(n, 3);
        std::vector<AlgebraElement> plains;
        plains.reserve(idx.size());
        for (const auto& a : idx) plains.push_back(canonical_plain(cache, a));
        const size_t m = idx.size();
        const size_t total = m * m;
        std::atomic<size_t> next{0};
        std::atomic<bool> bad{false};
        std::mutex mu;
        std::string bad_detail;
        auto worker = [&] {
            for (;;) {
                const size_t k = next.fetch_add(1);
                if (k >= total || bad.load()) return;
                const size_t ia = k / m, ib = k % m;
                auto prod = expand_in_canonical(cache, plains[ia] * plains[ib]);
                for (const auto& [b, c] : prod.terms()) {
                    if (!has_nonnegative_coeffs(c)) {
                        std::lock_guard<std::mutex> lock(mu);
                        bad = true;
                        bad_detail = "negative structure constant in b(" + mat_str(idx[ia]) +
                                     ") b(" + mat_str(idx[ib]) + ") at b(" + mat_str(b) + ")";
                        return;
                    }
                }
            }
        };
        unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
        if (total < 256) nthreads = 1;
        std::vector<std::thread> threads;
        for (unsigned t = 0; t + 1 < nthreads; ++t) threads.emplace_back(worker);
        worker();
        for (auto& t : threads) t.join();
        if (bad.load()) return fail(name, bad_detail);
        pairs_checked += static_cast<long long>(total);
    }
    return pass(name, std::to_string(pairs_checked) + " ordered products of canonical elements from " +
                          "blocks of degree <= 3 (n <= 3), every structure constant in Z_+[q, q^-1]");
}

CheckResult check_actions(BlockCache&, unsigned seed) {
    const std::string name = "actions";
    const LaurentPoly unit_gap = q(2) - q(-2);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                auto Ei = natural_rep(n, E(i)), Fj = natural_rep(n, F(j));
                auto Ki = natural_rep(n, K(i)), Kiv = natural_rep(n, Kinv(i));
                auto Kj = natural_rep(n, K(j));
                const std::string at = " at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                       " j=" + std::to_string(j);
                if (Ki * Kiv != PolyMatrix::identity(n))
                    return fail(name, "K K^{-1} is not the identity" + at);
                if (Ki * Kj != Kj * Ki) return fail(name, "torus matrices do not commute" + at);
                PolyMatrix lhs = unit_gap * (Ei * Fj - Fj * Ei);
                PolyMatrix rhs(n, n);
                if (i == j) rhs = Ki * Ki - Kiv * Kiv;
                if (lhs != rhs) return fail(name, "E F commutator relation failed" + at);
                if (Ki * natural_rep(n, E(j)) * Kiv != q(cartan(i, j)) * natural_rep(n, E(j)))
                    return fail(name, "K E K^{-1} scaling failed" + at);
                if (Ki * natural_rep(n, F(j)) * Kiv != q(-cartan(i, j)) * natural_rep(n, F(j)))
                    return fail(name, "K F K^{-1} scaling failed" + at);
                if (i + 1 == j || j + 1 == i) {
                    auto Ej = natural_rep(n, E(j));
                    auto Fi = natural_rep(n, F(i));
                    if (Ei * Ei * Ej - (q(2) + q(-2)) * (Ei * Ej * Ei) + Ej * Ei * Ei !=
                        PolyMatrix(n, n))
                        return fail(name, "Serre relation for E failed" + at);
                    if (Fi * Fi * Fj - (q(2) + q(-2)) * (Fi * Fj * Fi) + Fj * Fi * Fi !=
                        PolyMatrix(n, n))
                        return fail(name, "Serre relation for F failed" + at);
                } else if (i != j) {
                    if (Ei * natural_rep(n, E(j)) != natural_rep(n, E(j)) * Ei)
                        return fail(name, "distant E matrices do not commute" + at);
                }
            }
        }
    }

    std::mt19937 rng(seed);
    const int n = 3;
    std::vector<GeneratorSymbol> gens = {E(1), E(2), F(1), F(2), K(1), K(2), Kinv(1), Kinv(2)};
    int commute_checked = 0;
    for (int it = 0; it < 100; ++it) {
        auto f = random_element(rng, n, 3, 2);
        const auto& gl = gens[rng() % gens.size()];
        const auto& gr = gens[rng() % gens.size()];
        if (act_L(gl, act_R(gr, f)) != act_R(gr, act_L(gl, f)))
            return fail(name, "left and right actions failed to commute on element " +
                                  std::to_string(it) + ", seed=" + std::to_string(seed));
        ++commute_checked;
    }

    auto square_minus_inverse = [](const GeneratorSymbol& k, const GeneratorSymbol& kinv,
                                   const AlgebraElement& f, auto&& act) {
        return act(k, act(k, f)) - act(kinv, act(kinv, f));
    };
    int operator_checked = 0;
    for (int it = 0; it < 12; ++it) {
        auto f = random_element(rng, n, 3, 2);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                auto actR = [](const GeneratorSymbol& g, const AlgebraElement& x) { return act_R(g, x); };
                auto actL = [](const GeneratorSymbol& g, const AlgebraElement& x) { return act_L(g, x); };
                AlgebraElement zero(n, BasisTag::plain);
                auto lhsR = unit_gap * (act_R(E(i), act_R(F(j), f)) - act_R(F(j), act_R(E(i), f)));
                auto rhsR = i == j ? square_minus_inverse(K(i), Kinv(i), f, actR) : zero;
                if (lhsR != rhsR)
                    return fail(name, "right action E F identity failed, seed=" + std::to_string(seed));
                auto lhsL = unit_gap * (act_L(E(i), act_L(F(j), f)) - act_L(F(j), act_L(E(i), f)));
                auto rhsL = i == j ? square_minus_inverse(K(i), Kinv(i), f, actL) : zero;
                if (lhsL != rhsL)
                    return fail(name, "left action E F identity failed, seed=" + std::to_string(seed));
                if (act_R(K(i), act_R(E(j), act_R(Kinv(i), f))) != q(cartan(i, j)) * act_R(E(j), f))
                    return fail(name, "right action K conjugation failed, seed=" + std::to_string(seed));
                if (act_L(K(i), act_L(F(j), act_L(Kinv(i), f))) != q(-cartan(i, j)) * act_L(F(j), f))
                    return fail(name, "left action K conjugation failed, seed=" + std::to_string(seed));
                ++operator_checked;
            }
        }
    }
    return pass(name, "defining relations hold in the natural representation for n=2..4; actions " +
                          std::string("commute on ") + std::to_string(commute_checked) +
                          " random elements and satisfy the operator identities on " +
                          std::to_string(operator_checked) + " element pairs, seed=" +
                          std::to_string(seed));
}

CheckResult check_kashiwara(BlockCache& cache, unsigned) {
    const std::string name = "kashiwara";
    auto xmod = [](const ExponentMatrix& a) {
        return AlgebraElement::monomial(a, LaurentPoly(1), BasisTag::modified);
    };
    long long realized = 0, kernels = 0, vanishing = 0, leading_pass = 0, leading_na = 0;
    for (int n = 2; n <= 3; ++n) {
        const int dmax = n == 2 ? 5 : 4;
        for (int d = 0; d <= dmax; ++d) {
            for (const auto& ro : compositions(d, n)) {
                for (const auto& co : compositions(d, n)) {
                    for (const auto& a : enumerate_block(ro, co)) {
                        for (int i = 1; i < n; ++i) {
                            auto el = realize(factorize(a, i));
                            if (!el.coeff(a).is_one())
                                return fail(name, "replacement element not unit at " + mat_str(a));
                            for (const auto& [b, c] : el.terms()) {
                                if (b == a) continue;
                                if (b.stat() >= a.stat() || !in_qZq(c))
                                    return fail(name, "replacement element not unitriangular at " +
                                                          mat_str(a));
                            }
                            ++realized;
                        }
                    }
                }
            }
        }
    }
    for (int n = 2; n <= 3; ++n) {
        const int dmax = n == 2 ? 5 : 3;
        for (int d = 0; d <= dmax; ++d) {
            for (const auto& ro : compositions(d, n)) {
                for (const auto& co : compositions(d, n)) {
                    for (const auto& a : enumerate_block(ro, co)) {
                        for (int i = 1; i < n; ++i) {
                            if (!kernel_agreement_E(i, xmod(a)).agree() ||
                                !kernel_agreement_F(i, xmod(a)).agree())
                                return fail(name, "kernel agreement failed at " + mat_str(a));
                            ++kernels;
                        }
                    }
                }
            }
        }
    }
    auto det_mod = to_modified(quantum_determinant(2));
    auto pair_e = kernel_agreement_E(1, det_mod);
    auto pair_f = kernel_agreement_F(1, det_mod);
    if (!pair_e.agree() || !pair_e.tilde_vanishes || !pair_f.agree() || !pair_f.tilde_vanishes)
        return fail(name, "kernel agreement failed on the determinant combination");
    for (int n = 2; n <= 3; ++n) {
        const int dmax = n == 2 ? 4 : 3;
        for (int d = 0; d <= dmax; ++d) {
            for (const auto& ro : compositions(d, n)) {
                for (const auto& co : compositions(d, n)) {
                    for (const auto& a : enumerate_block(ro, co)) {
                        for (int i = 1; i < n; ++i) {
                            auto basis_el = realize(factorize(a, i));
                            auto canon = canonical_modified(cache, a);
                            if (tilde_E(i, canon).is_zero() != tilde_E(i, basis_el).is_zero() ||
                                tilde_F(i, canon).is_zero() != tilde_F(i, basis_el).is_zero())
                                return fail(name, "vanishing equivalence failed at " + mat_str(a));
                            ++vanishing;
                            switch (leading_term_check(cache, a, i)) {
                                case LeadingTermStatus::pass: ++leading_pass; break;
                                case LeadingTermStatus::not_applicable: ++leading_na; break;
                                case LeadingTermStatus::fail:
                                    return fail(name, "leading-term check failed at " + mat_str(a));
                            }
                        }
                    }
                }
            }
        }
    }
    return pass(name, "replacement bases unitriangular on " + std::to_string(realized) +
                          " elements; kernel agreement on " + std::to_string(kernels) +
                          " monomials plus the determinant combination; canonical and replacement " +
                          "vanishing agree on " + std::to_string(vanishing) + " elements; leading-" +
                          "term check " + std::to_string(leading_pass) + " pass / " +
                          std::to_string(leading_na) + " not applicable / 0 fail");
}

long long weyl_dimension(int n, const std::vector<int>& fundamental) {
    std::vector<long long> lam(n, 0);
    for (int i = 0; i < n; ++i)
        for (int s = i; s < n - 1; ++s) lam[i] += fundamental[s];
    long long num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= lam[i] - lam[j] + (j - i);
            den *= j - i;
        }
    }
    return num / den;
}

CheckResult check_borel_weil(BlockCache& cache, unsigned) {
    const std::string name = "borel-weil";
    struct Case {
        int n;
        std::vector<int> fundamental;
        long long dim;
    };
    const std::vector<Case> cases = {
        {2, {1}, 2}, {3, {1, 0}, 3}, {3, {0, 1}, 3}, {3, {2, 0}, 6}, {3, {1, 1}, 8}};
    std::string dims;
    for (const auto& c : cases) {
        auto mod = borel_weil_module(cache, c.n, c.fundamental);
        const auto members = static_cast<long long>(mod.members.size());
        if (members != c.dim || weyl_dimension(c.n, c.fundamental) != c.dim)
            return fail(name, "module dimension " + std::to_string(members) + " != " +
                                  std::to_string(c.dim) + " for n=" + std::to_string(c.n));
        auto hw = highest_weight_monomial(c.n, c.fundamental);
        auto exp = expand_in_canonical(cache, hw);
        if (exp.terms().size() != 1 || !exp.terms().begin()->second.is_one())
            return fail(name, "highest weight monomial is not a single canonical term for n=" +
                                  std::to_string(c.n));
        if (exp.terms().begin()->first != mod.members[mod.highest])
            return fail(name, "highest weight monomial disagrees with the module's highest member");
        for (int i = 1; i < c.n; ++i) {
            if (!act_L(E(i), hw).is_zero() || !act_R(E(i), hw).is_zero())
                return fail(name, "highest weight monomial not killed by a raising action, n=" +
                                      std::to_string(c.n) + " i=" + std::to_string(i));
        }
        auto w = weight_of(hw, ActionSide::right);
        if (!w || w->sl != c.fundamental)
            return fail(name, "highest weight monomial has the wrong right weight");
        dims += (dims.empty() ? "" : ", ") + std::to_string(members);
    }
    return pass(name, "module dimensions " + dims + " match the Weyl dimension oracle; highest " +
                          "weight monomials are single canonical terms killed by every raising " +
                          "action on both sides");
}

CheckResult check_invariant_completeness(BlockCache& cache, unsigned) {
    const std::string name = "invariant-completeness";
    const int n = 3, truncation = 3;
    struct Named {
        std::string label;
        CoidealSpec spec;
    };
    const std::vector<Named> specs = {{"lowering", CoidealSpec::lowering(n)},
                                      {"levi{1}", CoidealSpec::levi(n, {1})},
                                      {"torus", CoidealSpec::torus(n)}};
    std::string counts;
    for (const auto& [label, spec] : specs) {
        long long invariant_total = 0;
        for (int d = 0; d <= truncation; ++d) {
            for (const auto& ro : compositions(d, n)) {
                for (const auto& co : compositions(d, n)) {
                    int filtered = 0;
                    bool any = false;
                    for (const auto& a : enumerate_block(ro, co)) {
                        if (a.min_diagonal() != 0) continue;
                        any = true;
                        if (is_invariant(cache, spec, a)) ++filtered;
                    }
                    if (!any) continue;
                    const int dim = invariant_kernel_dimension(cache, spec, ro, co);
                    if (filtered != dim)
                        return fail(name, label + ": filtered count " + std::to_string(filtered) +
                                              " != kernel dimension " + std::to_string(dim) +
                                              " in a degree " + std::to_string(d) + " block");
                    invariant_total += filtered;
                }
            }
        }
        counts += (counts.empty() ? "" : "; ") + label + "=" + std::to_string(invariant_total);
    }
    return pass(name, "filtered canonical counts equal kernel dimensions in every block, n=3, " +
                          std::string("truncation 3 (invariant totals ") + counts + ")");
}

CheckResult check_generation(BlockCache& cache, unsigned) {
    const std::string name = "generation";
    auto report = generation_check(cache, 3, {1}, 3);
    if (!report.passed) return fail(name, report.detail);
    std::string caps;
    for (const auto& d : report.degrees) {
        caps += (caps.empty() ? "" : ", ") + std::to_string(d.invariant_count);
        if (d.invariant_count != d.product_rank)
            return fail(name, "count and rank differ at cap " + std::to_string(d.degree));
    }
    return pass(name, "minor products span the invariants for n=3, linked rows {1,2}, every degree "
                      "cap 0..3 (counts " +
                          caps + ")");
}

CheckResult check_det_shift(BlockCache& cache, unsigned seed) {
    const std::string name = "det-shift";
    long long indices = 0;
    int lo = 0, hi = 0;
    bool first = true;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& a : matrices_up_to(n, 3)) {
            auto s = detq_shift_check(cache, a);
            if (!s) return fail(name, "det_q b(" + mat_str(a) + ") is not a single canonical term");
            if (!s->is_monomial())
                return fail(name, "shift scalar at " + mat_str(a) + " is not a monomial");
            const int e = s->min_exponent();
            lo = first ? e : std::min(lo, e);
            hi = first ? e : std::max(hi, e);
            first = false;
            ++indices;
        }
    }
    std::mt19937 rng(seed);
    int trials = 0;
    for (int n = 2; n <= 3; ++n) {
        auto det = quantum_determinant(n);
        for (int it = 0; it < 20; ++it) {
            AlgebraElement f(n, BasisTag::canonical);
            for (int t = 0; t < 2; ++t) {
                const int expo = static_cast<int>(rng() % 7) - 3;
                const int coef = 1 + static_cast<int>(rng() % 4);
                f.add_term(random_matrix(rng, n, 2), LaurentPoly::monomial(expo, coef));
            }
            auto shifted = expand_in_canonical(cache, det * canonical_to_plain(cache, f));
            if (sl_reduce(cache, shifted) != sl_reduce(cache, f))
                return fail(name, "sl_reduce round trip failed on trial " + std::to_string(it) +
                                      " for n=" + std::to_string(n) + ", seed=" + std::to_string(seed));
            ++trials;
        }
    }
    return pass(name, "det_q shift lands on a single canonical term for " + std::to_string(indices) +
                          " indices (n <= 3, degree <= 3), scalar exponents in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]; sl_reduce round trip on " +
                          std::to_string(trials) + " random combinations, seed=" +
                          std::to_string(seed));
}

using CheckFn = CheckResult (*)(BlockCache&, unsigned);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"associativity", check_associativity},
        {"bar-leading", check_bar_leading},
        {"canonical-blocks", check_canonical_blocks},
        {"minors-sigma", check_minors_sigma},
        {"power-identity", check_power_identity},
        {"positivity", check_positivity},
        {"actions", check_actions},
        {"kashiwara", check_kashiwara},
        {"borel-weil", check_borel_weil},
        {"invariant-completeness", check_invariant_completeness},
        {"generation", check_generation},
        {"det-shift", check_det_shift},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

CheckResult run_verify_suite(BlockCache& cache, const std::string& name, unsigned seed) {
    for (const auto& [key, fn] : registry())
        if (key == name) return fn(cache, seed);
    throw std::invalid_argument("unknown verify suite");
}

CheckResult run_verify_suite(const std::string& name, unsigned seed) {
    BlockCache cache;
    return run_verify_suite(cache, name, seed);
}

std::vector<CheckResult> run_all_verify_suites(unsigned seed) {
    BlockCache cache;
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn(cache, seed));
    return out;
}

}  // namespace qcanon
