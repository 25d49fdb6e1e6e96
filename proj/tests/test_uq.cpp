#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcanon/canonical.hpp>
#include <qcanon/uq.hpp>

#include <random>

using namespace qcanon;

namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

ExponentMatrix mat(const std::vector<std::vector<int>>& rows) { return ExponentMatrix::from_rows(rows); }

AlgebraElement mono(const std::vector<std::vector<int>>& rows) {
    return AlgebraElement::monomial(mat(rows), LaurentPoly(1), BasisTag::plain);
}

AlgebraElement letter(int n, int i, int j) { return generator_element(n, i, j); }

AlgebraElement random_element(std::mt19937& rng, int n, int max_degree, int nterms) {
    AlgebraElement e(n, BasisTag::plain);
    std::uniform_int_distribution<int> deg(0, max_degree), cell(0, n - 1), expo(-3, 3), coef(-4, 4);
    for (int t = 0; t < nterms; ++t) {
        ExponentMatrix a(n);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ++a.at(cell(rng), cell(rng));
        e.add_term(a, LaurentPoly::monomial(expo(rng), coef(rng)));
    }
    return e;
}

GeneratorSymbol E(int i) { return {GenKind::E, i}; }
GeneratorSymbol F(int i) { return {GenKind::F, i}; }
GeneratorSymbol K(int i) { return {GenKind::K, i}; }
GeneratorSymbol Kinv(int i) { return {GenKind::Kinv, i}; }

AlgebraElement zero_like(const AlgebraElement& f) { return AlgebraElement(f.n(), f.basis()); }

// act(K_i^2, f), the group-like leg appearing in the product rules
AlgebraElement k2_R(int i, const AlgebraElement& f) { return act_R(K(i), act_R(K(i), f)); }
AlgebraElement k2inv_R(int i, const AlgebraElement& f) { return act_R(Kinv(i), act_R(Kinv(i), f)); }
AlgebraElement k2_L(int i, const AlgebraElement& f) { return act_L(K(i), act_L(K(i), f)); }
AlgebraElement k2inv_L(int i, const AlgebraElement& f) { return act_L(Kinv(i), act_L(Kinv(i), f)); }

int cartan(int i, int j) {
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

// rho applied to theta(theta(g)), using that theta is an algebra map fixing
// scalars and sending K^p to K^{-p}
PolyMatrix rep_theta_twice(int n, const GeneratorSymbol& g) {
    ScaledGenerator once = theta(g);
    ScaledGenerator kpart{LaurentPoly(1), once.k_index, -once.k_power, std::nullopt};
    PolyMatrix m = natural_rep(n, kpart);
    if (once.gen) m = m * natural_rep(n, theta(*once.gen));
    return once.scalar * m;
}

}  // namespace

TEST_CASE("generator symbol parsing") {
    CHECK(parse_generator("E1") == E(1));
    CHECK(parse_generator("F2") == F(2));
    CHECK(parse_generator("K1") == K(1));
    CHECK(parse_generator("K2inv") == Kinv(2));
    CHECK(to_string(Kinv(2)) == "K2inv");
    CHECK(to_string(E(1)) == "E1");
    CHECK(parse_generator(to_string(F(3))) == F(3));
    CHECK_THROWS_AS(parse_generator("X1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("E"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("E1inv"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("K0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("Kinv"), std::invalid_argument);
}

TEST_CASE("natural representation matrices") {
    auto e1 = natural_rep(3, E(1));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(e1.at(a, b) == (a == 0 && b == 1 ? LaurentPoly(1) : LaurentPoly(0)));
    auto f2 = natural_rep(3, F(2));
    CHECK(f2.at(2, 1) == LaurentPoly(1));
    CHECK(f2.at(1, 2) == LaurentPoly(0));

    auto k1 = natural_rep(3, K(1));
    CHECK(k1.at(0, 0) == q(1));
    CHECK(k1.at(1, 1) == q(-1));
    CHECK(k1.at(2, 2) == LaurentPoly(1));
    CHECK(k1.at(0, 1) == LaurentPoly(0));
    CHECK(natural_rep(3, K(1)) * natural_rep(3, Kinv(1)) == PolyMatrix::identity(3));

    CHECK_THROWS_AS(natural_rep(3, E(3)), std::invalid_argument);
    CHECK_THROWS_AS(natural_rep(2, K(2)), std::invalid_argument);
}

TEST_CASE("defining relations hold in the natural representation") {
    for (int n = 2; n <= 4; ++n) {
        const LaurentPoly unit_gap = q(2) - q(-2);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                auto Ei = natural_rep(n, E(i)), Fj = natural_rep(n, F(j));
                auto Ki = natural_rep(n, K(i)), Kiv = natural_rep(n, Kinv(i));
                auto Kj = natural_rep(n, K(j));

                CHECK(Ki * Kj == Kj * Ki);
                // scaled commutator, so everything stays in Z[q,q^-1]
                PolyMatrix lhs = unit_gap * (Ei * Fj - Fj * Ei);
                PolyMatrix rhs(n, n);
                if (i == j) rhs = Ki * Ki - Kiv * Kiv;
                CHECK(lhs == rhs);

                CHECK(Ki * natural_rep(n, E(j)) * Kiv == q(cartan(i, j)) * natural_rep(n, E(j)));
                CHECK(Ki * natural_rep(n, F(j)) * Kiv == q(-cartan(i, j)) * natural_rep(n, F(j)));
                // the square of K conjugates by the full Cartan pairing
                CHECK(Ki * Ki * natural_rep(n, E(j)) * Kiv * Kiv ==
                      q(2 * cartan(i, j)) * natural_rep(n, E(j)));

                if (i + 1 == j || j + 1 == i) {
                    auto Ej = natural_rep(n, E(j));
                    CHECK(Ei * Ei * Ej - (q(2) + q(-2)) * (Ei * Ej * Ei) + Ej * Ei * Ei ==
                          PolyMatrix(n, n));
                    auto Fi = natural_rep(n, F(i));
                    CHECK(Fi * Fi * Fj - (q(2) + q(-2)) * (Fi * Fj * Fi) + Fj * Fi * Fi ==
                          PolyMatrix(n, n));
                }
                if (i + 1 < j || j + 1 < i) {
                    CHECK(Ei * natural_rep(n, E(j)) == natural_rep(n, E(j)) * Ei);
                }
            }
        }
    }
}

TEST_CASE("antipode on the natural representation") {
    // S(E_1) = -K_1^{-2} E_1 lands on -q^-2 e_{12}
    CHECK(natural_rep_antipode(3, E(1)) == -q(-2) * natural_rep(3, E(1)));
    CHECK(natural_rep_antipode(3, F(1)) == -q(2) * natural_rep(3, F(1)));
    CHECK(natural_rep_antipode(3, K(2)) == natural_rep(3, Kinv(2)));
    CHECK(natural_rep_antipode_inverse(3, E(2)) == -q(2) * natural_rep(3, E(2)));
    CHECK(natural_rep_antipode_inverse(3, F(2)) == -q(-2) * natural_rep(3, F(2)));
    // defining images: S(E) = -K^{-2}E, S(F) = -FK^2 and the inverse pair
    for (int i = 1; i < 3; ++i) {
        auto kk = natural_rep(3, K(i)) * natural_rep(3, K(i));
        auto kkinv = natural_rep(3, Kinv(i)) * natural_rep(3, Kinv(i));
        CHECK(natural_rep_antipode(3, E(i)) == -LaurentPoly(1) * (kkinv * natural_rep(3, E(i))));
        CHECK(natural_rep_antipode(3, F(i)) == -LaurentPoly(1) * (natural_rep(3, F(i)) * kk));
        CHECK(natural_rep_antipode_inverse(3, E(i)) ==
              -LaurentPoly(1) * (natural_rep(3, E(i)) * kkinv));
        CHECK(natural_rep_antipode_inverse(3, F(i)) == -LaurentPoly(1) * (kk * natural_rep(3, F(i))));
    }
}

TEST_CASE("single letter actions match the representation") {
    const int n = 3;
    std::vector<GeneratorSymbol> gens = {E(1), E(2), F(1), F(2), K(1), K(2), Kinv(1), Kinv(2)};
    for (const auto& g : gens) {
        auto rho = natural_rep(n, g);
        auto rho_s = natural_rep_antipode(n, g);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                AlgebraElement right = zero_like(letter(n, a, b));
                AlgebraElement left = zero_like(right);
                for (int l = 0; l < n; ++l) {
                    right += rho.at(l, b) * letter(n, a, l);
                    left += rho_s.at(a, l) * letter(n, l, b);
                }
                CHECK(act_R(g, letter(n, a, b)) == right);
                CHECK(act_L(g, letter(n, a, b)) == left);
            }
        }
    }
}

TEST_CASE("action on generators, pinned values") {
    CHECK(act_R(E(1), letter(2, 0, 1)) == letter(2, 0, 0));
    CHECK(act_R(E(1), letter(2, 0, 0)).is_zero());
    CHECK(act_R(F(1), letter(2, 0, 0)) == letter(2, 0, 1));
    CHECK(act_R(K(1), letter(2, 0, 0)) == q(1) * letter(2, 0, 0));
    CHECK(act_R(K(1), act_R(K(1), letter(2, 0, 0))) == q(2) * letter(2, 0, 0));
    CHECK(act_R(K(1), letter(2, 0, 1)) == q(-1) * letter(2, 0, 1));

    CHECK(act_L(E(1), letter(2, 0, 0)) == -q(-2) * letter(2, 1, 0));
    CHECK(act_L(F(1), letter(2, 1, 0)) == -q(2) * letter(2, 0, 0));
    CHECK(act_L(F(1), letter(2, 0, 0)).is_zero());
    CHECK(act_L(K(1), letter(2, 0, 0)) == q(-1) * letter(2, 0, 0));
    CHECK(act_L(K(1), letter(2, 1, 0)) == q(1) * letter(2, 1, 0));

    // two letters, exercising the K-twisted legs
    CHECK(act_R(E(1), mono({{1, 1}, {0, 0}})) == q(2) * mono({{2, 0}, {0, 0}}));
    CHECK(act_L(F(1), mono({{1, 0}, {1, 0}})) == -q(4) * mono({{2, 0}, {0, 0}}));

    CHECK_THROWS_AS(act_R(E(2), letter(2, 0, 0)), std::invalid_argument);
    AlgebraElement canon(2, BasisTag::canonical);
    canon.add_term(ExponentMatrix::identity(2), LaurentPoly(1));
    CHECK_THROWS_AS(act_R(E(1), canon), std::invalid_argument);
    CHECK_THROWS_AS(act_L(K(1), canon), std::invalid_argument);
}

TEST_CASE("product rule for both actions") {
    std::mt19937 rng(17);
    const int n = 3;
    for (int it = 0; it < 30; ++it) {
        auto f = random_element(rng, n, 3, 2);
        auto h = random_element(rng, n, 3, 2);
        auto fh = f * h;
        for (int i = 1; i < n; ++i) {
            CHECK(act_R(E(i), fh) == act_R(E(i), f) * h + k2_R(i, f) * act_R(E(i), h));
            CHECK(act_R(F(i), fh) == act_R(F(i), f) * k2inv_R(i, h) + f * act_R(F(i), h));
            CHECK(act_R(K(i), fh) == act_R(K(i), f) * act_R(K(i), h));
            CHECK(act_L(E(i), fh) == f * act_L(E(i), h) + act_L(E(i), f) * k2_L(i, h));
            CHECK(act_L(F(i), fh) == act_L(F(i), f) * h + k2inv_L(i, f) * act_L(F(i), h));
            CHECK(act_L(K(i), fh) == act_L(K(i), f) * act_L(K(i), h));
        }
    }
}

TEST_CASE("actions satisfy the algebra relations as operators") {
    std::mt19937 rng(23);
    const int n = 3;
    const LaurentPoly unit_gap = q(2) - q(-2);
    for (int it = 0; it < 12; ++it) {
        auto f = random_element(rng, n, 3, 2);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                auto lhsR = unit_gap * (act_R(E(i), act_R(F(j), f)) - act_R(F(j), act_R(E(i), f)));
                auto rhsR = i == j ? k2_R(i, f) - k2inv_R(i, f) : zero_like(f);
                CHECK(lhsR == rhsR);
                auto lhsL = unit_gap * (act_L(E(i), act_L(F(j), f)) - act_L(F(j), act_L(E(i), f)));
                auto rhsL = i == j ? k2_L(i, f) - k2inv_L(i, f) : zero_like(f);
                CHECK(lhsL == rhsL);

                CHECK(act_R(K(i), act_R(E(j), act_R(Kinv(i), f))) == q(cartan(i, j)) * act_R(E(j), f));
                CHECK(act_L(K(i), act_L(F(j), act_L(Kinv(i), f))) == q(-cartan(i, j)) * act_L(F(j), f));

                if (i != j) {
                    auto serre = [&](auto act, GeneratorSymbol a, GeneratorSymbol b) {
                        auto one = act(a, act(a, act(b, f)));
                        auto two = act(a, act(b, act(a, f)));
                        auto three = act(b, act(a, act(a, f)));
                        return one - (q(2) + q(-2)) * two + three;
                    };
                    auto actR = [](const GeneratorSymbol& g, const AlgebraElement& x) { return act_R(g, x); };
                    auto actL = [](const GeneratorSymbol& g, const AlgebraElement& x) { return act_L(g, x); };
                    CHECK(serre(actR, E(i), E(j)).is_zero());
                    CHECK(serre(actR, F(i), F(j)).is_zero());
                    CHECK(serre(actL, E(i), E(j)).is_zero());
                    CHECK(serre(actL, F(i), F(j)).is_zero());
                }
            }
        }
    }
}

TEST_CASE("left and right actions commute") {
    std::mt19937 rng(31);
    const int n = 3;
    std::vector<GeneratorSymbol> gens = {E(1), E(2), F(1), F(2), K(1), K(2), Kinv(1)};
    for (int it = 0; it < 8; ++it) {
        auto f = random_element(rng, n, 3, 2);
        for (const auto& gl : gens)
            for (const auto& gr : gens)
                CHECK(act_L(gl, act_R(gr, f)) == act_R(gr, act_L(gl, f)));
    }
}

TEST_CASE("weights of homogeneous elements") {
    auto det3 = quantum_determinant(3);
    auto wr = weight_of(det3, ActionSide::right);
    REQUIRE(wr.has_value());
    CHECK(wr->gl == std::vector<int>{1, 1, 1});
    CHECK(wr->sl == std::vector<int>{0, 0});
    CHECK(weight_of(det3, ActionSide::left) == wr);
    CHECK(act_R(K(1), det3) == det3);
    CHECK(act_L(K(2), det3) == det3);

    auto minor = quantum_minor(3, {0, 1}, {0, 1});
    auto wm = weight_of(minor, ActionSide::right);
    REQUIRE(wm.has_value());
    CHECK(wm->gl == std::vector<int>{1, 1, 0});
    CHECK(wm->sl == std::vector<int>{0, 1});
    CHECK(act_R(K(2), minor) == q(1) * minor);
    CHECK(act_R(K(1), minor) == minor);
    CHECK(act_L(K(2), minor) == q(-1) * minor);

    auto mixed = letter(2, 0, 0) + letter(2, 0, 1);
    CHECK(!weight_of(mixed, ActionSide::right).has_value());
    auto wl = weight_of(mixed, ActionSide::left);
    REQUIRE(wl.has_value());
    CHECK(wl->gl == std::vector<int>{1, 0});
    CHECK(wl->sl == std::vector<int>{1});
    CHECK(!weight_of(AlgebraElement(2, BasisTag::plain), ActionSide::left).has_value());

    // K eigenvalue is q^{sl_i} on the right and q^{-sl_i} on the left
    std::mt19937 rng(41);
    for (int it = 0; it < 20; ++it) {
        AlgebraElement f(3, BasisTag::plain);
        ExponentMatrix a(3);
        std::uniform_int_distribution<int> cell(0, 2), deg(0, 4);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ++a.at(cell(rng), cell(rng));
        f.add_term(a, LaurentPoly(1));
        auto right = weight_of(f, ActionSide::right);
        auto left = weight_of(f, ActionSide::left);
        REQUIRE(right.has_value());
        REQUIRE(left.has_value());
        for (int i = 1; i < 3; ++i) {
            CHECK(act_R(K(i), f) == q(right->sl[i - 1]) * f);
            CHECK(act_L(K(i), f) == q(-left->sl[i - 1]) * f);
        }
    }
}

TEST_CASE("corner minors are killed by both raising actions") {
    // antidiagonal minors: last s rows against first s columns
    for (int s = 1; s <= 2; ++s) {
        std::vector<int> rows(s), cols(s);
        for (int r = 0; r < s; ++r) {
            rows[r] = 3 - s + r;
            cols[r] = r;
        }
        auto minor = quantum_minor(3, rows, cols);
        for (int i = 1; i < 3; ++i) {
            CHECK(act_L(E(i), minor).is_zero());
            CHECK(act_R(E(i), minor).is_zero());
        }
    }
    // and so is their product, by the twisted derivation rule
    auto prod = quantum_minor(3, {2}, {0}) * quantum_minor(3, {1, 2}, {0, 1});
    for (int i = 1; i < 3; ++i) {
        CHECK(act_L(E(i), prod).is_zero());
        CHECK(act_R(E(i), prod).is_zero());
    }
    // top-row minors with arbitrary columns are invariant for every lowering
    // generator on the left
    const std::vector<std::vector<int>> col_sets = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& cols : col_sets) {
        auto minor = quantum_minor(3, {0, 1}, cols);
        CHECK(act_L(F(1), minor).is_zero());
        CHECK(act_L(F(2), minor).is_zero());
        CHECK(act_L(E(1), minor).is_zero());
    }
    // the determinant is invariant on both sides
    auto det3 = quantum_determinant(3);
    for (int i = 1; i < 3; ++i) {
        CHECK(act_L(E(i), det3).is_zero());
        CHECK(act_L(F(i), det3).is_zero());
        CHECK(act_R(E(i), det3).is_zero());
        CHECK(act_R(F(i), det3).is_zero());
    }
}

TEST_CASE("omega and theta") {
    CHECK(omega(E(2)) == F(2));
    CHECK(omega(F(1)) == E(1));
    CHECK(omega(K(1)) == K(1));

    auto tE = theta(E(1));
    CHECK(tE.scalar == -q(-4));
    CHECK(tE.k_index == 1);
    CHECK(tE.k_power == -2);
    REQUIRE(tE.gen.has_value());
    CHECK(*tE.gen == F(1));

    auto tF = theta(F(2));
    CHECK(tF.scalar == LaurentPoly(-1));
    CHECK(tF.k_power == 2);
    REQUIRE(tF.gen.has_value());
    CHECK(*tF.gen == E(2));

    auto tK = theta(K(1));
    CHECK(!tK.gen.has_value());
    CHECK(tK.k_power == -1);

    CHECK(natural_rep(3, theta(E(1))) == -q(-2) * natural_rep(3, F(1)));
    CHECK(natural_rep(3, theta(F(1))) == -q(2) * natural_rep(3, E(1)));

    // twice through theta acts as the identity on the vector representation
    for (const auto& g : {E(1), E(2), F(1), F(2), K(1), K(2)})
        CHECK(rep_theta_twice(3, g) == natural_rep(3, g));

    // the twisted action has the same kernel as the plain partner action
    std::mt19937 rng(53);
    for (int it = 0; it < 10; ++it) {
        auto f = random_element(rng, 3, 3, 2);
        CHECK(act_L(theta(E(1)), f).is_zero() == act_L(F(1), f).is_zero());
        CHECK(act_L(theta(F(2)), f).is_zero() == act_L(E(2), f).is_zero());
    }
    auto minor = quantum_minor(3, {0, 1}, {1, 2});
    CHECK(act_L(theta(E(1)), minor).is_zero());
    CHECK(act_L(theta(E(2)), minor).is_zero());

    // scaled action unwinds as scalar, K power, then the inner generator
    auto f = mono({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    ScaledGenerator pure_k{q(3), 2, -2, std::nullopt};
    CHECK(act_R(pure_k, f) == q(3) * act_R(Kinv(2), act_R(Kinv(2), f)));
    CHECK(act_L(tF, f) == -k2_L(2, act_L(E(2), f)));
}
