#include "qcanon/uq.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace qcanon {

namespace {

void check_index(int n, const GeneratorSymbol& g) {
    if (g.index < 1 || g.index >= n)
        throw std::invalid_argument("generator index out of range");
}

LaurentPoly q_power(int e) { return LaurentPoly::monomial(e); }

}  // namespace

GeneratorSymbol parse_generator(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad generator name");
    GenKind kind;
    switch (s[0]) {
        case 'E': kind = GenKind::E; break;
        case 'F': kind = GenKind::F; break;
        case 'K': kind = GenKind::K; break;
        default: throw std::invalid_argument("bad generator name");
    }
    std::size_t p = 1;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == 1) throw std::invalid_argument("bad generator name");
    int index = std::stoi(s.substr(1, p - 1));
    if (p < s.size()) {
        if (kind == GenKind::K && s.substr(p) == "inv") {
            kind = GenKind::Kinv;
        } else {
            throw std::invalid_argument("bad generator name");
        }
    }
    if (index < 1) throw std::invalid_argument("bad generator name");
    return {kind, index};
}

std::string to_string(const GeneratorSymbol& g) {
    std::string out;
    switch (g.kind) {
        case GenKind::E: out = "E"; break;
        case GenKind::F: out = "F"; break;
        case GenKind::K: out = "K"; break;
        case GenKind::Kinv: out = "K"; break;
    }
    out += std::to_string(g.index);
    if (g.kind == GenKind::Kinv) out += "inv";
    return out;
}

GeneratorSymbol omega(const GeneratorSymbol& g) {
    switch (g.kind) {
        case GenKind::E: return {GenKind::F, g.index};
        case GenKind::F: return {GenKind::E, g.index};
        default: return g;
    }
}

ScaledGenerator theta(const GeneratorSymbol& g) {
    ScaledGenerator out;
    out.k_index = g.index;
    switch (g.kind) {
        case GenKind::E:
            out.scalar = -q_power(-4);
            out.k_power = -2;
            out.gen = GeneratorSymbol{GenKind::F, g.index};
            break;
        case GenKind::F:
            out.scalar = LaurentPoly(-1);
            out.k_power = 2;
            out.gen = GeneratorSymbol{GenKind::E, g.index};
            break;
        case GenKind::K:
            out.scalar = LaurentPoly(1);
            out.k_power = -1;
            break;
        case GenKind::Kinv:
            out.scalar = LaurentPoly(1);
            out.k_power = 1;
            break;
    }
    return out;
}

PolyMatrix natural_rep(int n, const GeneratorSymbol& g) {
    check_index(n, g);
    PolyMatrix m(n, n);
    const int i = g.index;
    switch (g.kind) {
        case GenKind::E:
            m.at(i - 1, i) = LaurentPoly(1);
            break;
        case GenKind::F:
            m.at(i, i - 1) = LaurentPoly(1);
            break;
        case GenKind::K:
        case GenKind::Kinv: {
            const int sign = g.kind == GenKind::K ? 1 : -1;
            for (int d = 0; d < n; ++d) {
                int e = 0;
                if (d == i - 1) e = sign;
                if (d == i) e = -sign;
                m.at(d, d) = q_power(e);
            }
            break;
        }
    }
    return m;
}

PolyMatrix natural_rep(int n, const ScaledGenerator& g) {
    PolyMatrix m = g.gen ? natural_rep(n, *g.gen) : PolyMatrix::identity(n);
    if (g.k_power != 0) {
        GeneratorSymbol k{g.k_power > 0 ? GenKind::K : GenKind::Kinv, g.k_index};
        PolyMatrix km = natural_rep(n, k);
        for (int r = 0; r < std::abs(g.k_power); ++r) m = km * m;
    }
    return g.scalar * m;
}

PolyMatrix natural_rep_antipode(int n, const GeneratorSymbol& g) {
    check_index(n, g);
    ScaledGenerator s;
    s.k_index = g.index;
    switch (g.kind) {
        case GenKind::E:
            // S(E_i) = -K_i^{-2} E_i
            s.scalar = LaurentPoly(-1);
            s.k_power = -2;
            s.gen = g;
            break;
        case GenKind::F:
            // S(F_i) = -F_i K_i^2 = -q^4 K_i^2 F_i
            s.scalar = -q_power(4);
            s.k_power = 2;
            s.gen = g;
            break;
        case GenKind::K:
            s.scalar = LaurentPoly(1);
            s.k_power = -1;
            break;
        case GenKind::Kinv:
            s.scalar = LaurentPoly(1);
            s.k_power = 1;
            break;
    }
    return natural_rep(n, s);
}

PolyMatrix natural_rep_antipode_inverse(int n, const GeneratorSymbol& g) {
    check_index(n, g);
    ScaledGenerator s;
    s.k_index = g.index;
    switch (g.kind) {
        case GenKind::E:
            // S^{-1}(E_i) = -E_i K_i^{-2} = -q^4 K_i^{-2} E_i
            s.scalar = -q_power(4);
            s.k_power = -2;
            s.gen = g;
            break;
        case GenKind::F:
            // S^{-1}(F_i) = -K_i^2 F_i
            s.scalar = LaurentPoly(-1);
            s.k_power = 2;
            s.gen = g;
            break;
        case GenKind::K:
            s.scalar = LaurentPoly(1);
            s.k_power = -1;
            break;
        case GenKind::Kinv:
            s.scalar = LaurentPoly(1);
            s.k_power = 1;
            break;
    }
    return natural_rep(n, s);
}

namespace {

int twist_exponent(GenKind kind, bool left, int i, std::pair<int, int> letter) {
    // K^2-type twist exponent contributed by one letter.
    const int idx = left ? letter.first : letter.second;
    int e = 0;
    if (idx == i - 1) e = 2;
    if (idx == i) e = -2;
    if (left) e = -e;                    // left action twists through S(K)
    if (kind == GenKind::F) e = -e;      // F legs carry K^{-2}
    return e;
}

AlgebraElement act_word(const GeneratorSymbol& g, const AlgebraElement& f, bool left) {
    if (f.basis() != BasisTag::plain)
        throw std::invalid_argument("plain basis required");
    const int n = f.n();
    check_index(n, g);
    const int i = g.index;

    AlgebraElement out(n, BasisTag::plain);
    const bool is_k = g.kind == GenKind::K || g.kind == GenKind::Kinv;

    for (const auto& [mat, coeff] : f.terms()) {
        if (is_k) {
            const auto sums = left ? mat.row_sums() : mat.col_sums();
            int e = sums[i - 1] - sums[i];
            if (left) e = -e;
            if (g.kind == GenKind::Kinv) e = -e;
            out.add_term(mat, coeff * q_power(e));
            continue;
        }

        const std::vector<std::pair<int, int>> letters = mat.word();
        const bool twist_prefix = left ? g.kind == GenKind::F : g.kind == GenKind::E;

        for (std::size_t k = 0; k < letters.size(); ++k) {
            const auto [a, b] = letters[k];
            std::pair<int, int> moved;
            LaurentPoly hit;
            if (left) {
                if (g.kind == GenKind::E) {
                    if (a != i - 1) continue;
                    moved = {i, b};
                    hit = -q_power(-2);
                } else {
                    if (a != i) continue;
                    moved = {i - 1, b};
                    hit = -q_power(2);
                }
            } else {
                if (g.kind == GenKind::E) {
                    if (b != i) continue;
                    moved = {a, i - 1};
                } else {
                    if (b != i - 1) continue;
                    moved = {a, i};
                }
                hit = LaurentPoly(1);
            }

            int twist = 0;
            if (twist_prefix) {
                for (std::size_t t = 0; t < k; ++t)
                    twist += twist_exponent(g.kind, left, i, letters[t]);
            } else {
                for (std::size_t t = k + 1; t < letters.size(); ++t)
                    twist += twist_exponent(g.kind, left, i, letters[t]);
            }

            Word w;
            w.letters = letters;
            w.letters[k] = moved;
            w.scalar = coeff * hit * q_power(twist);
            out += straighten(n, w);
        }
    }
    return out;
}

}  // namespace

AlgebraElement act_R(const GeneratorSymbol& g, const AlgebraElement& f) {
    return act_word(g, f, false);
}

AlgebraElement act_L(const GeneratorSymbol& g, const AlgebraElement& f) {
    return act_word(g, f, true);
}

namespace {

AlgebraElement act_scaled(const ScaledGenerator& g, const AlgebraElement& f, bool left) {
    AlgebraElement r = f;
    if (g.gen) r = left ? act_L(*g.gen, r) : act_R(*g.gen, r);
    if (g.k_power != 0) {
        GeneratorSymbol k{g.k_power > 0 ? GenKind::K : GenKind::Kinv, g.k_index};
        for (int t = 0; t < std::abs(g.k_power); ++t) r = left ? act_L(k, r) : act_R(k, r);
    }
    return g.scalar * r;
}

}  // namespace

AlgebraElement act_L(const ScaledGenerator& g, const AlgebraElement& f) {
    return act_scaled(g, f, true);
}

AlgebraElement act_R(const ScaledGenerator& g, const AlgebraElement& f) {
    return act_scaled(g, f, false);
}

WeightVector weight_from_gl(std::vector<int> gl) {
    WeightVector w;
    w.gl = std::move(gl);
    if (!w.gl.empty()) {
        w.sl.reserve(w.gl.size() - 1);
        for (std::size_t i = 0; i + 1 < w.gl.size(); ++i)
            w.sl.push_back(w.gl[i] - w.gl[i + 1]);
    }
    return w;
}

std::optional<WeightVector> weight_of(const AlgebraElement& f, ActionSide side) {
    if (f.is_zero()) return std::nullopt;
    std::optional<std::vector<int>> gl;
    for (const auto& [mat, coeff] : f.terms()) {
        auto sums = side == ActionSide::left ? mat.row_sums() : mat.col_sums();
        if (!gl) {
            gl = std::move(sums);
        } else if (*gl != sums) {
            return std::nullopt;
        }
    }
    return weight_from_gl(std::move(*gl));
}

}  // namespace qcanon
