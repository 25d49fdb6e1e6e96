#pragma once

#include "qcanon/algebra.hpp"
#include "qcanon/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcanon {

enum class GenKind { E, F, K, Kinv };

/// One Chevalley-style generator E_i, F_i, K_i or K_i^{-1}, 1 <= i <= n-1.
struct GeneratorSymbol {
    GenKind kind;
    int index;

    friend bool operator==(const GeneratorSymbol& a, const GeneratorSymbol& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const GeneratorSymbol& a, const GeneratorSymbol& b) { return !(a == b); }
};

/// Parses "E1", "F2", "K1", "K1inv".
GeneratorSymbol parse_generator(const std::string& s);
std::string to_string(const GeneratorSymbol& g);

/// scalar * K_{k_index}^{k_power} * gen, the normal form produced by the
/// antipode and theta on generators. gen may be absent (pure torus element).
struct ScaledGenerator {
    LaurentPoly scalar;
    int k_index = 1;
    int k_power = 0;
    std::optional<GeneratorSymbol> gen;
};

/// Swaps E_i and F_i, fixes K_i.
GeneratorSymbol omega(const GeneratorSymbol& g);

/// theta = omega after the inverse antipode:
/// theta(E_i) = -q^{-4} K_i^{-2} F_i, theta(F_i) = -K_i^2 E_i,
/// theta(K_i) = K_i^{-1}. An algebra map; on the natural representation
/// theta(theta(g)) acts as g again.
ScaledGenerator theta(const GeneratorSymbol& g);

/// The vector representation: rho(E_k) = e_{k,k+1}, rho(F_k) = e_{k+1,k},
/// rho(K_k) = diag(1, ..., q, q^{-1}, ..., 1) with q in slot k.
PolyMatrix natural_rep(int n, const GeneratorSymbol& g);
PolyMatrix natural_rep(int n, const ScaledGenerator& g);
/// rho composed with the antipode S (S(E) = -K^{-2}E, S(F) = -FK^2,
/// S(K) = K^{-1}) or its inverse.
PolyMatrix natural_rep_antipode(int n, const GeneratorSymbol& g);
PolyMatrix natural_rep_antipode_inverse(int n, const GeneratorSymbol& g);

/// Right translation: R_g(x_{ab}) = sum_l x_{al} rho(g)_{lb}, extended to
/// products through the coproduct of g (a generalized derivation). Moves
/// column indices; straightened output in the basis of f.
AlgebraElement act_R(const GeneratorSymbol& g, const AlgebraElement& f);

/// Left translation: L_g(x_{ab}) = sum_l rho(S(g))_{al} x_{lb}; moves row
/// indices. Composition of both actions is contravariant in neither: both
/// L and R are left actions, and they commute with each other.
AlgebraElement act_L(const GeneratorSymbol& g, const AlgebraElement& f);
AlgebraElement act_L(const ScaledGenerator& g, const AlgebraElement& f);
AlgebraElement act_R(const ScaledGenerator& g, const AlgebraElement& f);

/// Integer gl-weight with the derived sl-weight (first differences).
struct WeightVector {
    std::vector<int> gl;
    std::vector<int> sl;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.gl == b.gl && a.sl == b.sl;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }
};

WeightVector weight_from_gl(std::vector<int> gl);

enum class ActionSide { left, right };

/// Weight of a homogeneous element: gl part is co(A) on the right side and
/// ro(A) on the left side; nullopt if the support mixes row or column sums.
/// act(K_i) then scales f by q^{sl_i} (right) or q^{-sl_i} (left).
std::optional<WeightVector> weight_of(const AlgebraElement& f, ActionSide side);

}  // namespace qcanon
