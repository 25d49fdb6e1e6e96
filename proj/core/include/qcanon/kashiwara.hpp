#pragma once

#include "qcanon/algebra.hpp"
#include "qcanon/canonical.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace qcanon {

/// Factorization of a monomial's rows (i, i+1) into extracted 2x2 minors and
/// a leftover core, the building block of the row-pair replacement bases.
/// Greedy extraction runs over column pairs (j, k), j < k, by decreasing
/// (k, j); what remains has core[0] supported right of core[1]'s support.
struct RowPairFactorization {
    int n = 0;
    int row_index = 1;  // 1-based; the factorization touches rows row_index, row_index+1
    std::array<std::vector<int>, 2> core;
    std::vector<std::pair<int, int>> minors;  // 0-based column pairs, extraction order, repeats
    ExponentMatrix spectators{0};             // rows row_index-1, row_index (0-based) zeroed
    int q_power = 0;  // normalizes the realized element's leading coefficient to 1
};

RowPairFactorization factorize(const ExponentMatrix& a, int i);

/// The realized basis element: q^{q_power} * (rows above) * (core monomial) *
/// (extracted minors) * (rows below), expanded in the modified basis. Its
/// coefficient at the original matrix is exactly 1.
AlgebraElement realize(const RowPairFactorization& f);

/// Coefficients of f (modified basis) in the row-pair replacement basis for
/// row i. The change of basis is unitriangular in the stat order.
std::map<ExponentMatrix, LaurentPoly> expand_row_pair_basis(const AlgebraElement& f, int i);

/// Kashiwara-style raising and lowering operators for rows (i, i+1): expand f
/// in the replacement basis, move one unit between the core rows in each
/// column with the q-shifted coefficient, and re-expand. Input and output in
/// the modified basis.
AlgebraElement tilde_E(int i, const AlgebraElement& f);
AlgebraElement tilde_F(int i, const AlgebraElement& f);

/// Column versions, conjugated by the transpose automorphism.
AlgebraElement tilde_E_right(int i, const AlgebraElement& f);
AlgebraElement tilde_F_right(int i, const AlgebraElement& f);

/// Both vanishing tests of the kernel correspondence: the tilde operator on f
/// against the twisted left translation (theta of the partner generator).
struct VanishingPair {
    bool tilde_vanishes = false;
    bool action_vanishes = false;

    bool agree() const { return tilde_vanishes == action_vanishes; }
};

VanishingPair kernel_agreement_E(int i, const AlgebraElement& f_modified);
VanishingPair kernel_agreement_F(int i, const AlgebraElement& f_modified);

enum class LeadingTermStatus { not_applicable, pass, fail };

/// Checks that tilde_E(i, b(A)) is congruent to a single canonical basis
/// element modulo q times the lattice spanned by the canonical basis over
/// Z[q]: exactly one canonical coefficient has constant term 1, the rest lie
/// in qZ[q]. Returns not_applicable when the operator kills b(A).
LeadingTermStatus leading_term_check(BlockCache& cache, const ExponentMatrix& a, int i);

}  // namespace qcanon
