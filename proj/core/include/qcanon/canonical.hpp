#pragma once

#include "qcanon/algebra.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace qcanon {

/// One weight block (fixed row and column sums), fully solved: the matrices
/// in processing order and the unitriangular transition from the canonical
/// basis to the modified monomials.
struct SolvedBlock {
    std::vector<int> ro, co;
    /// Decreasing stat; order[0] is the unique stat-maximal matrix.
    std::vector<ExponentMatrix> order;
    std::map<ExponentMatrix, int> index;
    /// transition[a][b]: coefficient of x(order[b]) in b(order[a]).
    /// Upper triangular, unit diagonal, off-diagonal entries in qZ[q].
    std::vector<std::vector<LaurentPoly>> transition;
};

/// b(A) = x(A) + sum of h_B x(B) over lower B in the block of A.
struct CanonicalExpansion {
    ExponentMatrix top;
    std::map<ExponentMatrix, LaurentPoly> coeffs;  // includes top with coefficient 1
};

/// Solves blocks on demand and caches them, optionally persisting JSON dumps
/// to a directory (defaulting to the QCANON_CACHE_DIR environment variable).
/// Safe for concurrent use; distinct blocks may be solved in parallel.
class BlockCache {
public:
    BlockCache();
    explicit BlockCache(std::optional<std::filesystem::path> dir);

    const SolvedBlock& block(const std::vector<int>& ro, const std::vector<int>& co);

    /// Scalar s(A) with det_q * b(A) = s(A) * b(A + Id), measured on demand.
    /// Throws std::domain_error("quotient reduction unavailable") if the
    /// product is not a single canonical term.
    const LaurentPoly& det_shift_scalar(const ExponentMatrix& a);

    /// Refuse blocks with more matrices than cap (0 = unlimited);
    /// violations throw std::length_error("block size limit exceeded").
    void set_max_block_size(size_t cap) { cap_ = cap; }
    size_t max_block_size() const { return cap_; }

private:
    std::mutex mu_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::unique_ptr<SolvedBlock>> blocks_;
    std::map<ExponentMatrix, LaurentPoly> shift_scalars_;
    std::optional<std::filesystem::path> dir_;
    size_t cap_ = 0;
};

/// The canonical basis element b(A), as coefficients over modified monomials.
CanonicalExpansion canonical_element(BlockCache& cache, const ExponentMatrix& a);
AlgebraElement canonical_modified(BlockCache& cache, const ExponentMatrix& a);
AlgebraElement canonical_plain(BlockCache& cache, const ExponentMatrix& a);

/// Coefficients of e in the canonical basis (input plain or modified).
AlgebraElement expand_in_canonical(BlockCache& cache, const AlgebraElement& e);
/// Linear extension of A -> b(A) back to the plain basis.
AlgebraElement canonical_to_plain(BlockCache& cache, const AlgebraElement& e);

/// det_q = sum over permutations of (-q^2)^{inversions} x_{1,s(1)} ... x_{n,s(n)}.
AlgebraElement quantum_determinant(int n);
/// det_q of the subalgebra on the given rows and columns (0-based, ascending,
/// equal sizes). The monomials come out already sorted.
AlgebraElement quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols);

/// Expands det_q * b(A) in the canonical basis; returns the scalar s(A) if
/// the result is the single term s(A) * b(A + Id), nullopt otherwise.
std::optional<LaurentPoly> detq_shift_check(BlockCache& cache, const ExponentMatrix& a);

/// Representative of the image in O_q(SL(n)) = O_q(M(n)) / (det_q - 1):
/// every canonical index A is replaced by A - k Id (k = smallest diagonal
/// entry) and the coefficient is divided by the accumulated shift scalars.
/// Input and output in the canonical basis. Throws
/// std::domain_error("quotient reduction unavailable") if a shift scalar is
/// not a unit +-q^m.
AlgebraElement sl_reduce(BlockCache& cache, const AlgebraElement& e);

}  // namespace qcanon
