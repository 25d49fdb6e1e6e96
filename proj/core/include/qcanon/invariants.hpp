#pragma once

#include "qcanon/canonical.hpp"
#include "qcanon/linalg.hpp"
#include "qcanon/uq.hpp"

#include <string>
#include <vector>

namespace qcanon {

/// A set of Chevalley-style generators cutting out an invariant subalgebra.
struct CoidealSpec {
    std::vector<GeneratorSymbol> generators;

    /// All F_i, 1 <= i < n.
    static CoidealSpec lowering(int n);
    /// All K_i and K_i^{-1}.
    static CoidealSpec torus(int n);
    /// {E_i, F_i : i in levi_roots} together with the full torus.
    static CoidealSpec levi(int n, const std::vector<int>& levi_roots);
};

/// Invariance condition for one generator x on a plain-basis element:
/// the theta-twisted left action fixes b up to the counit,
/// act_L(theta(x), b) == eps(x) b with eps(E) = eps(F) = 0, eps(K) = 1.
bool invariance_holds(const GeneratorSymbol& x, const AlgebraElement& plain_b);

/// Invariance of the canonical element b(A) under every generator in S.
bool is_invariant(BlockCache& cache, const CoidealSpec& s, const ExponentMatrix& a);

/// One weight block of invariant canonical elements.
struct InvariantBlock {
    std::vector<int> ro, co;
    std::vector<ExponentMatrix> members;
};

/// All invariant canonical indices of total degree <= truncation, restricted
/// to sl-reduced representatives (some zero diagonal entry). Blocks come out
/// sorted by (degree, ro, co); empty blocks are dropped.
std::vector<InvariantBlock> invariant_basis(BlockCache& cache, int n, const CoidealSpec& s,
                                            int truncation);

/// Dimension of the joint kernel of the stacked maps
/// act_L(theta(x)) - eps(x), x in S, on the span of the sl-reduced canonical
/// elements of one (ro, co) block. Computed by fraction-free elimination,
/// independently of the member filter; completeness of the filtered basis
/// means this equals the number of invariant members.
int invariant_kernel_dimension(BlockCache& cache, const CoidealSpec& s, const std::vector<int>& ro,
                               const std::vector<int>& co);

/// Irreducible right-translation module of highest weight lambda realized on
/// invariant canonical elements (S = all F_i). Members share the row-sum
/// vector row_weight; the action matrices are written in the member basis,
/// column j holding the image of members[j].
struct ModulePresentation {
    int n = 0;
    std::vector<int> fundamental;  // coordinates of lambda on the fundamental weights
    std::vector<int> row_weight;
    std::vector<ExponentMatrix> members;
    std::size_t highest = 0;  // the unique member killed by every raise_action
    std::vector<PolyMatrix> raise_action;  // act_R(E_i), i = 1..n-1
    std::vector<PolyMatrix> lower_action;  // act_R(F_i)
    std::vector<PolyMatrix> torus_action;  // act_R(K_i)
};

/// Throws std::invalid_argument("weight not dominant") on negative
/// coordinates. Internal consistency failures (a module not closing under the
/// action, or a non-unique highest member) throw std::logic_error.
ModulePresentation borel_weil_module(BlockCache& cache, int n, const std::vector<int>& fundamental);

/// The ordered product of antidiagonal minor powers
/// D_1^{l_1} D_2^{l_2} ... with D_s = det_q({n-s+1..n}, {1..s}), straightened.
/// Expands to a single canonical term and generates the lambda module.
AlgebraElement highest_weight_monomial(int n, const std::vector<int>& fundamental);

struct CheckReport {
    bool passed = true;
    std::string detail;
};

/// String-basis behaviour of the invariant set: products of invariant
/// canonical elements and their act_R(E_i) images expand with coefficients in
/// Z_+[q, q^-1] supported on invariant indices again. Pairs are sampled
/// deterministically from the lowest-degree members.
CheckReport string_property_check(BlockCache& cache, int n, const CoidealSpec& s, int truncation);

/// Quantum minor on fixed rows and a choice of columns, 0-based ascending.
struct MinorSpec {
    std::vector<int> rows, cols;
};

/// Generators of the invariant subalgebra for S = levi(n, levi_roots): rows
/// split into the consecutive runs linked by levi_roots, and each run of size
/// k contributes the minors det_q(run, J) over all column subsets of size k.
std::vector<MinorSpec> homogeneous_generators(int n, const std::vector<int>& levi_roots);

struct DegreeComparison {
    int degree = 0;          // cumulative cap
    int invariant_count = 0; // sl-reduced invariant indices of degree <= cap
    int product_rank = 0;    // rank of the reduced minor products of degree <= cap
};

struct GenerationReport {
    bool passed = true;
    std::vector<DegreeComparison> degrees;
    std::string detail;
};

/// Compares, degree cap by degree cap, the span of the invariant basis with
/// the span of balanced products of homogeneous_generators (one factor per
/// row run and power, the only products that can pass the torus condition).
/// Products are reduced to sl representatives before the rank computation.
GenerationReport generation_check(BlockCache& cache, int n, const std::vector<int>& levi_roots,
                                  int truncation);

}  // namespace qcanon
