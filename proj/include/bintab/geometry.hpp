#pragma once

// The cone {y >= 0 : H y = 0}, its extreme rays, and the polytope of
// pmfs obtained by normalizing them.

#include "bintab/constraints.hpp"
#include "bintab/table.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bintab {

/// Largest dimension handled by the ray enumerator (zero sets are 128-bit masks).
inline constexpr int kMaxEnumerationDimension = 7;

/// Extreme rays as primitive nonnegative integer vectors.
struct RaySet {
    int d = 0;
    std::vector<std::vector<Integer>> rays;

    std::size_t size() const { return rays.size(); }
    bool empty() const { return rays.empty(); }
};

enum class AdjacencyTest {
    combinatorial,  ///< no third ray vanishes wherever both candidates vanish
    algebraic,      ///< the common zero set cuts the current kernel down to dimension 2
};

struct EnumerationOptions {
    unsigned threads = 1;
    AdjacencyTest adjacency = AdjacencyTest::combinatorial;
    /// Order in which rows of H are inserted; empty means natural order.
    std::vector<std::size_t> row_order;
};

/// Double description method started from the unit vectors generating the
/// nonnegative orthant; every row of H is inserted as a hyperplane. Exact
/// integer arithmetic. The output is sorted and independent of `threads`
/// and `row_order`. An empty result means the cone is {0}.
RaySet extreme_rays(const ConstraintMatrix& h, const EnumerationOptions& options = {});

/// Vertices r_i of the polytope {p >= 0 : H p = 0, sum p = 1}.
struct VertexSet {
    int d = 0;
    std::vector<ExactPmf> vertices;
    ConstraintMatrix constraints;  ///< the system the vertices came from

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
    const ExactPmf& operator[](std::size_t i) const { return vertices[i]; }
};

/// r_i = y_i / sum(y_i), sorted ascending by cell vector (lexicographic).
VertexSet normalize(const RaySet& rays, const ConstraintMatrix& h);

/// extreme_rays followed by normalize.
VertexSet enumerate_vertices(const ConstraintMatrix& h, const EnumerationOptions& options = {});

/// Ascending lexicographic order of cell vectors; the canonical vertex order.
bool canonical_less(const ExactPmf& a, const ExactPmf& b);

/// sum_i theta_i r_i. Weights must be nonnegative and sum to one (exactly for
/// rationals, within 1e-12 for doubles).
ExactPmf mixture(std::span<const Rational> theta, const VertexSet& vertices);
Pmf mixture(std::span<const double> theta, const VertexSet& vertices);

struct MixtureWeights {
    std::vector<double> theta;
    double residual = 0.0;  ///< max-norm of sum theta_i r_i - p
};

/// Nonnegative weights reproducing `p` within `tol` (max norm); among the
/// feasible weights the one of minimum Euclidean norm. Throws
/// NotInPolytopeError, carrying the best residual found, when none exist.
MixtureWeights decompose(const Pmf& p, const VertexSet& vertices, double tol = 1e-9);

/// Affine dimension of the feasible polytope. Throws InfeasibleError when it is empty.
int polytope_dimension(const ConstraintMatrix& h);
int polytope_dimension(const VertexSet& vertices);

std::size_t support_size(const ExactPmf& p);

}  // namespace bintab
