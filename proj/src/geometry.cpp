#include "bintab/geometry.hpp"

#include "bintab/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bitset>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

namespace bintab {

namespace {

using ZeroSet = std::bitset<std::size_t{1} << kMaxEnumerationDimension>;

struct WorkRay {
    std::vector<Integer> coords;
    ZeroSet zeros;
};

WorkRay make_ray(std::vector<Integer> coords) {
    const Integer g = gcd_of(coords);
    if (g > 1)
        for (auto& c : coords) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    WorkRay r;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] == 0) r.zeros.set(k);
    r.coords = std::move(coords);
    return r;
}

std::vector<std::vector<Integer>> integer_rows(const ConstraintMatrix& h) {
    std::vector<std::vector<Integer>> out;
    out.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        const Integer scale = lcm_of_denominators(row);
        std::vector<Integer> ints;
        ints.reserve(row.size());
        for (const auto& v : row) {
            Rational scaled = v * scale;
            ints.push_back(scaled.get_num());
        }
        out.push_back(std::move(ints));
    }
    return out;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0) acc += a[k] * b[k];
    return acc;
}

/// State shared by the adjacency checks of one insertion step.
struct Step {
    const std::vector<WorkRay>* rays = nullptr;  // all rays of the current cone
    const std::vector<std::vector<Integer>>* processed = nullptr;
    std::size_t columns = 0;
    std::size_t cone_dim = 0;  // columns - rank(processed rows)
    AdjacencyTest test = AdjacencyTest::combinatorial;

    bool adjacent(std::size_t a, std::size_t b) const {
        const ZeroSet common = (*rays)[a].zeros & (*rays)[b].zeros;
        // a 2-face needs at least cone_dim - 2 tight coordinates
        if (common.count() + 2 < cone_dim) return false;
        if (test == AdjacencyTest::combinatorial) {
            for (std::size_t t = 0; t < rays->size(); ++t) {
                if (t == a || t == b) continue;
                if (((*rays)[t].zeros & common) == common) return false;
            }
            return true;
        }
        // algebraic: rows restricted to the free coordinates leave a 2-dimensional kernel
        std::vector<std::size_t> free_cols;
        for (std::size_t k = 0; k < columns; ++k)
            if (!common.test(k)) free_cols.push_back(k);
        linalg::Matrix sub;
        sub.reserve(processed->size());
        for (const auto& row : *processed) {
            std::vector<Rational> r;
            r.reserve(free_cols.size());
            for (auto k : free_cols) r.emplace_back(row[k]);
            sub.push_back(std::move(r));
        }
        return free_cols.size() - linalg::rank(sub, free_cols.size()) == 2;
    }
};

std::vector<WorkRay> combine_chunk(const Step& step, const std::vector<std::size_t>& pos,
                                   const std::vector<std::size_t>& neg, const std::vector<Integer>& values,
                                   std::size_t begin, std::size_t end) {
    std::vector<WorkRay> out;
    const auto& rays = *step.rays;
    for (std::size_t pi = begin; pi < end; ++pi) {
        const std::size_t a = pos[pi];
        for (std::size_t b : neg) {
            if (!step.adjacent(a, b)) continue;
            // values[a] > 0 > values[b]: positive combination on the hyperplane
            const Integer& va = values[a];
            const Integer vb = -values[b];
            std::vector<Integer> coords(rays[a].coords.size());
            for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = va * rays[b].coords[k] + vb * rays[a].coords[k];
            out.push_back(make_ray(std::move(coords)));
        }
    }
    return out;
}

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RaySet extreme_rays(const ConstraintMatrix& h, const EnumerationOptions& options) {
    if (h.d < 1 || h.d > kMaxEnumerationDimension)
        throw DomainError("ray enumeration supports dimensions 1.." + std::to_string(kMaxEnumerationDimension));
    const std::size_t n = h.columns();
    for (const auto& row : h.rows)
        if (row.size() != n) throw DomainError("constraint row length differs from 2^d");

    std::vector<std::size_t> order = options.row_order;
    if (order.empty()) {
        order.resize(h.rows.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
    } else {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expect(h.rows.size());
        std::iota(expect.begin(), expect.end(), std::size_t{0});
        if (sorted != expect) throw DomainError("row order must be a permutation of the constraint rows");
    }

    const auto rows = integer_rows(h);
    std::vector<WorkRay> rays;
    rays.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Integer> e(n, Integer(0));
        e[k] = 1;
        rays.push_back(make_ray(std::move(e)));
    }

    std::vector<std::vector<Integer>> processed;
    linalg::Matrix processed_rational;
    const unsigned threads = std::max(1U, options.threads);

    for (std::size_t r : order) {
        const auto& row = rows[r];
        std::vector<Integer> values(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            values[i] = dot(row, rays[i].coords);
            const int s = sgn(values[i]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
        }
        // the adjacency test sees the cone before this row is inserted
        Step step;
        step.rays = &rays;
        step.processed = &processed;
        step.columns = n;
        step.cone_dim = n - linalg::rank(processed_rational, n);
        step.test = options.adjacency;

        std::vector<WorkRay> next;
        next.reserve(zero.size());
        for (auto i : zero) next.push_back(rays[i]);
        if (!pos.empty() && !neg.empty()) {
            const unsigned chunks = std::min<unsigned>(threads, static_cast<unsigned>(pos.size()));
            if (chunks <= 1) {
                auto made = combine_chunk(step, pos, neg, values, 0, pos.size());
                std::move(made.begin(), made.end(), std::back_inserter(next));
            } else {
                std::vector<std::future<std::vector<WorkRay>>> jobs;
                const std::size_t per = (pos.size() + chunks - 1) / chunks;
                for (std::size_t begin = 0; begin < pos.size(); begin += per) {
                    const std::size_t end = std::min(pos.size(), begin + per);
                    jobs.push_back(std::async(std::launch::async, combine_chunk, std::cref(step), std::cref(pos),
                                              std::cref(neg), std::cref(values), begin, end));
                }
                for (auto& job : jobs) {
                    auto made = job.get();
                    std::move(made.begin(), made.end(), std::back_inserter(next));
                }
            }
        }
        rays = std::move(next);
        processed.push_back(row);
        std::vector<Rational> as_rational(row.begin(), row.end());
        processed_rational.push_back(std::move(as_rational));
        if (rays.empty()) break;
    }

    RaySet out;
    out.d = h.d;
    out.rays.reserve(rays.size());
    for (auto& r : rays) out.rays.push_back(std::move(r.coords));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

bool canonical_less(const ExactPmf& a, const ExactPmf& b) {
    return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end());
}

VertexSet normalize(const RaySet& rays, const ConstraintMatrix& h) {
    VertexSet v;
    v.d = rays.d;
    v.constraints = h;
    for (const auto& ray : rays.rays) {
        Integer total = 0;
        for (const auto& c : ray) total += c;
        if (total <= 0) throw Error("extreme ray with nonpositive mass");
        std::vector<Rational> cells;
        cells.reserve(ray.size());
        for (const auto& c : ray) {
            Rational q(c, total);
            q.canonicalize();
            cells.push_back(std::move(q));
        }
        v.vertices.emplace_back(rays.d, std::move(cells));
    }
    std::sort(v.vertices.begin(), v.vertices.end(), canonical_less);
    return v;
}

VertexSet enumerate_vertices(const ConstraintMatrix& h, const EnumerationOptions& options) {
    return normalize(extreme_rays(h, options), h);
}

ExactPmf mixture(std::span<const Rational> theta, const VertexSet& vertices) {
    if (theta.size() != vertices.size()) throw DomainError("weight count differs from vertex count");
    Rational total = 0;
    for (const auto& t : theta) {
        if (t < 0) throw DomainError("negative mixture weight");
        total += t;
    }
    if (total != 1) throw DomainError("mixture weights must sum to 1");
    return ExactPmf(vertices.d, combine<Rational>(theta, vertices.vertices));
}

Pmf mixture(std::span<const double> theta, const VertexSet& vertices) {
    if (theta.size() != vertices.size()) throw DomainError("weight count differs from vertex count");
    double total = 0;
    for (double t : theta) {
        if (t < 0 || !std::isfinite(t)) throw DomainError("negative mixture weight");
        total += t;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("mixture weights must sum to 1");
    std::vector<double> cells(cell_count(vertices.d), 0.0);
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += theta[i] * vertices[i][k].get_d();
    return normalized(vertices.d, std::move(cells));
}

namespace {

Eigen::VectorXd least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    return a.completeOrthogonalDecomposition().solve(b);
}

/// Lawson-Hanson active set method for min |A x - b|, x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    const Eigen::Index n = a.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double tol = 1e-14 * std::max(1.0, a.cwiseAbs().maxCoeff()) * static_cast<double>(n);
    for (int outer = 0; outer < 3 * n + 10; ++outer) {
        Eigen::VectorXd w = a.transpose() * (b - a * x);
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
                best_w = w[j];
                best = j;
            }
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;
        for (int inner = 0; inner < 3 * n + 10; ++inner) {
            std::vector<Eigen::Index> idx;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
            Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
            for (std::size_t c = 0; c < idx.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = a.col(idx[c]);
            const Eigen::VectorXd zs = least_squares(sub, b);
            Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
            for (std::size_t c = 0; c < idx.size(); ++c) z[idx[c]] = zs[static_cast<Eigen::Index>(c)];
            bool all_positive = true;
            for (auto j : idx) all_positive = all_positive && z[j] > 0;
            if (all_positive) {
                x = z;
                break;
            }
            double alpha = 1.0;
            for (auto j : idx)
                if (z[j] <= 0) alpha = std::min(alpha, x[j] / (x[j] - z[j]));
            x += alpha * (z - x);
            for (auto j : idx)
                if (x[j] <= 1e-15) {
                    x[j] = 0;
                    passive[static_cast<std::size_t>(j)] = false;
                }
        }
    }
    return x;
}

double mixture_residual(const Eigen::MatrixXd& vertices, const Eigen::VectorXd& theta, const Eigen::VectorXd& p) {
    const double cells = (vertices * theta - p).cwiseAbs().maxCoeff();
    return std::max(cells, std::abs(theta.sum() - 1.0));
}

}  // namespace

MixtureWeights decompose(const Pmf& p, const VertexSet& vertices, double tol) {
    if (vertices.empty()) throw NotInPolytopeError("no vertices to decompose over", std::numeric_limits<double>::infinity());
    if (p.dimension() != vertices.d) throw DomainError("pmf dimension differs from the vertex set");
    const auto m = static_cast<Eigen::Index>(p.size());
    const auto n = static_cast<Eigen::Index>(vertices.size());
    Eigen::MatrixXd v(m, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < m; ++k) v(k, i) = vertices[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get_d();
    Eigen::VectorXd target(m);
    for (Eigen::Index k = 0; k < m; ++k) target[k] = p[static_cast<std::size_t>(k)];

    // unit-mass row plus a small ridge steering NNLS towards the minimum-norm solution
    constexpr double ridge = 1e-6;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + 1 + n, n);
    a.topRows(m) = v;
    a.row(m).setOnes();
    a.bottomRows(n) = ridge * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1 + n);
    b.head(m) = target;
    b[m] = 1.0;
    Eigen::VectorXd theta = nnls(a, b);

    // polish: exact minimum-norm solution on the support found
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < n; ++i)
        if (theta[i] > 0) support.push_back(i);
    if (!support.empty()) {
        Eigen::MatrixXd sub(m + 1, static_cast<Eigen::Index>(support.size()));
        for (std::size_t c = 0; c < support.size(); ++c) {
            sub.col(static_cast<Eigen::Index>(c)).head(m) = v.col(support[c]);
            sub(m, static_cast<Eigen::Index>(c)) = 1.0;
        }
        const Eigen::VectorXd zs = least_squares(sub, b.head(m + 1));
        if (zs.minCoeff() >= -1e-13) {
            Eigen::VectorXd polished = Eigen::VectorXd::Zero(n);
            for (std::size_t c = 0; c < support.size(); ++c)
                polished[support[c]] = std::max(0.0, zs[static_cast<Eigen::Index>(c)]);
            if (mixture_residual(v, polished, target) <= mixture_residual(v, theta, target) + 1e-15) theta = polished;
        }
    }
    const double res = mixture_residual(v, theta, target);
    if (res > tol) throw NotInPolytopeError("pmf is not a convex combination of the vertices", res);
    MixtureWeights out;
    out.theta.assign(theta.data(), theta.data() + n);
    out.residual = res;
    return out;
}

int polytope_dimension(const VertexSet& vertices) {
    if (vertices.empty()) throw InfeasibleError("empty feasible set");
    linalg::Matrix diffs;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        std::vector<Rational> row(vertices[i].size());
        for (std::size_t k = 0; k < row.size(); ++k) row[k] = vertices[i][k] - vertices[0][k];
        diffs.push_back(std::move(row));
    }
    return static_cast<int>(linalg::rank(diffs, cell_count(vertices.d)));
}

int polytope_dimension(const ConstraintMatrix& h) { return polytope_dimension(enumerate_vertices(h)); }

std::size_t support_size(const ExactPmf& p) {
    return static_cast<std::size_t>(std::count_if(p.cells().begin(), p.cells().end(), [](const Rational& c) { return c != 0; }));
}

}  // namespace bintab
