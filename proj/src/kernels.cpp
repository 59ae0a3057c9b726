#include "cuspidal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>

#include <Eigen/Geometry>
#include <boost/math/tools/roots.hpp>

#include "cuspidal/frontal.hpp"

namespace cusp {

namespace {

Eigen::Vector3d area_vector(const SurfaceDefinition& s, const Eigen::Vector2d& p) {
    const JetVec2d f = surface_jet(s, p.x(), p.y(), 1);
    return partial(f, 1, 0).cross(partial(f, 0, 1));
}

bool is_rank_deficient(const SurfaceDefinition& s, const Eigen::Vector2d& p) {
    const JetVec2d f = surface_jet(s, p.x(), p.y(), 1);
    const Eigen::Vector3d fu = partial(f, 1, 0), fv = partial(f, 0, 1);
    const double scale = std::max({fu.squaredNorm(), fv.squaredNorm(), 1e-300});
    return fu.cross(fv).norm() <= 1e-6 * scale;
}

struct GridLayout {
    const Domain& d;
    int n;
    Eigen::Vector2d node(int i, int j) const {
        return {d.u_min + (d.u_max - d.u_min) * i / n, d.v_min + (d.v_max - d.v_min) * j / n};
    }
    std::int64_t edge_count() const { return 2 * static_cast<std::int64_t>(n) * (n + 1); }
    // Edges 0 .. n(n+1)-1 run along u, the rest along v.
    std::pair<Eigen::Vector2d, Eigen::Vector2d> edge(std::int64_t e) const {
        const std::int64_t half = static_cast<std::int64_t>(n) * (n + 1);
        if (e < half) {
            const int i = static_cast<int>(e % n), j = static_cast<int>(e / n);
            return {node(i, j), node(i + 1, j)};
        }
        e -= half;
        const int i = static_cast<int>(e % (n + 1)), j = static_cast<int>(e / (n + 1));
        return {node(i, j), node(i, j + 1)};
    }
};

std::vector<Eigen::Vector2d> edge_candidates(const SurfaceDefinition& s, const Eigen::Vector2d& a,
                                             const Eigen::Vector2d& b) {
    std::vector<Eigen::Vector2d> out;
    const Eigen::Vector2d m = 0.5 * (a + b);
    const Eigen::Vector3d nm = area_vector(s, m);
    if (nm.norm() == 0.0 || is_rank_deficient(s, m)) {
        if (is_rank_deficient(s, m)) out.push_back(m);
        // the midpoint sits on the singular set; the endpoints are handled by their other edges
        return out;
    }
    const Eigen::Vector3d n = nm.normalized();
    auto g = [&](double theta) { return area_vector(s, a + theta * (b - a)).dot(n); };
    const double ga = g(0.0), gb = g(1.0);
    if (ga == 0.0) out.push_back(a);
    if (gb == 0.0) out.push_back(b);
    if ((ga < 0.0 && gb > 0.0) || (ga > 0.0 && gb < 0.0)) {
        std::uintmax_t iters = 200;
        const auto r =
            boost::math::tools::toms748_solve(g, 0.0, 1.0, ga, gb, boost::math::tools::eps_tolerance<double>(52), iters);
        const double theta = 0.5 * (r.first + r.second);
        const Eigen::Vector2d q = a + theta * (b - a);
        if (is_rank_deficient(s, q)) out.push_back(q);
    }
    return out;
}

std::vector<Eigen::Vector2d> sort_unique(std::vector<Eigen::Vector2d> pts, double eps) {
    std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
        return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
    });
    std::vector<Eigen::Vector2d> kept;
    for (const auto& p : pts) {
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Eigen::Vector2d& k) { return (k - p).norm() <= eps; });
        if (!dup) kept.push_back(p);
    }
    return kept;
}

std::vector<Eigen::Vector2d> scan(const SurfaceDefinition& s, int grid, bool parallel) {
    const GridLayout layout{s.domain, std::max(grid, 1)};
    const std::int64_t count = layout.edge_count();
    std::vector<std::vector<Eigen::Vector2d>> per_edge(static_cast<std::size_t>(count));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t e = 0; e < count; ++e) {
        try {
            const auto [a, b] = layout.edge(e);
            per_edge[static_cast<std::size_t>(e)] = edge_candidates(s, a, b);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<Eigen::Vector2d> all;
    for (auto& v : per_edge) all.insert(all.end(), v.begin(), v.end());
    return sort_unique(std::move(all), 1e-9 * s.domain.diameter());
}

GridCurvature sample_node(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol) {
    GridCurvature g;
    g.location = p;
    g.point = surface_point(s, p.x(), p.y());
    const CurvatureSample c = curvatures_at(s, p.x(), p.y(), tol);
    g.lambda = c.lambda;
    const Eigen::Vector3d n = area_vector(s, p);
    if (n.norm() > tol.sing) g.normal = s.co_orientation * n.normalized();
    if (c.K) {
        g.has_K = true;
        g.K = *c.K;
    }
    return g;
}

std::vector<GridCurvature> sample(const SurfaceDefinition& s, int grid, const Tolerances& tol, bool parallel) {
    const GridLayout layout{s.domain, std::max(grid, 1)};
    const int m = layout.n + 1;
    std::vector<GridCurvature> out(static_cast<std::size_t>(m) * m);
    std::exception_ptr error;
#pragma omp parallel for schedule(static) if (parallel)
    for (int k = 0; k < m * m; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = sample_node(s, layout.node(k % m, k / m), tol);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace

std::vector<Eigen::Vector2d> scan_singular_grid_serial(const SurfaceDefinition& s, int grid, const Tolerances&) {
    return scan(s, grid, false);
}

std::vector<Eigen::Vector2d> scan_singular_grid_parallel(const SurfaceDefinition& s, int grid, const Tolerances&) {
    return scan(s, grid, true);
}

std::vector<GridCurvature> sample_grid_serial(const SurfaceDefinition& s, int grid, const Tolerances& tol) {
    return sample(s, grid, tol, false);
}

std::vector<GridCurvature> sample_grid_parallel(const SurfaceDefinition& s, int grid, const Tolerances& tol) {
    return sample(s, grid, tol, true);
}

}  // namespace cusp
