#include "conecert/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conecert {

namespace {

constexpr double kOrientEps = 1e-9;

int matrix_rank(std::vector<Point> m, int cols) {
    int rank = 0;
    int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = 1e-10;
        for (int i = rank; i < rows; ++i) {
            if (std::fabs(m[i][col]) > best) {
                best = std::fabs(m[i][col]);
                piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            double f = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Unit normal of the hyperplane spanned by the given vectors, or nullopt when
// their span has rank below dim-1.
std::optional<Point> hyperplane_normal(const std::vector<Point>& span, int dim) {
    std::vector<Point> m = span;
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < dim && rank < rows; ++col) {
        int piv = -1;
        double best = 1e-10;
        for (int i = rank; i < rows; ++i) {
            if (std::fabs(m[i][col]) > best) {
                best = std::fabs(m[i][col]);
                piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            double f = m[i][col] / m[rank][col];
            if (f == 0.0) continue;
            for (int j = 0; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != dim - 1) return std::nullopt;

    std::vector<bool> is_pivot(dim, false);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int j = 0; j < dim; ++j)
        if (!is_pivot[j]) {
            free_col = j;
            break;
        }
    Point n(dim, 0.0);
    n[free_col] = 1.0;
    for (int i = 0; i < rank; ++i)
        n[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
    double len = norm2(n);
    for (double& v : n) v /= len;
    return n;
}

}  // namespace

PolyhedralCone PolyhedralCone::orthant(int dim) {
    std::vector<Point> gens;
    for (int i = 0; i < dim; ++i) {
        Point g(dim, 0.0);
        g[i] = 1.0;
        gens.push_back(std::move(g));
    }
    return make(dim, std::move(gens));
}

PolyhedralCone PolyhedralCone::make(int dim, std::vector<Point> generators, double tol) {
    if (dim <= 0) throw InputError("cone: dimension must be positive");
    if (generators.empty()) throw InputError("cone: generator list is empty");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        require_dim(generators[i], dim, "cone generator " + std::to_string(i));
        require_finite(generators[i], "cone generator " + std::to_string(i));
        if (norm_inf(generators[i]) <= 1e-12)
            throw InputError("cone: generator " + std::to_string(i) + " is zero");
    }

    if (matrix_rank(generators, dim) < dim)
        throw InputError("cone: empty interior (generators do not span the space)");

    // Pointedness: a nonzero nonnegative combination summing to zero exists
    // iff the cone contains a line.
    {
        const int k = static_cast<int>(generators.size());
        LinearSystem sys;
        sys.num_vars = k;
        for (int j = 0; j < dim; ++j) {
            Point row(k);
            for (int i = 0; i < k; ++i) row[i] = generators[i][j];
            sys.add_row(std::move(row), Relation::Equal, 0.0);
        }
        for (int i = 0; i < k; ++i) {
            Point row(k, 0.0);
            row[i] = 1.0;
            sys.add_row(std::move(row), Relation::GreaterEqual, 0.0);
        }
        sys.add_row(Point(k, 1.0), Relation::Equal, 1.0);
        if (lp_solve(sys, tol).status == LpStatus::Feasible)
            throw InputError("cone: not pointed (contains a line)");
    }

    PolyhedralCone cone;
    cone.dim_ = dim;
    cone.generators_ = std::move(generators);

    std::vector<Point> unit_gens;
    for (const Point& g : cone.generators_) unit_gens.push_back(scale(1.0 / norm2(g), g));

    auto try_keep = [&](Point n) {
        bool all_nonneg = true, all_nonpos = true;
        for (const Point& g : unit_gens) {
            double d = dot(n, g);
            if (d < -kOrientEps) all_nonneg = false;
            if (d > kOrientEps) all_nonpos = false;
        }
        if (!all_nonneg && !all_nonpos) return;
        if (all_nonpos && !all_nonneg)
            for (double& v : n) v = -v;
        for (const Point& m : cone.facet_normals_)
            if (approx_eq(m, n, 1e-9)) return;
        cone.facet_normals_.push_back(std::move(n));
    };

    if (dim == 1) {
        try_keep({unit_gens[0][0] > 0 ? 1.0 : -1.0});
    } else {
        // Every facet of a full-dimensional finitely generated cone is spanned
        // by dim-1 linearly independent generators, so enumerating those
        // subsets finds all facet normals. Extra supporting (non-facet)
        // normals that slip through are valid inequalities and never disturb
        // margins: a linear functional over the dual cone is minimized on an
        // extreme ray, i.e. on a true facet normal.
        const int k = static_cast<int>(unit_gens.size());
        std::vector<int> idx(dim - 1);
        for (int i = 0; i < dim - 1; ++i) idx[i] = i;
        while (true) {
            std::vector<Point> span;
            for (int i : idx) span.push_back(unit_gens[i]);
            if (auto n = hyperplane_normal(span, dim)) try_keep(std::move(*n));
            int pos = dim - 2;
            while (pos >= 0 && idx[pos] == k - (dim - 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < dim - 1; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    if (cone.facet_normals_.empty())
        throw InputError("cone: facet derivation failed (degenerate generator set)");

    Point e(dim, 0.0);
    for (const Point& g : unit_gens) e = add(e, g);
    cone.interior_point_ = std::move(e);
    cone.interior_margin_ = cone.facet_margin(cone.interior_point_);
    if (cone.interior_margin_ < kDefaultMargin)
        throw InputError("cone: empty interior at the default strict margin");
    return cone;
}

double PolyhedralCone::facet_margin(const Point& p) const {
    double m = std::numeric_limits<double>::infinity();
    for (const Point& n : facet_normals_) m = std::min(m, dot(n, p));
    return m;
}

bool PolyhedralCone::contains(const Point& p, ConeMode mode, double margin,
                              double tol) const {
    require_dim(p, dim_, "cone membership query");
    require_finite(p, "cone membership query");
    if (mode == ConeMode::StrictInterior) {
        if (margin <= 0.0)
            throw InputError("cone: strict-interior queries need a positive margin");
        return facet_margin(p) >= margin;
    }
    // Clear rejects skip the LP; the facet description is exact for
    // full-dimensional cones.
    if (facet_margin(p) < -1e-6) return false;
    const int k = static_cast<int>(generators_.size());
    LinearSystem sys;
    sys.num_vars = k;
    for (int j = 0; j < dim_; ++j) {
        Point row(k);
        for (int i = 0; i < k; ++i) row[i] = generators_[i][j];
        sys.add_row(std::move(row), Relation::Equal, p[j]);
    }
    for (int i = 0; i < k; ++i) {
        Point row(k, 0.0);
        row[i] = 1.0;
        sys.add_row(std::move(row), Relation::GreaterEqual, 0.0);
    }
    return lp_solve(sys, tol).status == LpStatus::Feasible;
}

std::optional<UnionMembershipWitness> union_scaled_membership(
    const std::vector<Point>& values, const PolyhedralCone& cone, const Point& p,
    double margin) {
    require_dim(p, cone.dim(), "union membership query");
    if (margin <= 0.0) throw InputError("union membership: margin must be positive");
    for (std::size_t i = 0; i < values.size(); ++i)
        require_dim(values[i], cone.dim(), "union membership value " + std::to_string(i));

    for (std::size_t i = 0; i < values.size(); ++i) {
        const Point& v = values[i];
        double lo = 0.0;
        double hi = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (const Point& n : cone.facet_normals()) {
            double c = dot(n, p) - margin;  // need c - t * d >= 0
            double d = dot(n, v);
            if (d > 1e-12) {
                hi = std::min(hi, c / d);
            } else if (d < -1e-12) {
                lo = std::max(lo, c / d);
            } else if (c < 0.0) {
                ok = false;
                break;
            }
        }
        if (!ok || hi <= lo + 1e-15) continue;
        double t = std::isinf(hi) ? lo + 1.0 : 0.5 * (lo + hi);
        if (t > 0.0) return UnionMembershipWitness{t, i};
    }
    return std::nullopt;
}

}  // namespace conecert
