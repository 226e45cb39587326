#pragma once

#include <optional>
#include <vector>

#include "conecert/lp.hpp"
#include "conecert/vec.hpp"

namespace conecert {

enum class ConeMode { Closed, StrictInterior };

// One linear constraint <functional, generator> >= 0 per generator of the
// source cone; a functional satisfies every row iff it lies in the dual cone.
struct DualConeConstraints {
    std::vector<Point> rows;
};

// Finitely generated convex cone, required to be pointed and full-dimensional
// (the standing assumptions on ordering cones). Construction derives the
// facet half-space description once; all strict-interior queries evaluate
// unit facet normals directly, while closed membership goes through an LP
// over the generators, keeping the two routes independent.
class PolyhedralCone {
public:
    static PolyhedralCone make(int dim, std::vector<Point> generators,
                               double tol = kDefaultTol);
    static PolyhedralCone orthant(int dim);

    int dim() const { return dim_; }
    const std::vector<Point>& generators() const { return generators_; }
    const std::vector<Point>& facet_normals() const { return facet_normals_; }

    // Closed mode: p is a nonnegative combination of the generators (LP
    // feasibility at tol). Strict-interior mode: every unit facet normal n
    // has n.p >= margin; margin must be positive.
    bool contains(const Point& p, ConeMode mode, double margin = kDefaultMargin,
                  double tol = kDefaultTol) const;

    // Smallest facet slack of p; p lies in the closed cone iff this is >= 0
    // and in the interior iff it is > 0 (exact for full-dimensional cones).
    double facet_margin(const Point& p) const;

    // Sum of the Euclidean-normalized generators; always strictly interior.
    const Point& interior_point() const { return interior_point_; }
    double interior_margin() const { return interior_margin_; }

    DualConeConstraints dual_constraints() const { return {generators_}; }

private:
    PolyhedralCone() = default;

    int dim_ = 0;
    std::vector<Point> generators_;
    std::vector<Point> facet_normals_;
    Point interior_point_;
    double interior_margin_ = 0.0;
};

struct UnionMembershipWitness {
    double t = 0.0;
    std::size_t value_index = 0;
};

// Membership oracle for the scaled-union set  U_{t>0} (t*values + int cone),
// at the given interior margin. Scans the values in order; per value the
// feasible t-set is an exact interval intersection of the facet inequalities,
// and the witness takes the first value admitting a nonempty interval with t
// at the interval midpoint (one past the lower end when unbounded above).
std::optional<UnionMembershipWitness> union_scaled_membership(
    const std::vector<Point>& values, const PolyhedralCone& cone, const Point& p,
    double margin = kDefaultMargin);

}  // namespace conecert
