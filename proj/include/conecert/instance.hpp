#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conecert/cone.hpp"
#include "conecert/vec.hpp"

namespace conecert {

// Finite set-valued map, stored in ground-set label order (index-aligned with
// VPInstance::labels). Every label carries at least one value of the shared
// dimension; dimension 0 encodes an absent block (the single empty tuple).
struct SetValuedMap {
    int dim = 0;
    std::vector<std::vector<Point>> values;

    // Union of the value lists over the given label indices.
    std::vector<Point> pooled(const std::vector<std::size_t>& label_indices) const;
    void validate(std::size_t num_labels, const std::string& name) const;
};

// The discretized constrained problem: minimize f over the labels subject to
// g(x) meeting -Z+ and h(x) containing zero.
struct VPInstance {
    std::vector<std::string> labels;
    SetValuedMap f;  // dim p, ordered by coneY
    SetValuedMap g;  // dim q, ordered by coneZ
    SetValuedMap h;  // dim r (0 = no equality block)
    PolyhedralCone coneY;
    PolyhedralCone coneZ;

    int p() const { return f.dim; }
    int q() const { return g.dim; }
    int r() const { return h.dim; }

    std::size_t label_index(const std::string& label) const;
    void validate() const;
};

struct FeasibilityWitness {
    std::size_t g_value_index = 0;  // z in g(x) with -z in Z+
    std::size_t h_value_index = 0;  // w in h(x) with ||w||_inf <= tol
};

struct FeasibleSet {
    std::vector<std::size_t> members;  // label indices, instance order
    std::vector<FeasibilityWitness> witnesses;  // parallel to members

    bool contains(std::size_t label_index) const;
    std::optional<std::size_t> member_position(std::size_t label_index) const;
};

FeasibleSet feasible_set(const VPInstance& instance, double tol = kDefaultTol);

// x -> { y - ybar : y in f(x) } for one chosen ybar in f(xbar); the shifted
// objective the multiplier pipeline certifies against.
SetValuedMap shift_objective(const VPInstance& instance, std::size_t xbar_index,
                             const Point& ybar, double tol = kDefaultTol);

// Variant shifting by the whole of f(xbar): x -> f(x) - f(xbar) (Minkowski
// difference set), deduplicated.
SetValuedMap shift_objective_full_set(const VPInstance& instance,
                                      std::size_t xbar_index,
                                      double tol = kDefaultTol);

std::vector<Point> minkowski_sum(const std::vector<Point>& a,
                                 const std::vector<Point>& b,
                                 double tol = kDefaultTol);

std::vector<Point> dedupe_points(std::vector<Point> pts, double tol);

}  // namespace conecert
