#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "conecert/instance.hpp"

namespace conecert {

// The candidate sets whose convexity characterizes the generalized convexity
// classes, plus the two auxiliary shapes used by the hypothesis-bundle
// checks. All are membership-testable against a finite pooled value list:
//   ClosedSum    values + cone
//   InteriorSum  values + int cone (at margin)
//   ScaledUnion  U_{t>0} (t*values + int cone)
//   ScaledRays   U_{t>0} t*values
//   PointSet     the values themselves
enum class SetKind { ClosedSum, InteriorSum, ScaledUnion, ScaledRays, PointSet };

struct SetSpec {
    SetKind kind = SetKind::ClosedSum;
    std::vector<Point> values;
    std::optional<PolyhedralCone> cone;  // required for the three cone kinds
    double margin = kDefaultMargin;
    double tol = kDefaultTol;
};

bool set_member(const SetSpec& set, const Point& p);

// Draws a guaranteed member: value + log-uniform interior offset for the sum
// sets, with an extra log-uniform scale for the union; exact rays/points for
// the cone-free kinds.
Point sample_set_member(const SetSpec& set, std::mt19937_64& rng);

struct SamplingParams {
    int pair_count = 10000;
    std::vector<double> lambda_grid{0.25, 0.5, 0.75};
    std::uint64_t seed = 0;
};

enum class ConvexityStatus { NonConvex, NoCounterexampleFound, Vacuous };

const char* to_string(ConvexityStatus s);

struct ConvexityWitness {
    Point p1, p2;
    double lambda = 0.5;
    Point midpoint;
};

// NonConvex verdicts carry a midpoint counterexample that re-verifies through
// the membership oracle; NoCounterexampleFound is a sampling-bounded
// semidecision, never a convexity proof.
struct ConvexityVerdict {
    ConvexityStatus status = ConvexityStatus::Vacuous;
    std::optional<ConvexityWitness> witness;
    int pairs_checked = 0;
    SamplingParams sampling;
};

ConvexityVerdict check_set_convexity(const SetSpec& set, const SamplingParams& sampling);

struct ClassificationReport {
    ConvexityVerdict convexlike;        // values + cone convex?
    ConvexityVerdict subconvexlike;     // values + int cone convex?
    ConvexityVerdict presubconvexlike;  // scaled union convex?
    bool chain_consistent = true;
};

// Runs the three characterizations over the pooled values with a shared seed
// and cross-checks every found witness against the other two sets: a witness
// whose memberships transfer must be matched by a NonConvex verdict there.
ClassificationReport classify_values(const std::vector<Point>& pooled_values,
                                     const PolyhedralCone& cone,
                                     const SamplingParams& sampling,
                                     double margin = kDefaultMargin,
                                     double tol = kDefaultTol);

struct ConditionReport {
    ConvexityVerdict objective_factor;
    ConvexityVerdict constraint_factor;
    ConvexityVerdict equality_factor;
    bool refuted = false;  // some factor has a verified nonconvexity witness
};

// Product-set reading of the generalized convexity hypothesis: the scaled
// union of each block (shifted objective, inequality constraints, equality
// rays) must be convex; the product is convex iff every factor is.
// full_set_shift switches the objective block from the single chosen ybar to
// the Minkowski difference against all of f(xbar).
ConditionReport check_condition_a1(const VPInstance& instance, const FeasibleSet& domain,
                                   std::size_t xbar_index, const Point& ybar,
                                   const SamplingParams& sampling,
                                   double margin = kDefaultMargin,
                                   double tol = kDefaultTol,
                                   bool full_set_shift = false);

// Scale-free variant: blocks tested with t fixed to 1 and the equality block
// as a bare point set.
ConditionReport check_condition_b1(const VPInstance& instance, const FeasibleSet& domain,
                                   std::size_t xbar_index, const Point& ybar,
                                   const SamplingParams& sampling,
                                   double margin = kDefaultMargin,
                                   double tol = kDefaultTol,
                                   bool full_set_shift = false);

struct InnerPointReport {
    bool holds = false;
    std::string explanation;
};

// Literal inner-point condition on the equality block: a finite value set in
// dimension >= 1 never has interior, so this holds only when the equality
// block is absent. Downstream certification runs regardless: the separation
// argument needs no interior point in finite dimensions.
InnerPointReport check_condition_a2(const VPInstance& instance);

}  // namespace conecert
