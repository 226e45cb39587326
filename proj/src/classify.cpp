#include "conecert/classify.hpp"

#include <algorithm>
#include <cmath>

namespace conecert {

namespace {

void require_cone(const SetSpec& set) {
    if (!set.cone) throw InputError("set membership: this set kind needs a cone");
}

bool scaled_ray_member(const std::vector<Point>& values, const Point& p, double tol) {
    for (const Point& w : values) {
        if (norm_inf(w) <= tol) {
            if (norm_inf(p) <= tol) return true;
            continue;
        }
        std::size_t jstar = 0;
        for (std::size_t j = 1; j < w.size(); ++j)
            if (std::fabs(w[j]) > std::fabs(w[jstar])) jstar = j;
        double t = p[jstar] / w[jstar];
        if (t <= 1e-12) continue;
        bool ok = true;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (std::fabs(p[j] - t * w[j]) > tol) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

const char* to_string(ConvexityStatus s) {
    switch (s) {
        case ConvexityStatus::NonConvex: return "NonConvex";
        case ConvexityStatus::NoCounterexampleFound: return "NoCounterexampleFound";
        case ConvexityStatus::Vacuous: return "Vacuous";
    }
    return "?";
}

bool set_member(const SetSpec& set, const Point& p) {
    switch (set.kind) {
        case SetKind::ClosedSum: {
            require_cone(set);
            for (const Point& v : set.values) {
                Point d = sub(p, v);
                if (set.cone->facet_margin(d) < -1e-6) continue;
                if (set.cone->contains(d, ConeMode::Closed, set.margin, set.tol))
                    return true;
            }
            return false;
        }
        case SetKind::InteriorSum: {
            require_cone(set);
            for (const Point& v : set.values)
                if (set.cone->contains(sub(p, v), ConeMode::StrictInterior, set.margin))
                    return true;
            return false;
        }
        case SetKind::ScaledUnion:
            require_cone(set);
            return union_scaled_membership(set.values, *set.cone, p, set.margin)
                .has_value();
        case SetKind::ScaledRays:
            return scaled_ray_member(set.values, p, set.tol);
        case SetKind::PointSet:
            for (const Point& v : set.values)
                if (approx_eq(p, v, set.tol)) return true;
            return false;
    }
    throw InternalError("unreachable set kind");
}

Point sample_set_member(const SetSpec& set, std::mt19937_64& rng) {
    if (set.values.empty()) throw InternalError("sampling from an empty value list");
    std::uniform_int_distribution<std::size_t> pick(0, set.values.size() - 1);
    std::uniform_real_distribution<double> log_offset(std::log(1e-3), std::log(1.0));
    std::uniform_real_distribution<double> log_scale(std::log(1e-2), std::log(1e2));
    const Point& v = set.values[pick(rng)];
    switch (set.kind) {
        case SetKind::ClosedSum:
        case SetKind::InteriorSum: {
            require_cone(set);
            return axpy(v, std::exp(log_offset(rng)), set.cone->interior_point());
        }
        case SetKind::ScaledUnion: {
            require_cone(set);
            double t = std::exp(log_scale(rng));
            return axpy(scale(t, v), std::exp(log_offset(rng)),
                        set.cone->interior_point());
        }
        case SetKind::ScaledRays:
            return scale(std::exp(log_scale(rng)), v);
        case SetKind::PointSet:
            return v;
    }
    throw InternalError("unreachable set kind");
}

ConvexityVerdict check_set_convexity(const SetSpec& set, const SamplingParams& sampling) {
    ConvexityVerdict verdict;
    verdict.sampling = sampling;
    if (set.values.empty()) {
        verdict.status = ConvexityStatus::Vacuous;
        return verdict;
    }
    std::mt19937_64 rng(sampling.seed);
    for (int k = 0; k < sampling.pair_count; ++k) {
        Point p1 = sample_set_member(set, rng);
        Point p2 = sample_set_member(set, rng);
        if (!set_member(set, p1) || !set_member(set, p2))
            throw InternalError("constructed sample failed its own membership oracle");
        for (double lambda : sampling.lambda_grid) {
            Point mid = add(scale(lambda, p1), scale(1.0 - lambda, p2));
            if (!set_member(set, mid)) {
                verdict.status = ConvexityStatus::NonConvex;
                verdict.witness = ConvexityWitness{p1, p2, lambda, mid};
                verdict.pairs_checked = k + 1;
                return verdict;
            }
        }
    }
    verdict.status = ConvexityStatus::NoCounterexampleFound;
    verdict.pairs_checked = sampling.pair_count;
    return verdict;
}

ClassificationReport classify_values(const std::vector<Point>& pooled_values,
                                     const PolyhedralCone& cone,
                                     const SamplingParams& sampling, double margin,
                                     double tol) {
    SetSpec closed{SetKind::ClosedSum, pooled_values, cone, margin, tol};
    SetSpec interior{SetKind::InteriorSum, pooled_values, cone, margin, tol};
    SetSpec scaled{SetKind::ScaledUnion, pooled_values, cone, margin, tol};

    ClassificationReport report;
    report.convexlike = check_set_convexity(closed, sampling);
    report.subconvexlike = check_set_convexity(interior, sampling);
    report.presubconvexlike = check_set_convexity(scaled, sampling);

    // Witness-level chain consistency: when a counterexample's memberships
    // transfer to another of the three sets, that set cannot have come back
    // counterexample-free.
    const SetSpec* specs[3] = {&closed, &interior, &scaled};
    const ConvexityVerdict* verdicts[3] = {&report.convexlike, &report.subconvexlike,
                                           &report.presubconvexlike};
    for (int src = 0; src < 3; ++src) {
        if (verdicts[src]->status != ConvexityStatus::NonConvex) continue;
        const ConvexityWitness& w = *verdicts[src]->witness;
        for (int dst = 0; dst < 3; ++dst) {
            if (dst == src) continue;
            bool transfers = set_member(*specs[dst], w.p1) &&
                             set_member(*specs[dst], w.p2) &&
                             !set_member(*specs[dst], w.midpoint);
            if (transfers && verdicts[dst]->status == ConvexityStatus::NoCounterexampleFound)
                report.chain_consistent = false;
        }
    }
    return report;
}

namespace {

ConditionReport check_condition_impl(const VPInstance& instance,
                                     const FeasibleSet& domain, std::size_t xbar_index,
                                     const Point& ybar, const SamplingParams& sampling,
                                     double margin, double tol, bool scaled_union,
                                     bool full_set_shift) {
    if (!domain.contains(xbar_index))
        throw InputError("condition check: xbar must be feasible");
    SetValuedMap shifted = full_set_shift
                               ? shift_objective_full_set(instance, xbar_index, tol)
                               : shift_objective(instance, xbar_index, ybar, tol);

    ConditionReport report;
    SetSpec fspec{scaled_union ? SetKind::ScaledUnion : SetKind::InteriorSum,
                  shifted.pooled(domain.members), instance.coneY, margin, tol};
    SetSpec gspec{scaled_union ? SetKind::ScaledUnion : SetKind::InteriorSum,
                  instance.g.pooled(domain.members), instance.coneZ, margin, tol};
    SetSpec hspec{scaled_union ? SetKind::ScaledRays : SetKind::PointSet,
                  instance.h.pooled(domain.members), std::nullopt, margin, tol};
    report.objective_factor = check_set_convexity(fspec, sampling);
    report.constraint_factor = check_set_convexity(gspec, sampling);
    report.equality_factor = check_set_convexity(hspec, sampling);
    for (const ConvexityVerdict* v :
         {&report.objective_factor, &report.constraint_factor, &report.equality_factor})
        if (v->status == ConvexityStatus::NonConvex) report.refuted = true;
    return report;
}

}  // namespace

ConditionReport check_condition_a1(const VPInstance& instance, const FeasibleSet& domain,
                                   std::size_t xbar_index, const Point& ybar,
                                   const SamplingParams& sampling, double margin,
                                   double tol, bool full_set_shift) {
    return check_condition_impl(instance, domain, xbar_index, ybar, sampling, margin,
                                tol, /*scaled_union=*/true, full_set_shift);
}

ConditionReport check_condition_b1(const VPInstance& instance, const FeasibleSet& domain,
                                   std::size_t xbar_index, const Point& ybar,
                                   const SamplingParams& sampling, double margin,
                                   double tol, bool full_set_shift) {
    return check_condition_impl(instance, domain, xbar_index, ybar, sampling, margin,
                                tol, /*scaled_union=*/false, full_set_shift);
}

InnerPointReport check_condition_a2(const VPInstance& instance) {
    InnerPointReport report;
    if (instance.r() == 0) {
        report.holds = true;
        report.explanation = "no equality block (r = 0), the condition is vacuous";
    } else {
        report.holds = false;
        report.explanation =
            "a finite set of values in dimension r >= 1 has empty interior; "
            "certification proceeds regardless because the finite-dimensional "
            "separation argument needs no interior point";
    }
    return report;
}

}  // namespace conecert
