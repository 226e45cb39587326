#pragma once

#include <optional>
#include <vector>

#include "conecert/certify.hpp"

namespace conecert {

// Rank-one operator multipliers S(z) = <eta, z> * y0 and T(w) = <zeta, w> * y0
// built from a scalar certificate with nonzero xi, where y0 is the canonical
// interior point scaled so <xi, y0> = 1. By construction S maps Z+ into Y+
// and xi composed with S and T gives back eta and zeta.
struct VectorLagrangianPair {
    Point y0;
    std::vector<Point> S;  // p rows of length q
    std::vector<Point> T;  // p rows of length r
    MultiplierCertificate source;

    Point apply_S(const Point& z) const;
    Point apply_T(const Point& w) const;
};

VectorLagrangianPair construct_vector_lagrangian(const MultiplierCertificate& cert,
                                                 const PolyhedralCone& coneY,
                                                 const PolyhedralCone& coneZ,
                                                 double tol = kDefaultTol);

// L(x) = f(x) + S(g(x)) + T(h(x)) as a deduplicated finite value list.
std::vector<Point> lagrangian_map(const VPInstance& instance,
                                  const VectorLagrangianPair& pair,
                                  std::size_t label_index, double tol = kDefaultTol);

// Brute-force weak efficiency of xbar for the operator-Lagrangian problem
// over the same feasible set.
EfficiencyVerdict vpst_weak_efficiency(const VPInstance& instance,
                                       const FeasibleSet& domain,
                                       const VectorLagrangianPair& pair,
                                       std::size_t xbar_index,
                                       double margin = kDefaultMargin,
                                       double tol = kDefaultTol);

enum class CqMode { Scq, Nnamcq };

struct RoundtripReport {
    NecessityReport necessity;
    CqMode cq_mode = CqMode::Nnamcq;
    bool cq_holds = false;  // sampled semidecision under Scq, exact under Nnamcq
    std::optional<ScqReport> scq;
    std::optional<VectorLagrangianPair> pair;
    std::optional<EfficiencyVerdict> vpst;
    std::optional<bool> backward_ok;  // operator-problem efficiency implies
                                      // original efficiency (checked by brute
                                      // force, no convexity needed)
    bool forward_pass = false;
    std::string forward_status;
};

// Forward: weak efficiency of the original problem should hand back a scalar
// certificate whose constructed (S, T) makes xbar weakly efficient for the
// operator problem. Backward: whenever the operator problem sees xbar as
// weakly efficient, the original problem must as well; this direction is
// asserted unconditionally.
RoundtripReport operator_roundtrip(const VPInstance& instance, std::size_t xbar_index,
                                    const SamplingParams& sampling,
                                    CqMode cq_mode = CqMode::Nnamcq,
                                    int scq_samples = 64,
                                    double margin = kDefaultMargin,
                                    double tol = kDefaultTol);

}  // namespace conecert
