#pragma once

#include "conecert/generators.hpp"
#include "conecert/lagrangian.hpp"

namespace conecert {

struct CampaignOptions {
    std::uint64_t seed_begin = 1;
    std::uint64_t seed_end = 200;  // inclusive
    RandomInstanceParams params;
    SamplingParams sampling{500, {0.25, 0.5, 0.75}, 0};
    double margin = kDefaultMargin;
    double tol = kDefaultTol;
};

// Gordan-type exclusivity sweep: wherever a nonvacuous xi != 0 certificate
// exists over the raw objective, the strict primal system must be unsolvable.
struct ExclusivityCampaign {
    int instances = 0;
    int certified = 0;
    int violations = 0;
    std::vector<std::uint64_t> violating_seeds;
};

ExclusivityCampaign run_exclusivity_campaign(const CampaignOptions& options);

// Chain-family sweep covering the scalar-multiplier theorems end to end: the
// designated label must come out weakly efficient, certified under the
// interior-point normalization, fully verified (complementary slackness at
// 1e-7), confirmed by the sufficiency direction under the exact CQ, coherent
// with scalarization, and carried through the operator-pair construction.
struct ChainCampaign {
    int instances = 0;
    int weakly_efficient = 0;
    int certified_n1 = 0;
    int verified = 0;
    int nnamcq_verified = 0;
    int sufficiency_confirmed = 0;
    int scalarization_ok = 0;
    int pairs_ok = 0;
    int vpst_efficient = 0;
    int backward_ok = 0;
    std::vector<std::uint64_t> failing_seeds;
};

ChainCampaign run_chain_campaign(const CampaignOptions& options);

// Convexity-free backward spot check with random rank-one pairs, evaluated
// against the mixed product set f(D) + S(g(D)) + T(h(D)) (the domination
// order the containment argument actually perturbs).
struct BackwardSpotCampaign {
    int attempts = 0;
    int draws = 0;      // pairs where the operator problem saw efficiency
    int confirmed = 0;  // of those, original-problem efficiency held
    std::vector<std::uint64_t> failing_seeds;
};

BackwardSpotCampaign run_backward_spot_campaign(std::uint64_t seed, int required_draws,
                                                double margin = kDefaultMargin,
                                                double tol = kDefaultTol);

bool mixed_set_operator_efficiency(const VPInstance& instance,
                                   const FeasibleSet& domain,
                                   const VectorLagrangianPair& pair,
                                   std::size_t xbar_index,
                                   double margin = kDefaultMargin,
                                   double tol = kDefaultTol);

}  // namespace conecert
