#include "conecert/campaign.hpp"

#include <random>

namespace conecert {

ExclusivityCampaign run_exclusivity_campaign(const CampaignOptions& options) {
    ExclusivityCampaign result;
    RandomInstanceParams params = options.params;
    params.family = InstanceFamily::General;
    for (std::uint64_t seed = options.seed_begin; seed <= options.seed_end; ++seed) {
        ++result.instances;
        VPInstance inst = generate_random_instance(seed, params);
        FeasibleSet domain = feasible_set(inst, options.tol);
        auto cert = find_multipliers(inst, domain, inst.f,
                                     /*require_xi_nonzero=*/true, options.tol);
        if (!cert || cert->vacuous_domain || !cert->xi_nonzero) continue;
        ++result.certified;
        if (solve_system_i(inst, options.margin, options.tol)) {
            ++result.violations;
            result.violating_seeds.push_back(seed);
        }
    }
    return result;
}

ChainCampaign run_chain_campaign(const CampaignOptions& options) {
    ChainCampaign result;
    RandomInstanceParams params = options.params;
    params.family = InstanceFamily::Chain;
    for (std::uint64_t seed = options.seed_begin; seed <= options.seed_end; ++seed) {
        ++result.instances;
        bool ok = true;
        VPInstance inst = generate_random_instance(seed, params);
        SamplingParams sampling = options.sampling;
        sampling.seed = seed;
        NecessityReport necessity =
            necessity_pipeline(inst, 0, sampling, options.margin, options.tol);

        if (necessity.efficiency.weakly_efficient)
            ++result.weakly_efficient;
        else
            ok = false;
        if (necessity.certificate && necessity.certificate->normalization == "N1" &&
            necessity.certificate->xi_nonzero)
            ++result.certified_n1;
        else
            ok = false;
        if (necessity.verification && necessity.verification->pass)
            ++result.verified;
        else
            ok = false;
        if (necessity.nnamcq_holds && *necessity.nnamcq_holds)
            ++result.nnamcq_verified;
        else
            ok = false;

        if (ok) {
            auto suff = sufficiency_check(inst, 0, *necessity.certificate,
                                              necessity.ybar, options.margin,
                                              options.tol);
            if (suff.status == SufficiencyStatus::Confirmed)
                ++result.sufficiency_confirmed;
            else
                ok = false;

            FeasibleSet domain = feasible_set(inst, options.tol);
            auto sc =
                scalarize_and_solve(inst, domain, necessity.certificate->xi, options.tol);
            bool in_argmin = false;
            for (const auto& entry : sc.argmin)
                if (entry.label_index == 0) in_argmin = true;
            if (in_argmin)
                ++result.scalarization_ok;
            else
                ok = false;

            try {
                auto pair = construct_vector_lagrangian(*necessity.certificate,
                                                        inst.coneY, inst.coneZ,
                                                        options.tol);
                ++result.pairs_ok;
                auto vpst = vpst_weak_efficiency(inst, domain, pair, 0, options.margin,
                                                 options.tol);
                if (vpst.weakly_efficient) {
                    ++result.vpst_efficient;
                    if (weak_efficiency_bruteforce(inst, domain, 0, options.margin)
                            .weakly_efficient)
                        ++result.backward_ok;
                    else
                        ok = false;
                } else {
                    ok = false;
                }
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) result.failing_seeds.push_back(seed);
    }
    return result;
}

bool mixed_set_operator_efficiency(const VPInstance& instance,
                                   const FeasibleSet& domain,
                                   const VectorLagrangianPair& pair,
                                   std::size_t xbar_index, double margin, double tol) {
    std::vector<Point> fD, sgD, thD;
    for (std::size_t i : domain.members) {
        for (const Point& y : instance.f.values[i]) fD.push_back(y);
        for (const Point& z : instance.g.values[i]) sgD.push_back(pair.apply_S(z));
        for (const Point& w : instance.h.values[i]) thD.push_back(pair.apply_T(w));
    }
    std::vector<Point> mixed =
        minkowski_sum(minkowski_sum(dedupe_points(fD, tol), dedupe_points(sgD, tol), tol),
                      dedupe_points(thD, tol), tol);
    for (const Point& candidate : lagrangian_map(instance, pair, xbar_index, tol)) {
        bool dominated = false;
        for (const Point& ell : mixed)
            if (instance.coneY.contains(sub(candidate, ell), ConeMode::StrictInterior,
                                        margin)) {
                dominated = true;
                break;
            }
        if (!dominated) return true;
    }
    return false;
}

BackwardSpotCampaign run_backward_spot_campaign(std::uint64_t seed, int required_draws,
                                                double margin, double tol) {
    BackwardSpotCampaign result;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    auto random_dual = [&](const PolyhedralCone& cone) {
        Point out(cone.dim(), 0.0);
        const auto& dirs = cone.facet_normals();
        std::size_t forced = rng() % dirs.size();
        for (std::size_t i = 0; i < dirs.size(); ++i)
            out = axpy(out, (i == forced ? 0.5 : 0.0) + 0.5 * u01(rng), dirs[i]);
        return out;
    };

    while (result.draws < required_draws) {
        std::uint64_t inst_seed = rng();
        ++result.attempts;
        RandomInstanceParams params;
        params.num_labels = 5;
        params.p = 2;
        params.q = 1;
        params.r = result.attempts % 3 == 0 ? 1 : 0;
        params.values_per_map = 2;
        params.family = result.attempts % 2 == 0 ? InstanceFamily::General
                                                 : InstanceFamily::Chain;
        VPInstance inst = generate_random_instance(inst_seed, params);
        FeasibleSet domain = feasible_set(inst, tol);
        if (domain.members.empty()) continue;

        MultiplierCertificate cert;
        cert.xi = random_dual(inst.coneY);
        cert.eta = random_dual(inst.coneZ);
        cert.zeta.assign(inst.r(), 0.0);
        for (double& c : cert.zeta) c = sym(rng);
        cert.normalization = "spot";
        cert.xi_nonzero = true;
        VectorLagrangianPair pair =
            construct_vector_lagrangian(cert, inst.coneY, inst.coneZ, tol);

        std::size_t xbar =
            domain.members[result.attempts % domain.members.size()];
        if (!mixed_set_operator_efficiency(inst, domain, pair, xbar, margin, tol))
            continue;
        ++result.draws;
        if (weak_efficiency_bruteforce(inst, domain, xbar, margin).weakly_efficient)
            ++result.confirmed;
        else
            result.failing_seeds.push_back(inst_seed);
    }
    return result;
}

}  // namespace conecert
