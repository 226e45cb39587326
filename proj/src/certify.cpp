#include "conecert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "conecert/lp.hpp"

namespace conecert {

namespace {

// Inequality rows shared by the multiplier searches: one row per deduplicated
// (y, z, w) value combination over the domain, in instance order.
std::vector<Point> product_rows(const FeasibleSet& domain, const SetValuedMap& fmap,
                                const SetValuedMap& gmap, const SetValuedMap& hmap,
                                bool include_f) {
    std::vector<Point> rows;
    std::set<Point> seen;
    for (std::size_t i : domain.members) {
        for (const Point& y : fmap.values[i]) {
            for (const Point& z : gmap.values[i]) {
                for (const Point& w : hmap.values[i]) {
                    Point row;
                    if (include_f) row.insert(row.end(), y.begin(), y.end());
                    row.insert(row.end(), z.begin(), z.end());
                    row.insert(row.end(), w.begin(), w.end());
                    if (seen.insert(row).second) rows.push_back(std::move(row));
                }
            }
            if (!include_f) break;  // f block unused; one pass over (z, w)
        }
    }
    return rows;
}

void append_dual_rows(LinearSystem& sys, const PolyhedralCone& cone, int offset) {
    for (const Point& gen : cone.generators()) {
        Point row(sys.num_vars, 0.0);
        for (int j = 0; j < cone.dim(); ++j) row[offset + j] = gen[j];
        sys.add_row(std::move(row), Relation::GreaterEqual, 0.0);
    }
}

struct Normalization {
    std::string tag;
    Point row;
    double rhs;
};

std::vector<Normalization> normalizations(int num_vars, const Point& ey, int xi_offset,
                                          const Point& ez, int eta_offset,
                                          int zeta_offset, int r,
                                          bool require_xi_nonzero, bool include_xi) {
    std::vector<Normalization> out;
    if (include_xi) {
        Point n1(num_vars, 0.0);
        for (std::size_t j = 0; j < ey.size(); ++j) n1[xi_offset + j] = ey[j];
        out.push_back({"N1", std::move(n1), 1.0});
        if (require_xi_nonzero) return out;
    }
    Point n2(num_vars, 0.0);
    for (std::size_t j = 0; j < ez.size(); ++j) n2[eta_offset + j] = ez[j];
    out.push_back({"N2", std::move(n2), 1.0});
    for (int j = 0; j < r; ++j) {
        Point plus(num_vars, 0.0);
        plus[zeta_offset + j] = 1.0;
        out.push_back({"N3+" + std::to_string(j), plus, 1.0});
        Point minus(num_vars, 0.0);
        minus[zeta_offset + j] = 1.0;
        out.push_back({"N3-" + std::to_string(j), std::move(minus), -1.0});
    }
    return out;
}

}  // namespace

std::optional<SystemIWitness> solve_system_i(const VPInstance& instance, double margin,
                                             double tol) {
    instance.validate();
    for (std::size_t i = 0; i < instance.labels.size(); ++i) {
        std::optional<std::size_t> yi, zi, wi;
        for (std::size_t k = 0; k < instance.f.values[i].size() && !yi; ++k)
            if (instance.coneY.contains(scale(-1.0, instance.f.values[i][k]),
                                        ConeMode::StrictInterior, margin))
                yi = k;
        if (!yi) continue;
        for (std::size_t k = 0; k < instance.g.values[i].size() && !zi; ++k)
            if (instance.coneZ.contains(scale(-1.0, instance.g.values[i][k]),
                                        ConeMode::Closed, margin, tol))
                zi = k;
        if (!zi) continue;
        for (std::size_t k = 0; k < instance.h.values[i].size() && !wi; ++k)
            if (norm_inf(instance.h.values[i][k]) <= tol) wi = k;
        if (!wi) continue;
        return SystemIWitness{i, *yi, *zi, *wi};
    }
    return std::nullopt;
}

std::optional<MultiplierCertificate> find_multipliers(const VPInstance& instance,
                                                      const FeasibleSet& domain,
                                                      const SetValuedMap& objective,
                                                      bool require_xi_nonzero,
                                                      double tol) {
    objective.validate(instance.labels.size(), "objective");
    if (objective.dim != instance.p())
        throw InputError("find_multipliers: objective dimension != p");

    const int p = instance.p(), q = instance.q(), r = instance.r();
    const int num_vars = p + q + r;
    std::vector<Point> rows =
        product_rows(domain, objective, instance.g, instance.h, /*include_f=*/true);

    LinearSystem base;
    base.num_vars = num_vars;
    append_dual_rows(base, instance.coneY, 0);
    append_dual_rows(base, instance.coneZ, p);
    for (const Point& row : rows) base.add_row(row, Relation::GreaterEqual, 0.0);

    for (const Normalization& norm :
         normalizations(num_vars, instance.coneY.interior_point(), 0,
                        instance.coneZ.interior_point(), p, p + q, r,
                        require_xi_nonzero, /*include_xi=*/true)) {
        LinearSystem sys = base;
        sys.add_row(norm.row, Relation::Equal, norm.rhs);
        FeasibilityOutcome res = lp_solve(sys, tol);
        if (res.status != LpStatus::Feasible) continue;
        MultiplierCertificate cert;
        cert.xi.assign(res.point.begin(), res.point.begin() + p);
        cert.eta.assign(res.point.begin() + p, res.point.begin() + p + q);
        cert.zeta.assign(res.point.begin() + p + q, res.point.end());
        cert.normalization = norm.tag;
        cert.min_slack = std::numeric_limits<double>::infinity();
        Point stacked = cert.xi;
        stacked.insert(stacked.end(), cert.eta.begin(), cert.eta.end());
        stacked.insert(stacked.end(), cert.zeta.begin(), cert.zeta.end());
        for (const Point& row : rows)
            cert.min_slack = std::min(cert.min_slack, dot(row, stacked));
        cert.xi_nonzero = dot(cert.xi, instance.coneY.interior_point()) > 1e-7;
        cert.vacuous_domain = domain.members.empty();
        return cert;
    }
    return std::nullopt;
}

CertificateVerification verify_certificate(const VPInstance& instance,
                                           const FeasibleSet& domain,
                                           const SetValuedMap& objective,
                                           const MultiplierCertificate& cert,
                                           std::size_t xbar_index, const Point& ybar,
                                           double tol, double comp_tol) {
    if (!domain.contains(xbar_index))
        throw InputError("verify_certificate: xbar must be feasible");
    require_dim(cert.xi, static_cast<std::size_t>(instance.p()), "certificate xi");
    require_dim(cert.eta, static_cast<std::size_t>(instance.q()), "certificate eta");
    require_dim(cert.zeta, static_cast<std::size_t>(instance.r()), "certificate zeta");

    CertificateVerification v;
    v.dual_residual = 0.0;
    for (const Point& gen : instance.coneY.generators())
        v.dual_residual = std::min(v.dual_residual, dot(cert.xi, gen));
    for (const Point& gen : instance.coneZ.generators())
        v.dual_residual = std::min(v.dual_residual, dot(cert.eta, gen));
    v.dual_ok = v.dual_residual >= -tol;

    v.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i : domain.members)
        for (const Point& y : objective.values[i])
            for (const Point& z : instance.g.values[i])
                for (const Point& w : instance.h.values[i])
                    v.min_slack = std::min(v.min_slack, dot(cert.xi, y) +
                                                            dot(cert.eta, z) +
                                                            dot(cert.zeta, w));
    v.slack_ok = v.min_slack >= -tol;

    if (cert.normalization == "N1")
        v.normalization_residual =
            std::fabs(dot(cert.xi, instance.coneY.interior_point()) - 1.0);
    else if (cert.normalization == "N2")
        v.normalization_residual =
            std::fabs(dot(cert.eta, instance.coneZ.interior_point()) - 1.0);
    else if (cert.normalization.rfind("N3", 0) == 0 && cert.normalization.size() > 3) {
        int j = std::stoi(cert.normalization.substr(3));
        double want = cert.normalization[2] == '+' ? 1.0 : -1.0;
        v.normalization_residual = std::fabs(cert.zeta.at(j) - want);
    } else {
        v.normalization_residual = 1.0;  // unknown tag never verifies
    }
    v.normalization_ok = v.normalization_residual <= tol;

    v.comp_slack = std::numeric_limits<double>::infinity();
    for (const Point& z : instance.g.values[xbar_index])
        v.comp_slack = std::min(v.comp_slack, dot(cert.eta, z));
    v.comp_slack_ok = std::fabs(v.comp_slack) <= comp_tol;

    double global_min = std::numeric_limits<double>::infinity();
    for (std::size_t i : domain.members) {
        double fy = std::numeric_limits<double>::infinity();
        double gz = std::numeric_limits<double>::infinity();
        double hw = std::numeric_limits<double>::infinity();
        for (const Point& y : instance.f.values[i]) fy = std::min(fy, dot(cert.xi, y));
        for (const Point& z : instance.g.values[i]) gz = std::min(gz, dot(cert.eta, z));
        for (const Point& w : instance.h.values[i]) hw = std::min(hw, dot(cert.zeta, w));
        global_min = std::min(global_min, fy + gz + hw);
    }
    v.lower_bound_gap = global_min - dot(cert.xi, ybar);
    v.lower_bound_ok = v.lower_bound_gap >= -tol;

    v.pass = v.dual_ok && v.slack_ok && v.normalization_ok && v.comp_slack_ok &&
             v.lower_bound_ok;
    return v;
}

EfficiencyVerdict weak_efficiency_over_values(
    const std::vector<std::vector<Point>>& values_by_member,
    std::size_t xbar_position, const PolyhedralCone& coneY, double margin) {
    if (xbar_position >= values_by_member.size())
        throw InputError("weak efficiency: xbar is not a domain member");
    EfficiencyVerdict verdict;
    for (const Point& candidate : values_by_member[xbar_position]) {
        std::optional<DominatorEntry> dominator;
        for (std::size_t m = 0; m < values_by_member.size() && !dominator; ++m)
            for (const Point& y : values_by_member[m])
                if (coneY.contains(sub(candidate, y), ConeMode::StrictInterior,
                                   margin)) {
                    dominator = DominatorEntry{candidate, m, y};
                    break;
                }
        if (!dominator) {
            verdict.weakly_efficient = true;
            verdict.ybar = candidate;
            verdict.dominators.clear();
            return verdict;
        }
        verdict.dominators.push_back(std::move(*dominator));
    }
    verdict.weakly_efficient = false;
    return verdict;
}

EfficiencyVerdict weak_efficiency_bruteforce(const VPInstance& instance,
                                             const FeasibleSet& domain,
                                             std::size_t xbar_index, double margin) {
    auto pos = domain.member_position(xbar_index);
    if (!pos) throw InputError("weak efficiency: xbar must be feasible");
    std::vector<std::vector<Point>> values;
    values.reserve(domain.members.size());
    for (std::size_t i : domain.members) values.push_back(instance.f.values[i]);
    EfficiencyVerdict verdict =
        weak_efficiency_over_values(values, *pos, instance.coneY, margin);
    for (DominatorEntry& d : verdict.dominators)
        d.label_index = domain.members[d.label_index];
    return verdict;
}

NnamcqReport check_nnamcq(const VPInstance& instance, const FeasibleSet& domain,
                          std::size_t xbar_index, double tol) {
    if (!domain.contains(xbar_index))
        throw InputError("nnamcq: xbar must be feasible");
    const int q = instance.q(), r = instance.r();
    const int num_vars = q + r;
    std::vector<Point> rows =
        product_rows(domain, instance.f, instance.g, instance.h, /*include_f=*/false);

    LinearSystem base;
    base.num_vars = num_vars;
    append_dual_rows(base, instance.coneZ, 0);
    for (const Point& row : rows) base.add_row(row, Relation::GreaterEqual, 0.0);

    NnamcqReport report;
    for (const Normalization& norm :
         normalizations(num_vars, {}, 0, instance.coneZ.interior_point(), 0, q, r,
                        /*require_xi_nonzero=*/false, /*include_xi=*/false)) {
        LinearSystem sys = base;
        sys.add_row(norm.row, Relation::Equal, norm.rhs);
        FeasibilityOutcome res = lp_solve(sys, tol);
        if (res.status == LpStatus::Feasible) {
            Point eta(res.point.begin(), res.point.begin() + q);
            Point zeta(res.point.begin() + q, res.point.end());
            report.holds = false;
            report.violation = {std::move(eta), std::move(zeta)};
            report.normalization = norm.tag;
            return report;
        }
    }
    report.holds = true;
    return report;
}

ScqReport check_scq(const VPInstance& instance, const FeasibleSet& domain,
                    int direction_samples, std::uint64_t seed, double tol) {
    if (domain.members.empty()) throw InputError("scq: domain is empty");
    if (direction_samples < 1) throw InputError("scq: need at least one sample");
    const int r = instance.r();

    ScqReport report;
    if (r >= 1) {
        report.structural_zero_h = true;
        for (std::size_t i : domain.members)
            for (const Point& w : instance.h.values[i])
                if (norm_inf(w) > tol) report.structural_zero_h = false;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto& dual_dirs = instance.coneZ.facet_normals();

    for (int k = 0; k < direction_samples; ++k) {
        ScqDirection dir;
        int mode = r >= 1 ? k % 3 : 0;  // 0: eta only, 1: zeta only, 2: both
        dir.eta.assign(instance.q(), 0.0);
        dir.zeta.assign(r, 0.0);
        if (mode != 1) {
            std::size_t forced = k % dual_dirs.size();
            for (std::size_t i = 0; i < dual_dirs.size(); ++i)
                dir.eta = axpy(dir.eta, (i == forced ? 0.5 : 0.0) + 0.5 * u01(rng),
                               dual_dirs[i]);
        }
        if (mode != 0) {
            double len = 0.0;
            while (len < 1e-6) {
                for (double& c : dir.zeta) c = gauss(rng);
                len = norm2(dir.zeta);
            }
            for (double& c : dir.zeta) c /= len;
        }

        for (std::size_t i : domain.members) {
            for (const Point& z : instance.g.values[i]) {
                double t = dot(dir.eta, z);
                if (t >= -tol) continue;
                if (r == 0) {
                    dir.satisfied = true;
                    dir.label_index = i;
                    dir.common_value = t;
                    break;
                }
                for (const Point& w : instance.h.values[i]) {
                    if (std::fabs(t - dot(dir.zeta, w)) <= tol) {
                        dir.satisfied = true;
                        dir.label_index = i;
                        dir.common_value = t;
                        break;
                    }
                }
                if (dir.satisfied) break;
            }
            if (dir.satisfied) break;
        }
        if (dir.satisfied)
            ++report.satisfied_count;
        else
            report.violated = true;
        report.directions.push_back(std::move(dir));
    }
    return report;
}

ScalarizationResult scalarize_and_solve(const VPInstance& instance,
                                        const FeasibleSet& domain, const Point& xi,
                                        double tol) {
    if (domain.members.empty()) throw InputError("scalarize: domain is empty");
    require_dim(xi, static_cast<std::size_t>(instance.p()), "xi");
    for (const Point& gen : instance.coneY.generators())
        if (dot(xi, gen) < -tol)
            throw InputError("scalarize: xi is not a dual-cone functional");

    std::vector<double> m(domain.members.size());
    for (std::size_t k = 0; k < domain.members.size(); ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& y : instance.f.values[domain.members[k]])
            best = std::min(best, dot(xi, y));
        m[k] = best;
    }
    ScalarizationResult result;
    result.best = *std::min_element(m.begin(), m.end());
    for (std::size_t k = 0; k < domain.members.size(); ++k) {
        if (m[k] > result.best + tol) continue;
        ScalarizationEntry entry;
        entry.label_index = domain.members[k];
        entry.value = m[k];
        const auto& values = instance.f.values[domain.members[k]];
        for (std::size_t vi = 0; vi < values.size(); ++vi)
            if (dot(xi, values[vi]) <= m[k] + tol) entry.attaining_values.push_back(vi);
        result.argmin.push_back(std::move(entry));
    }
    return result;
}

const char* to_string(NecessityStatus s) {
    switch (s) {
        case NecessityStatus::NotWeaklyEfficient: return "not weakly efficient";
        case NecessityStatus::CertificateFound: return "certificate found";
        case NecessityStatus::HypothesisUnmet: return "hypothesis unmet";
        case NecessityStatus::NoCertificate: return "no certificate";
    }
    return "?";
}

const char* to_string(SufficiencyStatus s) {
    switch (s) {
        case SufficiencyStatus::Confirmed: return "confirmed";
        case SufficiencyStatus::Violation: return "sufficiency implication violated";
        case SufficiencyStatus::CqUnmet: return "CQ unmet; sufficiency not claimed";
        case SufficiencyStatus::BadCertificate: return "certificate rejected";
    }
    return "?";
}

NecessityReport necessity_pipeline(const VPInstance& instance, std::size_t xbar_index,
                                    const SamplingParams& sampling, double margin,
                                    double tol,
                                    std::optional<bool> require_xi_override) {
    FeasibleSet domain = feasible_set(instance, tol);
    if (!domain.contains(xbar_index))
        throw InputError("necessity: xbar must be feasible");

    NecessityReport report;
    report.a2 = check_condition_a2(instance);
    report.efficiency = weak_efficiency_bruteforce(instance, domain, xbar_index, margin);
    if (!report.efficiency.weakly_efficient) {
        report.status = NecessityStatus::NotWeaklyEfficient;
        return report;
    }
    report.ybar = *report.efficiency.ybar;
    report.a1 =
        check_condition_a1(instance, domain, xbar_index, report.ybar, sampling, margin, tol);
    report.nnamcq_holds = check_nnamcq(instance, domain, xbar_index, tol).holds;

    SetValuedMap shifted = shift_objective(instance, xbar_index, report.ybar, tol);
    bool require_xi =
        require_xi_override ? *require_xi_override : *report.nnamcq_holds;
    report.certificate = find_multipliers(instance, domain, shifted, require_xi, tol);
    if (report.certificate) {
        report.verification = verify_certificate(instance, domain, shifted,
                                                 *report.certificate, xbar_index,
                                                 report.ybar, tol);
        report.status = NecessityStatus::CertificateFound;
    } else {
        report.status = report.a1->refuted ? NecessityStatus::HypothesisUnmet
                                           : NecessityStatus::NoCertificate;
    }
    return report;
}

SufficiencyReport sufficiency_check(const VPInstance& instance,
                                        std::size_t xbar_index,
                                        const MultiplierCertificate& cert,
                                        const Point& ybar, double margin, double tol) {
    FeasibleSet domain = feasible_set(instance, tol);
    if (!domain.contains(xbar_index))
        throw InputError("sufficiency: xbar must be feasible");

    SufficiencyReport report;
    SetValuedMap shifted = shift_objective(instance, xbar_index, ybar, tol);
    report.verification =
        verify_certificate(instance, domain, shifted, cert, xbar_index, ybar, tol);
    if (!cert.xi_nonzero || !report.verification.pass) {
        report.status = SufficiencyStatus::BadCertificate;
        return report;
    }
    report.cq_holds = check_nnamcq(instance, domain, xbar_index, tol).holds;
    if (!report.cq_holds) {
        report.status = SufficiencyStatus::CqUnmet;
        return report;
    }
    EfficiencyVerdict brute =
        weak_efficiency_bruteforce(instance, domain, xbar_index, margin);
    report.brute_force_agrees = brute.weakly_efficient;
    report.status = brute.weakly_efficient ? SufficiencyStatus::Confirmed
                                           : SufficiencyStatus::Violation;
    return report;
}

}  // namespace conecert
