#include "conecert/lagrangian.hpp"

#include <cmath>

namespace conecert {

Point VectorLagrangianPair::apply_S(const Point& z) const {
    Point out(S.size(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i) out[i] = dot(S[i], z);
    return out;
}

Point VectorLagrangianPair::apply_T(const Point& w) const {
    Point out(T.size(), 0.0);
    for (std::size_t i = 0; i < T.size(); ++i) out[i] = dot(T[i], w);
    return out;
}

VectorLagrangianPair construct_vector_lagrangian(const MultiplierCertificate& cert,
                                                 const PolyhedralCone& coneY,
                                                 const PolyhedralCone& coneZ,
                                                 double tol) {
    if (!cert.xi_nonzero)
        throw InputError("vector lagrangian: certificate must have xi != 0");
    require_dim(cert.xi, coneY.dim(), "certificate xi");
    require_dim(cert.eta, coneZ.dim(), "certificate eta");

    const Point& e = coneY.interior_point();
    double s = dot(cert.xi, e);
    if (s <= tol)
        throw InputError("vector lagrangian: xi vanishes on the interior point "
                         "(certificate corrupt)");
    VectorLagrangianPair pair;
    pair.source = cert;
    pair.y0 = scale(1.0 / s, e);

    const std::size_t p = cert.xi.size(), q = cert.eta.size(), r = cert.zeta.size();
    pair.S.assign(p, Point(q, 0.0));
    pair.T.assign(p, Point(r, 0.0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) pair.S[i][j] = pair.y0[i] * cert.eta[j];
        for (std::size_t j = 0; j < r; ++j) pair.T[i][j] = pair.y0[i] * cert.zeta[j];
    }

    if (std::fabs(dot(cert.xi, pair.y0) - 1.0) > 1e-9)
        throw InternalError("vector lagrangian: <xi, y0> != 1 after scaling");
    if (!coneY.contains(pair.y0, ConeMode::StrictInterior))
        throw InputError("vector lagrangian: scaled y0 leaves the strict interior");
    for (std::size_t j = 0; j < q; ++j) {
        double xi_S = 0.0;
        for (std::size_t i = 0; i < p; ++i) xi_S += cert.xi[i] * pair.S[i][j];
        if (std::fabs(xi_S - cert.eta[j]) > 1e-9)
            throw InternalError("vector lagrangian: xi∘S != eta");
    }
    for (std::size_t j = 0; j < r; ++j) {
        double xi_T = 0.0;
        for (std::size_t i = 0; i < p; ++i) xi_T += cert.xi[i] * pair.T[i][j];
        if (std::fabs(xi_T - cert.zeta[j]) > 1e-9)
            throw InternalError("vector lagrangian: xi∘T != zeta");
    }
    for (const Point& gz : coneZ.generators())
        if (!coneY.contains(pair.apply_S(gz), ConeMode::Closed, kDefaultMargin, tol))
            throw InternalError("vector lagrangian: S does not map Z+ into Y+");
    return pair;
}

std::vector<Point> lagrangian_map(const VPInstance& instance,
                                  const VectorLagrangianPair& pair,
                                  std::size_t label_index, double tol) {
    if (label_index >= instance.labels.size())
        throw InputError("lagrangian_map: label index out of range");
    std::vector<Point> sg, tw;
    for (const Point& z : instance.g.values[label_index]) sg.push_back(pair.apply_S(z));
    for (const Point& w : instance.h.values[label_index]) tw.push_back(pair.apply_T(w));
    return minkowski_sum(minkowski_sum(instance.f.values[label_index], sg, tol), tw,
                         tol);
}

EfficiencyVerdict vpst_weak_efficiency(const VPInstance& instance,
                                       const FeasibleSet& domain,
                                       const VectorLagrangianPair& pair,
                                       std::size_t xbar_index, double margin,
                                       double tol) {
    auto pos = domain.member_position(xbar_index);
    if (!pos) throw InputError("vpst efficiency: xbar must be feasible");
    std::vector<std::vector<Point>> values;
    values.reserve(domain.members.size());
    for (std::size_t i : domain.members)
        values.push_back(lagrangian_map(instance, pair, i, tol));
    EfficiencyVerdict verdict =
        weak_efficiency_over_values(values, *pos, instance.coneY, margin);
    for (DominatorEntry& d : verdict.dominators)
        d.label_index = domain.members[d.label_index];
    return verdict;
}

RoundtripReport operator_roundtrip(const VPInstance& instance, std::size_t xbar_index,
                                    const SamplingParams& sampling, CqMode cq_mode,
                                    int scq_samples, double margin, double tol) {
    RoundtripReport report;
    report.cq_mode = cq_mode;
    report.necessity = necessity_pipeline(instance, xbar_index, sampling, margin, tol);

    FeasibleSet domain = feasible_set(instance, tol);
    if (cq_mode == CqMode::Scq) {
        report.scq = check_scq(instance, domain, scq_samples, sampling.seed, tol);
        report.cq_holds = !report.scq->violated;
    } else {
        report.cq_holds = check_nnamcq(instance, domain, xbar_index, tol).holds;
    }

    if (report.necessity.status == NecessityStatus::NotWeaklyEfficient) {
        report.forward_status = "not weakly efficient";
        return report;
    }
    if (!report.necessity.certificate || !report.necessity.certificate->xi_nonzero) {
        report.forward_status =
            report.necessity.status == NecessityStatus::HypothesisUnmet
                ? "hypothesis unmet"
                : "no usable certificate";
        return report;
    }

    report.pair = construct_vector_lagrangian(*report.necessity.certificate,
                                              instance.coneY, instance.coneZ, tol);
    report.vpst = vpst_weak_efficiency(instance, domain, *report.pair, xbar_index,
                                       margin, tol);
    report.forward_pass = report.vpst->weakly_efficient;
    report.forward_status = report.forward_pass ? "pass" : "operator problem disagrees";

    if (report.vpst->weakly_efficient) {
        EfficiencyVerdict vp =
            weak_efficiency_bruteforce(instance, domain, xbar_index, margin);
        report.backward_ok = vp.weakly_efficient;
    }
    return report;
}

}  // namespace conecert
