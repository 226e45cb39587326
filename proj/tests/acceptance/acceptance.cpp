// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "conecert/campaign.hpp"
#include "conecert/lp.hpp"
#include "conecert/report.hpp"

using namespace conecert;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Criterion> g_results;

template <typename F>
void run_criterion(int id, const std::string& name, F body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    g_results.push_back({id, name, pass, detail, secs});
    std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
}

bool witness_ok(const SetSpec& spec, const ConvexityVerdict& verdict) {
    if (verdict.status != ConvexityStatus::NonConvex || !verdict.witness) return false;
    const auto& w = *verdict.witness;
    return set_member(spec, w.p1) && set_member(spec, w.p2) &&
           !set_member(spec, w.midpoint) &&
           approx_eq(add(scale(w.lambda, w.p1), scale(1.0 - w.lambda, w.p2)),
                     w.midpoint, 1e-9);
}

// --- criterion 1: quarter-ring reproduction ---------------------------------

bool criterion1(std::string& detail) {
    VPInstance inst = generate_example_2_1();
    FeasibleSet domain = feasible_set(inst);
    auto pooled = inst.f.pooled(domain.members);
    SamplingParams sampling{10000, {0.25, 0.5, 0.75}, 20240801};
    ClassificationReport report = classify_values(pooled, inst.coneY, sampling);

    SetSpec closed{SetKind::ClosedSum, pooled, inst.coneY, kDefaultMargin, kDefaultTol};
    SetSpec interior{SetKind::InteriorSum, pooled, inst.coneY, kDefaultMargin,
                     kDefaultTol};
    SetSpec scaled{SetKind::ScaledUnion, pooled, inst.coneY, kDefaultMargin,
                   kDefaultTol};

    bool sub_refuted = witness_ok(interior, report.subconvexlike);
    bool convex_refuted = witness_ok(closed, report.convexlike);
    bool presub_clear =
        report.presubconvexlike.status == ConvexityStatus::NoCounterexampleFound &&
        report.presubconvexlike.pairs_checked >= 10000;

    std::mt19937_64 rng(424243);
    std::uniform_real_distribution<double> logc(std::log(1e-5), std::log(3.0));
    int union_members_interior = 0, interior_in_union = 0;
    for (int k = 0; k < 1000; ++k) {
        Point member = sample_set_member(scaled, rng);
        if (inst.coneY.contains(member, ConeMode::StrictInterior))
            ++union_members_interior;
        Point strict{std::exp(logc(rng)), std::exp(logc(rng))};
        if (set_member(scaled, strict)) ++interior_in_union;
    }

    std::ostringstream os;
    os << "subconvexlike witness " << (sub_refuted ? "verified" : "MISSING")
       << ", convexlike witness " << (convex_refuted ? "verified" : "MISSING")
       << ", presubconvexlike clear over " << report.presubconvexlike.pairs_checked
       << " pairs, union<->interior " << union_members_interior << "/1000 and "
       << interior_in_union << "/1000";
    detail = os.str();
    return sub_refuted && convex_refuted && presub_clear &&
           union_members_interior == 1000 && interior_in_union == 1000 &&
           report.chain_consistent;
}

// --- criterion 2: alternative-system exclusivity ----------------------------

bool criterion2(std::string& detail) {
    CampaignOptions options;
    options.seed_begin = 1;
    options.seed_end = 500;
    options.params = {4, 2, 1, 1, 2, InstanceFamily::General};
    auto result = run_exclusivity_campaign(options);
    std::ostringstream os;
    os << result.certified << " certified of " << result.instances << " instances, "
       << result.violations << " exclusivity violations";
    detail = os.str();
    return result.instances == 500 && result.certified > 50 && result.violations == 0;
}

// --- criteria 3-6 share the chain campaign ----------------------------------

ChainCampaign chain_campaign_result() {
    CampaignOptions options;
    options.seed_begin = 1;
    options.seed_end = 200;
    options.params = {6, 2, 2, 0, 1, InstanceFamily::Chain};
    options.sampling = SamplingParams{300, {0.25, 0.5, 0.75}, 0};
    return run_chain_campaign(options);
}

const ChainCampaign& chain_campaign() {
    static ChainCampaign result = chain_campaign_result();
    return result;
}

bool criterion3(std::string& detail) {
    const auto& c = chain_campaign();
    std::ostringstream os;
    os << c.weakly_efficient << "/200 weakly efficient, " << c.certified_n1
       << "/200 N1 certificates, " << c.verified
       << "/200 verified incl. complementary slackness at 1e-7";
    detail = os.str();
    return c.instances == 200 && c.weakly_efficient == 200 && c.certified_n1 == 200 &&
           c.verified == 200;
}

bool criterion4(std::string& detail) {
    const auto& c = chain_campaign();
    std::ostringstream os;
    os << c.nnamcq_verified << "/200 NNAMCQ verified, " << c.sufficiency_confirmed
       << "/200 sufficiency confirmations";
    detail = os.str();
    return c.nnamcq_verified == 200 && c.sufficiency_confirmed == 200;
}

bool criterion5(std::string& detail) {
    const auto& c = chain_campaign();
    std::ostringstream os;
    os << c.scalarization_ok << "/200 argmin memberships";
    detail = os.str();
    return c.scalarization_ok == 200;
}

bool criterion6(std::string& detail) {
    const auto& c = chain_campaign();
    auto spot = run_backward_spot_campaign(77, 200);
    std::ostringstream os;
    os << c.pairs_ok << "/200 operator pairs pass construction invariants, "
       << c.vpst_efficient << "/200 operator-problem efficiencies, " << c.backward_ok
       << "/" << c.vpst_efficient << " backward confirmations; random-pair spot check "
       << spot.confirmed << "/" << spot.draws;
    detail = os.str();
    return c.pairs_ok == 200 && c.vpst_efficient == 200 &&
           c.backward_ok == c.vpst_efficient && spot.draws == 200 &&
           spot.confirmed == 200;
}

// --- criterion 7: LP engine soundness ----------------------------------------

LinearSystem random_system(std::mt19937_64& rng, int max_vars, int max_rows) {
    std::uniform_int_distribution<int> nv(1, max_vars), nr(1, max_rows);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    LinearSystem sys;
    sys.num_vars = nv(rng);
    int rows = nr(rng);
    for (int i = 0; i < rows; ++i) {
        Point c(sys.num_vars);
        for (double& v : c) v = coeff(rng);
        sys.add_row(std::move(c),
                    u01(rng) < 0.25 ? Relation::Equal : Relation::GreaterEqual,
                    coeff(rng));
    }
    if (u01(rng) < 0.5) {
        Point c(sys.num_vars);
        for (double& v : c) v = coeff(rng);
        sys.objective =
            Objective{std::move(c), u01(rng) < 0.5 ? Sense::Maximize : Sense::Minimize};
    }
    return sys;
}

double max_violation(const LinearSystem& sys, const Point& x) {
    double worst = 0.0;
    for (const LinearRow& row : sys.rows) {
        double lhs = dot(row.coeffs, x);
        worst = std::max(worst, row.rel == Relation::Equal
                                    ? std::fabs(lhs - row.rhs)
                                    : std::max(0.0, row.rhs - lhs));
    }
    return worst;
}

struct OracleVerdict {
    bool feasible;
    double closest;
};

OracleVerdict oracle_2var(const LinearSystem& sys) {
    const double box = 1e5;
    std::vector<Point> lines;
    for (const LinearRow& r : sys.rows) lines.push_back({r.coeffs[0], r.coeffs[1], r.rhs});
    lines.push_back({1, 0, box});
    lines.push_back({1, 0, -box});
    lines.push_back({0, 1, box});
    lines.push_back({0, 1, -box});
    std::vector<Point> candidates{{0.0, 0.0}};
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            double det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
            if (std::fabs(det) < 1e-9) continue;
            candidates.push_back(
                {(lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det,
                 (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det});
        }
    double closest = std::numeric_limits<double>::infinity();
    for (const Point& c : candidates) {
        if (std::fabs(c[0]) > box + 1.0 || std::fabs(c[1]) > box + 1.0) continue;
        closest = std::min(closest, max_violation(sys, c));
    }
    return {closest <= 1e-6, closest};
}

bool criterion7(std::string& detail) {
    std::mt19937_64 rng(20240901);
    int feasible = 0, infeasible = 0, bad = 0;
    for (int k = 0; k < 1000; ++k) {
        LinearSystem sys = random_system(rng, 6, 12);
        FeasibilityOutcome out = lp_solve(sys);
        if (out.status == LpStatus::Infeasible) {
            ++infeasible;
            if (!lp_verify_farkas(sys, out.farkas)) ++bad;
        } else if (out.status == LpStatus::Feasible) {
            ++feasible;
            if (max_violation(sys, out.point) > 1e-7) ++bad;
        }
    }
    std::mt19937_64 rng2(555);
    int oracle_checked = 0, oracle_bad = 0;
    while (oracle_checked < 500) {
        LinearSystem sys = random_system(rng2, 2, 8);
        sys.num_vars = 2;
        for (LinearRow& r : sys.rows) r.coeffs.resize(2, 0.3);
        sys.objective.reset();
        OracleVerdict oracle = oracle_2var(sys);
        if (!oracle.feasible && oracle.closest < 1e-3) continue;  // too close to call
        ++oracle_checked;
        bool lp_feasible = lp_solve(sys).status == LpStatus::Feasible;
        if (lp_feasible != oracle.feasible) ++oracle_bad;
    }
    std::ostringstream os;
    os << feasible << " feasible re-verified, " << infeasible
       << " infeasible certificates checked, " << bad << " soundness failures; "
       << oracle_bad << "/500 oracle disagreements";
    detail = os.str();
    return bad == 0 && oracle_bad == 0;
}

// --- criterion 8: positivity of dual functionals on the interior -------------

bool criterion8(std::string& detail) {
    std::vector<PolyhedralCone> cones;
    cones.push_back(PolyhedralCone::orthant(2));
    cones.push_back(PolyhedralCone::orthant(3));
    cones.push_back(PolyhedralCone::make(2, {{1, 0}, {1, 1}}));
    cones.push_back(PolyhedralCone::make(3, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}));

    std::mt19937_64 rng(987654321);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> wiggle(-0.3, 0.3);
    long long pairs = 0, violations = 0;
    for (const auto& cone : cones) {
        const auto& dirs = cone.facet_normals();
        std::vector<Point> xis, ys;
        for (int i = 0; i < 500; ++i) {
            Point xi(cone.dim(), 0.0);
            std::size_t forced = i % dirs.size();
            for (std::size_t d = 0; d < dirs.size(); ++d)
                xi = axpy(xi, (d == forced ? 0.5 : 0.0) + 0.5 * u01(rng), dirs[d]);
            xis.push_back(std::move(xi));
        }
        for (int i = 0; i < 500; ++i) {
            while (true) {
                Point y = cone.interior_point();
                for (double& v : y) v += wiggle(rng);
                if (cone.contains(y, ConeMode::StrictInterior)) {
                    ys.push_back(std::move(y));
                    break;
                }
            }
        }
        for (const Point& xi : xis)
            for (const Point& y : ys) {
                ++pairs;
                if (dot(xi, y) <= 0.0) ++violations;
            }
    }
    std::ostringstream os;
    os << pairs << " pairs, " << violations << " violations";
    detail = os.str();
    return pairs == 1000000 && violations == 0;
}

}  // namespace

int main() {
    run_criterion(1, "quarter-ring classification reproduction", [](std::string& d) {
        auto start = std::chrono::steady_clock::now();
        bool ok = criterion1(d);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return ok && secs <= 30.0;
    });
    run_criterion(2, "alternative-system exclusivity over 500 seeds",
                  [](std::string& d) {
                      auto start = std::chrono::steady_clock::now();
                      bool ok = criterion2(d);
                      double secs = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                      return ok && secs <= 60.0;
                  });
    run_criterion(3, "necessity with verified certificates on 200 chains", criterion3);
    run_criterion(4, "sufficiency under the exact CQ on the same campaign", criterion4);
    run_criterion(5, "scalarization argmin coherence", criterion5);
    run_criterion(6, "operator-pair construction and backward direction", criterion6);
    run_criterion(7, "LP engine soundness and oracle agreement", criterion7);
    run_criterion(8, "dual-functional positivity on one million pairs", criterion8);

    int failures = 0;
    for (const Criterion& c : g_results)
        if (!c.pass) ++failures;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) - failures,
                g_results.size());
    return failures == 0 ? 0 : 1;
}
