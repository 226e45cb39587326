#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conecert/classify.hpp"
#include "conecert/instance.hpp"

namespace conecert {

// Multiplier triple solving the separation system: xi in the dual of Y+, eta
// in the dual of Z+, zeta free, with <xi,y> + <eta,z> + <zeta,w> >= 0 over
// every value combination on the feasible set. The normalization tag records
// which pinning produced it (N1: <xi, e_Y> = 1; N2: <eta, e_Z> = 1;
// N3+j/N3-j: zeta_j = +/-1); any nonzero solution scales onto one of these,
// so an exhaustive pass over the tags decides existence exactly.
struct MultiplierCertificate {
    Point xi, eta, zeta;
    std::string normalization;
    double min_slack = 0.0;
    bool xi_nonzero = false;
    bool vacuous_domain = false;
};

struct SystemIWitness {
    std::size_t label_index = 0;
    std::size_t f_value_index = 0;  // y with -y strictly interior to Y+
    std::size_t g_value_index = 0;  // z with -z in Z+
    std::size_t h_value_index = 0;  // zero value of h
};

// Exhaustive scan for the strict primal system: some label whose objective
// meets -int Y+ while staying feasible. Exact at finite scale.
std::optional<SystemIWitness> solve_system_i(const VPInstance& instance,
                                             double margin = kDefaultMargin,
                                             double tol = kDefaultTol);

std::optional<MultiplierCertificate> find_multipliers(
    const VPInstance& instance, const FeasibleSet& domain,
    const SetValuedMap& objective, bool require_xi_nonzero,
    double tol = kDefaultTol);

struct CertificateVerification {
    double dual_residual = 0.0;          // worst dual-cone row violation
    double min_slack = 0.0;              // worst inequality slack
    double normalization_residual = 0.0;
    double comp_slack = 0.0;             // min over g(xbar) of <eta, z>
    double lower_bound_gap = 0.0;        // scalarized minimum minus <xi, ybar>
    bool dual_ok = false;
    bool slack_ok = false;
    bool normalization_ok = false;
    bool comp_slack_ok = false;  // |comp_slack| <= comp tolerance (1e-7)
    bool lower_bound_ok = false;
    bool pass = false;
};

// Recomputes every clause of a certificate from scratch: dual membership,
// all inequality slacks over the shifted objective, the normalization, the
// complementary slackness at xbar, and the scalarized lower bound against
// the unshifted objective. The bound is checked in its >= form; the gap is
// reported so the exact-equality case is visible.
CertificateVerification verify_certificate(const VPInstance& instance,
                                           const FeasibleSet& domain,
                                           const SetValuedMap& objective,
                                           const MultiplierCertificate& cert,
                                           std::size_t xbar_index, const Point& ybar,
                                           double tol = kDefaultTol,
                                           double comp_tol = 1e-7);

struct DominatorEntry {
    Point ybar_candidate;
    std::size_t label_index = 0;
    Point value;  // strictly dominates the candidate
};

struct EfficiencyVerdict {
    bool weakly_efficient = false;
    std::optional<Point> ybar;               // witnessing value when efficient
    std::vector<DominatorEntry> dominators;  // one per candidate otherwise
};

EfficiencyVerdict weak_efficiency_bruteforce(const VPInstance& instance,
                                             const FeasibleSet& domain,
                                             std::size_t xbar_index,
                                             double margin = kDefaultMargin);

// Same semantics applied to externally supplied value lists (used for the
// operator-Lagrangian problem, whose objective is derived, not stored).
EfficiencyVerdict weak_efficiency_over_values(
    const std::vector<std::vector<Point>>& values_by_member,
    std::size_t xbar_position, const PolyhedralCone& coneY,
    double margin = kDefaultMargin);

struct NnamcqReport {
    bool holds = false;
    std::optional<std::pair<Point, Point>> violation;  // (eta, zeta)
    std::string normalization;  // tag that produced the violation
};

// Exact decision: the constraint-only multiplier system admits a nonzero
// solution iff one of the eta/zeta normalizations is feasible.
NnamcqReport check_nnamcq(const VPInstance& instance, const FeasibleSet& domain,
                          std::size_t xbar_index, double tol = kDefaultTol);

struct ScqDirection {
    Point eta, zeta;
    bool satisfied = false;
    std::optional<std::size_t> label_index;  // attaining x when satisfied
    double common_value = 0.0;               // the negative t found
};

struct ScqReport {
    std::vector<ScqDirection> directions;
    int satisfied_count = 0;
    bool violated = false;              // some sampled direction fails
    bool structural_zero_h = false;     // r >= 1 with h identically zero on D:
                                        // the common-value reading cannot hold
};

// Sampled semidecision of the Slater-type condition: every nonzero (eta,
// zeta) needs a feasible x and a common negative value of <eta, g(x)> and
// <zeta, h(x)>.
ScqReport check_scq(const VPInstance& instance, const FeasibleSet& domain,
                    int direction_samples, std::uint64_t seed,
                    double tol = kDefaultTol);

struct ScalarizationEntry {
    std::size_t label_index = 0;
    double value = 0.0;                        // min over f(x) of <xi, y>
    std::vector<std::size_t> attaining_values;
};

struct ScalarizationResult {
    double best = 0.0;
    std::vector<ScalarizationEntry> argmin;  // labels attaining best within tol
};

ScalarizationResult scalarize_and_solve(const VPInstance& instance,
                                        const FeasibleSet& domain, const Point& xi,
                                        double tol = kDefaultTol);

enum class NecessityStatus {
    NotWeaklyEfficient,
    CertificateFound,
    HypothesisUnmet,  // no certificate, but the convexity hypothesis was refuted
    NoCertificate     // no certificate and no refutation: flagged for review
};

const char* to_string(NecessityStatus s);

struct NecessityReport {
    EfficiencyVerdict efficiency;
    Point ybar;
    std::optional<ConditionReport> a1;
    InnerPointReport a2;
    std::optional<bool> nnamcq_holds;
    std::optional<MultiplierCertificate> certificate;
    std::optional<CertificateVerification> verification;
    NecessityStatus status = NecessityStatus::NotWeaklyEfficient;
};

// Forward pipeline: brute-force efficiency, hypothesis checks, multiplier
// search over the shifted objective (xi != 0 demanded exactly when the
// no-abnormal-multiplier CQ holds, unless overridden), full verification.
NecessityReport necessity_pipeline(
    const VPInstance& instance, std::size_t xbar_index, const SamplingParams& sampling,
    double margin = kDefaultMargin, double tol = kDefaultTol,
    std::optional<bool> require_xi_override = std::nullopt);

enum class SufficiencyStatus { Confirmed, Violation, CqUnmet, BadCertificate };

const char* to_string(SufficiencyStatus s);

struct SufficiencyReport {
    bool cq_holds = false;
    CertificateVerification verification;
    std::optional<bool> brute_force_agrees;
    SufficiencyStatus status = SufficiencyStatus::BadCertificate;
};

// Inverse direction: a verified nonzero-xi certificate plus the CQ asserts
// weak efficiency; the brute-force oracle must agree, and any disagreement
// is reported as a violation of the sufficiency implication.
SufficiencyReport sufficiency_check(const VPInstance& instance,
                                        std::size_t xbar_index,
                                        const MultiplierCertificate& cert,
                                        const Point& ybar,
                                        double margin = kDefaultMargin,
                                        double tol = kDefaultTol);

}  // namespace conecert
