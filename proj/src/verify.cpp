#include "conecert/verify.hpp"

#include <iostream>

#include "conecert/report.hpp"

namespace conecert {

using nlohmann::json;

namespace {

struct Checker {
    std::ostream& out;
    int checked = 0;
    int failed = 0;

    void record(const std::string& what, bool ok) {
        ++checked;
        if (!ok) ++failed;
        out << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
    }
};

double param(const json& report, const char* name, double fallback) {
    const json& p = report.at("parameters");
    return p.contains(name) ? p.at(name).get<double>() : fallback;
}

void verify_convexity_verdicts(const json& checks, const VPInstance& inst,
                               const FeasibleSet& domain, double margin, double tol,
                               Checker& ck) {
    for (const auto& [name, verdict] : checks.items()) {
        if (!verdict.contains("witness")) continue;
        SetDescriptor desc = set_descriptor_from_json(verdict.at("set"));
        SetSpec spec = build_set_spec(inst, domain, desc, margin, tol);
        const json& w = verdict.at("witness");
        Point p1 = point_from_json(w.at("p1"), "witness.p1");
        Point p2 = point_from_json(w.at("p2"), "witness.p2");
        Point mid = point_from_json(w.at("midpoint"), "witness.midpoint");
        double lambda = w.at("lambda").get<double>();
        bool members = set_member(spec, p1) && set_member(spec, p2);
        bool rejected = !set_member(spec, mid);
        bool arithmetic =
            approx_eq(add(scale(lambda, p1), scale(1.0 - lambda, p2)), mid, 1e-9);
        ck.record(name + " witness (members, rejection, arithmetic)",
                  members && rejected && arithmetic);
    }
}

void verify_efficiency(const json& eff, const VPInstance& inst,
                       const FeasibleSet& domain, std::size_t xbar, double margin,
                       Checker& ck) {
    EfficiencyVerdict fresh = weak_efficiency_bruteforce(inst, domain, xbar, margin);
    ck.record("efficiency verdict matches a fresh brute-force scan",
              fresh.weakly_efficient == eff.at("weakly_efficient").get<bool>());
    if (eff.contains("dominators")) {
        bool all = true;
        for (const json& d : eff.at("dominators")) {
            Point cand = point_from_json(d.at("candidate"), "dominator.candidate");
            Point val = point_from_json(d.at("value"), "dominator.value");
            if (!inst.coneY.contains(sub(cand, val), ConeMode::StrictInterior, margin))
                all = false;
        }
        ck.record("every recorded dominator strictly dominates its candidate", all);
    }
}

void verify_certificate_block(const json& results, const VPInstance& inst,
                              const FeasibleSet& domain, double tol, Checker& ck) {
    MultiplierCertificate cert = certificate_from_json(results.at("certificate"));
    std::size_t xbar = inst.label_index(results.at("xbar").get<std::string>());
    Point ybar = point_from_json(results.at("ybar"), "ybar");
    SetValuedMap shifted = shift_objective(inst, xbar, ybar, tol);
    CertificateVerification fresh =
        verify_certificate(inst, domain, shifted, cert, xbar, ybar, tol);
    const json& reported = results.at("verification");
    ck.record("certificate re-verification agrees",
              fresh.pass == reported.at("pass").get<bool>());
    ck.record("complementary slackness residual agrees",
              std::fabs(fresh.comp_slack - reported.at("comp_slack").get<double>()) <=
                  1e-9);
    ck.record("certificate passes", fresh.pass);
}

}  // namespace

int verify_report(const json& report, std::ostream& out) {
    if (!report.is_object() || !report.contains("command"))
        throw InputError("verify: not a report document");
    if (report.value("schema", "") != kSchemaTag)
        throw InputError("verify: unsupported schema tag");
    std::string command = report.at("command").get<std::string>();
    Checker ck{out};
    out << "verifying report for command '" << command << "'\n";

    if (command == "campaign") {
        // Campaign reports embed seeds, not instances; the deterministic
        // sweep is simply re-run and the counters compared.
        const json& params = report.at("parameters");
        CampaignOptions options;
        options.seed_begin = params.at("seed_begin").get<std::uint64_t>();
        options.seed_end = params.at("seed_end").get<std::uint64_t>();
        options.params.num_labels = params.at("labels").get<int>();
        options.params.p = params.at("p").get<int>();
        options.params.q = params.at("q").get<int>();
        options.params.r = params.at("r").get<int>();
        options.params.values_per_map = params.at("values_per_map").get<int>();
        options.sampling.pair_count = params.at("pairs").get<int>();
        const json& results = report.at("results");
        if (params.at("family") == "general") {
            auto fresh = run_exclusivity_campaign(options);
            ck.record("exclusivity counters agree",
                      fresh.instances == results.at("instances").get<int>() &&
                          fresh.certified == results.at("certified").get<int>() &&
                          fresh.violations == results.at("violations").get<int>());
        } else {
            auto fresh = run_chain_campaign(options);
            ck.record("chain campaign counters agree",
                      fresh.instances == results.at("instances").get<int>() &&
                          fresh.verified == results.at("verified").get<int>() &&
                          fresh.backward_ok == results.at("backward_ok").get<int>());
        }
        out << ck.checked << " checks, " << ck.failed << " failures\n";
        return ck.failed == 0 ? 0 : 1;
    }

    VPInstance inst = parse_instance(report.at("instance"));
    ck.record("instance digest matches",
              instance_digest(inst) == report.at("instance_digest").get<std::string>());
    double tol = param(report, "tol", kDefaultTol);
    double margin = param(report, "margin", kDefaultMargin);
    FeasibleSet domain = feasible_set(inst, tol);
    const json& results = report.at("results");

    if (command == "classify") {
        if (results.contains("checks"))
            verify_convexity_verdicts(results.at("checks"), inst, domain, margin, tol, ck);
        if (results.contains("factors"))
            verify_convexity_verdicts(results.at("factors"), inst, domain, margin, tol, ck);
    } else if (command == "feasible") {
        FeasibleSet fresh = feasible_set(inst, tol);
        std::vector<std::string> labels;
        for (std::size_t i : fresh.members) labels.push_back(inst.labels[i]);
        ck.record("feasible set agrees",
                  json(labels) == results.at("members"));
        bool witnesses_ok = true;
        for (const json& w : results.at("witnesses")) {
            Point z = point_from_json(w.at("z"), "witness.z");
            if (!inst.coneZ.contains(scale(-1.0, z), ConeMode::Closed, margin, tol))
                witnesses_ok = false;
            if (inst.r() > 0) {
                Point wv = point_from_json(w.at("w"), "witness.w");
                if (norm_inf(wv) > tol) witnesses_ok = false;
            }
        }
        ck.record("feasibility witnesses re-verify", witnesses_ok);
    } else if (command == "certify") {
        if (results.contains("efficiency")) {
            std::size_t xbar = inst.label_index(results.at("xbar").get<std::string>());
            verify_efficiency(results.at("efficiency"), inst, domain, xbar, margin, ck);
        }
        if (results.contains("certificate") && results.contains("verification"))
            verify_certificate_block(results, inst, domain, tol, ck);
        if (results.contains("certificate") && !results.contains("verification")) {
            // Alternative-system mode: the deterministic search must reproduce
            // the recorded triple.
            MultiplierCertificate cert = certificate_from_json(results.at("certificate"));
            bool require = report.at("parameters").value("require_xi_nonzero", false);
            auto fresh = find_multipliers(inst, domain, inst.f, require, tol);
            ck.record("multiplier search reproduces the certificate",
                      fresh && fresh->normalization == cert.normalization &&
                          approx_eq(fresh->xi, cert.xi, 1e-12) &&
                          approx_eq(fresh->eta, cert.eta, 1e-12) &&
                          approx_eq(fresh->zeta, cert.zeta, 1e-12));
        }
        if (results.contains("system_i_witness")) {
            const json& w = results.at("system_i_witness");
            std::size_t label = inst.label_index(w.at("label").get<std::string>());
            Point y = point_from_json(w.at("y"), "system_i.y");
            Point z = point_from_json(w.at("z"), "system_i.z");
            std::size_t h_idx = w.at("h_value_index").get<std::size_t>();
            bool ok = inst.coneY.contains(scale(-1.0, y), ConeMode::StrictInterior,
                                          margin) &&
                      inst.coneZ.contains(scale(-1.0, z), ConeMode::Closed, margin,
                                          tol) &&
                      h_idx < inst.h.values[label].size() &&
                      norm_inf(inst.h.values[label][h_idx]) <= tol;
            ck.record("strict primal witness re-verifies", ok);
        }
        if (results.contains("a1"))
            verify_convexity_verdicts(results.at("a1").at("factors"), inst, domain,
                                      margin, tol, ck);
    } else if (command == "cq") {
        if (results.contains("nnamcq")) {
            std::size_t xbar = inst.label_index(results.at("xbar").get<std::string>());
            NnamcqReport fresh = check_nnamcq(inst, domain, xbar, tol);
            ck.record("NNAMCQ decision agrees",
                      fresh.holds == results.at("nnamcq").at("holds").get<bool>());
        }
        if (results.contains("scq")) {
            const json& scq = results.at("scq");
            ck.record("SCQ sample counts consistent",
                      scq.at("satisfied").get<int>() <=
                          scq.at("directions").get<int>());
        }
    } else if (command == "scalarize") {
        Point xi = point_from_json(results.at("xi"), "xi");
        auto fresh = scalarize_and_solve(inst, domain, xi, tol);
        std::vector<std::string> labels;
        for (const auto& e : fresh.argmin) labels.push_back(inst.labels[e.label_index]);
        json reported_labels = json::array();
        for (const json& e : results.at("argmin"))
            reported_labels.push_back(e.at("label"));
        ck.record("argmin set agrees", json(labels) == reported_labels);
        ck.record("best value agrees",
                  std::fabs(fresh.best - results.at("best").get<double>()) <= 1e-9);
    } else if (command == "vector-lagrangian") {
        if (results.contains("certificate") && results.contains("pair")) {
            MultiplierCertificate cert =
                certificate_from_json(results.at("certificate"));
            auto pair = construct_vector_lagrangian(cert, inst.coneY, inst.coneZ, tol);
            json fresh_pair = pair_to_json(pair);
            ck.record("operator pair reconstructs identically",
                      fresh_pair == results.at("pair"));
            if (results.contains("vpst")) {
                std::size_t xbar =
                    inst.label_index(results.at("xbar").get<std::string>());
                auto vpst = vpst_weak_efficiency(inst, domain, pair, xbar, margin, tol);
                ck.record("operator-problem efficiency verdict agrees",
                          vpst.weakly_efficient ==
                              results.at("vpst").at("weakly_efficient").get<bool>());
            }
        }
    } else if (command == "example21" || command == "generate") {
        ck.record("generated instance validates", true);
    } else {
        throw InputError("verify: unknown command '" + command + "' in report");
    }

    out << ck.checked << " checks, " << ck.failed << " failures\n";
    return ck.failed == 0 ? 0 : 1;
}

}  // namespace conecert
