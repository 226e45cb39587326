#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "conecert/report.hpp"
#include "conecert/verify.hpp"

using namespace conecert;
using nlohmann::json;

namespace {

// Exit codes: 0 claim verified / certificate found; 1 claim refuted (witness
// in the report); 2 inconclusive (sampling semidecision); 3 input error;
// 4 internal failure.
constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternal = 4;

struct GlobalOptions {
    double tol = kDefaultTol;
    double margin = kDefaultMargin;
    int pairs = 10000;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string lambda_grid = "0.25,0.5,0.75";
    std::string report_out;

    SamplingParams sampling() const {
        SamplingParams s;
        s.pair_count = pairs;
        s.seed = seed;
        s.lambda_grid.clear();
        std::stringstream ss(lambda_grid);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) s.lambda_grid.push_back(std::stod(item));
        if (s.lambda_grid.empty())
            throw InputError("--lambda-grid: no values parsed");
        for (double l : s.lambda_grid)
            if (!(l > 0.0 && l < 1.0))
                throw InputError("--lambda-grid: values must lie in (0, 1)");
        return s;
    }

    json parameter_block() const {
        return json{{"tol", tol},
                    {"margin", margin},
                    {"pairs", pairs},
                    {"seed", seed},
                    {"lambda_grid", sampling().lambda_grid}};
    }
};

Point parse_point_arg(const std::string& text, const std::string& what) {
    Point out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    if (out.empty()) throw InputError(what + ": no coordinates parsed");
    require_finite(out, what);
    return out;
}

void emit(json report, const GlobalOptions& g,
          std::chrono::steady_clock::time_point start) {
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report["wall_clock_ms"] = elapsed;
    if (!g.report_out.empty()) write_json_file(g.report_out, report);
    if (g.format == "text")
        render_text(report, std::cout);
    else
        std::cout << report.dump(2) << "\n";
}

SetDescriptor descriptor_for(SetKind kind, const std::string& block) {
    SetDescriptor d;
    d.kind = kind;
    d.block = block;
    return d;
}

SetDescriptor shifted_descriptor(SetKind kind, const std::string& xbar,
                                 const Point& ybar) {
    SetDescriptor d;
    d.kind = kind;
    d.block = "f";
    d.shift_xbar = xbar;
    d.shift_ybar = ybar;
    return d;
}

json necessity_to_json(const NecessityReport& report, const VPInstance& inst,
                       const std::string& xbar_label, bool b1_mode = false) {
    json j;
    j["xbar"] = xbar_label;
    j["efficiency"] = efficiency_to_json(report.efficiency, inst);
    j["a2"] = {{"holds", report.a2.holds}, {"explanation", report.a2.explanation}};
    j["status"] = to_string(report.status);
    if (report.efficiency.weakly_efficient) j["ybar"] = point_to_json(report.ybar);
    if (report.a1) {
        SetKind fk = b1_mode ? SetKind::InteriorSum : SetKind::ScaledUnion;
        SetKind hk = b1_mode ? SetKind::PointSet : SetKind::ScaledRays;
        j["a1"] = condition_to_json(*report.a1,
                                    shifted_descriptor(fk, xbar_label, report.ybar),
                                    descriptor_for(fk == SetKind::InteriorSum
                                                       ? SetKind::InteriorSum
                                                       : SetKind::ScaledUnion,
                                                   "g"),
                                    descriptor_for(hk, "h"));
    }
    if (report.nnamcq_holds) j["nnamcq"] = *report.nnamcq_holds;
    if (report.certificate) j["certificate"] = certificate_to_json(*report.certificate);
    if (report.verification) j["verification"] = verification_to_json(*report.verification);
    return j;
}

int run_classify(const std::string& path, const std::string& check,
                 const std::string& xbar, int ybar_index, bool full_set_shift,
                 const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    VPInstance inst = parse_instance_file(path);
    FeasibleSet domain = feasible_set(inst, g.tol);
    json params = g.parameter_block();
    params["check"] = check;
    json report = report_envelope("classify", inst, params);
    json results;

    int exit_code = kExitInconclusive;
    if (check == "a2") {
        auto a2 = check_condition_a2(inst);
        results["a2"] = {{"holds", a2.holds}, {"explanation", a2.explanation}};
        exit_code = a2.holds ? kExitVerified : kExitRefuted;
    } else if (check == "a1" || check == "b1") {
        if (xbar.empty()) throw InputError("--xbar is required for condition checks");
        std::size_t xi = inst.label_index(xbar);
        const auto& values = inst.f.values[xi];
        if (ybar_index < 0 || static_cast<std::size_t>(ybar_index) >= values.size())
            throw InputError("--ybar-index out of range for f(xbar)");
        Point ybar = values[ybar_index];
        ConditionReport cond =
            check == "a1"
                ? check_condition_a1(inst, domain, xi, ybar, g.sampling(), g.margin,
                                     g.tol, full_set_shift)
                : check_condition_b1(inst, domain, xi, ybar, g.sampling(), g.margin,
                                     g.tol, full_set_shift);
        SetKind fk = check == "a1" ? SetKind::ScaledUnion : SetKind::InteriorSum;
        SetKind hk = check == "a1" ? SetKind::ScaledRays : SetKind::PointSet;
        SetDescriptor fdesc = shifted_descriptor(fk, xbar, ybar);
        fdesc.shift_full_set = full_set_shift;
        results["factors"] =
            condition_to_json(cond, fdesc, descriptor_for(fk, "g"),
                              descriptor_for(hk, "h"))["factors"];
        results["refuted"] = cond.refuted;
        results["xbar"] = xbar;
        results["ybar"] = point_to_json(ybar);
        exit_code = cond.refuted ? kExitRefuted : kExitInconclusive;
    } else {
        auto pooled = inst.f.pooled(domain.members);
        ClassificationReport cls =
            classify_values(pooled, inst.coneY, g.sampling(), g.margin, g.tol);
        json checks;
        checks["convexlike"] =
            verdict_to_json(cls.convexlike, descriptor_for(SetKind::ClosedSum, "f"));
        checks["subconvexlike"] =
            verdict_to_json(cls.subconvexlike, descriptor_for(SetKind::InteriorSum, "f"));
        checks["presubconvexlike"] =
            verdict_to_json(cls.presubconvexlike, descriptor_for(SetKind::ScaledUnion, "f"));
        results["chain_consistent"] = cls.chain_consistent;

        auto status_of = [&](const std::string& name) {
            return checks.at(name).at("status").get<std::string>();
        };
        std::vector<std::string> selected;
        if (check == "all")
            selected = {"convexlike", "subconvexlike", "presubconvexlike"};
        else
            selected = {check};
        json kept;
        bool any_refuted = false;
        for (const std::string& name : selected) {
            kept[name] = checks.at(name);
            if (status_of(name) == "NonConvex") any_refuted = true;
        }
        results["checks"] = std::move(kept);
        exit_code = any_refuted ? kExitRefuted : kExitInconclusive;
    }
    report["results"] = std::move(results);
    emit(std::move(report), g, start);
    return exit_code;
}

int run_feasible(const std::string& path, const GlobalOptions& g,
                 std::chrono::steady_clock::time_point start) {
    VPInstance inst = parse_instance_file(path);
    FeasibleSet domain = feasible_set(inst, g.tol);
    json report = report_envelope("feasible", inst, g.parameter_block());
    json members = json::array(), witnesses = json::array();
    for (std::size_t k = 0; k < domain.members.size(); ++k) {
        std::size_t i = domain.members[k];
        members.push_back(inst.labels[i]);
        json w;
        w["label"] = inst.labels[i];
        w["g_value_index"] = domain.witnesses[k].g_value_index;
        w["z"] = point_to_json(inst.g.values[i][domain.witnesses[k].g_value_index]);
        if (inst.r() > 0) {
            w["h_value_index"] = domain.witnesses[k].h_value_index;
            w["w"] = point_to_json(inst.h.values[i][domain.witnesses[k].h_value_index]);
        }
        witnesses.push_back(std::move(w));
    }
    report["results"] = {{"members", std::move(members)},
                         {"witnesses", std::move(witnesses)},
                         {"empty", domain.members.empty()}};
    emit(std::move(report), g, start);
    return kExitVerified;
}

int run_certify(const std::string& path, const std::string& xbar,
                bool require_xi_nonzero, bool with_scq, int scq_samples,
                const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    VPInstance inst = parse_instance_file(path);
    FeasibleSet domain = feasible_set(inst, g.tol);
    json params = g.parameter_block();
    params["require_xi_nonzero"] = require_xi_nonzero;
    json report = report_envelope("certify", inst, params);
    json results;
    int exit_code;

    if (xbar.empty()) {
        // Alternative-system mode over the raw objective: find a multiplier
        // triple or prove none exists; cross-check exclusivity.
        auto cert = find_multipliers(inst, domain, inst.f, require_xi_nonzero, g.tol);
        auto system_i = solve_system_i(inst, g.margin, g.tol);
        if (cert) results["certificate"] = certificate_to_json(*cert);
        if (system_i) {
            results["system_i_witness"] = {
                {"label", inst.labels[system_i->label_index]},
                {"y", point_to_json(
                         inst.f.values[system_i->label_index][system_i->f_value_index])},
                {"z", point_to_json(
                         inst.g.values[system_i->label_index][system_i->g_value_index])},
                {"h_value_index", system_i->h_value_index}};
        }
        bool exclusive = !(cert && !cert->vacuous_domain && cert->xi_nonzero &&
                           system_i.has_value());
        results["exclusivity_respected"] = exclusive;
        exit_code = cert ? kExitVerified : kExitRefuted;
        if (!exclusive) exit_code = kExitInternal;
    } else {
        std::size_t xi = inst.label_index(xbar);
        std::optional<bool> override_xi;
        if (require_xi_nonzero) override_xi = true;
        NecessityReport necessity = necessity_pipeline(inst, xi, g.sampling(), g.margin,
                                                        g.tol, override_xi);
        results = necessity_to_json(necessity, inst, xbar);
        if (necessity.certificate && necessity.efficiency.weakly_efficient) {
            auto suff = sufficiency_check(inst, xi, *necessity.certificate,
                                              necessity.ybar, g.margin, g.tol);
            json sj;
            sj["status"] = to_string(suff.status);
            sj["cq_holds"] = suff.cq_holds;
            if (suff.brute_force_agrees) sj["brute_force_agrees"] = *suff.brute_force_agrees;
            results["sufficiency"] = std::move(sj);
        }
        if (with_scq)
            results["scq"] = scq_to_json(check_scq(inst, domain, scq_samples, g.seed, g.tol));
        switch (necessity.status) {
            case NecessityStatus::CertificateFound:
                exit_code = necessity.verification && necessity.verification->pass
                                ? kExitVerified
                                : kExitInternal;
                break;
            case NecessityStatus::NotWeaklyEfficient:
                exit_code = kExitRefuted;
                break;
            default:
                exit_code = kExitInconclusive;
                break;
        }
    }
    report["results"] = std::move(results);
    emit(std::move(report), g, start);
    return exit_code;
}

int run_cq(const std::string& path, const std::string& xbar, bool nnamcq, bool scq,
           int samples, const GlobalOptions& g,
           std::chrono::steady_clock::time_point start) {
    if (nnamcq == scq)
        throw InputError("cq: choose exactly one of --nnamcq / --scq");
    VPInstance inst = parse_instance_file(path);
    FeasibleSet domain = feasible_set(inst, g.tol);
    std::size_t xi = inst.label_index(xbar);
    json params = g.parameter_block();
    params["samples"] = samples;
    json report = report_envelope("cq", inst, params);
    json results;
    results["xbar"] = xbar;
    int exit_code;
    if (nnamcq) {
        NnamcqReport r = check_nnamcq(inst, domain, xi, g.tol);
        results["nnamcq"] = nnamcq_to_json(r);
        exit_code = r.holds ? kExitVerified : kExitRefuted;
    } else {
        ScqReport r = check_scq(inst, domain, samples, g.seed, g.tol);
        results["scq"] = scq_to_json(r);
        exit_code = r.violated ? kExitRefuted : kExitInconclusive;
    }
    report["results"] = std::move(results);
    emit(std::move(report), g, start);
    return exit_code;
}

int run_scalarize(const std::string& path, const std::string& xi_text,
                  const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    VPInstance inst = parse_instance_file(path);
    FeasibleSet domain = feasible_set(inst, g.tol);
    Point xi = parse_point_arg(xi_text, "--xi");
    auto result = scalarize_and_solve(inst, domain, xi, g.tol);
    json report = report_envelope("scalarize", inst, g.parameter_block());
    json results = scalarization_to_json(result, inst);
    results["xi"] = point_to_json(xi);
    report["results"] = std::move(results);
    emit(std::move(report), g, start);
    return kExitVerified;
}

int run_vector_lagrangian(const std::string& path, const std::string& xbar,
                          const std::string& cq, int scq_samples,
                          const GlobalOptions& g,
                          std::chrono::steady_clock::time_point start) {
    VPInstance inst = parse_instance_file(path);
    std::size_t xi = inst.label_index(xbar);
    CqMode mode = cq == "scq" ? CqMode::Scq : CqMode::Nnamcq;
    RoundtripReport rt = operator_roundtrip(inst, xi, g.sampling(), mode, scq_samples,
                                             g.margin, g.tol);
    json params = g.parameter_block();
    params["cq"] = cq;
    json report = report_envelope("vector-lagrangian", inst, params);
    json results = necessity_to_json(rt.necessity, inst, xbar);
    results["cq_mode"] = cq;
    results["cq_holds"] = rt.cq_holds;
    if (rt.scq) results["scq"] = scq_to_json(*rt.scq);
    results["forward_status"] = rt.forward_status;
    results["forward_pass"] = rt.forward_pass;
    if (rt.pair) results["pair"] = pair_to_json(*rt.pair);
    if (rt.vpst) results["vpst"] = efficiency_to_json(*rt.vpst, inst);
    if (rt.backward_ok) results["backward_ok"] = *rt.backward_ok;
    report["results"] = std::move(results);
    emit(std::move(report), g, start);

    if (rt.forward_pass && (!rt.backward_ok || *rt.backward_ok)) return kExitVerified;
    if (rt.forward_status == "hypothesis unmet" ||
        rt.forward_status == "no usable certificate")
        return kExitInconclusive;
    return kExitRefuted;
}

int run_example21(double radial_step, double angular_step, double radius_max,
                  const std::string& out_path, const GlobalOptions& g,
                  std::chrono::steady_clock::time_point start) {
    VPInstance inst = generate_example_2_1(radial_step, angular_step, radius_max);
    if (!out_path.empty()) write_json_file(out_path, serialize_instance(inst));
    json params = g.parameter_block();
    params["radial_step"] = radial_step;
    params["angular_step"] = angular_step;
    params["radius_max"] = radius_max;
    json report = report_envelope("example21", inst, params);
    report["results"] = {{"labels", inst.labels.size()},
                         {"truncated_at_radius", radius_max},
                         {"instance_file", out_path}};
    emit(std::move(report), g, start);
    return kExitVerified;
}

int run_generate(std::uint64_t seed, const std::string& family, int labels, int p,
                 int q, int r, int values, const std::string& out_path,
                 const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    RandomInstanceParams params;
    params.num_labels = labels;
    params.p = p;
    params.q = q;
    params.r = r;
    params.values_per_map = values;
    params.family = family == "chain" ? InstanceFamily::Chain : InstanceFamily::General;
    VPInstance inst = generate_random_instance(seed, params);
    if (!out_path.empty()) write_json_file(out_path, serialize_instance(inst));
    json pj = g.parameter_block();
    pj["generator_seed"] = seed;
    pj["family"] = family;
    json report = report_envelope("generate", inst, pj);
    report["results"] = {{"labels", inst.labels.size()}, {"instance_file", out_path}};
    emit(std::move(report), g, start);
    return kExitVerified;
}

int run_campaign(const std::string& seeds, const std::string& family, int labels,
                 int p, int q, int r, int values, int spot_draws,
                 const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    auto sep = seeds.find("..");
    if (sep == std::string::npos)
        throw InputError("--seeds: expected a range like 1..200");
    CampaignOptions options;
    options.seed_begin = std::stoull(seeds.substr(0, sep));
    options.seed_end = std::stoull(seeds.substr(sep + 2));
    if (options.seed_end < options.seed_begin)
        throw InputError("--seeds: end before begin");
    options.params.num_labels = labels;
    options.params.p = p;
    options.params.q = q;
    options.params.r = r;
    options.params.values_per_map = values;
    options.sampling = g.sampling();
    options.margin = g.margin;
    options.tol = g.tol;

    json params = g.parameter_block();
    params["seed_begin"] = options.seed_begin;
    params["seed_end"] = options.seed_end;
    params["family"] = family;
    params["labels"] = labels;
    params["p"] = p;
    params["q"] = q;
    params["r"] = r;
    params["values_per_map"] = values;

    json report;
    report["schema"] = kSchemaTag;
    report["kind"] = "report";
    report["command"] = "campaign";
    report["parameters"] = params;

    json results;
    bool clean;
    if (family == "general") {
        auto c = run_exclusivity_campaign(options);
        results = {{"instances", c.instances},
                   {"certified", c.certified},
                   {"violations", c.violations},
                   {"violating_seeds", c.violating_seeds}};
        clean = c.violations == 0;
    } else {
        auto c = run_chain_campaign(options);
        results = {{"instances", c.instances},
                   {"weakly_efficient", c.weakly_efficient},
                   {"certified_n1", c.certified_n1},
                   {"verified", c.verified},
                   {"nnamcq_verified", c.nnamcq_verified},
                   {"sufficiency_confirmed", c.sufficiency_confirmed},
                   {"scalarization_ok", c.scalarization_ok},
                   {"pairs_ok", c.pairs_ok},
                   {"vpst_efficient", c.vpst_efficient},
                   {"backward_ok", c.backward_ok},
                   {"failing_seeds", c.failing_seeds}};
        clean = c.failing_seeds.empty();
        if (spot_draws > 0) {
            auto spot = run_backward_spot_campaign(g.seed + 1, spot_draws, g.margin, g.tol);
            results["backward_spot"] = {{"attempts", spot.attempts},
                                        {"draws", spot.draws},
                                        {"confirmed", spot.confirmed},
                                        {"failing_seeds", spot.failing_seeds}};
            clean = clean && spot.confirmed == spot.draws;
        }
    }
    report["results"] = std::move(results);
    emit(std::move(report), g, start);
    return clean ? kExitVerified : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conecert: certify-and-verify toolkit for finite set-valued "
                 "vector optimization instances"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tol", g.tol, "numeric tolerance")->capture_default_str();
    app.add_option("--margin", g.margin, "strict-interior margin")->capture_default_str();
    app.add_option("--pairs", g.pairs, "sampled pairs per convexity check")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "sampling seed")->capture_default_str();
    app.add_option("--format", g.format, "output format (json|text)")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--lambda-grid", g.lambda_grid, "comma-separated lambdas in (0,1)")
        ->capture_default_str();
    app.add_option("--report-out", g.report_out, "also write the JSON report here");

    std::string instance_path, xbar, ybar_text, check = "all", xi_text;
    int ybar_index = 0, scq_samples = 64;
    bool require_xi = false, with_scq = false, nnamcq = false, scq_flag = false;
    bool full_set_shift = false;

    auto* classify = app.add_subcommand("classify", "generalized convexity checks");
    classify->add_option("-i,--instance", instance_path, "instance file")->required();
    classify->add_option("--check", check,
                         "all|convexlike|subconvexlike|presubconvexlike|a1|a2|b1")
        ->check(CLI::IsMember({"all", "convexlike", "subconvexlike", "presubconvexlike",
                               "a1", "a2", "b1"}));
    classify->add_option("--xbar", xbar, "shift label for a1/b1");
    classify->add_option("--ybar-index", ybar_index, "index into f(xbar)");
    classify->add_flag("--full-set-shift", full_set_shift,
                       "shift by all of f(xbar) instead of one value");

    auto* feasible = app.add_subcommand("feasible", "compute the feasible set");
    feasible->add_option("-i,--instance", instance_path, "instance file")->required();

    auto* certify = app.add_subcommand(
        "certify", "multiplier certificates (alternative system / full pipeline)");
    certify->add_option("-i,--instance", instance_path, "instance file")->required();
    certify->add_option("--xbar", xbar, "candidate label (enables the pipeline)");
    certify->add_flag("--require-xi-nonzero", require_xi, "only the xi normalization");
    certify->add_flag("--scq", with_scq, "include the sampled Slater-type check");
    certify->add_option("--scq-samples", scq_samples, "direction samples");

    auto* cq = app.add_subcommand("cq", "constraint qualification checks");
    cq->add_option("-i,--instance", instance_path, "instance file")->required();
    cq->add_option("--xbar", xbar, "candidate label")->required();
    cq->add_flag("--nnamcq", nnamcq, "exact no-abnormal-multiplier check");
    cq->add_flag("--scq", scq_flag, "sampled Slater-type check");
    cq->add_option("--samples", scq_samples, "direction samples");

    auto* scalarize = app.add_subcommand("scalarize", "weighted scalar problem");
    scalarize->add_option("-i,--instance", instance_path, "instance file")->required();
    scalarize->add_option("--xi", xi_text, "dual functional, comma-separated")
        ->required();

    std::string cq_mode = "nnamcq";
    auto* vl = app.add_subcommand("vector-lagrangian",
                                  "rank-one operator multipliers and roundtrip");
    vl->add_option("-i,--instance", instance_path, "instance file")->required();
    vl->add_option("--xbar", xbar, "candidate label")->required();
    vl->add_option("--cq", cq_mode, "nnamcq|scq")
        ->check(CLI::IsMember({"nnamcq", "scq"}));
    vl->add_option("--scq-samples", scq_samples, "direction samples");

    double radial_step = 0.25, angular_step = 3.14159265358979323846 / 64.0,
           radius_max = 3.0;
    std::string out_path;
    auto* ex21 = app.add_subcommand("example21", "generate the quarter-ring instance");
    ex21->add_option("--radial-step", radial_step, "grid step")->capture_default_str();
    ex21->add_option("--angular-step", angular_step, "arc step")->capture_default_str();
    ex21->add_option("--radius-max", radius_max, "truncation radius")
        ->capture_default_str();
    ex21->add_option("-o,--out", out_path, "instance file to write");

    std::uint64_t gen_seed = 1;
    std::string family = "general";
    int labels = 8, dim_p = 2, dim_q = 1, dim_r = 1, values = 2, spot_draws = 0;
    auto* generate = app.add_subcommand("generate", "seeded random instance");
    generate->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    generate->add_option("--family", family, "general|chain")
        ->check(CLI::IsMember({"general", "chain"}));
    generate->add_option("--labels", labels, "ground-set size")->capture_default_str();
    generate->add_option("--dim-p", dim_p, "objective dimension")->capture_default_str();
    generate->add_option("--dim-q", dim_q, "inequality dimension")->capture_default_str();
    generate->add_option("--dim-r", dim_r, "equality dimension (0 = none)")
        ->capture_default_str();
    generate->add_option("--values", values, "values per map")->capture_default_str();
    generate->add_option("-o,--out", out_path, "instance file to write");

    std::string seeds = "1..100";
    auto* campaign = app.add_subcommand("campaign", "seeded property campaigns");
    campaign->add_option("--seeds", seeds, "seed range a..b")->capture_default_str();
    campaign->add_option("--family", family, "general|chain")
        ->check(CLI::IsMember({"general", "chain"}));
    campaign->add_option("--labels", labels, "ground-set size")->capture_default_str();
    campaign->add_option("--dim-p", dim_p, "objective dimension")->capture_default_str();
    campaign->add_option("--dim-q", dim_q, "inequality dimension")->capture_default_str();
    campaign->add_option("--dim-r", dim_r, "equality dimension")->capture_default_str();
    campaign->add_option("--values", values, "values per map")->capture_default_str();
    campaign->add_option("--spot-draws", spot_draws, "backward spot-check draws")
        ->capture_default_str();

    std::string report_path;
    auto* verify = app.add_subcommand("verify", "recompute a report's witnesses");
    verify->add_option("--report", report_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(classify))
            return run_classify(instance_path, check, xbar, ybar_index, full_set_shift,
                                g, start);
        if (app.got_subcommand(feasible)) return run_feasible(instance_path, g, start);
        if (app.got_subcommand(certify))
            return run_certify(instance_path, xbar, require_xi, with_scq, scq_samples, g,
                               start);
        if (app.got_subcommand(cq))
            return run_cq(instance_path, xbar, nnamcq, scq_flag, scq_samples, g, start);
        if (app.got_subcommand(scalarize))
            return run_scalarize(instance_path, xi_text, g, start);
        if (app.got_subcommand(vl))
            return run_vector_lagrangian(instance_path, xbar, cq_mode, scq_samples, g,
                                         start);
        if (app.got_subcommand(ex21))
            return run_example21(radial_step, angular_step, radius_max, out_path, g,
                                 start);
        if (app.got_subcommand(generate))
            return run_generate(gen_seed, family, labels, dim_p, dim_q, dim_r, values,
                                out_path, g, start);
        if (app.got_subcommand(campaign))
            return run_campaign(seeds, family, labels, dim_p, dim_q, dim_r, values,
                                spot_draws, g, start);
        if (app.got_subcommand(verify))
            return verify_report(read_json_file(report_path), std::cout);
        throw InputError("no subcommand selected");
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
