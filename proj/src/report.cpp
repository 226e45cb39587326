#include "conecert/report.hpp"

#include <ostream>

namespace conecert {

using nlohmann::json;

const char* set_kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::ClosedSum: return "closed-sum";
        case SetKind::InteriorSum: return "interior-sum";
        case SetKind::ScaledUnion: return "scaled-union";
        case SetKind::ScaledRays: return "scaled-rays";
        case SetKind::PointSet: return "point-set";
    }
    return "?";
}

SetKind set_kind_from_name(const std::string& name) {
    if (name == "closed-sum") return SetKind::ClosedSum;
    if (name == "interior-sum") return SetKind::InteriorSum;
    if (name == "scaled-union") return SetKind::ScaledUnion;
    if (name == "scaled-rays") return SetKind::ScaledRays;
    if (name == "point-set") return SetKind::PointSet;
    throw InputError("unknown set kind '" + name + "'");
}

json set_descriptor_to_json(const SetDescriptor& d) {
    json j;
    j["kind"] = set_kind_name(d.kind);
    j["block"] = d.block;
    if (d.shift_xbar) j["shift_xbar"] = *d.shift_xbar;
    if (d.shift_ybar) j["shift_ybar"] = point_to_json(*d.shift_ybar);
    if (d.shift_full_set) j["shift_full_set"] = true;
    return j;
}

SetDescriptor set_descriptor_from_json(const json& j) {
    SetDescriptor d;
    d.kind = set_kind_from_name(j.at("kind").get<std::string>());
    d.block = j.at("block").get<std::string>();
    if (j.contains("shift_xbar")) d.shift_xbar = j.at("shift_xbar").get<std::string>();
    if (j.contains("shift_ybar"))
        d.shift_ybar = point_from_json(j.at("shift_ybar"), "shift_ybar");
    d.shift_full_set = j.value("shift_full_set", false);
    return d;
}

SetSpec build_set_spec(const VPInstance& instance, const FeasibleSet& domain,
                       const SetDescriptor& descriptor, double margin, double tol) {
    SetSpec spec;
    spec.kind = descriptor.kind;
    spec.margin = margin;
    spec.tol = tol;
    if (descriptor.block == "f") {
        if (descriptor.shift_xbar) {
            std::size_t xbar = instance.label_index(*descriptor.shift_xbar);
            if (descriptor.shift_full_set) {
                spec.values = shift_objective_full_set(instance, xbar, tol)
                                  .pooled(domain.members);
            } else {
                if (!descriptor.shift_ybar)
                    throw InputError("set descriptor: shifted block needs shift_ybar");
                spec.values = shift_objective(instance, xbar, *descriptor.shift_ybar, tol)
                                  .pooled(domain.members);
            }
        } else {
            spec.values = instance.f.pooled(domain.members);
        }
        spec.cone = instance.coneY;
    } else if (descriptor.block == "g") {
        spec.values = instance.g.pooled(domain.members);
        spec.cone = instance.coneZ;
    } else if (descriptor.block == "h") {
        spec.values = instance.h.pooled(domain.members);
    } else {
        throw InputError("set descriptor: unknown block '" + descriptor.block + "'");
    }
    return spec;
}

json verdict_to_json(const ConvexityVerdict& verdict, const SetDescriptor& descriptor) {
    json j;
    j["status"] = to_string(verdict.status);
    j["pairs_checked"] = verdict.pairs_checked;
    j["lambda_grid"] = verdict.sampling.lambda_grid;
    j["seed"] = verdict.sampling.seed;
    j["set"] = set_descriptor_to_json(descriptor);
    if (verdict.witness) {
        j["witness"] = {{"p1", point_to_json(verdict.witness->p1)},
                        {"p2", point_to_json(verdict.witness->p2)},
                        {"lambda", verdict.witness->lambda},
                        {"midpoint", point_to_json(verdict.witness->midpoint)}};
    }
    return j;
}

json certificate_to_json(const MultiplierCertificate& cert) {
    json j;
    j["xi"] = point_to_json(cert.xi);
    j["eta"] = point_to_json(cert.eta);
    j["zeta"] = point_to_json(cert.zeta);
    j["normalization"] = cert.normalization;
    if (std::isfinite(cert.min_slack)) j["min_slack"] = cert.min_slack;
    j["xi_nonzero"] = cert.xi_nonzero;
    j["vacuous_domain"] = cert.vacuous_domain;
    return j;
}

MultiplierCertificate certificate_from_json(const json& j) {
    MultiplierCertificate cert;
    cert.xi = point_from_json(j.at("xi"), "certificate.xi");
    cert.eta = point_from_json(j.at("eta"), "certificate.eta");
    cert.zeta = point_from_json(j.at("zeta"), "certificate.zeta");
    cert.normalization = j.at("normalization").get<std::string>();
    cert.min_slack = j.contains("min_slack")
                         ? j.at("min_slack").get<double>()
                         : std::numeric_limits<double>::infinity();
    cert.xi_nonzero = j.at("xi_nonzero").get<bool>();
    cert.vacuous_domain = j.at("vacuous_domain").get<bool>();
    return cert;
}

json verification_to_json(const CertificateVerification& v) {
    json j;
    j["dual_residual"] = v.dual_residual;
    j["min_slack"] = v.min_slack;
    j["normalization_residual"] = v.normalization_residual;
    j["comp_slack"] = v.comp_slack;
    j["lower_bound_gap"] = v.lower_bound_gap;
    j["dual_ok"] = v.dual_ok;
    j["slack_ok"] = v.slack_ok;
    j["normalization_ok"] = v.normalization_ok;
    j["comp_slack_ok"] = v.comp_slack_ok;
    j["lower_bound_ok"] = v.lower_bound_ok;
    j["pass"] = v.pass;
    return j;
}

json efficiency_to_json(const EfficiencyVerdict& verdict, const VPInstance& instance) {
    json j;
    j["weakly_efficient"] = verdict.weakly_efficient;
    if (verdict.ybar) j["ybar"] = point_to_json(*verdict.ybar);
    if (!verdict.dominators.empty()) {
        json doms = json::array();
        for (const DominatorEntry& d : verdict.dominators)
            doms.push_back({{"candidate", point_to_json(d.ybar_candidate)},
                            {"label", instance.labels[d.label_index]},
                            {"value", point_to_json(d.value)}});
        j["dominators"] = std::move(doms);
    }
    return j;
}

json condition_to_json(const ConditionReport& report, const SetDescriptor& fdesc,
                       const SetDescriptor& gdesc, const SetDescriptor& hdesc) {
    json factors;
    factors["objective"] = verdict_to_json(report.objective_factor, fdesc);
    factors["constraint"] = verdict_to_json(report.constraint_factor, gdesc);
    factors["equality"] = verdict_to_json(report.equality_factor, hdesc);
    return json{{"factors", std::move(factors)}, {"refuted", report.refuted}};
}

json pair_to_json(const VectorLagrangianPair& pair) {
    json S = json::array(), T = json::array();
    for (const Point& row : pair.S) S.push_back(point_to_json(row));
    for (const Point& row : pair.T) T.push_back(point_to_json(row));
    return json{{"y0", point_to_json(pair.y0)}, {"S", std::move(S)}, {"T", std::move(T)}};
}

json nnamcq_to_json(const NnamcqReport& report) {
    json j;
    j["holds"] = report.holds;
    if (report.violation) {
        j["violation"] = {{"eta", point_to_json(report.violation->first)},
                          {"zeta", point_to_json(report.violation->second)},
                          {"normalization", report.normalization}};
    }
    return j;
}

json scq_to_json(const ScqReport& report) {
    json samples = json::array();
    for (const ScqDirection& d : report.directions) {
        json s;
        s["eta"] = point_to_json(d.eta);
        s["zeta"] = point_to_json(d.zeta);
        s["satisfied"] = d.satisfied;
        if (d.label_index) s["common_value"] = d.common_value;
        samples.push_back(std::move(s));
    }
    return json{{"directions", static_cast<int>(report.directions.size())},
                {"satisfied", report.satisfied_count},
                {"violated", report.violated},
                {"structural_zero_h", report.structural_zero_h},
                {"samples", std::move(samples)}};
}

json scalarization_to_json(const ScalarizationResult& result,
                           const VPInstance& instance) {
    json argmin = json::array();
    for (const ScalarizationEntry& e : result.argmin)
        argmin.push_back({{"label", instance.labels[e.label_index]},
                          {"value", e.value},
                          {"attaining_value_indices", e.attaining_values}});
    return json{{"best", result.best}, {"argmin", std::move(argmin)}};
}

json report_envelope(const std::string& command, const VPInstance& instance,
                     const json& parameters) {
    json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "report";
    doc["command"] = command;
    doc["instance_digest"] = instance_digest(instance);
    doc["instance"] = serialize_instance(instance);
    doc["parameters"] = parameters;
    return doc;
}

namespace {

void render_value(const json& value, std::ostream& out, int indent) {
    std::string pad(2 * indent, ' ');
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (key == "instance") {
                out << pad << "instance: " << sub.dump() << "\n";
                continue;
            }
            if (sub.is_object() || (sub.is_array() && !sub.empty() &&
                                    (sub[0].is_object() || sub[0].is_array()))) {
                out << pad << key << ":\n";
                render_value(sub, out, indent + 1);
            } else {
                out << pad << key << ": " << sub.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const json& sub : value) {
            if (sub.is_object() || sub.is_array()) {
                out << pad << "-\n";
                render_value(sub, out, indent + 1);
            } else {
                out << pad << "- " << sub.dump() << "\n";
            }
        }
    } else {
        out << pad << value.dump() << "\n";
    }
}

}  // namespace

void render_text(const json& doc, std::ostream& out) { render_value(doc, out, 0); }

}  // namespace conecert
