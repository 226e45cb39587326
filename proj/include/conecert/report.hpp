#pragma once

#include <string>

#include "json.hpp"

#include "conecert/campaign.hpp"
#include "conecert/io.hpp"
#include "conecert/lagrangian.hpp"

namespace conecert {

// Reports embed, next to each verdict, a descriptor of the membership set the
// verdict talks about, so a verifier can rebuild the oracle from the embedded
// instance alone and recheck every witness.
struct SetDescriptor {
    SetKind kind = SetKind::ClosedSum;
    std::string block;  // "f" | "g" | "h"
    std::optional<std::string> shift_xbar;
    std::optional<Point> shift_ybar;
    bool shift_full_set = false;
};

const char* set_kind_name(SetKind kind);
SetKind set_kind_from_name(const std::string& name);

nlohmann::json set_descriptor_to_json(const SetDescriptor& d);
SetDescriptor set_descriptor_from_json(const nlohmann::json& j);

SetSpec build_set_spec(const VPInstance& instance, const FeasibleSet& domain,
                       const SetDescriptor& descriptor, double margin, double tol);

nlohmann::json verdict_to_json(const ConvexityVerdict& verdict,
                               const SetDescriptor& descriptor);
nlohmann::json certificate_to_json(const MultiplierCertificate& cert);
MultiplierCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json verification_to_json(const CertificateVerification& v);
nlohmann::json efficiency_to_json(const EfficiencyVerdict& verdict,
                                  const VPInstance& instance);
nlohmann::json condition_to_json(const ConditionReport& report,
                                 const SetDescriptor& fdesc, const SetDescriptor& gdesc,
                                 const SetDescriptor& hdesc);
nlohmann::json pair_to_json(const VectorLagrangianPair& pair);
nlohmann::json nnamcq_to_json(const NnamcqReport& report);
nlohmann::json scq_to_json(const ScqReport& report);
nlohmann::json scalarization_to_json(const ScalarizationResult& result,
                                     const VPInstance& instance);

// Common envelope; every command's report carries the same header fields.
nlohmann::json report_envelope(const std::string& command, const VPInstance& instance,
                               const nlohmann::json& parameters);

// Plain-text rendering of a report: the same JSON walked into indented
// key/value lines, so both formats carry identical facts by construction.
void render_text(const nlohmann::json& doc, std::ostream& out);

}  // namespace conecert
