#pragma once

#include <iosfwd>

#include "json.hpp"

namespace conecert {

// Recomputes every witness and certificate embedded in a report from the
// report alone and prints one line per check. Returns 0 when everything
// agrees, 1 otherwise.
int verify_report(const nlohmann::json& report, std::ostream& out);

}  // namespace conecert
