#pragma once

#include <optional>
#include <vector>

#include "conecert/vec.hpp"

namespace conecert {

enum class Relation { GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };

struct LinearRow {
    Point coeffs;
    Relation rel = Relation::GreaterEqual;
    double rhs = 0.0;
};

struct Objective {
    Point coeffs;
    Sense sense = Sense::Minimize;
};

// Dense system over free (sign-unrestricted) variables. Variable bounds,
// when needed, are expressed as ordinary rows.
struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearRow> rows;
    std::optional<Objective> objective;

    LinearRow& add_row(Point coeffs, Relation rel, double rhs);
    void validate() const;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct FeasibilityOutcome {
    LpStatus status = LpStatus::Infeasible;
    Point point;                  // Feasible: a point with max violation <= tol
    Point farkas;                 // Infeasible: one multiplier per row
    double objective_value = 0.0; // Feasible with objective only
};

// Two-phase dense simplex with Bland's rule (lowest-index entering variable,
// lowest basic index on ratio ties), so identical inputs pivot identically.
// Infeasible systems come back with a Farkas certificate read off the
// phase-one duals: multipliers y with y_i >= 0 on >= rows, sum_i y_i a_i = 0
// and sum_i y_i b_i > 0.
FeasibilityOutcome lp_solve(const LinearSystem& system, double tol = kDefaultTol);

// Checks a certificate against the system it claims to refute.
bool lp_verify_farkas(const LinearSystem& system, const Point& farkas,
                      double tol = kDefaultTol);

struct MarginOutcome {
    LpStatus status = LpStatus::Infeasible;
    Point point;          // optimizer over the original variables
    double margin = 0.0;  // best common slack delta* (>= 0)
    bool capped = false;  // delta hit the documented bound kMarginCap
    Point farkas;         // certificate for the delta >= 0 system when infeasible
};

// Solves max delta s.t. every >= row holds with slack >= delta (equality rows
// unchanged), delta >= 0. A strict system is satisfiable iff margin > the
// caller's strict threshold. Unbounded slack is capped at kMarginCap and
// flagged. Infeasible here means the system is infeasible even at delta = 0.
MarginOutcome lp_maximize_margin(const LinearSystem& system, double tol = kDefaultTol);

}  // namespace conecert
