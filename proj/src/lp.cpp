#include "conecert/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conecert {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kReducedCostEps = 1e-10;
constexpr int kMaxIterations = 200000;

// Dense tableau in canonical form. Column layout:
//   [u_0..u_{n-1} | v_0..v_{n-1} | surplus (one per >= row) | artificial (one per row)]
// where the free variable x_j = u_j - v_j. Rows are sign-normalized so every
// right-hand side is nonnegative and the artificial columns start as the
// identity basis.
class Tableau {
public:
    Tableau(const LinearSystem& sys)
        : n_(sys.num_vars), m_(static_cast<int>(sys.rows.size())) {
        surplus_of_.assign(m_, -1);
        sign_.assign(m_, 1.0);
        int num_surplus = 0;
        for (int i = 0; i < m_; ++i)
            if (sys.rows[i].rel == Relation::GreaterEqual) surplus_of_[i] = num_surplus++;
        art_base_ = 2 * n_ + num_surplus;
        cols_ = art_base_ + m_;
        tab_.assign(m_ + 1, std::vector<double>(cols_ + 1, 0.0));
        basis_.assign(m_, 0);

        for (int i = 0; i < m_; ++i) {
            const LinearRow& row = sys.rows[i];
            double s = row.rhs < 0.0 ? -1.0 : 1.0;
            sign_[i] = s;
            for (int j = 0; j < n_; ++j) {
                tab_[i][j] = s * row.coeffs[j];
                tab_[i][n_ + j] = -s * row.coeffs[j];
            }
            if (surplus_of_[i] >= 0) tab_[i][2 * n_ + surplus_of_[i]] = -s;
            tab_[i][art_base_ + i] = 1.0;
            tab_[i][cols_] = s * row.rhs;
            basis_[i] = art_base_ + i;
        }
    }

    // Phase 1: minimize the artificial sum. Returns the residual infeasibility.
    double phase1() {
        // cost = 1 on artificials; canonicalize against the artificial basis.
        auto& z = tab_[m_];
        std::fill(z.begin(), z.end(), 0.0);
        for (int i = 0; i < m_; ++i) z[art_base_ + i] = 1.0;
        for (int i = 0; i < m_; ++i)
            addmul_row(z, tab_[i], -1.0);  // z -= 1 * row_i (basic cost 1 each)
        iterate(/*allow_artificial_entering=*/false);
        return -tab_[m_][cols_];  // value cell holds -z
    }

    // Phase-one dual multipliers, mapped back to the caller's row signs.
    Point farkas_multipliers(const LinearSystem& sys) const {
        Point farkas(m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            double y = 1.0 - tab_[m_][art_base_ + i];
            double f = sign_[i] * y;
            if (sys.rows[i].rel == Relation::GreaterEqual && f < 0.0 && f > -1e-7)
                f = 0.0;  // clamp pivot noise on the signed multipliers
            farkas[i] = f;
        }
        return farkas;
    }

    // Phase 2 for a minimization cost vector over the original free variables.
    // Returns false when the objective is unbounded below.
    bool phase2(const Point& min_cost) {
        drive_out_artificials();
        auto& z = tab_[m_];
        std::fill(z.begin(), z.end(), 0.0);
        for (int j = 0; j < n_; ++j) {
            z[j] = min_cost[j];
            z[n_ + j] = -min_cost[j];
        }
        for (int i = 0; i < m_; ++i) {
            double cb = basic_cost(basis_[i], min_cost);
            if (cb != 0.0) addmul_row(z, tab_[i], -cb);
        }
        return iterate(/*allow_artificial_entering=*/false);
    }

    Point extract_point() const {
        Point x(n_, 0.0);
        for (int i = 0; i < m_; ++i) {
            int b = basis_[i];
            if (b < n_)
                x[b] += tab_[i][cols_];
            else if (b < 2 * n_)
                x[b - n_] -= tab_[i][cols_];
        }
        return x;
    }

private:
    static void addmul_row(std::vector<double>& dst, const std::vector<double>& src,
                           double factor) {
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += factor * src[j];
    }

    double basic_cost(int col, const Point& min_cost) const {
        if (col < n_) return min_cost[col];
        if (col < 2 * n_) return -min_cost[col - n_];
        return 0.0;
    }

    void pivot(int r, int s) {
        double inv = 1.0 / tab_[r][s];
        for (double& v : tab_[r]) v *= inv;
        tab_[r][s] = 1.0;  // kill roundoff on the pivot itself
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            double f = tab_[i][s];
            if (std::fabs(f) < kPivotEps) {
                tab_[i][s] = 0.0;
                continue;
            }
            addmul_row(tab_[i], tab_[r], -f);
            tab_[i][s] = 0.0;
        }
        basis_[r] = s;
    }

    // Bland's rule: lowest-index entering column with negative reduced cost,
    // lowest basic index among ratio ties. Returns false on unboundedness.
    bool iterate(bool allow_artificial_entering) {
        int limit = allow_artificial_entering ? cols_ : art_base_;
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            int s = -1;
            for (int j = 0; j < limit; ++j) {
                if (tab_[m_][j] < -kReducedCostEps) {
                    s = j;
                    break;
                }
            }
            if (s < 0) return true;  // optimal
            int r = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][s] <= kPivotEps) continue;
                double ratio = tab_[i][cols_] / tab_[i][s];
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (r < 0 || basis_[i] < basis_[r]))) {
                    best_ratio = ratio;
                    r = i;
                }
            }
            if (r < 0) return false;  // unbounded
            pivot(r, s);
        }
        throw InternalError("simplex iteration limit exceeded");
    }

    // Pivot basic artificials (at value ~0 after phase 1) onto structural
    // columns where the row allows it; all-zero rows are redundant and keep
    // their artificial basic at zero.
    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < art_base_) continue;
            int s = -1;
            for (int j = 0; j < art_base_; ++j) {
                if (std::fabs(tab_[i][j]) > 1e-8) {
                    s = j;
                    break;
                }
            }
            if (s >= 0) pivot(i, s);
        }
    }

    int n_;
    int m_;
    int art_base_ = 0;
    int cols_ = 0;
    std::vector<int> surplus_of_;
    std::vector<double> sign_;
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;
};

}  // namespace

LinearRow& LinearSystem::add_row(Point coeffs, Relation rel, double rhs) {
    rows.push_back(LinearRow{std::move(coeffs), rel, rhs});
    return rows.back();
}

void LinearSystem::validate() const {
    if (num_vars <= 0) throw InputError("linear system: num_vars must be positive");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].coeffs.size()) != num_vars)
            throw InputError("linear system: row " + std::to_string(i) +
                             " has wrong coefficient count");
        require_finite(rows[i].coeffs, "linear system row " + std::to_string(i));
        if (!std::isfinite(rows[i].rhs))
            throw InputError("linear system: row " + std::to_string(i) +
                             " has non-finite rhs");
    }
    if (objective && static_cast<int>(objective->coeffs.size()) != num_vars)
        throw InputError("linear system: objective has wrong coefficient count");
}

FeasibilityOutcome lp_solve(const LinearSystem& system, double tol) {
    system.validate();
    if (tol <= 0.0) throw InputError("lp_solve: tolerance must be positive");

    FeasibilityOutcome out;
    if (system.rows.empty()) {
        // Nothing constrains the variables. An objective over free variables
        // is unbounded unless identically zero.
        out.point.assign(system.num_vars, 0.0);
        if (system.objective && norm_inf(system.objective->coeffs) > 0.0) {
            out.status = LpStatus::Unbounded;
            return out;
        }
        out.status = LpStatus::Feasible;
        if (system.objective) out.objective_value = 0.0;
        return out;
    }

    Tableau tab(system);
    double infeas = tab.phase1();
    if (infeas > tol) {
        out.status = LpStatus::Infeasible;
        out.farkas = tab.farkas_multipliers(system);
        return out;
    }
    if (system.objective) {
        Point min_cost = system.objective->coeffs;
        if (system.objective->sense == Sense::Maximize)
            for (double& c : min_cost) c = -c;
        if (!tab.phase2(min_cost)) {
            out.status = LpStatus::Unbounded;
            return out;
        }
    }
    out.status = LpStatus::Feasible;
    out.point = tab.extract_point();
    if (system.objective) out.objective_value = dot(system.objective->coeffs, out.point);
    return out;
}

bool lp_verify_farkas(const LinearSystem& system, const Point& farkas, double tol) {
    system.validate();
    if (farkas.size() != system.rows.size())
        throw InputError("verify_farkas: multiplier count does not match row count");
    Point combined(system.num_vars, 0.0);
    double combined_rhs = 0.0;
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        const LinearRow& row = system.rows[i];
        if (row.rel == Relation::GreaterEqual && farkas[i] < -tol) return false;
        for (int j = 0; j < system.num_vars; ++j) combined[j] += farkas[i] * row.coeffs[j];
        combined_rhs += farkas[i] * row.rhs;
    }
    return norm_inf(combined) <= tol && combined_rhs > tol;
}

MarginOutcome lp_maximize_margin(const LinearSystem& system, double tol) {
    system.validate();
    if (system.objective)
        throw InputError("maximize_margin: system must not carry its own objective");

    LinearSystem aug;
    aug.num_vars = system.num_vars + 1;
    const int d = system.num_vars;  // delta column
    for (const LinearRow& row : system.rows) {
        Point c = row.coeffs;
        c.push_back(row.rel == Relation::GreaterEqual ? -1.0 : 0.0);
        aug.add_row(std::move(c), row.rel, row.rhs);
    }
    Point delta_pos(aug.num_vars, 0.0);
    delta_pos[d] = 1.0;
    aug.add_row(delta_pos, Relation::GreaterEqual, 0.0);
    Point delta_cap(aug.num_vars, 0.0);
    delta_cap[d] = -1.0;
    aug.add_row(delta_cap, Relation::GreaterEqual, -kMarginCap);
    aug.objective = Objective{delta_pos, Sense::Maximize};

    MarginOutcome out;
    FeasibilityOutcome res = lp_solve(aug, tol);
    if (res.status == LpStatus::Infeasible) {
        out.status = LpStatus::Infeasible;
        // delta = 0 reduces the augmented system to the original, so the
        // original is infeasible too; certify it directly.
        LinearSystem plain = system;
        plain.objective.reset();
        FeasibilityOutcome orig = lp_solve(plain, tol);
        if (orig.status == LpStatus::Infeasible) out.farkas = orig.farkas;
        return out;
    }
    if (res.status != LpStatus::Feasible)
        throw InternalError("maximize_margin: capped objective cannot be unbounded");
    out.status = LpStatus::Feasible;
    out.margin = res.point[d];
    out.capped = out.margin >= kMarginCap - 1e-3;
    out.point.assign(res.point.begin(), res.point.begin() + d);
    return out;
}

}  // namespace conecert
