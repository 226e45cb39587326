#include "conecert/instance.hpp"

#include <algorithm>

namespace conecert {

std::vector<Point> SetValuedMap::pooled(
    const std::vector<std::size_t>& label_indices) const {
    std::vector<Point> out;
    for (std::size_t i : label_indices) {
        if (i >= values.size())
            throw InputError("set-valued map: label index out of range");
        out.insert(out.end(), values[i].begin(), values[i].end());
    }
    return dedupe_points(std::move(out), 0.0);
}

void SetValuedMap::validate(std::size_t num_labels, const std::string& name) const {
    if (dim < 0) throw InputError(name + ": negative dimension");
    if (values.size() != num_labels)
        throw InputError(name + ": defined on " + std::to_string(values.size()) +
                         " labels, expected " + std::to_string(num_labels));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].empty())
            throw InputError(name + ": empty value list at label index " +
                             std::to_string(i));
        for (std::size_t k = 0; k < values[i].size(); ++k) {
            require_dim(values[i][k], static_cast<std::size_t>(dim),
                        name + " value " + std::to_string(k) + " at label index " +
                            std::to_string(i));
            require_finite(values[i][k], name + " value at label index " +
                                             std::to_string(i));
        }
    }
}

std::size_t VPInstance::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw InputError("unknown label '" + label + "'");
}

void VPInstance::validate() const {
    if (labels.empty()) throw InputError("instance: empty ground set");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw InputError("instance: duplicate label '" + labels[i] + "'");
    f.validate(labels.size(), "f");
    g.validate(labels.size(), "g");
    h.validate(labels.size(), "h");
    if (f.dim < 1) throw InputError("instance: objective dimension p must be >= 1");
    if (g.dim < 1) throw InputError("instance: constraint dimension q must be >= 1");
    if (coneY.dim() != f.dim) throw InputError("instance: cone_Y dimension != p");
    if (coneZ.dim() != g.dim) throw InputError("instance: cone_Z dimension != q");
}

bool FeasibleSet::contains(std::size_t label_index) const {
    return member_position(label_index).has_value();
}

std::optional<std::size_t> FeasibleSet::member_position(std::size_t label_index) const {
    for (std::size_t k = 0; k < members.size(); ++k)
        if (members[k] == label_index) return k;
    return std::nullopt;
}

FeasibleSet feasible_set(const VPInstance& instance, double tol) {
    FeasibleSet out;
    for (std::size_t i = 0; i < instance.labels.size(); ++i) {
        std::optional<std::size_t> z_idx;
        for (std::size_t k = 0; k < instance.g.values[i].size(); ++k) {
            Point neg = scale(-1.0, instance.g.values[i][k]);
            if (instance.coneZ.contains(neg, ConeMode::Closed, kDefaultMargin, tol)) {
                z_idx = k;
                break;
            }
        }
        if (!z_idx) continue;
        std::optional<std::size_t> w_idx;
        for (std::size_t k = 0; k < instance.h.values[i].size(); ++k) {
            if (norm_inf(instance.h.values[i][k]) <= tol) {
                w_idx = k;
                break;
            }
        }
        if (!w_idx) continue;
        out.members.push_back(i);
        out.witnesses.push_back({*z_idx, *w_idx});
    }
    return out;
}

SetValuedMap shift_objective(const VPInstance& instance, std::size_t xbar_index,
                             const Point& ybar, double tol) {
    if (xbar_index >= instance.labels.size())
        throw InputError("shift_objective: label index out of range");
    require_dim(ybar, static_cast<std::size_t>(instance.f.dim), "ybar");
    bool found = false;
    for (const Point& y : instance.f.values[xbar_index])
        if (approx_eq(y, ybar, tol)) {
            found = true;
            break;
        }
    if (!found)
        throw InputError("shift_objective: ybar is not a value of f at '" +
                         instance.labels[xbar_index] + "'");
    SetValuedMap out;
    out.dim = instance.f.dim;
    out.values.reserve(instance.f.values.size());
    for (const auto& list : instance.f.values) {
        std::vector<Point> shifted;
        shifted.reserve(list.size());
        for (const Point& y : list) shifted.push_back(sub(y, ybar));
        out.values.push_back(std::move(shifted));
    }
    return out;
}

SetValuedMap shift_objective_full_set(const VPInstance& instance,
                                      std::size_t xbar_index, double tol) {
    if (xbar_index >= instance.labels.size())
        throw InputError("shift_objective: label index out of range");
    SetValuedMap out;
    out.dim = instance.f.dim;
    const auto& base = instance.f.values[xbar_index];
    for (const auto& list : instance.f.values) {
        std::vector<Point> shifted;
        for (const Point& y : list)
            for (const Point& b : base) shifted.push_back(sub(y, b));
        out.values.push_back(dedupe_points(std::move(shifted), tol));
    }
    return out;
}

std::vector<Point> dedupe_points(std::vector<Point> pts, double tol) {
    std::vector<Point> out;
    for (auto& p : pts) {
        bool dup = false;
        for (const Point& q : out)
            if (approx_eq(p, q, tol)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Point> minkowski_sum(const std::vector<Point>& a,
                                 const std::vector<Point>& b, double tol) {
    if (a.empty() || b.empty())
        throw InputError("minkowski_sum: operands must be nonempty");
    for (const Point& x : a)
        for (const Point& y : b)
            if (x.size() != y.size())
                throw InputError("minkowski_sum: dimension mismatch");
    std::vector<Point> out;
    out.reserve(a.size() * b.size());
    for (const Point& x : a)
        for (const Point& y : b) out.push_back(add(x, y));
    return dedupe_points(std::move(out), tol);
}

}  // namespace conecert
