#pragma once

#include <cstdint>

#include "conecert/instance.hpp"

namespace conecert {

// Discretized reproduction of the standing counterexample: ground set a grid
// over {x1, x2 >= 0, x1^2 + x2^2 >= 1} truncated at radius_max, objective
// f(x) = {x} united with samples of the nonnegative unit arc, constraints
// trivial (g = {-1}, h = {0}) so every label is feasible.
VPInstance generate_example_2_1(double radial_step = 0.25,
                                double angular_step = 3.14159265358979323846 / 64.0,
                                double radius_max = 3.0);

// Grid label for row k, column j, matching the generator's naming.
std::string example_2_1_label(int k, int j);

enum class InstanceFamily { General, Chain };

struct RandomInstanceParams {
    int num_labels = 8;
    int p = 2;
    int q = 1;
    int r = 1;
    int values_per_map = 2;
    InstanceFamily family = InstanceFamily::General;
};

// Deterministic in the seed. The general family draws uniform values (with
// zeros mixed into h so equality constraints are satisfiable at all). The
// chain family builds cone-increasing single-valued f and g chains with a
// feasible first label and h = {0}, which makes the generalized convexity
// hypotheses hold by construction and makes label 0 weakly efficient.
VPInstance generate_random_instance(std::uint64_t seed,
                                    const RandomInstanceParams& params);

}  // namespace conecert
