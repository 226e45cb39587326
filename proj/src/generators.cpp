#include "conecert/generators.hpp"

#include <cmath>
#include <random>

namespace conecert {

namespace {
const double kHalfPi = 1.57079632679489661923;
}

std::string example_2_1_label(int k, int j) {
    return "x" + std::to_string(k) + "_" + std::to_string(j);
}

VPInstance generate_example_2_1(double radial_step, double angular_step,
                                double radius_max) {
    if (radial_step <= 0.0 || angular_step <= 0.0)
        throw InputError("example21: steps must be positive");
    if (radius_max < 1.0) throw InputError("example21: radius_max must be >= 1");

    std::vector<Point> arc;
    for (double th = 0.0; th <= kHalfPi + 1e-12; th += angular_step)
        arc.push_back({std::cos(std::min(th, kHalfPi)), std::sin(std::min(th, kHalfPi))});
    arc = dedupe_points(std::move(arc), 1e-12);

    VPInstance inst{{},
                    {2, {}},
                    {1, {}},
                    {1, {}},
                    PolyhedralCone::orthant(2),
                    PolyhedralCone::orthant(1)};
    const int steps = static_cast<int>(std::floor(radius_max / radial_step + 1e-9));
    for (int k = 0; k <= steps; ++k) {
        for (int j = 0; j <= steps; ++j) {
            double x1 = k * radial_step;
            double x2 = j * radial_step;
            if (x1 * x1 + x2 * x2 < 1.0 - 1e-9) continue;
            inst.labels.push_back(example_2_1_label(k, j));
            std::vector<Point> values{{x1, x2}};
            values.insert(values.end(), arc.begin(), arc.end());
            inst.f.values.push_back(dedupe_points(std::move(values), 1e-12));
            inst.g.values.push_back({{-1.0}});
            inst.h.values.push_back({{0.0}});
        }
    }
    if (inst.labels.empty()) throw InputError("example21: empty grid");
    inst.validate();
    return inst;
}

VPInstance generate_random_instance(std::uint64_t seed,
                                    const RandomInstanceParams& params) {
    if (params.num_labels < 1 || params.num_labels > 32)
        throw InputError("random instance: num_labels must be in [1, 32]");
    if (params.p < 1 || params.p > 4 || params.q < 1 || params.q > 4 ||
        params.r < 0 || params.r > 4)
        throw InputError("random instance: dimensions must be in [1, 4] (r may be 0)");
    if (params.values_per_map < 1 || params.values_per_map > 4)
        throw InputError("random instance: values_per_map must be in [1, 4]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    VPInstance inst{{},
                    {params.p, {}},
                    {params.q, {}},
                    {params.r, {}},
                    PolyhedralCone::orthant(params.p),
                    PolyhedralCone::orthant(params.q)};
    for (int i = 0; i < params.num_labels; ++i)
        inst.labels.push_back("x" + std::to_string(i));

    auto draw_point = [&](int dim) {
        Point v(dim);
        for (double& x : v) x = box(rng);
        return v;
    };

    if (params.family == InstanceFamily::General) {
        for (int i = 0; i < params.num_labels; ++i) {
            std::vector<Point> fv, gv, hv;
            for (int k = 0; k < params.values_per_map; ++k) fv.push_back(draw_point(params.p));
            for (int k = 0; k < params.values_per_map; ++k) gv.push_back(draw_point(params.q));
            if (params.r == 0) {
                hv.push_back(Point{});
            } else {
                // Mix exact zeros into h; uniform draws alone would leave the
                // equality constraint unsatisfiable everywhere.
                for (int k = 0; k < params.values_per_map; ++k)
                    hv.push_back(u01(rng) < 0.5 ? Point(params.r, 0.0)
                                                : draw_point(params.r));
            }
            inst.f.values.push_back(std::move(fv));
            inst.g.values.push_back(std::move(gv));
            inst.h.values.push_back(std::move(hv));
        }
    } else {
        auto cone_step = [&](const PolyhedralCone& cone, double lo, double hi) {
            Point stepv(cone.dim(), 0.0);
            for (const Point& gen : cone.generators()) {
                double w = lo + (hi - lo) * u01(rng);
                stepv = axpy(stepv, w / norm2(gen), gen);
            }
            return stepv;
        };
        Point fcur = draw_point(params.p);
        Point gcur = scale(-1.0, cone_step(inst.coneZ, 0.25, 1.0));
        for (int i = 0; i < params.num_labels; ++i) {
            if (i > 0) {
                fcur = add(fcur, cone_step(inst.coneY, 0.0, 0.75));
                gcur = add(gcur, cone_step(inst.coneZ, 0.0, 0.5));
            }
            inst.f.values.push_back({fcur});
            inst.g.values.push_back({gcur});
            inst.h.values.push_back(
                {params.r == 0 ? Point{} : Point(params.r, 0.0)});
        }
    }
    inst.validate();
    return inst;
}

}  // namespace conecert
