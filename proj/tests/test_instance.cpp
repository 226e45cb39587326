#include "doctest.h"

#include <random>

#include "conecert/instance.hpp"

using namespace conecert;

namespace {

VPInstance tiny(std::vector<std::string> labels, int p, int q, int r,
                std::vector<std::vector<Point>> f, std::vector<std::vector<Point>> g,
                std::vector<std::vector<Point>> h) {
    VPInstance inst{std::move(labels),
                    {p, std::move(f)},
                    {q, std::move(g)},
                    {r, std::move(h)},
                    PolyhedralCone::orthant(p),
                    PolyhedralCone::orthant(q)};
    inst.validate();
    return inst;
}

std::vector<std::vector<Point>> all_labels(std::size_t n, Point v) {
    return std::vector<std::vector<Point>>(n, {std::move(v)});
}

}  // namespace

TEST_CASE("instance: feasibility by sign of g") {
    auto inst = tiny({"a", "b"}, 1, 1, 1, {{{0.0}}, {{0.0}}}, {{{-1.0}}, {{2.0}}},
                     all_labels(2, {0.0}));
    auto d = feasible_set(inst);
    REQUIRE(d.members.size() == 1);
    CHECK(inst.labels[d.members[0]] == "a");
}

TEST_CASE("instance: no g value in -Z+ means infeasible") {
    VPInstance inst{{"a"},
                    {1, {{{0.0}}}},
                    {2, {{{-1.0, 3.0}}}},
                    {1, {{{0.0}}}},
                    PolyhedralCone::orthant(1),
                    PolyhedralCone::orthant(2)};
    inst.validate();
    CHECK(feasible_set(inst).members.empty());
}

TEST_CASE("instance: a later g value can qualify, and is recorded") {
    VPInstance inst{{"a"},
                    {1, {{{0.0}}}},
                    {2, {{{-1.0, 3.0}, {-1.0, -1.0}}}},
                    {1, {{{0.0}}}},
                    PolyhedralCone::orthant(1),
                    PolyhedralCone::orthant(2)};
    inst.validate();
    auto d = feasible_set(inst);
    REQUIRE(d.members.size() == 1);
    CHECK(d.witnesses[0].g_value_index == 1);
}

TEST_CASE("instance: feasibility witnesses re-verify through the cone oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Point>> g, h, f;
        for (int i = 0; i < 6; ++i) {
            f.push_back({{u(rng)}});
            g.push_back({{u(rng)}, {u(rng)}});
            h.push_back({{u(rng)}, {rng() % 3 == 0 ? 0.0 : u(rng)}});
        }
        auto inst = tiny({"a", "b", "c", "d", "e", "f"}, 1, 1, 1, f, g, h);
        auto d = feasible_set(inst);
        for (std::size_t k = 0; k < d.members.size(); ++k) {
            std::size_t i = d.members[k];
            const auto& wit = d.witnesses[k];
            Point z = inst.g.values[i][wit.g_value_index];
            CHECK(inst.coneZ.contains(scale(-1.0, z), ConeMode::Closed));
            CHECK(norm_inf(inst.h.values[i][wit.h_value_index]) <= kDefaultTol);
        }
    }
}

TEST_CASE("instance: r = 0 makes the equality block vacuous") {
    VPInstance inst{{"a"},
                    {1, {{{1.0}}}},
                    {1, {{{-1.0}}}},
                    {0, {{Point{}}}},
                    PolyhedralCone::orthant(1),
                    PolyhedralCone::orthant(1)};
    inst.validate();
    CHECK(feasible_set(inst).members.size() == 1);
}

TEST_CASE("instance: feasible set grows monotonically when values are added") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Point>> f, g, h;
        for (int i = 0; i < 5; ++i) {
            f.push_back({{u(rng)}});
            g.push_back({{u(rng)}});
            h.push_back({{u(rng)}});
        }
        auto inst = tiny({"a", "b", "c", "d", "e"}, 1, 1, 1, f, g, h);
        auto before = feasible_set(inst).members;

        auto grown = inst;
        for (auto& list : grown.g.values) list.push_back({u(rng) - 2.0});
        for (auto& list : grown.h.values) list.push_back({rng() % 2 ? 0.0 : u(rng)});
        auto after = feasible_set(grown).members;
        for (std::size_t i : before) CHECK(std::count(after.begin(), after.end(), i));
    }
}

TEST_CASE("instance: shift_objective subtracts the chosen value") {
    auto inst = tiny({"a", "b"}, 2, 1, 1, {{{1.0, 2.0}}, {{2.0, 2.0}, {3.0, 1.0}}},
                     all_labels(2, {-1.0}), all_labels(2, {0.0}));
    auto shifted = shift_objective(inst, 0, {1.0, 2.0});
    CHECK(shifted.values[0][0] == Point{0.0, 0.0});  // exact zero
    CHECK(approx_eq(shifted.values[1][0], {1.0, 0.0}, 0.0));
    CHECK(approx_eq(shifted.values[1][1], {2.0, -1.0}, 0.0));

    CHECK_THROWS_AS(shift_objective(inst, 0, {9.0, 9.0}), InputError);
}

TEST_CASE("instance: full-set shift is the Minkowski difference") {
    auto inst = tiny({"a"}, 1, 1, 1, {{{1.0}, {3.0}}}, all_labels(1, {-1.0}),
                     all_labels(1, {0.0}));
    auto shifted = shift_objective_full_set(inst, 0);
    // {1,3} - {1,3} = {0, -2, 2}
    REQUIRE(shifted.values[0].size() == 3);
    CHECK(approx_eq(shifted.values[0][0], {0.0}, 0.0));
    CHECK(approx_eq(shifted.values[0][1], {-2.0}, 0.0));
    CHECK(approx_eq(shifted.values[0][2], {2.0}, 0.0));
}

TEST_CASE("instance: minkowski sums with deduplication") {
    auto s1 = minkowski_sum({{0.0, 0.0}}, {{1.0, 1.0}});
    REQUIRE(s1.size() == 1);
    CHECK(approx_eq(s1[0], {1.0, 1.0}, 0.0));

    auto s2 = minkowski_sum({{0.0, 0.0}, {1.0, 0.0}}, {{0.0, 1.0}});
    REQUIRE(s2.size() == 2);

    auto s3 = minkowski_sum({{1.0, 0.0}, {0.0, 1.0}}, {{1.0, 0.0}, {0.0, 1.0}});
    REQUIRE(s3.size() == 3);  // the two (1,1)s merge

    CHECK_THROWS_AS(minkowski_sum({{1.0}}, {{1.0, 2.0}}), InputError);
    CHECK_THROWS_AS(minkowski_sum({}, {{1.0}}), InputError);
}

TEST_CASE("instance: validation rejects inconsistent blocks") {
    CHECK_THROWS_AS(tiny({"a", "a"}, 1, 1, 1, all_labels(2, {0.0}),
                         all_labels(2, {0.0}), all_labels(2, {0.0})),
                    InputError);
    // f defined on fewer labels than the ground set
    VPInstance bad{{"a", "b"},
                   {1, {{{0.0}}}},
                   {1, all_labels(2, {0.0})},
                   {1, all_labels(2, {0.0})},
                   PolyhedralCone::orthant(1),
                   PolyhedralCone::orthant(1)};
    CHECK_THROWS_AS(bad.validate(), InputError);
}
