#include "doctest.h"

#include "conecert/generators.hpp"
#include "conecert/io.hpp"

using namespace conecert;
using nlohmann::json;

TEST_CASE("io: minimal instance parses and has a computable feasible set") {
    json doc = json::parse(R"({
      "schema": "conecert/1",
      "dimensions": {"p": 1, "q": 1, "r": 1},
      "points": [{"label": "a", "f": [[1.0]], "g": [[-1.0]], "h": [[0.0]]}]
    })");
    VPInstance inst = parse_instance(doc);
    CHECK(inst.labels == std::vector<std::string>{"a"});
    CHECK(feasible_set(inst).members.size() == 1);
}

TEST_CASE("io: wrong row length is diagnosed with label and row") {
    json doc = json::parse(R"({
      "dimensions": {"p": 1, "q": 2, "r": 1},
      "points": [{"label": "a", "f": [[1.0]], "g": [[-1.0]], "h": [[0.0]]}]
    })");
    try {
        parse_instance(doc);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        std::string msg = e.what();
        CHECK(msg.find("'a'") != std::string::npos);
        CHECK(msg.find("row 0") != std::string::npos);
    }
}

TEST_CASE("io: omitted cones default to nonnegative orthants") {
    json doc = json::parse(R"({
      "dimensions": {"p": 2, "q": 1, "r": 0},
      "points": [{"label": "a", "f": [[1.0, 2.0]], "g": [[-1.0]]}]
    })");
    VPInstance inst = parse_instance(doc);
    CHECK(inst.coneY.generators().size() == 2);
    CHECK(inst.coneY.contains({3.0, 4.0}, ConeMode::Closed));
    CHECK_FALSE(inst.coneY.contains({-1.0, 0.0}, ConeMode::Closed));
    CHECK(inst.r() == 0);
    CHECK(feasible_set(inst).members.size() == 1);  // h vacuous
}

TEST_CASE("io: duplicate labels are rejected") {
    json doc = json::parse(R"({
      "dimensions": {"p": 1, "q": 1, "r": 0},
      "points": [{"label": "a", "f": [[1.0]], "g": [[-1.0]]},
                 {"label": "a", "f": [[2.0]], "g": [[-1.0]]}]
    })");
    CHECK_THROWS_AS(parse_instance(doc), InputError);
}

TEST_CASE("io: serialize/parse round-trip is exact") {
    auto inst = generate_random_instance(3, {6, 2, 2, 1, 2, InstanceFamily::General});
    VPInstance back = parse_instance(serialize_instance(inst));
    REQUIRE(back.labels == inst.labels);
    for (std::size_t i = 0; i < inst.labels.size(); ++i) {
        REQUIRE(back.f.values[i].size() == inst.f.values[i].size());
        for (std::size_t k = 0; k < inst.f.values[i].size(); ++k)
            CHECK(approx_eq(back.f.values[i][k], inst.f.values[i][k], 1e-12));
        for (std::size_t k = 0; k < inst.g.values[i].size(); ++k)
            CHECK(approx_eq(back.g.values[i][k], inst.g.values[i][k], 1e-12));
        for (std::size_t k = 0; k < inst.h.values[i].size(); ++k)
            CHECK(approx_eq(back.h.values[i][k], inst.h.values[i][k], 1e-12));
    }
    CHECK(instance_digest(back) == instance_digest(inst));
}

TEST_CASE("io: example 2.1 grid matches an independent recount") {
    VPInstance inst = generate_example_2_1();
    // Recount the grid directly: coordinates k/4 with k, j in 0..12, keeping
    // k^2 + j^2 >= 16 (same inequality scaled by 16).
    int expected = 0;
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; j <= 12; ++j)
            if (k * k + j * j >= 16) ++expected;
    CHECK(expected == 154);
    CHECK(inst.labels.size() == static_cast<std::size_t>(expected));

    // Arc sampled at pi/64 from 0 to pi/2 inclusive: 33 points; labels whose
    // grid point lies on the arc fold one duplicate away.
    std::size_t on_arc = 0;
    for (std::size_t i = 0; i < inst.labels.size(); ++i) {
        std::size_t n = inst.f.values[i].size();
        if (n == 33)
            ++on_arc;
        else
            CHECK(n == 34);
    }
    CHECK(on_arc == 2);  // (1,0) and (0,1)

    // Every label is feasible by construction.
    CHECK(feasible_set(inst).members.size() == inst.labels.size());

    // The endpoints of the arc are objective values everywhere.
    bool has10 = false, has01 = false;
    for (const Point& v : inst.f.values[0]) {
        if (approx_eq(v, {1.0, 0.0}, 1e-12)) has10 = true;
        if (approx_eq(v, {0.0, 1.0}, 1e-9)) has01 = true;
    }
    CHECK(has10);
    CHECK(has01);
}

TEST_CASE("io: example 2.1 with radius 1 keeps only the arc boundary") {
    VPInstance inst = generate_example_2_1(0.5, 3.14159265358979 / 8, 1.0);
    for (std::size_t i = 0; i < inst.labels.size(); ++i) {
        const Point& grid = inst.f.values[i][0];
        CHECK(dot(grid, grid) >= 1.0 - 1e-9);
        CHECK(norm_inf(grid) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(generate_example_2_1(0.25, 0.1, 0.5), InputError);
    CHECK_THROWS_AS(generate_example_2_1(-0.25, 0.1, 3.0), InputError);
}

TEST_CASE("io: random instances are deterministic in the seed") {
    RandomInstanceParams params{8, 2, 1, 1, 2, InstanceFamily::General};
    auto a = generate_random_instance(1, params);
    auto b = generate_random_instance(1, params);
    CHECK(serialize_instance(a).dump() == serialize_instance(b).dump());
    auto c = generate_random_instance(2, params);
    CHECK(serialize_instance(a).dump() != serialize_instance(c).dump());
}

TEST_CASE("io: chain family is cone-increasing with a feasible first label") {
    for (std::uint64_t seed : {1ull, 5ull, 9ull}) {
        auto inst = generate_random_instance(seed, {6, 2, 2, 0, 1, InstanceFamily::Chain});
        for (std::size_t i = 0; i + 1 < inst.labels.size(); ++i) {
            Point df = sub(inst.f.values[i + 1][0], inst.f.values[i][0]);
            CHECK(inst.coneY.contains(df, ConeMode::Closed));
            Point dg = sub(inst.g.values[i + 1][0], inst.g.values[i][0]);
            CHECK(inst.coneZ.contains(dg, ConeMode::Closed));
        }
        auto d = feasible_set(inst);
        REQUIRE_FALSE(d.members.empty());
        CHECK(d.members[0] == 0);
    }
}

TEST_CASE("io: random generator rejects out-of-range parameters") {
    CHECK_THROWS_AS(generate_random_instance(1, {64, 2, 1, 1, 2, InstanceFamily::General}),
                    InputError);
    CHECK_THROWS_AS(generate_random_instance(1, {8, 5, 1, 1, 2, InstanceFamily::General}),
                    InputError);
    CHECK_THROWS_AS(generate_random_instance(1, {8, 2, 1, 1, 9, InstanceFamily::General}),
                    InputError);
}
