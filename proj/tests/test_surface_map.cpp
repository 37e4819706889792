#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "curvesys/families.hpp"
#include "curvesys/surface_map.hpp"
#include "curvesys/system.hpp"
#include "helpers.hpp"

using namespace curvesys;
using testing_support::euler_genus;

namespace {

// Two curves crossing once on a torus: one vertex, two edges, one face.
CombinatorialMap torus_pair() {
    Diagram d;
    d.seq.resize(2);
    int v = d.add_vertex(crossing_slots(0, 1, 1));
    d.seq[0] = {v};
    d.seq[1] = {v};
    return build_map(d).map;
}

// Three strands through one point, each pair leaving in the given order.
Diagram pencil3() {
    Diagram d;
    d.seq.resize(3);
    int p = d.add_vertex({{0, 0, true}, {1, 0, true}, {2, 0, true}, {0, 0, false}, {1, 0, false}, {2, 0, false}});
    for (auto& s : d.seq) s = {p};
    return d;
}

bool has_violation(const Diagnostics& d, const std::string& text) {
    return std::any_of(d.violations.begin(), d.violations.end(),
                       [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

}  // namespace

TEST_CASE("torus with two curves") {
    auto m = torus_pair();
    CHECK(validate_map(m).ok());
    CHECK(validate_map(m, 1).ok());
    CHECK(genus(m) == 1);
    CHECK(euler_genus(m) == 1);
    auto fs = faces(m);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].sides == 4);
    CHECK(fs[0].is_disk());
    auto im = intersection_matrix(m);
    CHECK(im == Matrix{{0, 1}, {1, 0}});
    CHECK(trace_curve(m, 0).size() == 2);
}

TEST_CASE("validate_map reports each defect") {
    auto m = torus_pair();
    SUBCASE("declared genus mismatch") { CHECK(has_violation(validate_map(m, 2), "Euler mismatch")); }
    SUBCASE("sigma not a bijection") {
        m.sigma[0] = m.sigma[1];
        CHECK(has_violation(validate_map(m), "sigma is not a bijection"));
    }
    SUBCASE("alpha fixed point") {
        m.alpha[0] = 0;
        CHECK(has_violation(validate_map(m), "alpha"));
    }
    SUBCASE("array lengths") {
        m.curve_of_dart.pop_back();
        CHECK(has_violation(validate_map(m), "array length"));
    }
    SUBCASE("edge joining two curves") {
        m.curve_of_dart[m.alpha[0]] = 1 - m.curve_of_dart[0];
        CHECK_FALSE(validate_map(m).ok());
    }
    SUBCASE("bad face key") {
        m.face_genus[1] = 1;
        CHECK(has_violation(validate_map(m), "not a face-key"));
    }
}

TEST_CASE("topology throws on malformed maps") {
    auto m = torus_pair();
    m.sigma[0] = m.sigma[1];
    CHECK_THROWS_AS(Topology{m}, std::invalid_argument);
}

TEST_CASE("diagram round trip is isomorphic") {
    for (auto eps : std::vector<std::vector<int>>{{1, 1, 1}, {1, -1, 1}, {1, 1, -1, -1, 1}}) {
        auto s = gamma(eps);
        auto again = build_map(to_diagram(s.map)).map;
        std::vector<int> id(s.num_curves());
        for (int i = 0; i < s.num_curves(); ++i) id[i] = i;
        CHECK(isomorphic(s.map, again, id));
        CHECK(euler_genus(again) == static_cast<int>(eps.size()));
    }
}

TEST_CASE("isomorphism respects curve labels") {
    auto m = torus_pair();
    CHECK(isomorphic(m, m, {0, 1}));
    CHECK_FALSE(isomorphic(m, m, {0, 0}));
}

TEST_CASE("pencil perturbation and triangle collapse") {
    Diagram d = pencil3();
    auto m = build_map(d).map;
    REQUIRE(validate_map(m).ok());
    const int g0 = genus(m);
    auto im = intersection_matrix(m);
    CHECK(im == Matrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    auto res = perturb_pencil(m, 0, PencilSide::UpPencil);
    CHECK(validate_map(res.map).ok());
    CHECK(genus(res.map) == g0);
    CHECK(intersection_matrix(res.map) == im);
    CHECK(res.disk.member_curves == std::vector<int>{0, 1, 2});
    CHECK(res.disk.boundary_order.size() == 6);
    int triangles = 0, tri_key = -1;
    for (const auto& f : faces(res.map))
        if (f.sides == 3 && f.is_disk()) {
            ++triangles;
            tri_key = f.key;
        }
    CHECK(triangles >= 1);

    auto back = collapse_triangle(res.map, tri_key);
    CHECK(validate_map(back).ok());
    CHECK(genus(back) == g0);
    CHECK(isomorphic(m, back, {0, 1, 2}));
}

TEST_CASE("perturb rejects ordinary crossings") {
    auto m = torus_pair();
    CHECK_THROWS_AS(perturb_pencil(m, 0, PencilSide::UpPencil), std::invalid_argument);
}

TEST_CASE("crossing sign convention") {
    auto plus = crossing_slots(3, 5, 1);
    auto minus = crossing_slots(3, 5, -1);
    CHECK(plus[1].curve == 5);
    CHECK(plus[1].out);
    CHECK_FALSE(minus[1].out);
}

TEST_CASE("property: random gamma maps satisfy Euler and trace identities") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 12; ++k) {
        const int g = 3 + 2 * testing_support::uniform(rng, 0, 1);
        auto eps = testing_support::random_eps(rng, g);
        auto s = gamma(eps);
        CHECK(euler_genus(s.map) == g);
        CHECK(genus(s.map) == g);
        int total = 0;
        for (int c = 0; c < s.num_curves(); ++c) {
            auto tr = trace_curve(s.map, c);
            CHECK(tr.size() % 2 == 0);
            CHECK(tr.size() == 2 * static_cast<size_t>(2 * g));
            total += static_cast<int>(tr.size());
        }
        CHECK(total == s.map.num_darts());
    }
}
