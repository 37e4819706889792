#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvesys/cubes.hpp"
#include "curvesys/families.hpp"
#include "curvesys/position.hpp"
#include "helpers.hpp"

using namespace curvesys;

TEST_CASE("gamma roster") {
    auto s = gamma({1, -1, 1});
    REQUIRE(s.num_curves() == 7);
    CHECK(s.curves[0].name == "a1");
    CHECK(s.curves[1].name == "a2");
    CHECK(s.curves[2].name == "b3");
    CHECK(s.curves[6].name == "d");
    CHECK(*s.curves[3].partner == 2);
    CHECK(*s.curves[6].role == Role::Delta);
    CHECK(s.pencils.size() == 2);
    CHECK(s.gamma->delta == 6);
    CHECK(validate_system(s).ok());
}

TEST_CASE("gamma rejects bad sign vectors") {
    CHECK_THROWS_AS(gamma({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gamma({1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gamma({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("every gamma at genus 3 is a filling complete 1-system") {
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> e(3);
        for (int i = 0; i < 3; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        auto s = gamma(e);
        CHECK(testing_support::euler_genus(s.map) == 3);
        CHECK(is_complete_one_system(s));
        CHECK(is_filling(s, 3));
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c)
                    CHECK(gamma_triangle_expected(e, a, b, c) == testing_support::roster_triangle(s, a, b, c));
    }
}

TEST_CASE("canonical systems") {
    auto c1 = canonical(1);
    CHECK(c1.num_curves() == 3);
    CHECK(genus(c1.map) == 1);
    CHECK(is_complete_one_system(c1));
    auto c2 = canonical(2);
    CHECK(c2.num_curves() == 5);
    CHECK(genus(c2.map) == 2);
    CHECK(is_complete_one_system(c2));
    CHECK(is_filling(c2, 2));
    CHECK_THROWS_AS(canonical(3), std::invalid_argument);
}

TEST_CASE("stabilization of gamma along delta") {
    auto s = gamma({1, 1, -1, 1, -1});
    auto st = stabilize(s, 10);
    CHECK(st.num_curves() == 13);
    CHECK(genus(st.map) == 6);
    CHECK(testing_support::euler_genus(st.map) == 6);
    CHECK(is_complete_one_system(st));
    CHECK(st.curves[11].name == "d'");
    CHECK(*st.curves[12].role == Role::DeltaDoublePrime);
    for (int c = 0; c < 11; ++c) CHECK(forms_triangle(st, {c, 11, 12}));
    CHECK(cube_dimension(st) >= 4);
}

TEST_CASE("stabilization rejects bad input") {
    auto s = gamma({1, 1, 1});
    CHECK_THROWS_AS(stabilize(s, 42), std::invalid_argument);
    CHECK_THROWS_AS(stabilize(s, 0, 999), std::invalid_argument);
}

TEST_CASE("pencil system perturbs into a full cube") {
    auto s = gamma({1, 1, 1, -1, -1});
    const auto* disk = s.pencil(PencilSide::UpPencil);
    REQUIRE(disk);
    auto p = pencil_system(disk->boundary_order);
    CHECK(p.num_curves() == 3);
    auto pert = perturb_pencil(p.map, 0, PencilSide::UpPencil);
    auto sys = make_system(pert.map);
    CHECK(cube_dimension(sys) == 3);
}

TEST_CASE("property: repeated stabilization keeps completeness") {
    auto s = canonical(2);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 2; ++k) {
        const int c = testing_support::uniform(rng, 0, s.num_curves() - 1);
        s = stabilize(s, c);
        CHECK(is_complete_one_system(s));
        CHECK(genus(s.map) == 3 + k);
        CHECK(s.num_curves() == 2 * (3 + k) + 1);
    }
}
