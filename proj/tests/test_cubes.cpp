#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvesys/cubes.hpp"
#include "curvesys/families.hpp"
#include "curvesys/position.hpp"
#include "helpers.hpp"

using namespace curvesys;

TEST_CASE("1-system predicates") {
    CHECK(is_complete_one_system(canonical(1)));
    CHECK(is_complete_one_system(canonical(2)));
    auto s = gamma({1, 1, -1});
    CHECK(is_one_system(s));
    CHECK(is_complete_one_system(s));
    auto sub = restrict_to(s, {0, 1, 2}).system;
    CHECK(is_one_system(sub));
}

TEST_CASE("maximal cubes of the all-up system at genus 3") {
    auto rep = maximal_cubes(gamma({1, 1, 1}));
    REQUIRE(rep.maximal_cubes.size() == 4);
    CHECK(rep.maximal_cubes[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(rep.maximal_cubes[1] == std::vector<int>{0, 1, 6});
    CHECK(rep.maximal_cubes[3] == std::vector<int>{4, 5, 6});
    CHECK(rep.dimension == 6);
}

TEST_CASE("genus 2 canonical system") {
    auto s = canonical(2);
    CHECK(cube_dimension(s) >= 3);
    auto sc = dual_square_complex(s);
    CHECK(sc.squares.size() == 10);
    CHECK(sc.euler_characteristic() == -2);
}

TEST_CASE("subset dimension") {
    auto s = gamma({1, 1, -1, -1, 1});
    CHECK(subset_cube_dimension(s, {0, 2, 8}) == 3);
    CHECK(subset_cube_dimension(s, {0, 4, 10}) == 3);
    CHECK(subset_cube_dimension(s, {0, 4}) == 2);
    CHECK_THROWS_AS(subset_cube_dimension(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(subset_cube_dimension(s, {0, 99}), std::invalid_argument);
}

TEST_CASE("square complex of gamma at genus 5") {
    auto sc = dual_square_complex(gamma({1, -1, 1, 1, -1}));
    CHECK(sc.squares.size() == 55);
    CHECK(sc.euler_characteristic() == -8);
    for (const auto& h : sc.hyperplanes) CHECK(h.size() == 10);
}

TEST_CASE("orbit upper bound") {
    CHECK(orbit_upper_bound(2) == testing_support::factorial_u64(20));
    CHECK(orbit_upper_bound(2).str() == "2432902008176640000");
    CHECK_THROWS_AS(orbit_upper_bound(1), std::invalid_argument);
}

TEST_CASE("property: cube dimension equals size iff all triples are triangles") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 6; ++k) {
        auto eps = testing_support::random_eps(rng, 5);
        auto s = gamma(eps);
        TriangleOracle tri(s);
        for (int q = 0; q < 40; ++q) {
            auto sub = testing_support::random_subset(rng, s.num_curves(), testing_support::uniform(rng, 3, 6));
            bool all = true;
            for (size_t a = 0; a < sub.size(); ++a)
                for (size_t b = a + 1; b < sub.size(); ++b)
                    for (size_t c = b + 1; c < sub.size(); ++c)
                        all = all && testing_support::roster_triangle(s, sub[a], sub[b], sub[c]);
            const int dim = maximal_cubes(tri, sub).dimension;
            CHECK((dim == static_cast<int>(sub.size())) == all);
        }
    }
}
