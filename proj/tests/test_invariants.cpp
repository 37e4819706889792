#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "curvesys/families.hpp"
#include "curvesys/invariants.hpp"
#include "helpers.hpp"

using namespace curvesys;

namespace {

std::vector<std::pair<int, int>> sorted_labels(const std::vector<PolygonEdge>& es) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : es) out.push_back({e.M, e.N});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> sorted(std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("reference label multisets") {
    auto p1 = labeled_polygon(gamma({1, 1, 1, -1, -1, 1, -1}));
    CHECK(sorted_labels(p1.r1) == sorted({{1, 1}, {0, 1}, {1, 0}, {2, 1}}));
    auto p2 = labeled_polygon(gamma({-1, 1, 1, -1, -1, 1, 1}));
    CHECK(sorted_labels(p2.r1) == sorted({{1, 0}, {0, 2}, {1, 0}, {2, 1}}));
    CHECK_FALSE(polygon_isomorphic(p1, p2));
    CHECK(polygon_isomorphic(p1, p1));
}

TEST_CASE("sums of N labels") {
    auto p = labeled_polygon(gamma({1, 1, 1, -1, -1, 1, -1}));
    CHECK(p.num_up == 4);
    CHECK(p.num_down == 3);
    CHECK(p.sum_n(1) == 3);
    CHECK(p.sum_n(2) == 9);
    CHECK(p.sum_m(1) == 4);
}

TEST_CASE("polygon needs two up pairs and a down pair") {
    CHECK_THROWS_AS(labeled_polygon(gamma({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(labeled_polygon(gamma({1, -1, -1})), std::invalid_argument);
    CHECK_THROWS_AS(labeled_polygon(canonical(2)), std::invalid_argument);
}

TEST_CASE("reconstruction from a known polygon") {
    auto p = labeled_polygon(gamma({1, 1, 1, -1, -1, 1, -1}));
    CHECK(sign_orbit_equivalent(reconstruct_epsilon(p), {1, 1, 1, -1, -1, 1, -1}));
    LabeledPolygon bad = p;
    bad.r1[0].M = 0;
    bad.r1[0].N = 0;
    CHECK_THROWS_AS(reconstruct_epsilon(bad), std::invalid_argument);
}

TEST_CASE("sign orbit equivalence") {
    CHECK(sign_orbit_equivalent({1, 1, -1}, {-1, -1, 1}));
    CHECK(sign_orbit_equivalent({1, -1, 1, 1, -1}, {-1, 1, 1, -1, 1}));
    const std::vector<int> a{1, 1, 1, -1, -1, 1, -1}, b{1, 1, 1, 1, -1, -1, -1};
    CHECK(sign_orbit_equivalent(a, b) == testing_support::group_orbit(a).count(b) > 0);
    CHECK_THROWS_AS(sign_orbit_equivalent({1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("orbit counts") {
    CHECK(sign_orbit_count(3) == 2);
    CHECK(sign_orbit_count(5) == 4);
    CHECK(sign_orbit_count(7) == 9);
    for (int g = 1; g <= 9; ++g) {
        CHECK(sign_orbit_count_burnside(g) == testing_support::orbit_count_by_closure(g));
        CHECK(sign_orbit_count_brute(g) == testing_support::orbit_count_by_closure(g));
    }
}

TEST_CASE("induced orderings") {
    auto s = gamma({1, 1, 1, -1, -1, 1, -1});
    const std::vector<int> down{6, 8, 12};
    auto fwd = induced_ordering(s, {0, Direction::Forward}, down);
    auto bwd = induced_ordering(s, {0, Direction::Backward}, down);
    std::vector<int> rev(fwd.rbegin(), fwd.rend());
    CHECK(cyclically_equivalent(bwd, rev));
    CHECK(std::is_permutation(fwd.begin(), fwd.end(), down.begin()));
    CHECK_THROWS_AS(induced_ordering(s, {0, Direction::Forward}, {0}), std::invalid_argument);
    auto cut = induced_ordering(s, {0, Direction::Forward}, down, 2);
    CHECK(cyclically_equivalent(cut, fwd));
}

TEST_CASE("coherent orientation classes") {
    auto s = gamma({1, 1, 1, -1, -1, 1, -1});
    auto classes = coherent_orientation_classes(s);
    REQUIRE(classes.size() == 2);
    const std::vector<int> down{6, 8, 12};
    // flipping a single curve breaks coherence
    auto base = induced_ordering(s, classes[0][0], down);
    auto flipped = classes[0][1];
    flipped.direction = flipped.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
    CHECK_FALSE(cyclically_equivalent(base, induced_ordering(s, flipped, down)));
    CHECK(cyclically_equivalent(base, induced_ordering(s, classes[0][1], down)));
}

TEST_CASE("distinguish") {
    auto r = distinguish({1, 1, 1, 1, 1}, {1, -1, 1, 1, -1});
    CHECK(r.verdict == Verdict::DistinctOrbits);
    CHECK(r.coarse_separates);
    auto same = distinguish({1, -1, 1, 1, -1}, {-1, 1, -1, -1, 1});
    CHECK(same.verdict == Verdict::SameOrbit);
    auto poly = distinguish({1, 1, 1, -1, -1}, {1, 1, -1, 1, -1});
    CHECK(poly.verdict == Verdict::DistinctOrbits);
    CHECK_FALSE(poly.coarse_separates);
    CHECK(poly.polygon_separates);
}

TEST_CASE("property: canonical orbit is invariant under random group elements") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        const int g = 3 + 2 * testing_support::uniform(rng, 0, 3);
        auto e = testing_support::random_eps(rng, g);
        auto w = e;
        const int steps = testing_support::uniform(rng, 0, 6);
        for (int s = 0; s < steps; ++s) {
            switch (testing_support::uniform(rng, 0, 2)) {
                case 0: std::rotate(w.begin(), w.begin() + 1, w.end()); break;
                case 1: std::reverse(w.begin(), w.end()); break;
                default:
                    for (int& x : w) x = -x;
            }
        }
        CHECK(canonical_orbit(w) == canonical_orbit(e));
        CHECK(testing_support::group_orbit(e).count(canonical_orbit(e)));
    }
}

TEST_CASE("property: polygon round trip and isomorphism at genus 5") {
    std::vector<std::pair<std::vector<int>, LabeledPolygon>> polys;
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> e(5);
        for (int i = 0; i < 5; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        const int up = static_cast<int>(std::count(e.begin(), e.end(), 1));
        if (up < 2 || up == 5) continue;
        auto p = labeled_polygon(gamma(e));
        CHECK(testing_support::group_orbit(e).count(reconstruct_epsilon(p)));
        polys.push_back({e, p});
    }
    for (const auto& [e1, p1] : polys)
        for (const auto& [e2, p2] : polys)
            if (p1.num_up == p2.num_up)
                CHECK(polygon_isomorphic(p1, p2) == (testing_support::group_orbit(e1).count(e2) > 0));
}

TEST_CASE("arrow alternation") {
    for (auto e : std::vector<std::vector<int>>{{1, 1, -1}, {1, -1, 1, 1, -1}, {-1, 1, 1, -1, -1, 1, 1}}) {
        auto arrows = arrow_sequence(*gamma(e).gamma);
        for (size_t k = 0; k < arrows.size(); ++k) CHECK(arrows[k] != arrows[(k + 1) % arrows.size()]);
    }
}
