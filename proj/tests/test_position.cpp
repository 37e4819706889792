#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "curvesys/families.hpp"
#include "curvesys/position.hpp"
#include "helpers.hpp"

using namespace curvesys;

namespace {

std::vector<int> identity(int n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return id;
}

// Some finger move inside a disk face between two distinct curves.
std::optional<std::pair<int, int>> first_finger(const CurveSystem& s) {
    Topology t(s.map);
    for (int f = 0; f < t.num_faces(); ++f) {
        const auto& reg = t.regions()[t.region_of_face(f)];
        if (reg.genus || reg.faces.size() != 1) continue;
        for (int da : t.face_darts(f))
            for (int db : t.face_darts(f))
                if (s.map.curve_of_dart[da] != s.map.curve_of_dart[db] && t.face_of(s.map.alpha[da]) != f &&
                    t.face_of(s.map.alpha[db]) != f)
                    return std::make_pair(da, db);
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("face census of gamma") {
    auto s = gamma({1, 1, -1});
    auto fc = classify_faces(s);
    CHECK(fc.monogons.empty());
    CHECK(fc.bigons.empty());
    CHECK_FALSE(fc.triangles.empty());
    const size_t total = fc.triangles.size() + fc.others.size();
    CHECK(static_cast<int>(total) == static_cast<int>(faces(s.map).size()));
}

TEST_CASE("restriction keeps intersection numbers") {
    auto s = gamma({1, -1, 1, 1, -1});
    auto full = intersection_matrix(s);
    std::vector<int> keep{0, 3, 4, 10};
    auto r = restrict_to(s, keep);
    CHECK(r.original_id == keep);
    auto sub = intersection_matrix(r.system);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) CHECK(sub[i][j] == full[keep[i]][keep[j]]);
    CHECK(validate_system(r.system).ok());
}

TEST_CASE("third move applied twice restores the diagram") {
    auto s = restrict_to(gamma({1, 1, 1}), {0, 2, 4}).system;
    auto fc = classify_faces(s);
    int key = -1;
    for (const auto& t : fc.triangles)
        if (std::set<int>(t.side_curves.begin(), t.side_curves.end()).size() == 3) key = t.face_key;
    REQUIRE(key >= 0);
    auto once = reidemeister_iii(s, key);
    CHECK(validate_system(once).ok());
    CHECK(intersection_matrix(once) == intersection_matrix(s));
    int key2 = -1;
    for (const auto& t : classify_faces(once).triangles)
        if (std::set<int>(t.side_curves.begin(), t.side_curves.end()).size() == 3) {
            auto twice = reidemeister_iii(once, t.face_key);
            if (isomorphic(twice.map, s.map, identity(3))) key2 = t.face_key;
        }
    CHECK(key2 >= 0);
}

TEST_CASE("third move rejects non-triangles") {
    auto s = gamma({1, 1, -1});
    auto fc = classify_faces(s);
    REQUIRE_FALSE(fc.others.empty());
    CHECK_THROWS_AS(reidemeister_iii(s, fc.others.front().face_key), std::invalid_argument);
}

TEST_CASE("finger move then bigon removal") {
    auto s = restrict_to(gamma({1, -1, 1}), {0, 2, 6}).system;
    auto finger = first_finger(s);
    REQUIRE(finger);
    auto fat = inflate_bigon(s, finger->first, finger->second);
    auto fc = classify_faces(fat);
    REQUIRE_FALSE(fc.bigons.empty());
    auto m = intersection_matrix(fat);
    const int a = s.map.curve_of_dart[finger->first], b = s.map.curve_of_dart[finger->second];
    CHECK(m[a][b] == intersection_matrix(s)[a][b] + 2);
    // a finger next to a corner also leaves a bigon at that corner; either one undoes the move
    for (const auto& bigon : fc.bigons) {
        auto thin = remove_bigon(fat, bigon.face_key);
        CHECK(isomorphic(thin.map, s.map, identity(3)));
    }
}

TEST_CASE("reduce restores minimal position and is idempotent") {
    auto s = gamma({1, 1, -1, 1, -1});
    auto cur = s;
    for (int k = 0; k < 3; ++k) {
        auto finger = first_finger(cur);
        REQUIRE(finger);
        cur = inflate_bigon(cur, finger->first, finger->second);
    }
    CHECK(intersection_matrix(cur) != intersection_matrix(s));
    ReduceStats st;
    auto red = reduce(cur, &st);
    CHECK(intersection_matrix(red) == intersection_matrix(s));
    CHECK(st.bigons + st.pair_bigons >= 1);
    ReduceStats again;
    auto red2 = reduce(red, &again);
    CHECK(again.monogons + again.bigons + again.pair_bigons == 0);
    CHECK(red2.map.sigma == red.map.sigma);
    CHECK(genus(red.map) == 5);
}

TEST_CASE("forms_triangle matches the roster classification on gamma") {
    auto s = gamma({-1, 1, 1});
    const int C = s.num_curves();
    for (int a = 0; a < C; ++a)
        for (int b = a + 1; b < C; ++b)
            for (int c = b + 1; c < C; ++c)
                CHECK(forms_triangle(s, {a, b, c}) == testing_support::roster_triangle(s, a, b, c));
}

TEST_CASE("property: third-move walks keep verdicts") {
    std::mt19937_64 rng(5);
    for (int w = 0; w < 15; ++w) {
        auto eps = testing_support::random_eps(rng, 5);
        auto base = gamma(eps);
        auto keep = testing_support::random_subset(rng, base.num_curves(), testing_support::uniform(rng, 3, 5));
        auto sub = restrict_to(base, keep).system;
        auto cur = sub;
        for (int k = 0; k < 4; ++k) {
            std::vector<int> keys;
            for (const auto& t : classify_faces(cur).triangles)
                if (std::set<int>(t.side_curves.begin(), t.side_curves.end()).size() == 3) keys.push_back(t.face_key);
            if (keys.empty()) break;
            cur = reidemeister_iii(cur, keys[testing_support::uniform(rng, 0, static_cast<int>(keys.size()) - 1)]);
        }
        CHECK(intersection_matrix(cur) == intersection_matrix(sub));
        CHECK(testing_support::euler_genus(cur.map) == testing_support::euler_genus(sub.map));
        const int C = sub.num_curves();
        for (int a = 0; a < C; ++a)
            for (int b = a + 1; b < C; ++b)
                for (int c = b + 1; c < C; ++c) CHECK(forms_triangle(cur, {a, b, c}) == forms_triangle(sub, {a, b, c}));
    }
}
