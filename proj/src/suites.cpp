#include "curvesys/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "curvesys/cubes.hpp"
#include "curvesys/families.hpp"
#include "curvesys/invariants.hpp"
#include "curvesys/io.hpp"
#include "curvesys/position.hpp"

namespace curvesys {

namespace {

std::string eps_tag(const std::vector<int>& e) { return "eps " + epsilon_string(e) + ": "; }

bool complete_matrix(const Matrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 0 : 1)) return false;
    return true;
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

std::map<std::array<int, 3>, bool> triple_verdicts(const CurveSystem& s) {
    std::map<std::array<int, 3>, bool> out;
    const int C = s.num_curves();
    for (int a = 0; a < C; ++a)
        for (int b = a + 1; b < C; ++b)
            for (int c = b + 1; c < C; ++c) out[{a, b, c}] = forms_triangle(s, {a, b, c});
    return out;
}

}  // namespace

std::vector<std::vector<int>> all_sign_vectors(int g) {
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << g); ++mask) {
        std::vector<int> e(g);
        for (int i = 0; i < g; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        out.push_back(e);
    }
    return out;
}

std::vector<std::vector<int>> sample_sign_vectors(int g, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> out;
    for (int k = 0; k < count; ++k) {
        std::vector<int> e(g);
        for (int& x : e) x = pick(rng, 0, 1) ? 1 : -1;
        out.push_back(e);
    }
    return out;
}

SuiteResult run_gamma_suite(int g, std::optional<int> sample, std::uint64_t seed) {
    SuiteResult r;
    r.name = "gamma";
    const auto vectors = sample ? sample_sign_vectors(g, *sample, seed) : all_sign_vectors(g);
    for (const auto& e : vectors) {
        const std::string tag = eps_tag(e);
        CurveSystem s;
        try {
            s = gamma(e);
        } catch (const std::exception& ex) {
            r.check(false, tag + "generator failed: " + ex.what());
            continue;
        }
        const int C = s.num_curves();
        auto diag = validate_system(s);
        r.check(diag.ok(), tag + "invalid system");
        if (!diag.ok()) continue;
        r.check(C == 2 * g + 1, tag + "curve count");
        r.check(genus(s.map) == g, tag + "genus");
        r.check(complete_matrix(intersection_matrix(s)), tag + "pairwise intersections");
        r.check(is_filling(s, g), tag + "not filling");
        TriangleOracle oracle(s);
        int mismatches = 0;
        for (int a = 0; a < C; ++a)
            for (int b = a + 1; b < C; ++b)
                for (int c = b + 1; c < C; ++c)
                    if (oracle(a, b, c) != gamma_triangle_expected(e, a, b, c)) ++mismatches;
        r.check(mismatches == 0, tag + std::to_string(mismatches) + " triple verdicts differ from the classification");
        std::vector<int> all(C);
        for (int i = 0; i < C; ++i) all[i] = i;
        const auto rep = maximal_cubes(oracle, all);
        r.check(rep.maximal_cubes == gamma_expected_cubes(e), tag + "maximal cube census");
        const int up = static_cast<int>(std::count(e.begin(), e.end(), 1)), down = g - up;
        const int expected_dim = up && down ? std::max({2 * up, 2 * down, 5}) : std::max(2 * g, 3);
        r.check(rep.dimension == expected_dim, tag + "cube dimension");
        const auto sc = dual_square_complex(s);
        r.check(static_cast<int>(sc.squares.size()) == g * (2 * g + 1), tag + "square count");
        r.check(sc.euler_characteristic() == 2 - 2 * g, tag + "square complex Euler characteristic");
        bool hyper = true;
        for (const auto& h : sc.hyperplanes) hyper = hyper && static_cast<int>(h.size()) == 2 * g;
        r.check(hyper, tag + "squares per curve");
    }
    r.notes.push_back(std::to_string(vectors.size()) + " sign vectors at genus " + std::to_string(g));
    return r;
}

SuiteResult run_polygon_suite(int g) {
    SuiteResult r;
    r.name = "polygon";
    std::map<std::vector<int>, LabeledPolygon> polys;
    for (const auto& e : all_sign_vectors(g)) {
        const int up = static_cast<int>(std::count(e.begin(), e.end(), 1)), down = g - up;
        if (up < 2 || down < 1) continue;
        const std::string tag = eps_tag(e);
        try {
            const CurveSystem s = gamma(e);
            const LabeledPolygon p = labeled_polygon(s);
            r.check(p.sum_n(1) == down, tag + "R1 N sum");
            r.check(p.sum_n(2) == down * (up - 1), tag + "R2 N sum");
            r.check(p.sum_m(1) == up, tag + "R1 M sum");
            r.check(sign_orbit_equivalent(reconstruct_epsilon(p), e), tag + "round trip");
            const auto classes = coherent_orientation_classes(s);
            bool negatives = classes.size() == 2;
            for (size_t i = 0; negatives && i < classes[0].size(); ++i)
                negatives = classes[0][i].curve == classes[1][i].curve &&
                            classes[0][i].direction != classes[1][i].direction;
            r.check(negatives, tag + "coherent classes");
            const auto arrows = arrow_sequence(*s.gamma);
            bool alternate = true;
            for (size_t k = 0; k < arrows.size(); ++k) alternate = alternate && arrows[k] != arrows[(k + 1) % arrows.size()];
            r.check(alternate, tag + "arrow alternation");
            polys.emplace(e, p);
        } catch (const std::exception& ex) {
            r.check(false, tag + ex.what());
        }
    }
    for (const auto& [e1, p1] : polys)
        for (const auto& [e2, p2] : polys) {
            if (p1.num_up != p2.num_up) continue;
            r.check(polygon_isomorphic(p1, p2) == sign_orbit_equivalent(e1, e2),
                    eps_tag(e1) + "isomorphism disagrees with the group action against " + epsilon_string(e2));
        }
    try {
        const long long count = sign_orbit_count(g);
        r.check(count * (g - 1) >= (1LL << std::max(0, g - 3)), "orbit count below the lower bound");
        std::set<OrbitKey> keys;
        for (const auto& e : all_sign_vectors(g)) keys.insert(orbit_key(e));
        r.check(static_cast<long long>(keys.size()) == count, "invariant classes differ from the orbit count");
        r.notes.push_back("orbit count " + std::to_string(count) + ", invariant classes " + std::to_string(keys.size()));
    } catch (const std::exception& ex) {
        r.check(false, ex.what());
    }
    r.notes.push_back(std::to_string(polys.size()) + " eligible sign vectors at genus " + std::to_string(g));
    return r;
}

SuiteResult run_stab_suite(int g) {
    SuiteResult r;
    r.name = "stab";
    std::map<std::vector<int>, std::vector<int>> census;  // orbit representative -> cube sizes
    for (const auto& e : all_sign_vectors(g)) {
        const std::string tag = eps_tag(e);
        try {
            const CurveSystem s = gamma(e);
            const int delta = 2 * g;
            const CurveSystem st = stabilize(s, delta);
            const int C = st.num_curves();
            const int d1 = C - 2, d2 = C - 1;
            r.check(C == 2 * g + 3, tag + "curve count");
            r.check(genus(st.map) == g + 1, tag + "genus");
            r.check(is_complete_one_system(st), tag + "not a complete 1-system");
            r.check(is_filling(st, g + 1), tag + "not filling");
            TriangleOracle base(s), tri(st);
            for (int c = 0; c < C - 2; ++c) r.check(tri(d1, d2, c), tag + "new pair with curve " + std::to_string(c));
            for (int a = 0; a < C - 2; ++a)
                for (int b = a + 1; b < C - 2; ++b)
                    for (int c = b + 1; c < C - 2; ++c)
                        if (!base(a, b, c)) r.check(!tri(a, b, c), tag + "stabilization created a triangle");
            for (int b = 0; b < C - 2; ++b) {
                if (b == delta) continue;
                r.check(tri(b, delta, d1) && tri(b, delta, d2), tag + "delta triangles with curve " + std::to_string(b));
            }
            for (int sign : {1, -1}) {
                std::vector<int> role;
                for (int i = 0; i < g; ++i)
                    if (e[i] == sign) role.insert(role.end(), {2 * i, 2 * i + 1});
                for (size_t a = 0; a < role.size(); ++a)
                    for (size_t b = a + 1; b < role.size(); ++b)
                        for (size_t c = b + 1; c < role.size(); ++c)
                            r.check(tri(role[a], role[b], role[c]), tag + "role triple lost its triangle");
            }
            std::vector<int> all(C);
            for (int i = 0; i < C; ++i) all[i] = i;
            const auto rep = maximal_cubes(tri, all);
            r.check(rep.dimension >= 4, tag + "cube dimension below 4");
            std::vector<int> sizes;
            for (const auto& c : rep.maximal_cubes) sizes.push_back(static_cast<int>(c.size()));
            std::sort(sizes.begin(), sizes.end());
            const auto key = canonical_orbit(e);
            auto it = census.find(key);
            if (it == census.end()) census.emplace(key, sizes);
        } catch (const std::exception& ex) {
            r.check(false, tag + ex.what());
        }
    }
    std::set<std::vector<int>> classes;
    for (const auto& [k, sizes] : census) classes.insert(sizes);
    r.check(classes.size() == census.size(), "coarse census merges inequivalent stabilized systems");
    r.notes.push_back(std::to_string(census.size()) + " orbits, " + std::to_string(classes.size()) +
                      " census classes at genus " + std::to_string(g + 1));
    return r;
}

SuiteResult run_moves_suite(int g, std::uint64_t seed, int walks, int inflations) {
    SuiteResult r;
    r.name = "moves";
    std::mt19937_64 rng(seed);
    std::map<std::vector<int>, CurveSystem> cache;
    auto system_for = [&](const std::vector<int>& e) -> const CurveSystem& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, gamma(e)).first;
        return it->second;
    };
    auto random_eps = [&] {
        std::vector<int> e(g);
        for (int& x : e) x = pick(rng, 0, 1) ? 1 : -1;
        return e;
    };
    int moves_done = 0;
    for (int w = 0; w < walks; ++w) {
        const auto e = random_eps();
        const CurveSystem& s = system_for(e);
        const auto keep = random_subset(rng, s.num_curves(), pick(rng, 3, 6));
        const std::string tag = "walk " + std::to_string(w) + " " + eps_tag(e);
        try {
            const CurveSystem sub = restrict_to(s, keep).system;
            const Matrix m0 = intersection_matrix(sub);
            const auto v0 = triple_verdicts(sub);
            CurveSystem cur = sub;
            const int steps = pick(rng, 1, 8);
            for (int k = 0; k < steps; ++k) {
                std::vector<int> keys;
                for (const auto& f : classify_faces(cur).triangles) {
                    std::set<int> cs(f.side_curves.begin(), f.side_curves.end());
                    if (cs.size() == 3) keys.push_back(f.face_key);
                }
                if (keys.empty()) break;
                cur = reidemeister_iii(cur, keys[pick(rng, 0, static_cast<int>(keys.size()) - 1)]);
                ++moves_done;
            }
            r.check(validate_system(cur).ok(), tag + "invalid after moves");
            r.check(genus(cur.map) == genus(sub.map), tag + "genus changed");
            r.check(intersection_matrix(cur) == m0, tag + "intersection numbers changed");
            r.check(triple_verdicts(cur) == v0, tag + "triangle verdicts changed");
        } catch (const std::exception& ex) {
            r.check(false, tag + ex.what());
        }
    }
    int fingers = 0;
    for (int i = 0; i < inflations; ++i) {
        const auto e = random_eps();
        const CurveSystem& s = system_for(e);
        const auto keep = random_subset(rng, s.num_curves(), pick(rng, 2, s.num_curves()));
        const std::string tag = "inflation " + std::to_string(i) + " " + eps_tag(e);
        try {
            const CurveSystem sub = restrict_to(s, keep).system;
            const Matrix m0 = intersection_matrix(sub);
            CurveSystem cur = sub;
            const int count = pick(rng, 1, 3);
            for (int k = 0; k < count; ++k) {
                Topology t(cur.map);
                std::vector<std::pair<int, int>> options;
                for (int f = 0; f < t.num_faces(); ++f) {
                    const auto& reg = t.regions()[t.region_of_face(f)];
                    if (reg.genus != 0 || reg.faces.size() != 1) continue;
                    const auto& darts = t.face_darts(f);
                    for (int da : darts)
                        for (int db : darts) {
                            const auto& cd = cur.map.curve_of_dart;
                            if (cd[da] == cd[db]) continue;
                            if (t.face_of(cur.map.alpha[da]) == f || t.face_of(cur.map.alpha[db]) == f) continue;
                            options.push_back({da, db});
                        }
                }
                if (options.empty()) break;
                const auto [da, db] = options[pick(rng, 0, static_cast<int>(options.size()) - 1)];
                cur = inflate_bigon(cur, da, db);
                ++fingers;
            }
            const CurveSystem red = reduce(cur);
            r.check(intersection_matrix(red) == m0, tag + "reduce did not restore the matrix");
            r.check(genus(red.map) == genus(sub.map), tag + "genus changed");
            ReduceStats again;
            const CurveSystem red2 = reduce(red, &again);
            r.check(again.monogons + again.bigons + again.pair_bigons == 0 &&
                        red2.map.num_darts() == red.map.num_darts(),
                    tag + "reduce is not idempotent");
        } catch (const std::exception& ex) {
            r.check(false, tag + ex.what());
        }
    }
    r.notes.push_back(std::to_string(walks) + " walks with " + std::to_string(moves_done) + " third moves");
    r.notes.push_back(std::to_string(inflations) + " inflated diagrams with " + std::to_string(fingers) +
                      " finger moves");
    return r;
}

}  // namespace curvesys
