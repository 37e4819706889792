#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "curvesys/system.hpp"

namespace testing_support {

using curvesys::CombinatorialMap;
using curvesys::CurveSystem;

inline int count_orbits(int n, const std::vector<int>& perm) {
    std::vector<char> seen(n, 0);
    int k = 0;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++k;
        for (int x = d; !seen[x]; x = perm[x]) seen[x] = 1;
    }
    return k;
}

// Genus from V - E + F with region labels folded in, written out separately
// from the library's Topology.
inline int euler_genus(const CombinatorialMap& m) {
    const int n = m.num_darts();
    std::vector<int> face_perm(n);
    for (int d = 0; d < n; ++d) face_perm[d] = m.sigma[m.alpha[d]];
    const int V = count_orbits(n, m.sigma);
    const int E = n / 2;
    const int F = count_orbits(n, face_perm);
    int extra_handles = 0;
    for (auto [k, h] : m.face_genus) extra_handles += h;
    int merged = 0;
    for (const auto& grp : m.face_links) merged += static_cast<int>(grp.size()) - 1;
    // every link of b faces replaces b disks by one region with b boundaries
    const int chi = V - E + F - 2 * merged - 2 * extra_handles;
    return (2 - chi) / 2;
}

inline std::vector<int> random_eps(std::mt19937_64& rng, int g) {
    std::vector<int> e(g);
    for (int& x : e) x = (rng() & 1) ? 1 : -1;
    return e;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(all[i], all[uniform(rng, 0, i)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

// Orbit of a sign vector under rotation, reflection and negation, closed by
// breadth-first search from the three generators.
inline std::set<std::vector<int>> group_orbit(const std::vector<int>& e) {
    std::set<std::vector<int>> seen{e};
    std::vector<std::vector<int>> todo{e};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        std::vector<int> rot(v.size()), ref(v.rbegin(), v.rend()), neg(v);
        for (size_t i = 0; i < v.size(); ++i) rot[i] = v[(i + 1) % v.size()];
        for (int& x : neg) x = -x;
        for (auto& w : {rot, ref, neg})
            if (seen.insert(w).second) todo.push_back(w);
    }
    return seen;
}

inline long long orbit_count_by_closure(int g) {
    std::set<std::vector<int>> covered;
    long long orbits = 0;
    for (long mask = 0; mask < (1L << g); ++mask) {
        std::vector<int> e(g);
        for (int i = 0; i < g; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        if (covered.count(e)) continue;
        ++orbits;
        auto o = group_orbit(e);
        covered.insert(o.begin(), o.end());
    }
    return orbits;
}

// Triangle classification for gamma systems read off the roster: partners,
// roles and delta, independent of curve numbering.
inline bool roster_triangle(const CurveSystem& s, int a, int b, int c) {
    using curvesys::Role;
    auto role = [&](int x) { return *s.curves[x].role; };
    auto partners = [&](int x, int y) { return s.curves[x].partner && *s.curves[x].partner == y; };
    if (partners(a, b) || partners(a, c) || partners(b, c)) return true;
    std::vector<int> plain;
    bool delta = false;
    for (int x : {a, b, c}) {
        if (role(x) == Role::Delta) delta = true;
        else plain.push_back(x);
    }
    if (delta) return role(plain[0]) != role(plain[1]);
    return role(a) == role(b) && role(b) == role(c);
}

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
}

}  // namespace testing_support
