#include "curvesys/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "curvesys/cubes.hpp"
#include "curvesys/families.hpp"

namespace curvesys {

namespace {

template <class T>
std::vector<T> least_rotation(const std::vector<T>& v) {
    std::vector<T> best = v;
    for (size_t k = 1; k < v.size(); ++k) {
        std::vector<T> r(v.begin() + k, v.end());
        r.insert(r.end(), v.begin(), v.begin() + k);
        if (r < best) best = r;
    }
    return best;
}

// The 2g permutations of the dihedral group acting on positions 0..g-1.
std::vector<std::vector<int>> dihedral_perms(int g) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k < g; ++k) {
        std::vector<int> rot(g), ref(g);
        for (int i = 0; i < g; ++i) {
            rot[i] = (i + k) % g;
            ref[i] = ((k - i) % g + g) % g;
        }
        out.push_back(rot);
        out.push_back(ref);
    }
    return out;
}

std::vector<int> cycle_lengths(const std::vector<int>& p) {
    std::vector<int> out;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

struct PolygonData {
    std::vector<int> up, down;  // first members
    const std::vector<PencilEnd>* z = nullptr;
};

PolygonData polygon_data(const CurveSystem& s) {
    if (!s.gamma) throw std::invalid_argument("system carries no gamma metadata");
    PolygonData pd;
    const auto& eps = s.gamma->epsilon;
    for (int m = 0; m < static_cast<int>(eps.size()); ++m) (eps[m] > 0 ? pd.up : pd.down).push_back(2 * m);
    if (pd.up.size() < 2 || pd.down.empty())
        throw std::invalid_argument("labeled polygon needs at least two up pairs and one down pair");
    pd.z = &s.gamma->combined_order;
    if (static_cast<int>(pd.z->size()) != 2 * static_cast<int>(eps.size()))
        throw std::invalid_argument("combined order has the wrong length");
    return pd;
}

bool is_member(const std::vector<int>& v, int c) { return std::find(v.begin(), v.end(), c) != v.end(); }

}  // namespace

std::vector<int> induced_ordering(const CurveSystem& s, OrientedCurve oc, const std::vector<int>& targets,
                                  std::optional<int> reference) {
    Topology t(s.map);
    auto passages = trace_passages(t, oc.curve);
    if (oc.direction == Direction::Backward) std::reverse(passages.begin(), passages.end());
    const int L = static_cast<int>(passages.size());
    auto others = [&](int k) {
        std::set<int> out;
        for (int x : t.vertex_darts(passages[k].vertex))
            if (s.map.curve_of_dart[x] != oc.curve) out.insert(s.map.curve_of_dart[x]);
        return out;
    };
    int start = 0;
    if (reference) {
        start = -1;
        for (int k = 0; k < L && start < 0; ++k)
            if (others(k).count(*reference)) start = (k + 1) % L;
        if (start < 0) throw std::invalid_argument("oriented curve misses the reference curve");
    }
    std::vector<int> order;
    for (int j = 0; j < L; ++j)
        for (int o : others((start + j) % L))
            if (is_member(targets, o)) order.push_back(o);
    for (int c : targets)
        if (std::count(order.begin(), order.end(), c) != 1)
            throw std::invalid_argument("curve " + std::to_string(c) + " is not met exactly once");
    if (!reference && !order.empty()) {
        auto it = std::min_element(order.begin(), order.end());
        std::rotate(order.begin(), it, order.end());
    }
    return order;
}

bool cyclically_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() == b.size() && least_rotation(a) == least_rotation(b);
}

std::vector<std::vector<OrientedCurve>> coherent_orientation_classes(const CurveSystem& s) {
    const PolygonData pd = polygon_data(s);
    std::vector<std::vector<OrientedCurve>> classes;
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
        std::vector<OrientedCurve> cls;
        std::vector<int> first;
        for (int u : pd.up) {
            cls.push_back({u, dir});
            auto ord = induced_ordering(s, {u, dir}, pd.down);
            if (first.empty()) first = ord;
            else if (!cyclically_equivalent(first, ord))
                throw std::logic_error("up curves admit no coherent orientation");
        }
        classes.push_back(cls);
    }
    return classes;
}

int LabeledPolygon::sum_n(int cls) const {
    int t = 0;
    for (const auto& e : cls == 1 ? r1 : r2) t += e.N;
    return t;
}

int LabeledPolygon::sum_m(int cls) const {
    int t = 0;
    for (const auto& e : cls == 1 ? r1 : r2) t += e.M;
    return t;
}

LabeledPolygon labeled_polygon(const CurveSystem& s) {
    const PolygonData pd = polygon_data(s);
    const auto& Z = *pd.z;
    const int L = static_cast<int>(Z.size());
    LabeledPolygon p;
    p.num_up = static_cast<int>(pd.up.size());
    p.num_down = static_cast<int>(pd.down.size());
    for (const auto& e : Z)
        if (is_member(pd.up, e.curve)) p.vertices.push_back(e);
    if (const PencilDisk* disk = s.pencil(PencilSide::UpPencil)) {
        std::vector<PencilEnd> rev(disk->boundary_order.rbegin(), disk->boundary_order.rend());
        if (rev != p.vertices) throw std::invalid_argument("up pencil boundary disagrees with the combined order");
    }
    const int n = static_cast<int>(p.vertices.size());
    const int m = p.num_down;

    std::vector<std::vector<int>> ords;
    for (const auto& v : p.vertices) {
        int ref = -1;
        for (int u : pd.up)
            if (u != v.curve) {
                ref = u;
                break;
            }
        Direction dir = v.tag == EndTag::S1 ? Direction::Forward : Direction::Backward;
        ords.push_back(induced_ordering(s, {v.curve, dir}, pd.down, ref));
    }
    if (m >= 3) {
        std::map<std::vector<int>, std::set<EndTag>> key_tags;
        for (int k = 0; k < n; ++k) key_tags[least_rotation(ords[k])].insert(p.vertices[k].tag);
        if (key_tags.size() != 2) throw std::logic_error("orderings do not split into two coherence classes");
        for (const auto& [key, tags] : key_tags)
            if (tags.size() != 1) throw std::logic_error("coherence classes disagree with the strand ends");
    }
    for (const auto& v : p.vertices) p.partition.push_back(v.tag == EndTag::S1 ? 1 : 2);

    auto slot = [&](const PencilEnd& e) {
        return static_cast<int>(std::find(Z.begin(), Z.end(), e) - Z.begin());
    };
    auto iota = [](PencilEnd e) {
        e.tag = e.tag == EndTag::S1 ? EndTag::S2 : EndTag::S1;
        return e;
    };
    auto count_between = [&](int a, int b, const std::vector<int>& members) {
        int c = 0;
        for (int k = (a + 1) % L; k != b; k = (k + 1) % L)
            if (Z[k].tag == EndTag::S1 && is_member(members, Z[k].curve)) ++c;
        return c;
    };

    for (int cls : {1, 2}) {
        std::vector<int> idx;
        for (int k = 0; k < n; ++k)
            if (p.partition[k] == cls) idx.push_back(k);
        auto& edges = cls == 1 ? p.r1 : p.r2;
        for (size_t q = 0; q < idx.size(); ++q) {
            const int a = idx[q], b = idx[(q + 1) % idx.size()];
            const auto& oi = ords[a];
            const auto& oj = ords[b];
            const int pos = static_cast<int>(std::find(oi.begin(), oi.end(), oj[0]) - oi.begin());
            const int r = (m - pos) % m;
            std::vector<int> rotated(oi.begin() + (m - r), oi.end());
            rotated.insert(rotated.end(), oi.begin(), oi.begin() + (m - r));
            if (rotated != oj) throw std::logic_error("consecutive orderings are not cyclic shifts");
            const PencilEnd& vi = p.vertices[a];
            const PencilEnd& vj = p.vertices[b];
            PolygonEdge e;
            e.from = a;
            e.to = b;
            e.M = ((b - a - 1) % n + n) % n;
            if (cls == 1) {
                e.N = count_between(slot(iota(vi)), slot(iota(vj)), pd.down);
                if (e.M != count_between(slot(iota(vi)), slot(iota(vj)), pd.up))
                    throw std::logic_error("arrow count disagrees with the M label");
            } else {
                e.N = count_between(slot(vj), slot(vi), pd.down);
            }
            if (e.N % m != r) throw std::logic_error("arrow count disagrees with the induced ordering shift");
            edges.push_back(e);
        }
    }
    if (p.sum_n(1) != m || p.sum_n(2) != m * (p.num_up - 1))
        throw std::logic_error("N labels do not sum to the expected totals");
    return p;
}

SignVector canonical_orbit(const SignVector& e) {
    const int g = static_cast<int>(e.size());
    SignVector best = e;
    for (const auto& perm : dihedral_perms(g)) {
        for (int sgn : {1, -1}) {
            SignVector img(g);
            for (int i = 0; i < g; ++i) img[i] = sgn * e[perm[i]];
            best = std::min(best, img);
        }
    }
    return best;
}

bool sign_orbit_equivalent(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sign vectors differ in length");
    return canonical_orbit(a) == canonical_orbit(b);
}

SignVector reconstruct_epsilon(const LabeledPolygon& p) {
    SignVector w;
    for (const auto& e : p.r1) {
        if (e.M + e.N - 1 < 0) throw std::invalid_argument("edge label with M + N < 1");
        w.push_back(1);
        w.insert(w.end(), e.M + e.N - 1, -1);
    }
    if (static_cast<int>(w.size()) != p.num_up + p.num_down)
        throw std::invalid_argument("reconstructed word has the wrong length");
    return canonical_orbit(w);
}

bool polygon_isomorphic(const LabeledPolygon& a, const LabeledPolygon& b, IsoMode mode) {
    if (a.num_up != b.num_up || a.num_down != b.num_down) return false;
    if (mode == IsoMode::Dihedral) return reconstruct_epsilon(a) == reconstruct_epsilon(b);
    auto records = [](const std::vector<PolygonEdge>& es) {
        std::vector<std::pair<int, int>> r;
        for (const auto& e : es) r.push_back({e.M, e.N});
        return least_rotation(r);
    };
    return records(a.r1) == records(b.r1) && records(a.r2) == records(b.r2);
}

long long sign_orbit_count_burnside(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    long long fixed = 0;
    for (const auto& perm : dihedral_perms(g)) {
        auto cycles = cycle_lengths(perm);
        fixed += 1LL << cycles.size();
        bool all_even = std::all_of(cycles.begin(), cycles.end(), [](int l) { return l % 2 == 0; });
        if (all_even) fixed += 1LL << cycles.size();
    }
    if (fixed % (4 * g)) throw std::logic_error("Burnside tally is not divisible by the group order");
    return fixed / (4 * g);
}

long long sign_orbit_count_brute(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    std::set<SignVector> reps;
    for (long long mask = 0; mask < (1LL << g); ++mask) {
        SignVector e(g);
        for (int i = 0; i < g; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        reps.insert(canonical_orbit(e));
    }
    return static_cast<long long>(reps.size());
}

long long sign_orbit_count(int g) {
    long long a = sign_orbit_count_burnside(g), b = sign_orbit_count_brute(g);
    if (a != b) throw std::logic_error("orbit counts disagree");
    return a;
}

OrbitKey orbit_key(const SignVector& e) {
    SignVector x = e;
    int up = static_cast<int>(std::count(x.begin(), x.end(), 1));
    if (2 * up < static_cast<int>(x.size())) {
        for (int& v : x) v = -v;
        up = static_cast<int>(x.size()) - up;
    }
    const int down = static_cast<int>(x.size()) - up;
    CurveSystem s = gamma(x);
    OrbitKey k;
    for (const auto& c : maximal_cubes(s).maximal_cubes) k.cube_sizes.push_back(static_cast<int>(c.size()));
    std::sort(k.cube_sizes.begin(), k.cube_sizes.end());
    if (up >= 2 && down >= 1) k.polygon_word = reconstruct_epsilon(labeled_polygon(s));
    return k;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DistinctOrbits: return "distinct orbits";
        case Verdict::SameOrbit: return "same orbit";
        case Verdict::Unresolved: return "unresolved";
    }
    return "?";
}

DistinguishReport distinguish(const OrbitKey& ka, const OrbitKey& kb, const SignVector& a, const SignVector& b) {
    DistinguishReport r;
    r.key1 = ka;
    r.key2 = kb;
    r.coarse_separates = ka.cube_sizes != kb.cube_sizes;
    r.polygon_separates = ka.polygon_word && kb.polygon_word && *ka.polygon_word != *kb.polygon_word;
    r.group_equivalent = sign_orbit_equivalent(a, b);
    const bool separated = r.coarse_separates || r.polygon_separates;
    if (separated && r.group_equivalent)
        throw std::logic_error("invariants separate sign vectors in one orbit");
    r.verdict = separated ? Verdict::DistinctOrbits : r.group_equivalent ? Verdict::SameOrbit : Verdict::Unresolved;
    return r;
}

DistinguishReport distinguish(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sign vectors differ in length");
    if (a.size() < 3 || a.size() % 2 == 0) throw std::invalid_argument("sign vector length must be odd and at least 3");
    return distinguish(orbit_key(a), orbit_key(b), a, b);
}

std::vector<bool> arrow_sequence(const GammaMetadata& meta) {
    std::vector<bool> out;
    for (const auto& e : meta.combined_order) out.push_back(e.tag == EndTag::S1);
    return out;
}

}  // namespace curvesys
