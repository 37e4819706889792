#include "curvesys/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "curvesys/cubes.hpp"

namespace curvesys {

namespace {

int cross_sign(const std::vector<Slot>& rot, int c) {
    for (size_t k = 0; k < rot.size(); ++k)
        if (rot[k].curve == c && rot[k].out) return rot[(k + 1) % rot.size()].out ? 1 : -1;
    throw std::logic_error("curve does not leave the vertex");
}

const Slot* other_slot(const std::vector<Slot>& rot, int c) {
    for (const auto& s : rot)
        if (s.curve != c) return &s;
    return nullptr;
}

std::vector<Slot> relabeled(std::vector<Slot> rot, int from, int to) {
    for (auto& s : rot) {
        s.origin = -1;
        if (s.curve == from) s.curve = to;
    }
    return rot;
}

void insert_at(std::vector<int>& seq, int pos, std::initializer_list<int> vs) {
    seq.insert(seq.begin() + pos, vs.begin(), vs.end());
}

int index_of(const std::vector<int>& seq, int v) {
    auto it = std::find(seq.begin(), seq.end(), v);
    if (it == seq.end()) throw std::logic_error("vertex missing from curve");
    return static_cast<int>(it - seq.begin());
}

// Partner curve nc of c: a parallel copy crossing everything c crosses, on the
// side given by side, meeting c once at a new vertex placed after position gap.
void add_partner(Diagram& d, int c, int nc, int gap, int side) {
    const std::vector<int> seq = d.seq[c];
    const int X = d.add_vertex({});
    std::vector<int> fresh;
    for (int t = 0; t < static_cast<int>(seq.size()); ++t) {
        const int v = seq[t];
        const Slot* o = other_slot(d.rot[v], c);
        if (o) {
            const int sg = cross_sign(d.rot[v], c);
            const int oc = o->curve;
            const int nv = d.add_vertex(relabeled(d.rot[v], c, nc));
            auto& os = d.seq[oc];
            int k = index_of(os, v);
            insert_at(os, sg == side ? k + 1 : k, {nv});
            fresh.push_back(nv);
        }
        if (t == gap) fresh.push_back(X);
    }
    insert_at(d.seq[c], gap + 1, {X});
    d.seq[nc] = fresh;
    if (side > 0) d.rot[X] = {{c, 0, true}, {nc, 0, false}, {c, 0, false}, {nc, 0, true}};
    else d.rot[X] = {{c, 0, true}, {nc, 0, true}, {c, 0, false}, {nc, 0, false}};
}

void drop_markers(Diagram& d) {
    for (auto& seq : d.seq) {
        std::vector<int> kept;
        for (int v : seq)
            if (d.rot[v].size() != 2) kept.push_back(v);
        if (kept.empty()) continue;
        for (int v : seq)
            if (d.rot[v].size() == 2) d.rot[v].clear();
        seq = kept;
    }
}

void stabilize_diagram(Diagram& d, int c, int k, int c1, int c2) {
    if (static_cast<int>(d.seq.size()) <= c2) d.seq.resize(c2 + 1);
    const std::vector<int> seq = d.seq[c];
    std::vector<std::pair<int, int>> n1, n2;
    for (int t = 0; t < static_cast<int>(seq.size()); ++t) {
        const int v = seq[t];
        const Slot* o = other_slot(d.rot[v], c);
        if (!o) continue;
        const int oc = o->curve;
        const int sg = cross_sign(d.rot[v], c);
        const int v1 = d.add_vertex(relabeled(d.rot[v], c, c1));
        const int v2 = d.add_vertex(relabeled(d.rot[v], c, c2));
        auto& os = d.seq[oc];
        int j = index_of(os, v);
        if (sg > 0) insert_at(os, j + 1, {v1, v2});
        else insert_at(os, j, {v2, v1});
        n1.push_back({t, v1});
        n2.push_back({t, v2});
    }
    auto rotl = [&](const std::vector<std::pair<int, int>>& lst) {
        std::vector<int> out;
        for (auto [t, x] : lst)
            if (t > k) out.push_back(x);
        for (auto [t, x] : lst)
            if (t <= k) out.push_back(x);
        return out;
    };
    const int X1 = d.add_vertex(crossing_slots(c, c1, 1));
    const int X2 = d.add_vertex(crossing_slots(c, c2, 1));
    const int Y = d.add_vertex(crossing_slots(c1, c2, 1));
    d.seq[c1] = rotl(n1);
    d.seq[c1].insert(d.seq[c1].end(), {X1, Y});
    d.seq[c2] = rotl(n2);
    d.seq[c2].insert(d.seq[c2].end(), {X2, Y});
    insert_at(d.seq[c], k + 1, {X1, X2});
    drop_markers(d);
}

bool all_disks(const CombinatorialMap& m) { return m.face_genus.empty() && m.face_links.empty(); }

}  // namespace

CurveSystem gamma(const std::vector<int>& eps) {
    const int g = static_cast<int>(eps.size());
    if (g < 3 || g % 2 == 0) throw std::invalid_argument("sign vector length must be odd and at least 3");
    for (int e : eps)
        if (e != 1 && e != -1) throw std::invalid_argument("sign vector entries must be +1 or -1");
    const int n = (g - 1) / 2;
    const int delta = 2 * g;
    std::vector<int> U, D;
    for (int m = 0; m < g; ++m) (eps[m] > 0 ? U : D).push_back(m);

    Diagram d;
    d.seq.resize(2 * g + 1);
    const int P = U.empty() ? -1 : d.add_vertex({});
    const int PP = D.empty() ? -1 : d.add_vertex({});
    std::vector<int> xd(g);
    for (int i = 0; i < g; ++i) xd[i] = d.add_vertex({});
    std::map<std::pair<int, int>, int> x;
    for (int i : U)
        for (int k : D) x[{std::min(i, k), std::max(i, k)}] = d.add_vertex({});

    for (int i = 0; i < g; ++i) {
        auto& seq = d.seq[2 * i];
        seq.push_back(eps[i] > 0 ? P : PP);
        for (int t = 0; t < g; ++t) {
            int y = ((i + n - t) % g + g) % g;
            if (y == i) seq.push_back(xd[i]);
            else if (eps[y] != eps[i]) seq.push_back(x[{std::min(i, y), std::max(i, y)}]);
        }
    }
    for (int i = 0; i < g; ++i) d.seq[delta].push_back(xd[i]);

    std::vector<PencilEnd> Z(2 * g);
    for (int m = 0; m < g; ++m) {
        Z[(2 * m) % (2 * g)] = {2 * m, EndTag::S1};
        Z[(2 * m + g) % (2 * g)] = {2 * m, EndTag::S2};
    }
    auto restricted = [&](int sign) {
        std::vector<PencilEnd> out;
        for (const auto& e : Z)
            if (eps[e.curve / 2] == sign) out.push_back(e);
        return out;
    };
    auto as_slots = [](const std::vector<PencilEnd>& ends) {
        std::vector<Slot> r;
        for (const auto& e : ends) r.push_back({e.curve, 0, e.tag == EndTag::S1});
        return r;
    };
    std::vector<PencilEnd> up_ends = restricted(1), down_ends = restricted(-1);
    std::reverse(up_ends.begin(), up_ends.end());
    if (P >= 0) d.rot[P] = as_slots(up_ends);
    if (PP >= 0) d.rot[PP] = as_slots(down_ends);
    for (int i : U)
        for (int k : D) d.rot[x[{std::min(i, k), std::max(i, k)}]] = crossing_slots(2 * i, 2 * k, 1);
    for (int i = 0; i < g; ++i) d.rot[xd[i]] = crossing_slots(2 * i, delta, eps[i] > 0 ? -1 : 1);

    for (int v : {P, PP})
        if (v >= 0 && d.rot[v].size() >= 6) perturb_pencil(d, v);
    for (int i = 0; i < g; ++i)
        add_partner(d, 2 * i, 2 * i + 1, static_cast<int>(d.seq[2 * i].size()) - 1, eps[i] > 0 ? 1 : -1);
    drop_markers(d);

    CurveSystem s;
    s.map = build_map(d).map;
    s.genus_declared = g;
    for (int i = 0; i < g; ++i) {
        const bool up = eps[i] > 0;
        const std::string letter = up ? "a" : "b";
        const Role role = up ? Role::Up : Role::Down;
        s.curves.push_back({2 * i, letter + std::to_string(2 * i + 1), role, 2 * i + 1});
        s.curves.push_back({2 * i + 1, letter + std::to_string(2 * i + 2), role, 2 * i});
    }
    s.curves.push_back({delta, "d", Role::Delta, std::nullopt});
    auto members = [&](const std::vector<int>& idx) {
        std::vector<int> out;
        for (int m : idx) out.push_back(2 * m);
        return out;
    };
    if (!U.empty()) s.pencils.push_back({members(U), up_ends, PencilSide::UpPencil});
    if (!D.empty()) s.pencils.push_back({members(D), down_ends, PencilSide::DownPencil});
    s.gamma = GammaMetadata{eps, delta, Z};
    return s;
}

bool gamma_triangle_expected(const std::vector<int>& eps, int a, int b, int c) {
    const int delta = 2 * static_cast<int>(eps.size());
    std::vector<int> plain;
    bool has_delta = false;
    for (int x : {a, b, c}) {
        if (x == delta) has_delta = true;
        else plain.push_back(x);
    }
    for (size_t i = 0; i < plain.size(); ++i)
        for (size_t j = i + 1; j < plain.size(); ++j)
            if (plain[i] / 2 == plain[j] / 2) return true;
    if (has_delta) return eps[plain[0] / 2] != eps[plain[1] / 2];
    return eps[plain[0] / 2] == eps[plain[1] / 2] && eps[plain[1] / 2] == eps[plain[2] / 2];
}

std::vector<std::vector<int>> gamma_expected_cubes(const std::vector<int>& eps) {
    const int g = static_cast<int>(eps.size());
    const int delta = 2 * g;
    std::vector<int> up, down;
    for (int i = 0; i < g; ++i) (eps[i] > 0 ? up : down).push_back(i);
    std::vector<std::vector<int>> out;
    auto whole = [](const std::vector<int>& pairs) {
        std::vector<int> c;
        for (int i : pairs) c.insert(c.end(), {2 * i, 2 * i + 1});
        return c;
    };
    if (up.size() >= 2) out.push_back(whole(up));
    if (down.size() >= 2) out.push_back(whole(down));
    if (!up.empty() && !down.empty()) {
        for (int i : up)
            for (int k : down) {
                std::vector<int> c{2 * i, 2 * i + 1, 2 * k, 2 * k + 1, delta};
                std::sort(c.begin(), c.end());
                out.push_back(c);
            }
    } else {
        for (int i = 0; i < g; ++i) out.push_back({2 * i, 2 * i + 1, delta});
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    return out;
}

CurveSystem pencil_system(const std::vector<PencilEnd>& boundary) {
    std::map<int, int> id;
    for (const auto& e : boundary) id.emplace(e.curve, static_cast<int>(id.size()));
    std::vector<int> order(id.size());
    for (const auto& e : boundary) order[id[e.curve]] = e.curve;
    Diagram d;
    d.seq.resize(id.size());
    std::vector<Slot> rot;
    for (const auto& e : boundary) rot.push_back({id[e.curve], 0, e.tag == EndTag::S1});
    const int v = d.add_vertex(rot);
    for (auto& seq : d.seq) seq = {v};
    CurveSystem s = make_system(build_map(d).map);
    for (int c = 0; c < s.num_curves(); ++c) s.curves[c].name = "c" + std::to_string(order[c]);
    return s;
}

CurveSystem canonical(int g) {
    if (g != 1 && g != 2) throw std::invalid_argument("canonical systems exist for genus 1 and 2 only");
    Diagram d;
    d.seq.resize(1);
    d.seq[0] = {d.add_vertex({{0, 0, true}, {0, 0, false}})};
    stabilize_diagram(d, 0, 0, 1, 2);
    CurveSystem s;
    s.map = build_map(d).map;
    s.genus_declared = 1;
    for (int c = 0; c < 3; ++c) s.curves.push_back({c, "c" + std::to_string(c + 1), Role::Plain, std::nullopt});
    if (g == 1) return s;
    s = stabilize(s, 0);
    for (int c = 0; c < 5; ++c) s.curves[c].name = "c" + std::to_string(c + 1);
    return s;
}

int default_stabilization_point(const CurveSystem& s, int c) {
    Topology t(s.map);
    const auto passages = trace_passages(t, c);
    int best = -1, best_curve = s.num_curves();
    for (int k = 0; k < static_cast<int>(passages.size()); ++k) {
        for (int x : t.vertex_darts(passages[k].vertex)) {
            int o = s.map.curve_of_dart[x];
            if (o != c && o < best_curve) {
                best_curve = o;
                best = k;
            }
        }
    }
    if (best < 0) throw std::invalid_argument("curve crosses no other curve");
    return best;
}

CurveSystem stabilize(const CurveSystem& s, int c, int point) {
    if (c < 0 || c >= s.num_curves()) throw std::invalid_argument("unknown curve " + std::to_string(c));
    if (!is_complete_one_system(s)) throw std::invalid_argument("stabilization needs a complete 1-system");
    if (!all_disks(s.map)) throw std::invalid_argument("stabilization needs a filling system");
    Diagram d = to_diagram(s.map);
    const int L = static_cast<int>(d.seq[c].size());
    if (point < 0 || point >= L) throw std::invalid_argument("point is not a position on the curve's trace");
    const int C = s.num_curves();
    stabilize_diagram(d, c, point, C, C + 1);

    CurveSystem out;
    out.map = build_map(d).map;
    out.curves = s.curves;
    const bool is_delta = s.curves[c].role == Role::Delta;
    const std::string& name = s.curves[c].name;
    out.curves.push_back({C, name + "'", is_delta ? Role::DeltaPrime : Role::Plain, std::nullopt});
    out.curves.push_back({C + 1, name + "''", is_delta ? Role::DeltaDoublePrime : Role::Plain, std::nullopt});
    out.genus_declared = s.genus_declared ? std::optional<int>(*s.genus_declared + 1) : std::nullopt;
    return out;
}

bool is_filling(const CurveSystem& s, int declared_genus) {
    if (!all_disks(s.map)) return false;
    try {
        return genus(s.map) == declared_genus;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace curvesys
