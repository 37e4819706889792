#include "curvesys/position.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace curvesys {

namespace {

// Slot address inside a diagram produced by to_diagram.
struct SlotRef {
    int vertex = -1;
    int index = -1;
};

std::vector<SlotRef> locate(const Diagram& d, int num_darts) {
    std::vector<SlotRef> loc(num_darts);
    for (int v = 0; v < static_cast<int>(d.rot.size()); ++v)
        for (int i = 0; i < static_cast<int>(d.rot[v].size()); ++i)
            if (d.rot[v][i].origin >= 0) loc[d.rot[v][i].origin] = {v, i};
    return loc;
}

Slot* find_slot(Diagram& d, int v, int curve, int occ, bool out) {
    for (auto& s : d.rot[v])
        if (s.curve == curve && s.occ == occ && s.out == out) return &s;
    return nullptr;
}

int other_curve(const std::vector<Slot>& rot, int c) {
    for (const auto& s : rot)
        if (s.curve != c) return s.curve;
    return c;
}

bool touches(const std::vector<Slot>& rot, int c) {
    return std::any_of(rot.begin(), rot.end(), [&](const Slot& s) { return s.curve == c; });
}

void make_marker(Diagram& d, int c, int out_origin, int in_origin) {
    int m = d.add_vertex({{c, 0, true, out_origin}, {c, 0, false, in_origin}});
    d.seq[c] = {m};
}

CombinatorialMap finish(const CombinatorialMap& src, const Diagram& d, const std::vector<RegionUnion>& unions) {
    BuiltMap b = build_map(d);
    inherit_regions(src, b, unions);
    return std::move(b.map);
}

CurveSystem with_map(const CurveSystem& s, CombinatorialMap m) {
    CurveSystem out = s;
    out.map = std::move(m);
    return out;
}

bool is_minimal(const Matrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (i == j ? m[i][j] != 0 : m[i][j] > 1) return false;
    return true;
}

// Replaces the cyclic block of length len starting at start by repl, keeping
// the relative order of all other entries.
void replace_block(std::vector<int>& seq, int start, int len, const std::vector<int>& repl) {
    const int L = static_cast<int>(seq.size());
    if (start + len <= L) {
        seq.erase(seq.begin() + start, seq.begin() + start + len);
        seq.insert(seq.begin() + start, repl.begin(), repl.end());
    } else {
        int wrap = start + len - L;
        seq.erase(seq.begin() + start, seq.end());
        seq.erase(seq.begin(), seq.begin() + wrap);
        seq.insert(seq.end(), repl.begin(), repl.end());
    }
}

void erase_vertex(std::vector<int>& seq, int v) { seq.erase(std::remove(seq.begin(), seq.end(), v), seq.end()); }

// Pushes the side of curve(f1) across the bigon with corners at the vertices
// of f1 and f2. f1 and f2 are darts of src whose edges start the two sides;
// the bigon lies to the right of both. Arcs of other curves crossing the bigon
// from side to side are allowed; any other configuration yields nullopt.
std::optional<CombinatorialMap> push_bigon(const CombinatorialMap& src, int f1, int f2) {
    Topology t(src);
    Diagram d = to_diagram(src);
    const auto loc = locate(d, src.num_darts());
    const int v1 = t.vertex_of(f1), v2 = t.vertex_of(f2);
    if (v1 == v2 || t.valence(v1) != 4 || t.valence(v2) != 4) return std::nullopt;
    const Slot s1 = d.rot[v1][loc[f1].index];
    const Slot s2 = d.rot[v2][loc[f2].index];
    const int c1 = s1.curve, c2 = s2.curve;
    const int dir1 = s1.out ? 1 : -1, dir2 = s2.out ? 1 : -1;

    auto walk_side = [&](int c, int from, int occ, int dir, int to, std::vector<int>& between) -> int {
        const auto& seq = d.seq[c];
        const int L = static_cast<int>(seq.size());
        int p = d.position(c, from, occ);
        for (int j = 1; j <= L; ++j) {
            int q = ((p + dir * j) % L + L) % L;
            if (seq[q] == to) return q;
            if (seq[q] == from) return -1;
            between.push_back(seq[q]);
        }
        return -1;
    };
    std::vector<int> S1, S2;
    const int end1 = walk_side(c1, v1, s1.occ, dir1, v2, S1);
    const int end2 = walk_side(c2, v2, s2.occ, dir2, v1, S2);
    if (end1 < 0 || end2 < 0 || S1.size() != S2.size()) return std::nullopt;
    if (c1 == c2 && !S1.empty()) return std::nullopt;

    std::set<int> s1set(S1.begin(), S1.end()), s2set(S2.begin(), S2.end());
    for (int w : S2) {
        const auto& r = d.rot[w];
        int x = other_curve(r, c2);
        if (r.size() != 4 || x == c1 || x == c2) return std::nullopt;
    }

    struct Arc {
        int u, x, w, dir;
    };
    std::vector<Arc> arcs;
    std::set<int> matched, internal;
    for (int u : S1) {
        const auto& r = d.rot[u];
        if (r.size() != 4) return std::nullopt;
        int x = other_curve(r, c1);
        if (x == c1 || x == c2) return std::nullopt;
        int k = -1;
        for (int i = 0; i < 4; ++i)
            if (r[i].curve == c1 && r[i].out == (dir1 > 0)) k = i;
        const Slot& right = r[(k + 3) % 4];
        const int dx = right.out ? 1 : -1;
        const auto& xs = d.seq[x];
        const int Lx = static_cast<int>(xs.size());
        int p = d.position(x, u, right.occ);
        int hit = -1;
        for (int j = 1; j < Lx && hit < 0; ++j) {
            int w = xs[((p + dx * j) % Lx + Lx) % Lx];
            if (s2set.count(w)) {
                hit = w;
            } else if (s1set.count(w) || w == v1 || w == v2 || w == u || touches(d.rot[w], c1) || touches(d.rot[w], c2)) {
                return std::nullopt;
            } else {
                internal.insert(w);
            }
        }
        if (hit < 0 || !matched.insert(hit).second || other_curve(d.rot[hit], c2) != x) return std::nullopt;
        arcs.push_back({u, x, hit, dx});
    }
    if (matched.size() != S2.size()) return std::nullopt;

    const bool agree = (dir1 > 0) == (dir2 < 0);
    // darts for markers, read before the vertices are cleared
    auto dart_at = [&](int v, int c, bool out) {
        for (const auto& s : d.rot[v])
            if (s.curve == c && s.out == out) return s.origin;
        return -1;
    };
    const int m1_out = dir1 > 0 ? dart_at(v2, c1, true) : dart_at(v1, c1, true);
    const int m1_in = dir1 > 0 ? dart_at(v1, c1, false) : dart_at(v2, c1, false);
    const int m2_out = dir2 > 0 ? dart_at(v1, c2, true) : dart_at(v2, c2, true);
    const int m2_in = dir2 > 0 ? dart_at(v2, c2, false) : dart_at(v1, c2, false);

    std::map<int, int> prime;  // S2 vertex -> its copy just outside the bigon
    for (int w : S2) {
        std::vector<Slot> r = d.rot[w];
        for (auto& s : r) {
            s.origin = -1;
            if (s.curve == c2) {
                s.curve = c1;
                s.occ = 0;
                if (!agree) s.out = !s.out;
            }
        }
        prime[w] = d.add_vertex(r);
    }
    for (const auto& a : arcs) {
        auto& xs = d.seq[a.x];
        erase_vertex(xs, a.u);
        int pw = static_cast<int>(std::find(xs.begin(), xs.end(), a.w) - xs.begin());
        xs.insert(xs.begin() + (a.dir > 0 ? pw + 1 : pw), prime[a.w]);
    }
    if (c1 == c2) {
        erase_vertex(d.seq[c1], v1);
        erase_vertex(d.seq[c1], v2);
    } else {
        std::vector<int> repl;
        for (auto it = S2.rbegin(); it != S2.rend(); ++it) repl.push_back(prime[*it]);
        if (dir1 < 0) std::reverse(repl.begin(), repl.end());
        const int p1 = d.position(c1, v1, s1.occ);
        const int start = dir1 > 0 ? p1 : end1;
        replace_block(d.seq[c1], start, static_cast<int>(S1.size()) + 2, repl);
        erase_vertex(d.seq[c2], v1);
        erase_vertex(d.seq[c2], v2);
    }
    for (int w : S2)
        for (auto& s : d.rot[w]) s.origin = -1;
    for (int w : internal)
        for (auto& s : d.rot[w]) s.origin = -1;
    for (int u : S1) d.rot[u].clear();
    d.rot[v1].clear();
    d.rot[v2].clear();
    if (d.seq[c1].empty()) make_marker(d, c1, c1 == c2 ? -1 : m1_out, c1 == c2 ? -1 : m1_in);
    if (c1 != c2 && d.seq[c2].empty()) make_marker(d, c2, m2_out, m2_in);

    std::vector<RegionUnion> unions;
    if (S1.empty()) {
        const int tip1 = src.sigma[src.sigma[f1]], tip2 = src.sigma[src.sigma[f2]];
        unions.push_back({{tip1, tip2}, -1});
    }
    try {
        return finish(src, d, unions);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

bool disk_polygon(const Topology& t, int f, int n) {
    const auto& orb = t.face_darts(f);
    const auto& reg = t.regions()[t.region_of_face(f)];
    if (static_cast<int>(orb.size()) != n || reg.genus != 0 || reg.faces.size() != 1) return false;
    std::set<int> vs;
    for (int x : orb) {
        if (t.valence(t.vertex_of(x)) != 4) return false;
        vs.insert(t.vertex_of(x));
    }
    return static_cast<int>(vs.size()) == n;
}

}  // namespace

FaceCensus classify_faces(const CombinatorialMap& m) {
    if (has_pencils(m)) throw std::invalid_argument("pencil vertices present");
    FaceCensus out;
    for (const auto& f : faces(m)) {
        CensusEntry e{f.key, f.side_curves};
        std::set<int> distinct(f.side_curves.begin(), f.side_curves.end());
        if (!f.is_disk() || f.sides == 0 || f.sides > 3) out.others.push_back(e);
        else if (f.sides == 1) out.monogons.push_back(e);
        else if (f.sides == 2) out.bigons.push_back(e);
        else if (distinct.size() == 3) out.triangles.push_back(e);
        else out.others.push_back(e);
    }
    return out;
}

Restriction restrict_to(const CurveSystem& s, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    const auto& src = s.map;
    const int C = src.num_curves();
    std::vector<int> new_id(C, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (keep[i] < 0 || keep[i] >= C) throw std::invalid_argument("unknown curve " + std::to_string(keep[i]));
        new_id[keep[i]] = i;
    }
    Diagram full = to_diagram(src);
    auto kept_passages = [&](int v) {
        int k = 0;
        for (const auto& sl : full.rot[v]) k += sl.out && new_id[sl.curve] >= 0;
        return k;
    };
    Diagram d;
    d.seq.resize(keep.size());
    d.rot.resize(full.rot.size());
    std::vector<RegionUnion> unions;
    for (int v = 0; v < static_cast<int>(full.rot.size()); ++v) {
        int k = kept_passages(v);
        if (k >= 2) {
            for (const auto& sl : full.rot[v]) {
                if (new_id[sl.curve] < 0) continue;
                Slot ns = sl;
                ns.curve = new_id[sl.curve];
                d.rot[v].push_back(ns);
            }
        } else if (k == 0) {
            RegionUnion u{{}, 1};
            for (const auto& sl : full.rot[v]) u.darts.push_back(sl.origin);
            unions.push_back(u);
        }
    }
    for (int c = 0; c < C; ++c) {
        const auto& seq = full.seq[c];
        const int L = static_cast<int>(seq.size());
        if (new_id[c] < 0) {
            std::map<int, int> seen;
            std::vector<int> occ(L);
            for (int t = 0; t < L; ++t) occ[t] = seen[seq[t]]++;
            for (int t = 0; t < L; ++t) {
                int tn = (t + 1) % L;
                int o = find_slot(full, seq[t], c, occ[t], true)->origin;
                int i = find_slot(full, seq[tn], c, occ[tn], false)->origin;
                unions.push_back({{o, i}, -1});
            }
            continue;
        }
        int j = new_id[c];
        for (int v : seq)
            if (kept_passages(v) >= 2) d.seq[j].push_back(v);
        if (d.seq[j].empty()) {
            int o = find_slot(full, seq[0], c, 0, true)->origin;
            int i = find_slot(full, seq[0], c, 0, false)->origin;
            make_marker(d, j, o, i);
        }
    }
    BuiltMap b = build_map(d);
    inherit_regions(src, b, unions);

    Restriction out;
    out.original_id = keep;
    out.origin = b.origin;
    out.system.map = std::move(b.map);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        CurveInfo ci = s.curves.at(keep[i]);
        ci.id = i;
        if (ci.partner) ci.partner = new_id[*ci.partner] >= 0 ? std::optional<int>(new_id[*ci.partner]) : std::nullopt;
        out.system.curves.push_back(ci);
    }
    out.system.genus_declared = s.genus_declared;
    return out;
}

CurveSystem remove_monogon(const CurveSystem& s, int face_key) {
    const auto& src = s.map;
    Topology t(src);
    const int f = t.face_index(face_key);
    if (f < 0) throw std::invalid_argument("not a face-key: " + std::to_string(face_key));
    if (!disk_polygon(t, f, 1)) throw std::invalid_argument("face is not a monogon");
    Diagram d = to_diagram(src);
    const auto loc = locate(d, src.num_darts());
    const int v = t.vertex_of(face_key);
    const Slot x = d.rot[v][loc[face_key].index];
    const int c = x.curve;
    auto& seq = d.seq[c];
    const int L = static_cast<int>(seq.size());
    const int p = d.position(c, v, x.occ);
    const int pa = x.out ? p : (p - 1 + L) % L;
    const int pb = (pa + 1) % L;
    int m_out = -1, m_in = -1;
    if (L == 2) {
        std::map<int, int> seen;
        std::vector<int> occ(L);
        for (int q = 0; q < L; ++q) occ[q] = seen[seq[q]]++;
        m_out = find_slot(d, v, c, occ[pb], true)->origin;
        m_in = find_slot(d, v, c, occ[pa], false)->origin;
    }
    seq.erase(seq.begin() + std::max(pa, pb));
    seq.erase(seq.begin() + std::min(pa, pb));
    d.rot[v].clear();
    if (seq.empty()) make_marker(d, c, m_out, m_in);
    return with_map(s, finish(src, d, {}));
}

CurveSystem remove_bigon(const CurveSystem& s, int face_key) {
    const auto& src = s.map;
    Topology t(src);
    const int f = t.face_index(face_key);
    if (f < 0) throw std::invalid_argument("not a face-key: " + std::to_string(face_key));
    if (!disk_polygon(t, f, 2)) throw std::invalid_argument("face is not a bigon");
    const auto& orb = t.face_darts(f);
    auto m = push_bigon(src, orb[0], orb[1]);
    if (!m) throw std::invalid_argument("bigon cannot be removed by a local move");
    return with_map(s, std::move(*m));
}

CurveSystem reidemeister_iii(const CurveSystem& s, int face_key) {
    const auto& src = s.map;
    Topology t(src);
    const int f = t.face_index(face_key);
    if (f < 0) throw std::invalid_argument("not a face-key: " + std::to_string(face_key));
    if (!disk_polygon(t, f, 3)) throw std::invalid_argument("face is not a triangle");
    const auto& orb = t.face_darts(f);
    std::set<int> cs;
    for (int x : orb) cs.insert(src.curve_of_dart[x]);
    if (cs.size() != 3) throw std::invalid_argument("triangle sides are not on distinct curves");

    Diagram d = to_diagram(src);
    const auto loc = locate(d, src.num_darts());
    for (int x : orb) {
        const Slot sx = d.rot[t.vertex_of(x)][loc[x].index];
        const int c = sx.curve;
        auto& seq = d.seq[c];
        const int L = static_cast<int>(seq.size());
        const int p = d.position(c, t.vertex_of(x), sx.occ);
        const int lo = sx.out ? p : (p - 1 + L) % L;
        const int hi = (lo + 1) % L;
        const int P = seq[lo], Q = seq[hi];
        Slot* p_in = find_slot(d, P, c, 0, false);
        Slot* p_out = find_slot(d, P, c, 0, true);
        Slot* q_in = find_slot(d, Q, c, 0, false);
        Slot* q_out = find_slot(d, Q, c, 0, true);
        const int entry = p_in->origin, exit = q_out->origin;
        std::swap(seq[lo], seq[hi]);
        q_in->origin = entry;
        p_out->origin = exit;
        q_out->origin = -1;
        p_in->origin = -1;
    }
    return with_map(s, finish(src, d, {}));
}

CurveSystem inflate_bigon(const CurveSystem& s, int da, int db) {
    const auto& src = s.map;
    Topology t(src);
    const int a = src.curve_of_dart.at(da), b = src.curve_of_dart.at(db);
    const int f = t.face_of(da);
    if (a == b) throw std::invalid_argument("finger move needs two distinct curves");
    if (t.face_of(db) != f) throw std::invalid_argument("darts do not share a face");
    const auto& reg = t.regions()[t.region_of_face(f)];
    if (reg.genus != 0 || reg.faces.size() != 1) throw std::invalid_argument("face is not a disk");
    if (t.face_of(src.alpha[da]) == f || t.face_of(src.alpha[db]) == f)
        throw std::invalid_argument("face lies on both sides of the edge");

    Diagram d = to_diagram(src);
    const auto loc = locate(d, src.num_darts());
    const Slot sa = d.rot[t.vertex_of(da)][loc[da].index];
    const Slot sb = d.rot[t.vertex_of(db)][loc[db].index];
    const bool fa = sa.out, fb = sb.out;
    const int p = d.position(a, t.vertex_of(da), sa.occ);
    const int q = d.position(b, t.vertex_of(db), sb.occ);
    for (int x : t.face_darts(f)) d.rot[loc[x].vertex][loc[x].index].origin = -1;
    // local frame: a runs west along its edge, b runs east
    const Slot a_fwd{a, 0, fa}, a_back{a, 0, !fa}, b_fwd{b, 0, fb}, b_back{b, 0, !fb};
    const int P = d.add_vertex({b_fwd, a_fwd, b_back, a_back});
    const int Q = d.add_vertex({b_fwd, a_back, b_back, a_fwd});
    auto& as = d.seq[a];
    if (fa) as.insert(as.begin() + p + 1, {P, Q});
    else as.insert(as.begin() + p, {Q, P});
    auto& bs = d.seq[b];
    if (fb) bs.insert(bs.begin() + q + 1, {Q, P});
    else bs.insert(bs.begin() + q, {P, Q});
    return with_map(s, finish(src, d, {}));
}

CurveSystem reduce(const CurveSystem& s, ReduceStats* stats) {
    if (has_pencils(s.map)) throw std::invalid_argument("pencil vertices present");
    CurveSystem cur = s;
    ReduceStats local;
    while (true) {
        const Matrix M = intersection_matrix(cur.map);
        if (is_minimal(M)) break;
        bool moved = false;
        const FaceCensus census = classify_faces(cur.map);
        for (const auto& e : census.monogons) {
            try {
                cur = remove_monogon(cur, e.face_key);
                ++local.monogons;
                moved = true;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        if (moved) continue;
        for (const auto& e : census.bigons) {
            try {
                cur = remove_bigon(cur, e.face_key);
                ++local.bigons;
                moved = true;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        if (moved) continue;
        const int C = cur.num_curves();
        for (int a = 0; a < C && !moved; ++a) {
            for (int b = a + 1; b < C && !moved; ++b) {
                if (M[a][b] < 2) continue;
                Restriction r = restrict_to(cur, {a, b});
                Topology rt(r.system.map);
                for (int f = 0; f < rt.num_faces() && !moved; ++f) {
                    if (!disk_polygon(rt, f, 2)) continue;
                    const auto& orb = rt.face_darts(f);
                    const auto& rc = r.system.map.curve_of_dart;
                    if (rc[orb[0]] == rc[orb[1]]) continue;
                    const int f1 = r.origin[orb[0]], f2 = r.origin[orb[1]];
                    if (f1 < 0 || f2 < 0) continue;
                    if (auto m = push_bigon(cur.map, f1, f2)) {
                        cur.map = std::move(*m);
                        ++local.pair_bigons;
                        moved = true;
                    }
                }
            }
        }
        if (!moved) break;
    }
    if (stats) *stats = local;
    return cur;
}

bool has_disk_triangle(const CombinatorialMap& m) {
    for (const auto& f : faces(m)) {
        if (!f.is_disk() || f.sides != 3 || f.darts.size() != 3) continue;
        std::set<int> cs(f.side_curves.begin(), f.side_curves.end());
        if (cs.size() == 3) return true;
    }
    return false;
}

bool forms_triangle(const CurveSystem& s, std::array<int, 3> triple) {
    std::set<int> ids(triple.begin(), triple.end());
    if (ids.size() != 3) throw std::invalid_argument("triple needs three distinct curves");
    for (int c : ids)
        if (c < 0 || c >= s.map.num_curves()) throw std::invalid_argument("unknown curve " + std::to_string(c));
    Restriction r = restrict_to(s, {triple.begin(), triple.end()});
    if (!is_minimal(intersection_matrix(r.system.map))) r.system = reduce(r.system);
    return has_disk_triangle(r.system.map);
}

}  // namespace curvesys
