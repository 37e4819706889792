#include "curvesys/surface_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvesys {

int CombinatorialMap::num_curves() const {
    int c = 0;
    for (int x : curve_of_dart) c = std::max(c, x + 1);
    return c;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += "; ";
        s += x;
    }
    return s;
}

// Orbits of a permutation, each starting at its smallest element.
std::vector<std::vector<int>> orbits(int n, auto&& next) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        std::vector<int> orb;
        for (int x = d; !seen[x]; x = next(x)) {
            seen[x] = 1;
            orb.push_back(x);
        }
        out.push_back(std::move(orb));
    }
    return out;
}

}  // namespace

Diagnostics validate_map(const CombinatorialMap& m, std::optional<int> declared_genus) {
    Diagnostics diag;
    auto& v = diag.violations;
    const int n = m.num_darts();
    if (static_cast<int>(m.alpha.size()) != n || static_cast<int>(m.curve_of_dart.size()) != n) {
        v.push_back("array length mismatch");
        return diag;
    }
    std::vector<int> hits(n, 0);
    bool sigma_ok = true;
    for (int d = 0; d < n; ++d) {
        int s = m.sigma[d];
        if (s < 0 || s >= n || hits[s]++) sigma_ok = false;
    }
    if (!sigma_ok) v.push_back("sigma is not a bijection");
    bool alpha_ok = true;
    for (int d = 0; d < n; ++d) {
        int a = m.alpha[d];
        if (a < 0 || a >= n) {
            alpha_ok = false;
            v.push_back("alpha out of range at dart " + std::to_string(d));
            break;
        }
        if (a == d) {
            alpha_ok = false;
            v.push_back("alpha fixed point at dart " + std::to_string(d));
            break;
        }
        if (m.alpha[a] != d) {
            alpha_ok = false;
            v.push_back("alpha is not an involution at dart " + std::to_string(d));
            break;
        }
    }
    for (int d = 0; d < n; ++d) {
        if (m.curve_of_dart[d] < 0) {
            v.push_back("negative curve identifier at dart " + std::to_string(d));
            break;
        }
    }
    if (!sigma_ok || !alpha_ok || !v.empty()) return diag;

    auto verts = orbits(n, [&](int d) { return m.sigma[d]; });
    std::vector<int> vert_of(n), pos(n);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (verts[i].size() % 2) v.push_back("odd valence at vertex " + std::to_string(verts[i].front()));
        for (int k = 0; k < static_cast<int>(verts[i].size()); ++k) {
            vert_of[verts[i][k]] = i;
            pos[verts[i][k]] = k;
        }
    }
    if (!v.empty()) return diag;

    auto opposite = [&](int d) {
        const auto& vv = verts[vert_of[d]];
        return vv[(pos[d] + vv.size() / 2) % vv.size()];
    };
    for (int d = 0; d < n; ++d) {
        if (m.curve_of_dart[m.alpha[d]] != m.curve_of_dart[d]) {
            v.push_back("edge joins two curves at dart " + std::to_string(d));
            return diag;
        }
    }
    auto cycles = orbits(n, [&](int d) { return m.alpha[opposite(d)]; });
    std::map<int, int> cycles_per_curve;
    for (const auto& cyc : cycles) {
        int c = m.curve_of_dart[cyc.front()];
        for (int d : cyc) {
            if (m.curve_of_dart[d] != c) {
                v.push_back("curve traversal inconsistency at dart " + std::to_string(d));
                return diag;
            }
        }
        ++cycles_per_curve[c];
    }
    for (auto [c, k] : cycles_per_curve) {
        if (k != 2) v.push_back("curve " + std::to_string(c) + " has several components");
    }
    for (int c = 0; c < m.num_curves(); ++c) {
        if (!cycles_per_curve.count(c)) v.push_back("curve " + std::to_string(c) + " owns no darts");
    }

    auto fcs = orbits(n, [&](int d) { return m.sigma[m.alpha[d]]; });
    std::map<int, int> key_to_face;
    for (int i = 0; i < static_cast<int>(fcs.size()); ++i) key_to_face[fcs[i].front()] = i;
    for (auto [key, gl] : m.face_genus) {
        if (!key_to_face.count(key)) v.push_back("face_genus key " + std::to_string(key) + " is not a face-key");
        if (gl < 0) v.push_back("negative face genus at " + std::to_string(key));
    }
    std::set<int> linked;
    for (const auto& grp : m.face_links) {
        if (grp.size() < 2) v.push_back("face link with fewer than two faces");
        for (int key : grp) {
            if (!key_to_face.count(key)) v.push_back("face_links key " + std::to_string(key) + " is not a face-key");
            if (!linked.insert(key).second) v.push_back("face " + std::to_string(key) + " linked twice");
        }
    }
    if (!v.empty()) return diag;

    int chi = static_cast<int>(verts.size()) - n / 2;
    int regions = static_cast<int>(fcs.size());
    int h = 0;
    for (auto [key, gl] : m.face_genus) h += gl;
    for (const auto& grp : m.face_links) regions -= static_cast<int>(grp.size()) - 1;
    // each region contributes 2 - 2h - b; summed this is 2*regions - 2*h - faces
    chi += 2 * regions - 2 * h - static_cast<int>(fcs.size());
    if ((2 - chi) % 2 != 0 || 2 - chi < 0) {
        v.push_back("Euler relation yields no valid genus (chi = " + std::to_string(chi) + ")");
    } else if (declared_genus && (2 - chi) / 2 != *declared_genus) {
        v.push_back("Euler mismatch: computed genus " + std::to_string((2 - chi) / 2) + ", declared " +
                    std::to_string(*declared_genus));
    }
    return diag;
}

Topology::Topology(const CombinatorialMap& m) : m_(&m) {
    auto diag = validate_map(m);
    if (!diag.ok()) throw std::invalid_argument("invalid map: " + join(diag.violations));
    const int n = m.num_darts();
    vertices_ = orbits(n, [&](int d) { return m.sigma[d]; });
    vertex_of_.assign(n, 0);
    pos_in_vertex_.assign(n, 0);
    for (int i = 0; i < num_vertices(); ++i) {
        for (int k = 0; k < valence(i); ++k) {
            vertex_of_[vertices_[i][k]] = i;
            pos_in_vertex_[vertices_[i][k]] = k;
        }
    }
    faces_ = orbits(n, [&](int d) { return m.sigma[m.alpha[d]]; });
    face_of_.assign(n, 0);
    for (int f = 0; f < num_faces(); ++f)
        for (int d : faces_[f]) face_of_[d] = f;

    region_of_.assign(num_faces(), -1);
    for (const auto& grp : m.face_links) {
        Region r;
        for (int key : grp) {
            int f = face_of_[key];
            r.faces.push_back(f);
            region_of_[f] = static_cast<int>(regions_.size());
        }
        std::sort(r.faces.begin(), r.faces.end());
        regions_.push_back(r);
    }
    for (int f = 0; f < num_faces(); ++f) {
        if (region_of_[f] >= 0) continue;
        region_of_[f] = static_cast<int>(regions_.size());
        regions_.push_back(Region{{f}, 0});
    }
    for (auto [key, gl] : m.face_genus) regions_[region_of_[face_of_[key]]].genus += gl;
}

int Topology::opposite(int d) const {
    const auto& vv = vertices_[vertex_of_[d]];
    return vv[(pos_in_vertex_[d] + vv.size() / 2) % vv.size()];
}

int Topology::face_index(int key) const {
    if (key < 0 || key >= m_->num_darts()) return -1;
    int f = face_of_[key];
    return faces_[f].front() == key ? f : -1;
}

int Topology::euler_characteristic() const {
    int chi = num_vertices() - num_edges();
    for (const auto& r : regions_) chi += r.euler();
    return chi;
}

int Topology::genus() const {
    int twice = 2 - euler_characteristic();
    if (twice < 0 || twice % 2) throw std::domain_error("Euler characteristic gives no valid genus");
    return twice / 2;
}

std::vector<Face> faces(const CombinatorialMap& m) {
    Topology t(m);
    std::vector<Face> out;
    for (int f = 0; f < t.num_faces(); ++f) {
        Face face;
        face.darts = t.face_darts(f);
        face.key = face.darts.front();
        const auto& reg = t.regions()[t.region_of_face(f)];
        face.genus = reg.genus;
        face.boundaries = static_cast<int>(reg.faces.size());
        for (int x : face.darts) {
            if (t.valence(t.vertex_of(x)) >= 4) {
                ++face.sides;
                face.side_curves.push_back(m.curve_of_dart[x]);
            }
        }
        out.push_back(std::move(face));
    }
    return out;
}

int genus(const CombinatorialMap& m) { return Topology(m).genus(); }

std::vector<Passage> trace_passages(const Topology& t, int curve) {
    const auto& m = t.map();
    int start = -1;
    for (int d = 0; d < m.num_darts(); ++d) {
        if (m.curve_of_dart[d] == curve) {
            start = d;
            break;
        }
    }
    if (start < 0) throw std::invalid_argument("unknown curve " + std::to_string(curve));
    std::vector<Passage> out;
    int d = start;
    do {
        out.push_back({t.vertex_of(d), d, t.opposite(d)});
        d = t.next_on_curve(d);
    } while (d != start);
    return out;
}

std::vector<int> trace_curve(const CombinatorialMap& m, int curve) {
    Topology t(m);
    std::vector<int> out;
    for (const auto& p : trace_passages(t, curve)) {
        out.push_back(p.in_dart);
        out.push_back(p.out_dart);
    }
    return out;
}

bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, const std::vector<int>& relabel) {
    const int n = a.num_darts();
    if (n != b.num_darts()) return false;
    if (n == 0) return true;
    Topology ta(a), tb(b);
    auto lab = [&](int c) { return c < static_cast<int>(relabel.size()) ? relabel[c] : -1; };
    for (int e0 = 0; e0 < n; ++e0) {
        if (b.curve_of_dart[e0] != lab(a.curve_of_dart[0])) continue;
        std::vector<int> img(n, -1), pre(n, -1);
        img[0] = e0;
        pre[e0] = 0;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int d = stack.back();
            stack.pop_back();
            int e = img[d];
            for (auto [f1, f2] : {std::pair{a.sigma[d], b.sigma[e]}, std::pair{a.alpha[d], b.alpha[e]}}) {
                if (b.curve_of_dart[f2] != lab(a.curve_of_dart[f1])) {
                    ok = false;
                    break;
                }
                if (img[f1] >= 0) {
                    if (img[f1] != f2) {
                        ok = false;
                        break;
                    }
                } else {
                    if (pre[f2] >= 0) {
                        ok = false;
                        break;
                    }
                    img[f1] = f2;
                    pre[f2] = f1;
                    stack.push_back(f1);
                }
            }
        }
        if (!ok || std::count(img.begin(), img.end(), -1)) continue;
        // regions must correspond as well
        std::map<int, int> reg;
        bool regions_ok = true;
        for (int f = 0; f < ta.num_faces() && regions_ok; ++f) {
            int g = tb.face_of(img[ta.face_key(f)]);
            const auto& ra = ta.regions()[ta.region_of_face(f)];
            const auto& rb = tb.regions()[tb.region_of_face(g)];
            if (ra.genus != rb.genus || ra.faces.size() != rb.faces.size()) regions_ok = false;
            auto [it, fresh] = reg.emplace(ta.region_of_face(f), tb.region_of_face(g));
            if (!fresh && it->second != tb.region_of_face(g)) regions_ok = false;
        }
        if (regions_ok) return true;
    }
    return false;
}

int Diagram::add_vertex(std::vector<Slot> slots) {
    rot.push_back(std::move(slots));
    return static_cast<int>(rot.size()) - 1;
}

int Diagram::position(int c, int v, int occ) const {
    int seen = 0;
    for (int t = 0; t < static_cast<int>(seq[c].size()); ++t) {
        if (seq[c][t] == v && seen++ == occ) return t;
    }
    throw std::logic_error("vertex not on curve");
}

Diagram to_diagram(const CombinatorialMap& m) {
    Topology t(m);
    Diagram d;
    const int C = m.num_curves();
    d.seq.resize(C);
    d.rot.resize(t.num_vertices());
    std::vector<Slot> slot_of(m.num_darts());
    for (int c = 0; c < C; ++c) {
        std::map<int, int> seen;
        for (const auto& p : trace_passages(t, c)) {
            int occ = seen[p.vertex]++;
            d.seq[c].push_back(p.vertex);
            slot_of[p.in_dart] = Slot{c, occ, false, p.in_dart};
            slot_of[p.out_dart] = Slot{c, occ, true, p.out_dart};
        }
    }
    for (int v = 0; v < t.num_vertices(); ++v)
        for (int x : t.vertex_darts(v)) d.rot[v].push_back(slot_of[x]);
    return d;
}

BuiltMap build_map(const Diagram& d) {
    const int C = static_cast<int>(d.seq.size());
    std::vector<int> base(C + 1, 0);
    for (int c = 0; c < C; ++c) {
        if (d.seq[c].empty()) throw std::logic_error("curve " + std::to_string(c) + " lost all its vertices");
        base[c + 1] = base[c] + 2 * static_cast<int>(d.seq[c].size());
    }
    const int n = base[C];
    BuiltMap out;
    auto& m = out.map;
    m.sigma.assign(n, -1);
    m.alpha.assign(n, -1);
    m.curve_of_dart.assign(n, -1);
    out.origin.assign(n, -1);
    std::vector<std::map<std::pair<int, int>, int>> where(C);
    for (int c = 0; c < C; ++c) {
        const int L = static_cast<int>(d.seq[c].size());
        std::map<int, int> seen;
        for (int t = 0; t < L; ++t) {
            where[c][{d.seq[c][t], seen[d.seq[c][t]]++}] = t;
            int o = base[c] + 2 * t + 1, i = base[c] + 2 * ((t + 1) % L);
            m.alpha[o] = i;
            m.alpha[i] = o;
            m.curve_of_dart[o] = m.curve_of_dart[o - 1] = c;
        }
    }
    std::vector<char> placed(n, 0);
    for (int v = 0; v < static_cast<int>(d.rot.size()); ++v) {
        const auto& r = d.rot[v];
        if (r.empty()) continue;
        std::vector<int> ids;
        for (const auto& s : r) {
            auto it = where[s.curve].find({v, s.occ});
            if (it == where[s.curve].end()) throw std::logic_error("slot refers to a visit that does not exist");
            int id = base[s.curve] + 2 * it->second + (s.out ? 1 : 0);
            if (placed[id]++) throw std::logic_error("dart placed twice in the rotation system");
            out.origin[id] = s.origin;
            ids.push_back(id);
        }
        for (size_t k = 0; k < ids.size(); ++k) m.sigma[ids[k]] = ids[(k + 1) % ids.size()];
    }
    if (std::count(placed.begin(), placed.end(), 0)) throw std::logic_error("diagram rotation does not cover every dart");
    return out;
}

void inherit_regions(const CombinatorialMap& source, BuiltMap& built, const std::vector<RegionUnion>& unions) {
    Topology ts(source);
    built.map.face_genus.clear();
    built.map.face_links.clear();
    Topology tn(built.map);
    const int R = static_cast<int>(ts.regions().size());
    UnionFind uf(R);
    auto region_of = [&](int d) { return ts.region_of_face(ts.face_of(d)); };
    for (const auto& u : unions)
        for (size_t k = 1; k < u.darts.size(); ++k) uf.unite(region_of(u.darts[0]), region_of(u.darts[k]));
    std::vector<int> first_region(tn.num_faces(), -1);
    for (int f = 0; f < tn.num_faces(); ++f) {
        for (int d : tn.face_darts(f)) {
            int o = built.origin[d];
            if (o < 0) continue;
            int r = region_of(o);
            if (first_region[f] < 0) first_region[f] = r;
            else uf.unite(first_region[f], r);
        }
    }
    std::map<int, int> chi;
    for (int r = 0; r < R; ++r) chi[uf.find(r)] += ts.regions()[r].euler();
    for (const auto& u : unions) chi[uf.find(region_of(u.darts[0]))] += u.chi_delta;

    std::map<int, std::vector<int>> classes;  // root -> new faces; fresh faces get negative ids
    for (int f = 0; f < tn.num_faces(); ++f) {
        int key = first_region[f] >= 0 ? uf.find(first_region[f]) : -1 - f;
        classes[key].push_back(f);
    }
    // a vanishing class must have been a disk
    for (auto [root, x] : chi) {
        if (!classes.count(root) && x != 1) throw std::logic_error("surgery swallowed a region that is not a disk");
    }
    for (const auto& [root, fs] : classes) {
        const int b = static_cast<int>(fs.size());
        const int x = root >= 0 ? chi[root] : 1;
        const int twice_h = 2 - b - x;
        if (twice_h < 0 || twice_h % 2) throw std::logic_error("region bookkeeping produced an impossible surface");
        std::vector<int> keys;
        for (int f : fs) keys.push_back(tn.face_key(f));
        std::sort(keys.begin(), keys.end());
        if (twice_h > 0) built.map.face_genus[keys.front()] = twice_h / 2;
        if (b > 1) built.map.face_links.push_back(keys);
    }
    std::sort(built.map.face_links.begin(), built.map.face_links.end());
}

std::vector<Slot> crossing_slots(int a, int b, int sign) {
    if (sign > 0) return {{a, 0, true}, {b, 0, true}, {a, 0, false}, {b, 0, false}};
    return {{a, 0, true}, {b, 0, false}, {a, 0, false}, {b, 0, true}};
}

void perturb_pencil(Diagram& d, int v) {
    const std::vector<Slot> rot = d.rot[v];
    const int k2 = static_cast<int>(rot.size());
    const int k = k2 / 2;
    if (k < 3) throw std::invalid_argument("vertex is not a pencil");
    struct Strand {
        int curve, occ, q_out = -1, q_in = -1, o_out = -1, o_in = -1;
    };
    std::vector<Strand> strands;
    for (int q = 0; q < k2; ++q) {
        const auto& s = rot[q];
        auto it = std::find_if(strands.begin(), strands.end(),
                               [&](const Strand& x) { return x.curve == s.curve && x.occ == s.occ; });
        if (it == strands.end()) {
            strands.push_back({s.curve, s.occ});
            it = strands.end() - 1;
        }
        (s.out ? it->q_out : it->q_in) = q;
        (s.out ? it->o_out : it->o_in) = s.origin;
    }
    std::set<int> curves;
    for (const auto& s : strands) {
        if (!curves.insert(s.curve).second)
            throw std::invalid_argument("two strands of one curve pass through the pencil");
        if (s.q_in != (s.q_out + k) % k2) throw std::invalid_argument("pencil strand does not pass straight through");
    }
    const int n = static_cast<int>(strands.size());
    std::vector<std::vector<std::pair<int, int>>> along(n);  // (order key, new vertex)
    std::vector<std::vector<int>> vid(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const auto& A = strands[a];
            const auto& B = strands[b];
            std::vector<std::pair<int, Slot>> rays{{A.q_out, {A.curve, 0, true}},
                                                   {(A.q_out + k) % k2, {A.curve, 0, false}},
                                                   {B.q_out, {B.curve, 0, true}},
                                                   {(B.q_out + k) % k2, {B.curve, 0, false}}};
            std::sort(rays.begin(), rays.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<Slot> slots;
            for (auto& r : rays) slots.push_back(r.second);
            int x = d.add_vertex(slots);
            vid[a][b] = vid[b][a] = x;
            along[a].push_back({(((B.q_out - A.q_out) % k2 + k2) % k2 + k) % k2, x});
            along[b].push_back({(((A.q_out - B.q_out) % k2 + k2) % k2 + k) % k2, x});
        }
    }
    for (int a = 0; a < n; ++a) {
        auto& list = along[a];
        std::sort(list.begin(), list.end());
        const auto& A = strands[a];
        auto& seq = d.seq[A.curve];
        int t = d.position(A.curve, v, A.occ);
        std::vector<int> ins;
        for (auto& [key, x] : list) ins.push_back(x);
        seq.erase(seq.begin() + t);
        seq.insert(seq.begin() + t, ins.begin(), ins.end());
        for (auto& s : d.rot[ins.front()])
            if (s.curve == A.curve && !s.out) s.origin = A.o_in;
        for (auto& s : d.rot[ins.back()])
            if (s.curve == A.curve && s.out) s.origin = A.o_out;
    }
    d.rot[v].clear();
}

PerturbResult perturb_pencil(const CombinatorialMap& m, int vertex_key, PencilSide side) {
    Topology t(m);
    int v = -1;
    for (int i = 0; i < t.num_vertices(); ++i)
        if (t.vertex_key(i) == vertex_key) v = i;
    if (v < 0) throw std::invalid_argument("not a vertex key: " + std::to_string(vertex_key));
    if (t.valence(v) < 6) throw std::invalid_argument("vertex is not a pencil");
    Diagram d = to_diagram(m);
    PerturbResult res;
    res.disk.side = side;
    for (const auto& s : d.rot[v]) {
        res.disk.boundary_order.push_back({s.curve, s.out ? EndTag::S1 : EndTag::S2});
        if (s.out) res.disk.member_curves.push_back(s.curve);
    }
    std::sort(res.disk.member_curves.begin(), res.disk.member_curves.end());
    perturb_pencil(d, v);
    BuiltMap b = build_map(d);
    inherit_regions(m, b, {});
    res.map = std::move(b.map);
    return res;
}

CombinatorialMap collapse_triangle(const CombinatorialMap& m, int face_key) {
    Topology t(m);
    int f = t.face_index(face_key);
    if (f < 0) throw std::invalid_argument("not a face-key: " + std::to_string(face_key));
    const auto& orb = t.face_darts(f);
    const auto& reg = t.regions()[t.region_of_face(f)];
    std::set<int> vs, cs;
    for (int x : orb) {
        vs.insert(t.vertex_of(x));
        cs.insert(m.curve_of_dart[x]);
    }
    bool corners_ok = orb.size() == 3 && vs.size() == 3 && reg.genus == 0 && reg.faces.size() == 1;
    for (int v : vs) corners_ok = corners_ok && t.valence(v) == 4;
    if (!corners_ok) throw std::invalid_argument("face is not a triangle");
    if (cs.size() != 3) throw std::invalid_argument("triangle sides are not on distinct curves");

    Diagram d = to_diagram(m);
    auto slot_of = [&](int x) -> const Slot& {
        for (const auto& s : d.rot[t.vertex_of(x)])
            if (s.origin == x) return s;
        throw std::logic_error("dart missing from diagram");
    };
    std::vector<Slot> outer;
    for (int x : {orb[1], orb[0], orb[2]}) {
        int s1 = m.sigma[x];
        for (int y : {s1, m.sigma[s1]}) {
            Slot s = slot_of(y);
            s.occ = 0;
            outer.push_back(s);
        }
    }
    int N = d.add_vertex(outer);
    for (int x : orb) {
        const Slot& s = slot_of(x);
        auto& seq = d.seq[s.curve];
        const int L = static_cast<int>(seq.size());
        int p = d.position(s.curve, t.vertex_of(x), s.occ);
        int lo = s.out ? p : (p - 1 + L) % L;
        int hi = (lo + 1) % L;
        seq[lo] = N;
        seq.erase(seq.begin() + hi);
    }
    for (int v : vs) d.rot[v].clear();
    BuiltMap b = build_map(d);
    inherit_regions(m, b, {});
    return b.map;
}

}  // namespace curvesys
