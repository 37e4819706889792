#include "curvesys/cubes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "curvesys/position.hpp"

namespace curvesys {

namespace {

bool one_system_matrix(const Matrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (i == j ? m[i][j] != 0 : m[i][j] > 1) return false;
    return true;
}

Matrix reduced_matrix(const CurveSystem& s) {
    Matrix m = intersection_matrix(s.map);
    if (one_system_matrix(m)) return m;
    return intersection_matrix(reduce(s).map);
}

// Bron-Kerbosch without pivoting for the hereditary property "pairwise
// crossing and every triple bounds a triangle".
class CubeSearch {
public:
    explicit CubeSearch(TriangleOracle& oracle) : tri_(oracle) {}

    std::vector<std::vector<int>> run(const std::vector<int>& subset) {
        std::vector<int> r;
        expand(r, subset, {});
        return std::move(found_);
    }

private:
    bool compatible(const std::vector<int>& r, int v, int w) {
        if (!tri_.intersects(v, w)) return false;
        for (int a : r)
            if (!tri_(a, v, w)) return false;
        return true;
    }

    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            std::vector<int> cube = r;
            std::sort(cube.begin(), cube.end());
            found_.push_back(cube);
            return;
        }
        while (!p.empty()) {
            const int v = p.front();
            std::vector<int> np, nx;
            for (int w : p)
                if (w != v && compatible(r, v, w)) np.push_back(w);
            for (int w : x)
                if (compatible(r, v, w)) nx.push_back(w);
            r.push_back(v);
            expand(r, np, nx);
            r.pop_back();
            p.erase(p.begin());
            x.push_back(v);
        }
    }

    TriangleOracle& tri_;
    std::vector<std::vector<int>> found_;
};

void require_one_system(const CurveSystem& s) {
    if (!is_one_system(s)) throw std::invalid_argument("system is not a 1-system");
}

}  // namespace

bool is_one_system(const CurveSystem& s) { return one_system_matrix(reduced_matrix(s)); }

bool is_complete_one_system(const CurveSystem& s) {
    Matrix m = reduced_matrix(s);
    if (!one_system_matrix(m)) return false;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (i != j && m[i][j] != 1) return false;
    return true;
}

TriangleOracle::TriangleOracle(const CurveSystem& s) : s_(&s), matrix_(reduced_matrix(s)) {}

bool TriangleOracle::operator()(int a, int b, int c) {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = forms_triangle(*s_, key);
    memo_.emplace(key, v);
    return v;
}

CubeReport maximal_cubes(TriangleOracle& oracle, const std::vector<int>& subset) {
    CubeReport rep;
    rep.maximal_cubes = CubeSearch(oracle).run(subset);
    std::sort(rep.maximal_cubes.begin(), rep.maximal_cubes.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    for (const auto& c : rep.maximal_cubes) rep.dimension = std::max(rep.dimension, static_cast<int>(c.size()));
    return rep;
}

CubeReport maximal_cubes(const CurveSystem& s) {
    require_one_system(s);
    TriangleOracle oracle(s);
    std::vector<int> all(s.num_curves());
    for (int i = 0; i < s.num_curves(); ++i) all[i] = i;
    if (all.empty()) return {};
    return maximal_cubes(oracle, all);
}

int cube_dimension(const CurveSystem& s) { return maximal_cubes(s).dimension; }

int subset_cube_dimension(const CurveSystem& s, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("empty subset");
    std::set<int> ids(subset.begin(), subset.end());
    for (int c : ids)
        if (c < 0 || c >= s.num_curves()) throw std::invalid_argument("subset is not within the system");
    require_one_system(s);
    TriangleOracle oracle(s);
    return maximal_cubes(oracle, {ids.begin(), ids.end()}).dimension;
}

SquareComplex dual_square_complex(const CurveSystem& s) {
    const auto& m = s.map;
    if (has_pencils(m)) throw std::invalid_argument("pencil vertices present");
    SquareComplex sc;
    const int C = s.num_curves();
    sc.hyperplanes.resize(C);
    if (m.num_darts() == 0) return sc;
    Topology t(m);
    for (int f = 0; f < t.num_faces(); ++f) sc.vertices.push_back(t.face_key(f));
    std::vector<int> edge_of(m.num_darts(), -1);
    for (int x = 0; x < m.num_darts(); ++x) {
        if (edge_of[x] >= 0) continue;
        edge_of[x] = edge_of[m.alpha[x]] = static_cast<int>(sc.edges.size());
        sc.edges.push_back({t.face_key(t.face_of(x)), t.face_key(t.face_of(m.alpha[x])), m.curve_of_dart[x]});
    }
    std::vector<int> square_of(t.num_vertices(), -1);
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (t.valence(v) != 4) continue;
        SquareComplex::Square sq;
        sq.crossing = t.vertex_key(v);
        for (int k = 0; k < 4; ++k) {
            int x = t.vertex_darts(v)[k];
            sq.edges[k] = edge_of[x];
            sq.corners[k] = t.face_key(t.face_of(x));
        }
        square_of[v] = static_cast<int>(sc.squares.size());
        sc.squares.push_back(sq);
    }
    for (int c = 0; c < C; ++c) {
        if (std::find(m.curve_of_dart.begin(), m.curve_of_dart.end(), c) == m.curve_of_dart.end()) continue;
        for (const auto& p : trace_passages(t, c))
            if (square_of[p.vertex] >= 0) sc.hyperplanes[c].push_back(square_of[p.vertex]);
    }
    return sc;
}

boost::multiprecision::cpp_int orbit_upper_bound(int g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    boost::multiprecision::cpp_int r = 1;
    for (int k = 2; k <= 2 * g * (2 * g + 1); ++k) r *= k;
    return r;
}

}  // namespace curvesys
