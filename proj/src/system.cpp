#include "curvesys/system.hpp"

#include <algorithm>
#include <set>

namespace curvesys {

namespace {
constexpr const char* kRoleNames[] = {"Up", "Down", "Delta", "DeltaPrime", "DeltaDoublePrime", "Plain"};
}

const char* role_name(Role r) { return kRoleNames[static_cast<int>(r)]; }

std::optional<Role> parse_role(const std::string& s) {
    for (int i = 0; i < 6; ++i)
        if (s == kRoleNames[i]) return static_cast<Role>(i);
    return std::nullopt;
}

int CurveSystem::find_curve(const std::string& key) const {
    for (const auto& c : curves)
        if (c.name == key) return c.id;
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        int id = std::stoi(key);
        if (id < num_curves()) return id;
    }
    return -1;
}

const PencilDisk* CurveSystem::pencil(PencilSide side) const {
    for (const auto& p : pencils)
        if (p.side == side) return &p;
    return nullptr;
}

CurveSystem make_system(CombinatorialMap m) {
    CurveSystem s;
    const int C = m.num_curves();
    s.map = std::move(m);
    for (int c = 0; c < C; ++c) s.curves.push_back({c, "c" + std::to_string(c), std::nullopt, std::nullopt});
    return s;
}

Diagnostics validate_system(const CurveSystem& s) {
    Diagnostics d = validate_map(s.map, s.genus_declared);
    auto& v = d.violations;
    if (s.map.num_curves() > s.num_curves()) v.push_back("curve identifier missing from the curve roster");
    for (int i = 0; i < s.num_curves(); ++i) {
        const auto& c = s.curves[i];
        if (c.id != i) v.push_back("curve roster is not indexed by id at entry " + std::to_string(i));
        if (!c.partner) continue;
        int p = *c.partner;
        if (p < 0 || p >= s.num_curves() || p == i) {
            v.push_back("invalid partner for curve " + c.name);
            continue;
        }
        if (s.curves[p].partner != i) v.push_back("partner relation is not an involution at " + c.name);
        if (s.curves[p].role != c.role) v.push_back("partners " + c.name + " and " + s.curves[p].name + " differ in role");
    }
    for (const auto& p : s.pencils) {
        std::set<int> members(p.member_curves.begin(), p.member_curves.end());
        if (p.boundary_order.size() != 2 * members.size()) v.push_back("pencil boundary order has the wrong length");
        for (int c : members) {
            int k = 0;
            for (const auto& e : p.boundary_order) k += e.curve == c;
            if (k != 2) v.push_back("pencil member " + std::to_string(c) + " does not appear twice on the boundary");
        }
    }
    return d;
}

Matrix intersection_matrix(const CombinatorialMap& m) {
    const int C = m.num_curves();
    Matrix out(C, std::vector<int>(C, 0));
    if (m.num_darts() == 0) return out;
    Topology t(m);
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (t.valence(v) < 4) continue;
        const auto& darts = t.vertex_darts(v);
        const int k = t.valence(v) / 2;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                int ca = m.curve_of_dart[darts[a]], cb = m.curve_of_dart[darts[b]];
                if (ca == cb) ++out[ca][ca];
                else {
                    ++out[ca][cb];
                    ++out[cb][ca];
                }
            }
        }
    }
    return out;
}

int total_crossings(const Matrix& m) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i; j < m.size(); ++j) s += m[i][j];
    return s;
}

bool has_pencils(const CombinatorialMap& m) {
    if (m.num_darts() == 0) return false;
    Topology t(m);
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.valence(v) >= 6) return true;
    return false;
}

}  // namespace curvesys
