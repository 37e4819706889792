#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesys/surface_map.hpp"

namespace curvesys {

enum class Role { Up, Down, Delta, DeltaPrime, DeltaDoublePrime, Plain };

const char* role_name(Role r);
std::optional<Role> parse_role(const std::string& s);

struct CurveInfo {
    int id = 0;
    std::string name;
    std::optional<Role> role;
    std::optional<int> partner;
};

// Generator bookkeeping for gamma systems. combined_order is the cyclic order of
// the pencil ends of all first members (one curve per partner pair), up and down
// together; restricted to the up members it is the polygon vertex order.
struct GammaMetadata {
    std::vector<int> epsilon;
    int delta = -1;
    std::vector<PencilEnd> combined_order;
};

struct CurveSystem {
    CombinatorialMap map;
    std::vector<CurveInfo> curves;  // indexed by curve id
    std::vector<PencilDisk> pencils;
    std::optional<int> genus_declared;
    std::optional<GammaMetadata> gamma;

    int num_curves() const { return static_cast<int>(curves.size()); }
    // Accepts a numeric id or a display name; -1 when unknown.
    int find_curve(const std::string& key) const;
    const PencilDisk* pencil(PencilSide side) const;
};

// Fills curves with default names c<i> for every curve id of the map.
CurveSystem make_system(CombinatorialMap m);

Diagnostics validate_system(const CurveSystem& s);

using Matrix = std::vector<std::vector<int>>;

// Off-diagonal: shared crossings. Diagonal: self-crossings. A pencil of k
// strands counts as a crossing for each of its k(k-1)/2 strand pairs.
Matrix intersection_matrix(const CombinatorialMap& m);
inline Matrix intersection_matrix(const CurveSystem& s) { return intersection_matrix(s.map); }

int total_crossings(const Matrix& m);  // upper triangle plus diagonal
bool has_pencils(const CombinatorialMap& m);

}  // namespace curvesys
