#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesys/system.hpp"

namespace curvesys {

using SignVector = std::vector<int>;

enum class Direction { Forward, Backward };

struct OrientedCurve {
    int curve = 0;
    Direction direction = Direction::Forward;
};

// Order in which the oriented curve crosses the targets. Without a reference
// the cyclic order is returned rotated so that its smallest element comes
// first; with a reference the walk starts right after the reference crossing.
// Throws std::invalid_argument when a target is not met exactly once.
std::vector<int> induced_ordering(const CurveSystem& s, OrientedCurve oc, const std::vector<int>& targets,
                                  std::optional<int> reference = std::nullopt);

bool cyclically_equivalent(const std::vector<int>& a, const std::vector<int>& b);

// The two coherent orientation assignments on the up first members, negatives
// of each other. Requires gamma metadata with |U| >= 2 and |D| >= 1.
std::vector<std::vector<OrientedCurve>> coherent_orientation_classes(const CurveSystem& s);

struct PolygonEdge {
    int from = 0, to = 0;  // vertex indices
    int M = 0, N = 0;
};

struct LabeledPolygon {
    std::vector<PencilEnd> vertices;
    std::vector<int> partition;  // 1 or 2 per vertex
    std::vector<PolygonEdge> r1, r2;
    int num_up = 0, num_down = 0;

    int sum_n(int cls) const;
    int sum_m(int cls) const;
};

// Throws std::invalid_argument without gamma metadata or for degenerate sign
// vectors, std::logic_error when the arrow-count recomputation disagrees.
LabeledPolygon labeled_polygon(const CurveSystem& s);

// Least element of the orbit under rotation, reflection and negation.
SignVector canonical_orbit(const SignVector& e);
bool sign_orbit_equivalent(const SignVector& a, const SignVector& b);

SignVector reconstruct_epsilon(const LabeledPolygon& p);

enum class IsoMode { Dihedral, Rotation };
bool polygon_isomorphic(const LabeledPolygon& a, const LabeledPolygon& b, IsoMode mode = IsoMode::Dihedral);

long long sign_orbit_count_burnside(int g);
long long sign_orbit_count_brute(int g);
// Throws std::logic_error if the two counts disagree.
long long sign_orbit_count(int g);

// Orbit invariant of gamma(e): sorted maximal cube sizes and, when |U| >= 2
// and |D| >= 1 after normalizing by negation, the reconstructed polygon word.
struct OrbitKey {
    std::vector<int> cube_sizes;
    std::optional<SignVector> polygon_word;
    bool operator==(const OrbitKey&) const = default;
    auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey orbit_key(const SignVector& e);

enum class Verdict { DistinctOrbits, SameOrbit, Unresolved };
const char* verdict_name(Verdict v);

struct DistinguishReport {
    OrbitKey key1, key2;
    bool coarse_separates = false;
    bool polygon_separates = false;
    bool group_equivalent = false;
    Verdict verdict = Verdict::Unresolved;
};

// Throws std::logic_error if the invariants separate group-equivalent vectors.
DistinguishReport distinguish(const SignVector& a, const SignVector& b);
DistinguishReport distinguish(const OrbitKey& ka, const OrbitKey& kb, const SignVector& a, const SignVector& b);

// Pencil ends of the combined cyclic order tagged as arrows: true = outward.
std::vector<bool> arrow_sequence(const GammaMetadata& meta);

}  // namespace curvesys
