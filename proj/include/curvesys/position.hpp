#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "curvesys/system.hpp"

namespace curvesys {

struct CensusEntry {
    int face_key;
    std::vector<int> side_curves;
};

struct FaceCensus {
    std::vector<CensusEntry> monogons, bigons, triangles, others;
};

// Throws std::invalid_argument when pencil vertices are present.
FaceCensus classify_faces(const CombinatorialMap& m);
inline FaceCensus classify_faces(const CurveSystem& s) { return classify_faces(s.map); }

// Sub-diagram on the kept curves, renumbered densely in increasing order of
// their original ids. origin maps every dart of the restricted map to the
// source dart it descends from (-1 for markers of crossing-free curves).
struct Restriction {
    CurveSystem system;
    std::vector<int> original_id;
    std::vector<int> origin;
};

Restriction restrict_to(const CurveSystem& s, std::vector<int> keep);

// Local moves. Each throws std::invalid_argument when the face does not
// qualify. The curve roster and metadata are carried over unchanged.
CurveSystem remove_monogon(const CurveSystem& s, int face_key);
CurveSystem remove_bigon(const CurveSystem& s, int face_key);
CurveSystem reidemeister_iii(const CurveSystem& s, int face_key);

// Finger move of the curve of dart da across the curve of dart db inside their
// common disk face, creating one new bigon.
CurveSystem inflate_bigon(const CurveSystem& s, int da, int db);

struct ReduceStats {
    int monogons = 0;
    int bigons = 0;
    int pair_bigons = 0;
};

// Removes monogons and bigons until none is left. Innermost bigons of two-curve
// sub-diagrams are pushed across the arcs of other curves.
CurveSystem reduce(const CurveSystem& s, ReduceStats* stats = nullptr);

bool forms_triangle(const CurveSystem& s, std::array<int, 3> triple);

// Triangle search on an already restricted and reduced triple map.
bool has_disk_triangle(const CombinatorialMap& m);

}  // namespace curvesys
