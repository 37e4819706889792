#pragma once

#include <vector>

#include "curvesys/system.hpp"

namespace curvesys {

// Gamma(eps) for a sign vector of odd length g >= 3. Curve 2i is the first
// member of pair i (up when eps[i] = +1, down otherwise), curve 2i+1 its
// partner, curve 2g is delta. Names follow a1, a2, ... for up pairs and
// b1, b2, ... for down pairs, indexed by pair.
CurveSystem gamma(const std::vector<int>& eps);

// Triple classification for gamma(eps): a triple forms a triangle iff it
// contains a partner pair, or it is {x, y, delta} with x, y of opposite roles,
// or it consists of three curves of one role.
bool gamma_triangle_expected(const std::vector<int>& eps, int a, int b, int c);

// Maximal cube families of gamma(eps): the up curves, the down curves, each
// up pair plus each down pair plus delta, and for a single sign each pair plus
// delta. Each cube sorted, list in the order used by maximal_cubes.
std::vector<std::vector<int>> gamma_expected_cubes(const std::vector<int>& eps);

// One pencil point whose strands leave and enter in the given
// counterclockwise boundary order; curves are numbered by first appearance.
CurveSystem pencil_system(const std::vector<PencilEnd>& boundary);

// Standard maximum complete 1-systems on genus 1 and 2.
CurveSystem canonical(int g);

// Position on the trace of curve c right after its crossing with the curve of
// lowest id.
int default_stabilization_point(const CurveSystem& s, int c);

// Adds a handle along curve c at the arc after trace position point and two
// new curves c' and c'' running parallel to c.
CurveSystem stabilize(const CurveSystem& s, int c, int point);
inline CurveSystem stabilize(const CurveSystem& s, int c) {
    return stabilize(s, c, default_stabilization_point(s, c));
}

bool is_filling(const CurveSystem& s, int declared_genus);

}  // namespace curvesys
