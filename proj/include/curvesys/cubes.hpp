#pragma once

#include <array>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curvesys/system.hpp"

namespace curvesys {

bool is_one_system(const CurveSystem& s);
bool is_complete_one_system(const CurveSystem& s);

// Memoized forms_triangle over one system.
class TriangleOracle {
public:
    explicit TriangleOracle(const CurveSystem& s);
    bool operator()(int a, int b, int c);
    bool intersects(int a, int b) const { return matrix_[a][b] > 0; }
    int num_curves() const { return static_cast<int>(matrix_.size()); }
    int queries() const { return static_cast<int>(memo_.size()); }

private:
    const CurveSystem* s_;
    Matrix matrix_;
    std::map<std::array<int, 3>, bool> memo_;
};

struct CubeReport {
    std::vector<std::vector<int>> maximal_cubes;  // sorted; larger cubes first
    int dimension = 0;
};

// Throw std::invalid_argument unless the system is a 1-system.
CubeReport maximal_cubes(const CurveSystem& s);
CubeReport maximal_cubes(TriangleOracle& oracle, const std::vector<int>& subset);
int cube_dimension(const CurveSystem& s);
int subset_cube_dimension(const CurveSystem& s, const std::vector<int>& subset);

struct SquareComplex {
    struct Edge {
        int from_face, to_face, curve;
    };
    struct Square {
        int crossing;                 // vertex key in the realization
        std::array<int, 4> edges;     // indices into edges
        std::array<int, 4> corners;   // face keys
    };
    std::vector<int> vertices;  // face keys
    std::vector<Edge> edges;
    std::vector<Square> squares;
    std::vector<std::vector<int>> hyperplanes;  // per curve, squares in trace order

    int euler_characteristic() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(squares.size());
    }
};

SquareComplex dual_square_complex(const CurveSystem& s);

// (2g(2g+1))! for g >= 2.
boost::multiprecision::cpp_int orbit_upper_bound(int g);

}  // namespace curvesys
