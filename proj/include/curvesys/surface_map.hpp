#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvesys {

// Darts are half-edges. sigma turns counterclockwise around a vertex, alpha
// swaps the two halves of an edge, faces are the orbits of sigma∘alpha.
//
// A face belongs to a complementary region. By default every face is its own
// region with genus label face_genus[key] (0 when absent). face_links groups
// faces that bound one common region; the region genus is then the sum of the
// labels of its faces.
struct CombinatorialMap {
    std::vector<int> sigma;
    std::vector<int> alpha;
    std::vector<int> curve_of_dart;
    std::map<int, int> face_genus;
    std::vector<std::vector<int>> face_links;

    int num_darts() const { return static_cast<int>(sigma.size()); }
    int num_curves() const;
};

struct Diagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

Diagnostics validate_map(const CombinatorialMap& m, std::optional<int> declared_genus = std::nullopt);

struct Region {
    std::vector<int> faces;  // indices into Topology faces
    int genus = 0;
    int euler() const { return 2 - 2 * genus - static_cast<int>(faces.size()); }
};

// Orbit structure of a validated map. Construction throws std::invalid_argument
// with the list of violations when the map is malformed.
class Topology {
public:
    explicit Topology(const CombinatorialMap& m);

    const CombinatorialMap& map() const { return *m_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return m_->num_darts() / 2; }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    int vertex_of(int d) const { return vertex_of_[d]; }
    const std::vector<int>& vertex_darts(int v) const { return vertices_[v]; }
    int vertex_key(int v) const { return vertices_[v].front(); }
    int valence(int v) const { return static_cast<int>(vertices_[v].size()); }
    int opposite(int d) const;   // sigma^(val/2)(d)
    int next_on_curve(int d) const { return m_->alpha[opposite(d)]; }

    int face_of(int d) const { return face_of_[d]; }
    const std::vector<int>& face_darts(int f) const { return faces_[f]; }
    int face_key(int f) const { return faces_[f].front(); }
    int face_index(int key) const;  // -1 if key is not a face-key

    const std::vector<Region>& regions() const { return regions_; }
    int region_of_face(int f) const { return region_of_[f]; }

    int euler_characteristic() const;
    int genus() const;  // throws std::domain_error on impossible Euler counts

private:
    const CombinatorialMap* m_;
    std::vector<int> vertex_of_;
    std::vector<std::vector<int>> vertices_;
    std::vector<int> pos_in_vertex_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    std::vector<Region> regions_;
    std::vector<int> region_of_;
};

struct Face {
    int key = 0;
    std::vector<int> darts;
    int sides = 0;
    int genus = 0;       // genus label of the surrounding region
    int boundaries = 1;  // number of faces bounding that region
    std::vector<int> side_curves;
    bool is_disk() const { return genus == 0 && boundaries == 1; }
};

std::vector<Face> faces(const CombinatorialMap& m);
int genus(const CombinatorialMap& m);

// One pass of a curve through a vertex. Forward orientation of a curve is the
// traversal cycle through its smallest dart, which is always an entry dart.
struct Passage {
    int vertex;  // Topology vertex index
    int in_dart;
    int out_dart;
};

std::vector<Passage> trace_passages(const Topology& t, int curve);
std::vector<int> trace_curve(const CombinatorialMap& m, int curve);

// Labeled isomorphism: a bijection of darts commuting with sigma and alpha that
// sends curve c to relabel[c].
bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b, const std::vector<int>& relabel);

// ---------------------------------------------------------------------------
// Gauss-style working form used by every surgery. A vertex is a list of slots in
// counterclockwise order; slot (curve, occ, out) is the entry (out=false) or exit
// dart of the occ-th visit of curve to that vertex. origin remembers the dart of
// the source map the slot descends from, -1 when freshly created.

struct Slot {
    int curve = 0;
    int occ = 0;
    bool out = false;
    int origin = -1;
};

struct Diagram {
    std::vector<std::vector<int>> seq;   // per curve, vertex ids along the forward direction
    std::vector<std::vector<Slot>> rot;  // per vertex id; empty means deleted

    int add_vertex(std::vector<Slot> slots);
    // Position of the occ-th visit of vertex v on curve c.
    int position(int c, int v, int occ) const;
};

struct BuiltMap {
    CombinatorialMap map;
    std::vector<int> origin;  // new dart -> source dart or -1
};

Diagram to_diagram(const CombinatorialMap& m);
BuiltMap build_map(const Diagram& d);

// Faces of the new map inherit the complementary regions of the source map
// through surviving darts. Each union merges the regions of the listed source
// darts and shifts the Euler characteristic of the result by chi_delta. New
// faces with no surviving dart are disks.
struct RegionUnion {
    std::vector<int> darts;
    int chi_delta = 0;
};

void inherit_regions(const CombinatorialMap& source, BuiltMap& built, const std::vector<RegionUnion>& unions);

// ccw slots of a transverse crossing; sign +1 means b leaves to the left of a.
std::vector<Slot> crossing_slots(int a, int b, int sign);

// ---------------------------------------------------------------------------
// Pencil surgery.

enum class EndTag { S1, S2 };
enum class PencilSide { UpPencil, DownPencil };

struct PencilEnd {
    int curve;
    EndTag tag;
    bool operator==(const PencilEnd&) const = default;
};

struct PencilDisk {
    std::vector<int> member_curves;
    std::vector<PencilEnd> boundary_order;  // counterclockwise
    PencilSide side = PencilSide::UpPencil;
};

struct PerturbResult {
    CombinatorialMap map;
    PencilDisk disk;
};

// Replaces the pencil at the vertex whose key is vertex_key by k(k-1)/2
// crossings: the strands become directed lines tangent to a small circle.
PerturbResult perturb_pencil(const CombinatorialMap& m, int vertex_key, PencilSide side = PencilSide::UpPencil);

// In-place variant on a diagram, used by the generator.
void perturb_pencil(Diagram& d, int vertex);

// Merges the three corners of a disk triangle into one valence-6 vertex.
CombinatorialMap collapse_triangle(const CombinatorialMap& m, int face_key);

}  // namespace curvesys
