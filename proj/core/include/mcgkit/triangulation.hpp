#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mcgkit/surface.hpp"

namespace mcg {

// An edge end: end 0 is the tail of the edge, end 1 the head. Loop edges have
// both ends at the same vertex but the two darts stay distinct.
struct Dart {
    int edge = -1;
    int end = 0;
};

inline bool operator==(const Dart& a, const Dart& b) {
    return a.edge == b.edge && a.end == b.end;
}

struct VertexProv {
    enum Kind { Orig, Cone, MidEdge, MidSpoke } kind = Orig;
    int a = -1, b = -1;  // Orig: scheme vertex; Cone: face; MidEdge: label;
                         // MidSpoke: (face, corner)
};

struct EdgeProv {
    enum Kind { HalfLabel, HalfSpoke, MidTri } kind = HalfLabel;
    int a = -1, b = -1, c = -1;  // HalfLabel: (label, half); HalfSpoke: (face,
                                 // corner, half); MidTri: (face, side, which)
};

// The combinatorial substitute for a smooth structure: each scheme face is
// coned from an interior point and the resulting triangles are midpoint
// subdivided once, so simple curves have room to run disjointly on the same
// carrier. Construction is deterministic for a given scheme.
class Triangulation {
public:
    struct Tri {
        std::array<int, 3> v{};        // corner vertices; side i joins corners i, i+1
        std::array<int, 3> edge{};
        std::array<bool, 3> forward{}; // side traversal agrees with edge tail->head
        int source_face = -1;
    };
    struct Edge {
        int tail = -1, head = -1;
        std::vector<std::pair<int, int>> inc;  // (triangle, side); size 1 or 2
        EdgeProv prov;
        bool boundary() const { return inc.size() == 1; }
        int end_vertex(int end) const { return end == 0 ? tail : head; }
    };

    static Triangulation refine(const CombSurface& s);

    const CombSurface& source() const { return *source_; }

    int tri_count() const { return static_cast<int>(tris_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vprov_.size()); }

    const Tri& tri(int t) const { return tris_[t]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const VertexProv& vertex_prov(int v) const { return vprov_[v]; }
    const std::vector<Tri>& tris() const { return tris_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int euler_characteristic() const {
        return vertex_count() - edge_count() + tri_count();
    }

    bool vertex_on_boundary(int v) const { return boundary_vertex_[v] != 0; }
    int boundary_edge_count() const { return boundary_edge_count_; }

    // Ordered darts around a vertex. For an interior vertex the list is
    // cyclic; for a boundary vertex it is a path whose first and last darts
    // are boundary edges.
    const std::vector<Dart>& fan(int v) const { return fans_[v]; }
    bool fan_cyclic(int v) const { return !vertex_on_boundary(v); }

    // Position of a dart in the fan of vertex v.
    int fan_index(int v, const Dart& d) const;

    // The side of triangle t whose edge is e reached from incidence slot k.
    // Convenience around Edge::inc.
    static std::array<int, 2> corner_sides(int c) { return {(c + 2) % 3, c}; }

    // Crossing interior edge e flips local chart orientation iff its two
    // incidences traverse it the same way. Parity of flips around a closed
    // curve is chart-independent.
    bool crossing_flips_orientation(int e) const;

    // In triangle t, the corner cut off by a chord joining sides s1 and s2,
    // or -1 when s1 == s2.
    static int cut_corner(int s1, int s2);

private:
    Triangulation() = default;

    std::optional<CombSurface> source_;

    std::vector<Tri> tris_;
    std::vector<Edge> edges_;
    std::vector<VertexProv> vprov_;
    std::vector<char> boundary_vertex_;
    std::vector<std::vector<Dart>> fans_;
    int boundary_edge_count_ = 0;

    void build_fans();
    void validate() const;
};

} // namespace mcg
