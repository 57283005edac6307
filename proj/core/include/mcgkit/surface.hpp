#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mcg {

// A compact surface given as a polygon gluing scheme: a list of faces, each a
// cyclic word of directed side tokens. A label occurring twice is an interior
// edge, once a boundary edge. Vertices are corner orbits under the gluing.
//
// All values are immutable after construction; operations are pure.

struct Side {
    int label = -1;      // index into label_names
    bool reversed = false;
};

inline bool operator==(const Side& a, const Side& b) {
    return a.label == b.label && a.reversed == b.reversed;
}

struct SurfaceType {
    bool orientable = false;
    int genus = 0;       // orientable only; 0 otherwise
    int crosscaps = 0;   // non-orientable only; 0 otherwise
    int boundary = 0;
    int euler = 0;
    bool excluded = false;  // sphere, disk, cylinder, Mobius band, torus,
                            // Klein bottle, or projective plane
};

bool operator==(const SurfaceType& a, const SurfaceType& b);

// One side occurrence, addressed as (face, index within the face word).
struct Occ {
    int face = -1;
    int index = -1;
};

struct BoundaryStep {
    int label = -1;
    int sign = +1;  // +1: traversed tail->head along the surface boundary walk
};

class CombSurface {
public:
    // Builds and validates. Throws Error("LabelArity") if a label occurs more
    // than twice, Error("EmptyScheme") / Error("MalformedToken") on bad input,
    // and Error("Disconnected") when require_connected and the gluing is not
    // connected over shared labels.
    static CombSurface build(std::vector<std::string> label_names,
                             std::vector<std::vector<Side>> faces,
                             bool require_connected = true,
                             std::string name = {});

    const std::string& name() const { return name_; }
    const std::vector<std::string>& label_names() const { return label_names_; }
    const std::vector<std::vector<Side>>& faces() const { return faces_; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    int edge_count() const { return static_cast<int>(label_names_.size()); }
    int vertex_count() const { return vertex_count_; }
    bool connected() const { return connected_; }

    // Occurrences of a label, size 1 (boundary) or 2 (interior).
    const std::vector<Occ>& occurrences(int label) const { return occ_[label]; }
    bool is_boundary_label(int label) const { return occ_[label].size() == 1; }

    // Vertex orbit of corner i of face f. Corner i sits between side i-1 and
    // side i of the face word.
    int corner_vertex(int face, int corner) const { return corner_vertex_[face][corner]; }

    int euler_characteristic() const;

    // Boundary components as cyclic walks; count is the r of classify().
    const std::vector<std::vector<BoundaryStep>>& boundary_components() const {
        return boundary_;
    }

    // Throws Error("Disconnected") on multi-component schemes.
    SurfaceType classify() const;

    bool orientable() const;

    // The surface with every boundary circle capped by a disk face. New cap
    // labels are appended to label_names. Identity on closed surfaces.
    CombSurface cap_boundaries() const;

    std::optional<int> label_id(const std::string& label_name) const;

private:
    CombSurface() = default;

    std::string name_;
    std::vector<std::string> label_names_;
    std::vector<std::vector<Side>> faces_;

    std::vector<std::vector<Occ>> occ_;
    std::vector<std::vector<int>> corner_vertex_;
    int vertex_count_ = 0;
    bool connected_ = true;
    bool orientable_ = true;
    std::vector<std::vector<BoundaryStep>> boundary_;
};

// Parses the line-oriented surface file grammar:
//   surface <name>            (optional header)
//   face <tok> <tok> ...      (one line per face; tok = label, suffix '-'
//                              for reversed traversal)
//   # comment
CombSurface parse_scheme(const std::string& text, bool require_connected = true);

// Convenience: parse a single face word like "a b a- b-".
CombSurface scheme_from_word(const std::string& word, const std::string& name = {});

std::string surface_type_to_string(const SurfaceType& t);

} // namespace mcg
