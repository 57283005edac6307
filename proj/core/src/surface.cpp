#include "mcgkit/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "mcgkit/error.hpp"

namespace mcg {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// A side end: (occurrence, which end in traversal order). S = start corner,
// E = end corner of the side as the face word is read.
enum class End { S, E };

struct SideEnd {
    Occ o;
    End w = End::S;
};

} // namespace

bool operator==(const SurfaceType& a, const SurfaceType& b) {
    return a.orientable == b.orientable && a.genus == b.genus &&
           a.crosscaps == b.crosscaps && a.boundary == b.boundary &&
           a.euler == b.euler && a.excluded == b.excluded;
}

CombSurface CombSurface::build(std::vector<std::string> label_names,
                               std::vector<std::vector<Side>> faces,
                               bool require_connected, std::string name) {
    CombSurface s;
    s.name_ = std::move(name);
    s.label_names_ = std::move(label_names);
    s.faces_ = std::move(faces);

    if (s.faces_.empty()) fail("EmptyScheme", "scheme has no faces");
    for (const auto& w : s.faces_)
        if (w.empty()) fail("EmptyScheme", "face word of length 0");

    const int L = static_cast<int>(s.label_names_.size());
    s.occ_.assign(L, {});
    for (int f = 0; f < static_cast<int>(s.faces_.size()); ++f) {
        const auto& w = s.faces_[f];
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            int lab = w[i].label;
            if (lab < 0 || lab >= L) fail("MalformedToken", "side references unknown label");
            if (s.occ_[lab].size() >= 2)
                fail("LabelArity", "label '" + s.label_names_[lab] + "' occurs more than twice");
            s.occ_[lab].push_back({f, i});
        }
    }
    for (int l = 0; l < L; ++l)
        if (s.occ_[l].empty())
            fail("LabelArity", "label '" + s.label_names_[l] + "' never occurs");

    // Corner numbering: corners of face f start at corner_base[f].
    std::vector<int> corner_base(s.faces_.size() + 1, 0);
    for (size_t f = 0; f < s.faces_.size(); ++f)
        corner_base[f + 1] = corner_base[f] + static_cast<int>(s.faces_[f].size());
    const int total_corners = corner_base.back();

    auto face_len = [&](int f) { return static_cast<int>(s.faces_[f].size()); };
    auto corner_id = [&](int f, int c) {
        int n = face_len(f);
        return corner_base[f] + ((c % n) + n) % n;
    };
    // Corner at a side end. Side i runs from corner i to corner i+1.
    auto end_corner = [&](const SideEnd& x) {
        return x.w == End::S ? corner_id(x.o.face, x.o.index)
                             : corner_id(x.o.face, x.o.index + 1);
    };
    auto side_of = [&](const Occ& o) -> const Side& { return s.faces_[o.face][o.index]; };
    // End of an occurrence lying at the edge's tail (resp. head) vertex.
    auto tail_end = [&](const Occ& o) { return SideEnd{o, side_of(o).reversed ? End::E : End::S}; };
    auto head_end = [&](const Occ& o) { return SideEnd{o, side_of(o).reversed ? End::S : End::E}; };

    // Vertex orbits: glue tail with tail and head with head of each interior
    // edge's two occurrences.
    UnionFind verts(total_corners);
    for (int l = 0; l < L; ++l) {
        if (s.occ_[l].size() == 2) {
            verts.unite(end_corner(tail_end(s.occ_[l][0])), end_corner(tail_end(s.occ_[l][1])));
            verts.unite(end_corner(head_end(s.occ_[l][0])), end_corner(head_end(s.occ_[l][1])));
        }
    }
    std::map<int, int> root_to_vertex;
    s.corner_vertex_.resize(s.faces_.size());
    for (size_t f = 0; f < s.faces_.size(); ++f) {
        s.corner_vertex_[f].resize(s.faces_[f].size());
        for (int c = 0; c < face_len(static_cast<int>(f)); ++c) {
            int root = verts.find(corner_id(static_cast<int>(f), c));
            auto [it, inserted] = root_to_vertex.try_emplace(root, static_cast<int>(root_to_vertex.size()));
            s.corner_vertex_[f][c] = it->second;
        }
    }
    s.vertex_count_ = static_cast<int>(root_to_vertex.size());

    // Connectivity of the face graph over shared labels.
    UnionFind comps(static_cast<int>(s.faces_.size()));
    for (int l = 0; l < L; ++l)
        if (s.occ_[l].size() == 2) comps.unite(s.occ_[l][0].face, s.occ_[l][1].face);
    int comp_count = 0;
    for (int f = 0; f < static_cast<int>(s.faces_.size()); ++f)
        if (comps.find(f) == f) ++comp_count;
    s.connected_ = (comp_count == 1);
    if (require_connected && !s.connected_)
        fail("Disconnected", "scheme has " + std::to_string(comp_count) + " components");

    // Orientability: 2-color faces so every interior edge is traversed once in
    // each direction. Parity union-find; the constraint for occurrences with
    // traversal signs s1, s2 is parity(f1) xor parity(f2) = (s1*s2 == +1).
    {
        const int F = static_cast<int>(s.faces_.size());
        UnionFind uf(2 * F); // node f = even, node F+f = odd
        bool orientable = true;
        for (int l = 0; l < L && orientable; ++l) {
            if (s.occ_[l].size() != 2) continue;
            int f1 = s.occ_[l][0].face, f2 = s.occ_[l][1].face;
            int s1 = side_of(s.occ_[l][0]).reversed ? -1 : +1;
            int s2 = side_of(s.occ_[l][1]).reversed ? -1 : +1;
            if (s1 * s2 > 0) {
                uf.unite(f1, F + f2);
                uf.unite(F + f1, f2);
            } else {
                uf.unite(f1, f2);
                uf.unite(F + f1, F + f2);
            }
        }
        for (int f = 0; f < F && orientable; ++f)
            if (uf.find(f) == uf.find(F + f)) orientable = false;
        s.orientable_ = orientable;
    }

    // Boundary components: walk side ends around vertices. From a side end,
    // cross its corner to the adjacent side end in the same face; interior
    // sides jump to the matching end of the partner occurrence.
    {
        auto cross_corner = [&](const SideEnd& x) -> SideEnd {
            int n = face_len(x.o.face);
            if (x.w == End::S)
                return SideEnd{{x.o.face, (x.o.index + n - 1) % n}, End::E};
            return SideEnd{{x.o.face, (x.o.index + 1) % n}, End::S};
        };
        auto partner = [&](const SideEnd& x) -> SideEnd {
            int lab = side_of(x.o).label;
            const Occ& o2 = (s.occ_[lab][0].face == x.o.face && s.occ_[lab][0].index == x.o.index)
                                ? s.occ_[lab][1]
                                : s.occ_[lab][0];
            bool x_is_tail = (tail_end(x.o).w == x.w);
            return x_is_tail ? tail_end(o2) : head_end(o2);
        };
        auto end_key = [&](const SideEnd& x) {
            return (corner_base[x.o.face] + x.o.index) * 2 + (x.w == End::E ? 1 : 0);
        };
        // Walk from a boundary side end to the next boundary side end sharing
        // its vertex.
        auto next_boundary_end = [&](SideEnd x) -> SideEnd {
            SideEnd y = cross_corner(x);
            while (s.occ_[side_of(y.o).label].size() == 2) y = cross_corner(partner(y));
            return y;
        };

        std::vector<char> seen(2 * total_corners, 0);
        for (int l = 0; l < L; ++l) {
            if (s.occ_[l].size() != 1) continue;
            const Occ o = s.occ_[l][0];
            for (End w0 : {End::S, End::E}) {
                SideEnd from{o, w0};
                if (seen[end_key(from)]) continue;
                // Trace the whole component, consuming each occurrence from
                // the end we reach it at.
                std::vector<BoundaryStep> comp;
                SideEnd cur = from;
                do {
                    seen[end_key(cur)] = 1;
                    // Traverse cur.o from cur.w to its other end.
                    int sigma = side_of(cur.o).reversed ? -1 : +1;
                    int dir = (cur.w == End::S) ? sigma : -sigma;
                    comp.push_back({side_of(cur.o).label, dir});
                    SideEnd other{cur.o, cur.w == End::S ? End::E : End::S};
                    seen[end_key(other)] = 1;
                    cur = next_boundary_end(other);
                } while (end_key(cur) != end_key(from));
                s.boundary_.push_back(std::move(comp));
            }
        }
        // Deterministic order: by least label id in the component.
        std::sort(s.boundary_.begin(), s.boundary_.end(),
                  [](const auto& a, const auto& b) {
                      int ma = a[0].label, mb = b[0].label;
                      for (const auto& st : a) ma = std::min(ma, st.label);
                      for (const auto& st : b) mb = std::min(mb, st.label);
                      return ma < mb;
                  });
    }

    return s;
}

int CombSurface::euler_characteristic() const {
    return vertex_count_ - edge_count() + face_count();
}

bool CombSurface::orientable() const { return orientable_; }

SurfaceType CombSurface::classify() const {
    if (!connected_) fail("Disconnected", "classify requires a connected scheme");
    SurfaceType t;
    t.euler = euler_characteristic();
    t.boundary = static_cast<int>(boundary_.size());
    t.orientable = orientable_;
    if (t.orientable) {
        int twog = 2 - t.euler - t.boundary;
        if (twog < 0 || twog % 2 != 0)
            fail("Internal", "impossible orientable type: chi=" + std::to_string(t.euler));
        t.genus = twog / 2;
    } else {
        t.crosscaps = 2 - t.euler - t.boundary;
        if (t.crosscaps < 1)
            fail("Internal", "impossible non-orientable type: chi=" + std::to_string(t.euler));
    }
    const bool sphere = t.orientable && t.genus == 0 && t.boundary == 0;
    const bool disk = t.orientable && t.genus == 0 && t.boundary == 1;
    const bool cylinder = t.orientable && t.genus == 0 && t.boundary == 2;
    const bool torus = t.orientable && t.genus == 1 && t.boundary == 0;
    const bool mobius = !t.orientable && t.crosscaps == 1 && t.boundary == 1;
    const bool klein = !t.orientable && t.crosscaps == 2 && t.boundary == 0;
    const bool projective = !t.orientable && t.crosscaps == 1 && t.boundary == 0;
    t.excluded = sphere || disk || cylinder || torus || mobius || klein || projective;
    return t;
}

CombSurface CombSurface::cap_boundaries() const {
    auto labels = label_names_;
    auto faces = faces_;
    for (size_t c = 0; c < boundary_.size(); ++c) {
        std::vector<Side> cap;
        for (const BoundaryStep& st : boundary_[c])
            cap.push_back({st.label, st.sign == +1});
        faces.push_back(std::move(cap));
    }
    return build(std::move(labels), std::move(faces), false, name_);
}

std::optional<int> CombSurface::label_id(const std::string& label_name) const {
    for (size_t i = 0; i < label_names_.size(); ++i)
        if (label_names_[i] == label_name) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

bool valid_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

Side parse_token(const std::string& tok, std::map<std::string, int>& ids,
                 std::vector<std::string>& names) {
    std::string body = tok;
    bool reversed = false;
    if (!body.empty() && body.back() == '-') {
        reversed = true;
        body.pop_back();
    }
    if (body.empty()) fail("MalformedToken", "empty side token '" + tok + "'");
    for (char c : body)
        if (!valid_label_char(c))
            fail("MalformedToken", "bad character in side token '" + tok + "'");
    auto [it, inserted] = ids.try_emplace(body, static_cast<int>(names.size()));
    if (inserted) names.push_back(body);
    return Side{it->second, reversed};
}

} // namespace

CombSurface parse_scheme(const std::string& text, bool require_connected) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::vector<Side>> faces;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "surface") {
            ls >> name;
        } else if (head == "face") {
            std::vector<Side> word;
            std::string tok;
            while (ls >> tok) word.push_back(parse_token(tok, ids, names));
            if (word.empty()) fail("EmptyScheme", "face line with no sides");
            faces.push_back(std::move(word));
        } else {
            fail("MalformedToken", "unknown directive '" + head + "'");
        }
    }
    return CombSurface::build(std::move(names), std::move(faces), require_connected, name);
}

CombSurface scheme_from_word(const std::string& word, const std::string& name) {
    std::string text = "face " + word + "\n";
    if (!name.empty()) text = "surface " + name + "\n" + text;
    return parse_scheme(text);
}

std::string surface_type_to_string(const SurfaceType& t) {
    std::ostringstream os;
    if (t.orientable)
        os << "orientable genus " << t.genus;
    else
        os << "non-orientable crosscaps " << t.crosscaps;
    os << ", boundary " << t.boundary << ", chi " << t.euler;
    if (t.excluded) os << " (excluded)";
    return os.str();
}

} // namespace mcg
