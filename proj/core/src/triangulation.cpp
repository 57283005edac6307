#include "mcgkit/triangulation.hpp"

#include <algorithm>
#include <map>

#include "mcgkit/error.hpp"

namespace mcg {

namespace {

// Stage-1 (coning) cells, before the midpoint subdivision.
struct ProtoEdge {
    int tail, head;
    EdgeProv prov;  // reused: HalfLabel (a=label) or HalfSpoke (a=face, b=corner)
};
struct ProtoTri {
    std::array<int, 3> v;
    std::array<int, 3> edge;
    std::array<bool, 3> forward;
    int source_face;
};

} // namespace

int Triangulation::cut_corner(int s1, int s2) {
    if (s1 == s2) return -1;
    int sum = s1 + s2;
    if (sum == 1) return 1;  // sides 0,1 meet at corner 1
    if (sum == 3) return 2;  // sides 1,2 meet at corner 2
    return 0;                // sides 0,2 meet at corner 0
}

bool Triangulation::crossing_flips_orientation(int e) const {
    const Edge& E = edges_[e];
    if (E.boundary()) fail("Internal", "orientation transport across a boundary edge");
    return tris_[E.inc[0].first].forward[E.inc[0].second] ==
           tris_[E.inc[1].first].forward[E.inc[1].second];
}

int Triangulation::fan_index(int v, const Dart& d) const {
    const auto& f = fans_[v];
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (f[i] == d) return i;
    fail("Internal", "dart not found in vertex fan");
}

Triangulation Triangulation::refine(const CombSurface& s) {
    Triangulation T;
    T.source_ = s;

    const int V0 = s.vertex_count();
    const int F0 = s.face_count();
    const int E0 = s.edge_count();

    // --- Stage 1: cone each face from an interior point. ---
    std::vector<VertexProv> pverts;
    for (int v = 0; v < V0; ++v) pverts.push_back({VertexProv::Orig, v, -1});
    std::vector<int> cone(F0);
    for (int f = 0; f < F0; ++f) {
        cone[f] = static_cast<int>(pverts.size());
        pverts.push_back({VertexProv::Cone, f, -1});
    }

    std::vector<ProtoEdge> pedges;
    // Label edges keep their ids 0..E0-1. Canonical direction from occurrence 0.
    for (int l = 0; l < E0; ++l) {
        const Occ o = s.occurrences(l)[0];
        const auto& w = s.faces()[o.face];
        int n = static_cast<int>(w.size());
        int sv = s.corner_vertex(o.face, o.index);
        int ev = s.corner_vertex(o.face, (o.index + 1) % n);
        int tail = w[o.index].reversed ? ev : sv;
        int head = w[o.index].reversed ? sv : ev;
        pedges.push_back({tail, head, {EdgeProv::HalfLabel, l, -1, -1}});
    }
    // Spokes: cone(f) -> corner vertex (f, c).
    std::vector<std::vector<int>> spoke(F0);
    for (int f = 0; f < F0; ++f) {
        int n = static_cast<int>(s.faces()[f].size());
        spoke[f].resize(n);
        for (int c = 0; c < n; ++c) {
            spoke[f][c] = static_cast<int>(pedges.size());
            pedges.push_back({cone[f], s.corner_vertex(f, c), {EdgeProv::HalfSpoke, f, c, -1}});
        }
    }

    std::vector<ProtoTri> ptris;
    for (int f = 0; f < F0; ++f) {
        const auto& w = s.faces()[f];
        int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            ProtoTri t;
            t.source_face = f;
            int sv = s.corner_vertex(f, i);
            int ev = s.corner_vertex(f, (i + 1) % n);
            t.v = {cone[f], sv, ev};
            t.edge = {spoke[f][i], w[i].label, spoke[f][(i + 1) % n]};
            // side 0: cone -> sv runs with the spoke; side 1: sv -> ev runs with
            // the label edge iff the token is unreversed; side 2: ev -> cone runs
            // against the spoke.
            t.forward = {true, !w[i].reversed, false};
            ptris.push_back(t);
        }
    }

    // --- Stage 2: midpoint-subdivide every proto triangle into four. ---
    T.vprov_ = pverts;
    std::vector<int> mid(pedges.size());
    for (size_t e = 0; e < pedges.size(); ++e) {
        mid[e] = static_cast<int>(T.vprov_.size());
        const EdgeProv& p = pedges[e].prov;
        if (p.kind == EdgeProv::HalfLabel)
            T.vprov_.push_back({VertexProv::MidEdge, p.a, -1});
        else
            T.vprov_.push_back({VertexProv::MidSpoke, p.a, p.b});
    }

    // Halves: half (e,0) = tail..mid, half (e,1) = mid..head.
    std::vector<std::array<int, 2>> half(pedges.size());
    for (size_t e = 0; e < pedges.size(); ++e) {
        const ProtoEdge& pe = pedges[e];
        EdgeProv p0 = pe.prov, p1 = pe.prov;
        if (p0.kind == EdgeProv::HalfLabel) {
            p0.b = 0;
            p1.b = 1;
        } else {
            p0.c = 0;
            p1.c = 1;
        }
        half[e][0] = static_cast<int>(T.edges_.size());
        T.edges_.push_back({pe.tail, mid[e], {}, p0});
        half[e][1] = static_cast<int>(T.edges_.size());
        T.edges_.push_back({mid[e], pe.head, {}, p1});
    }

    for (size_t pt = 0; pt < ptris.size(); ++pt) {
        const ProtoTri& P = ptris[pt];
        std::array<int, 3> m{};  // side midpoints as vertices
        for (int i = 0; i < 3; ++i) m[i] = mid[P.edge[i]];

        // Mid edges n_i = (m_i, m_{i+1}).
        std::array<int, 3> nid{};
        for (int i = 0; i < 3; ++i) {
            nid[i] = static_cast<int>(T.edges_.size());
            T.edges_.push_back({m[i], m[(i + 1) % 3], {},
                                {EdgeProv::MidTri, P.source_face, static_cast<int>(pt), i}});
        }

        // Half of side i at corner i (resp. corner i+1), with the forward flag
        // for traversal corner -> mid (resp. mid -> corner).
        auto corner_half = [&](int i, bool at_start_corner) {
            bool corner_is_tail = at_start_corner ? P.forward[i] : !P.forward[i];
            return std::pair<int, bool>{half[P.edge[i]][corner_is_tail ? 0 : 1], corner_is_tail};
        };

        auto add_tri = [&](std::array<int, 3> v, std::array<int, 3> e, std::array<bool, 3> fw) {
            T.tris_.push_back({v, e, fw, P.source_face});
        };

        // Corner triangles: (corner i, m_i, m_{i-1}).
        for (int i = 0; i < 3; ++i) {
            int prev = (i + 2) % 3;
            auto [h_out, fw_out] = corner_half(i, true);       // corner i -> m_i
            auto [h_in, fw_in_cm] = corner_half(prev, false);  // m_prev -> corner i
            // side 0: corner -> m_i along h_out; side 1: m_i -> m_prev against
            // n_prev = (m_prev, m_i); side 2: m_prev -> corner along h_in.
            add_tri({P.v[i], m[i], m[prev]}, {h_out, nid[prev], h_in},
                    {fw_out, false, !fw_in_cm});
        }
        // Central triangle (m0, m1, m2): all mid edges forward.
        add_tri({m[0], m[1], m[2]}, {nid[0], nid[1], nid[2]}, {true, true, true});
    }

    // Incidences.
    for (int t = 0; t < T.tri_count(); ++t)
        for (int sde = 0; sde < 3; ++sde)
            T.edges_[T.tris_[t].edge[sde]].inc.emplace_back(t, sde);

    T.boundary_vertex_.assign(T.vertex_count(), 0);
    for (const Edge& e : T.edges_) {
        if (e.inc.size() == 1) {
            ++T.boundary_edge_count_;
            T.boundary_vertex_[e.tail] = 1;
            T.boundary_vertex_[e.head] = 1;
        }
    }

    T.build_fans();
    T.validate();
    return T;
}

void Triangulation::build_fans() {
    const int V = vertex_count();
    // Darts at each vertex.
    std::vector<std::vector<Dart>> darts(V);
    for (int e = 0; e < edge_count(); ++e) {
        darts[edges_[e].tail].push_back({e, 0});
        darts[edges_[e].head].push_back({e, 1});
    }
    auto dart_key = [this](const Dart& d) { return d.edge * 2 + d.end; };

    // Each face corner joins two darts.
    std::vector<std::vector<std::pair<int, int>>> adj(2 * edge_count());  // dart key -> (corner id, other dart key)
    int corner_id = 0;
    std::vector<std::pair<Dart, Dart>> corner_darts;
    for (int t = 0; t < tri_count(); ++t) {
        for (int c = 0; c < 3; ++c) {
            int s_out = c, s_in = (c + 2) % 3;
            Dart d_out{tris_[t].edge[s_out], tris_[t].forward[s_out] ? 0 : 1};
            Dart d_in{tris_[t].edge[s_in], tris_[t].forward[s_in] ? 1 : 0};
            adj[dart_key(d_out)].push_back({corner_id, dart_key(d_in)});
            adj[dart_key(d_in)].push_back({corner_id, dart_key(d_out)});
            corner_darts.emplace_back(d_in, d_out);
            ++corner_id;
        }
    }

    fans_.assign(V, {});
    for (int v = 0; v < V; ++v) {
        auto& dl = darts[v];
        if (dl.empty()) fail("Internal", "isolated vertex in triangulation");
        std::sort(dl.begin(), dl.end(), [&](const Dart& a, const Dart& b) {
            return dart_key(a) < dart_key(b);
        });
        Dart start = dl[0];
        if (vertex_on_boundary(v)) {
            for (const Dart& d : dl)
                if (edges_[d.edge].boundary()) {
                    start = d;
                    break;
                }
        }
        std::vector<char> corner_used(corner_id, 0);
        std::vector<Dart> fan{start};
        Dart cur = start;
        while (true) {
            int nxt = -1;
            for (auto& [cid, other] : adj[dart_key(cur)]) {
                if (!corner_used[cid]) {
                    corner_used[cid] = 1;
                    nxt = other;
                    break;
                }
            }
            if (nxt < 0) break;  // boundary path ends
            Dart nd{nxt / 2, nxt % 2};
            if (nd == start) break;  // cyclic fan closed
            fan.push_back(nd);
            cur = nd;
        }
        if (fan.size() != dl.size())
            fail("Internal", "disconnected vertex link");
        fans_[v] = std::move(fan);
    }
}

void Triangulation::validate() const {
    for (const Edge& e : edges_)
        if (e.inc.empty() || e.inc.size() > 2)
            fail("Internal", "edge incidence count must be 1 or 2");
    if (euler_characteristic() != source_->euler_characteristic())
        fail("Internal", "refinement changed the Euler characteristic");
    for (int t = 0; t < tri_count(); ++t) {
        for (int sde = 0; sde < 3; ++sde) {
            const Tri& tr = tris_[t];
            const Edge& e = edges_[tr.edge[sde]];
            int a = tr.v[sde], b = tr.v[(sde + 1) % 3];
            int tail = tr.forward[sde] ? a : b;
            int head = tr.forward[sde] ? b : a;
            if (tail != e.tail || head != e.head)
                fail("Internal", "side/edge endpoint mismatch");
        }
    }
}

} // namespace mcg
