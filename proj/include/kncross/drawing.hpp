#pragma once

// Planarized good drawings of K_n as combinatorial maps on the sphere.
//
// Nodes 0..n-1 are the real vertices, node n+k is crossing k. Every edge
// (u < v) is subdivided by its crossings into segments; segment i of edge e
// owns two darts, forward (towards v) and backward (towards u), numbered so
// that twin(d) == d ^ 1. Rotations are counterclockwise. Faces lie to the
// left of their darts, so the face walk is successor(d) = rotation_prev(twin(d)),
// and the left face of an outgoing dart d is the corner between d and
// rotation_next(d).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace kncross {

using VertexMask = std::uint32_t;
inline constexpr int kMaxVertices = 32;

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask all_vertices(int n) {
    return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return __builtin_popcount(m); }

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lexicographic index of edge {u, v} in K_n.
inline int edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

struct PointConfiguration {
    std::vector<Point> points;
};

enum class Page { Top, Bottom };

struct TwoPageSpec {
    std::vector<int> order;   // order[i] = vertex at spine position i
    std::vector<Page> pages;  // indexed by edge_index
};

struct CylindricalLayout {
    int outer_count = 0;          // vertices 0..outer_count-1 sit on the outer circle
    std::vector<Rational> turns;  // angular position of each vertex, in turns
};

using Provenance = std::variant<std::monostate, PointConfiguration, TwoPageSpec, CylindricalLayout>;

// Floating point rendering hints; never consulted by any decision.
struct Sketch {
    using XY = std::pair<double, double>;
    std::vector<XY> vertices;
    std::vector<std::vector<XY>> edges;  // polyline per edge id, smaller endpoint first
    std::vector<XY> crossings;
    std::vector<double> guide_circles;   // radii of circles centred at the origin
};

// Raw map description accepted by build_drawing; also the content of the
// "map" file format.
struct MapData {
    int n = 0;
    std::vector<std::vector<int>> edge_paths;        // by edge id, crossings from smaller endpoint
    std::vector<bool> crossing_ccw;                  // '+' orientation bit per crossing
    std::vector<std::vector<int>> vertex_rotations;  // counterclockwise neighbour order
    std::pair<int, int> reference{0, 1};             // face left of first dart u->v
};

struct Dart {
    int origin = -1;  // node id
    int twin = -1;
    int next = -1;  // counterclockwise successor around origin
    int prev = -1;
    int edge = -1;
    int segment = -1;
    bool forward = true;
    int face = -1;  // face to the left
};

struct CrossingInfo {
    int first_edge = -1;   // lexicographically smaller edge
    int second_edge = -1;
    bool ccw = true;       // '+' bit
    int first_position = -1;   // index of the crossing within each edge path
    int second_position = -1;
};

class Drawing {
public:
    int n() const { return n_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int node_count() const { return n_ + crossing_count(); }
    int edge_count() const { return static_cast<int>(edge_paths_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    bool is_real(int node) const { return node < n_; }

    int edge_id(int u, int v) const { return edge_index(n_, u, v); }
    std::pair<int, int> endpoints(int e) const { return endpoints_[e]; }
    const std::vector<int>& edge_path(int e) const { return edge_paths_[e]; }
    int segment_count(int e) const { return static_cast<int>(edge_paths_[e].size()) + 1; }
    // Darts of edge e are edge_dart_begin(e) .. edge_dart_begin(e) + 2*segment_count(e) - 1.
    int edge_dart_begin(int e) const { return edge_dart_begin_[e]; }

    const std::vector<Dart>& darts() const { return darts_; }
    const Dart& dart(int d) const { return darts_[d]; }
    int dart_count() const { return static_cast<int>(darts_.size()); }

    // Dart leaving real vertex u along edge uv.
    int first_dart(int u, int v) const {
        const int e = edge_id(u, v);
        const int base = edge_dart_begin_[e];
        if (u < v) return base;
        return base + 2 * (segment_count(e) - 1) + 1;
    }

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int left_face(int d) const { return darts_[d].face; }
    int face_left_of(int u, int v) const { return darts_[first_dart(u, v)].face; }
    int reference_face() const { return reference_face_; }

    Drawing with_reference(int face) const {
        if (face < 0 || face >= face_count())
            throw std::out_of_range("face index " + std::to_string(face) + " out of range");
        Drawing copy = *this;
        copy.reference_face_ = face;
        return copy;
    }

    const CrossingInfo& crossing(int k) const { return crossings_[k]; }
    const std::vector<int>& rotation(int u) const { return rotations_[u]; }

    const Provenance& provenance() const { return provenance_; }
    const std::optional<Sketch>& sketch() const { return sketch_; }

    // Smallest (u, v) such that the face lies left of first_dart(u, v);
    // absent for faces touching no real vertex.
    std::optional<std::pair<int, int>> face_anchor(int face) const {
        for (int u = 0; u < n_; ++u)
            for (int v : rotations_[u])
                if (face_left_of(u, v) == face) {
                    int best = v;
                    for (int w : rotations_[u])
                        if (w < best && face_left_of(u, w) == face) best = w;
                    return std::make_pair(u, best);
                }
        return std::nullopt;
    }

    VertexMask face_vertices(int face) const {
        VertexMask m = 0;
        for (int d : faces_[face])
            if (is_real(darts_[d].origin)) m |= bit(darts_[d].origin);
        return m;
    }

    MapData map_data() const {
        MapData data;
        data.n = n_;
        data.edge_paths = edge_paths_;
        data.crossing_ccw.reserve(crossings_.size());
        for (const auto& c : crossings_) data.crossing_ccw.push_back(c.ccw);
        data.vertex_rotations = rotations_;
        auto anchor = face_anchor(reference_face_);
        if (!anchor)
            throw std::logic_error("reference face touches no real vertex; cannot anchor it");
        data.reference = *anchor;
        return data;
    }

    friend Drawing build_drawing(const MapData& data, Provenance provenance,
                                 std::optional<Sketch> sketch);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> endpoints_;
    std::vector<std::vector<int>> edge_paths_;
    std::vector<int> edge_dart_begin_;
    std::vector<Dart> darts_;
    std::vector<CrossingInfo> crossings_;
    std::vector<std::vector<int>> rotations_;
    std::vector<std::vector<int>> faces_;
    int reference_face_ = 0;
    Provenance provenance_;
    std::optional<Sketch> sketch_;
};

inline Drawing build_drawing(const MapData& data, Provenance provenance = {},
                             std::optional<Sketch> sketch = std::nullopt) {
    using K = DrawingErrorKind;
    const int n = data.n;
    if (n < 3 || n > kMaxVertices)
        throw DrawingError(K::EdgePathInconsistent,
                           "vertex count " + std::to_string(n) + " outside [3, 32]");
    const int edges = static_cast<int>(binomial(n, 2));
    if (static_cast<int>(data.edge_paths.size()) != edges)
        throw DrawingError(K::EdgePathInconsistent, "expected " + std::to_string(edges) +
                                                        " edge paths, got " +
                                                        std::to_string(data.edge_paths.size()));
    if (static_cast<int>(data.vertex_rotations.size()) != n)
        throw DrawingError(K::BadRotation, "expected one rotation per vertex");

    Drawing d;
    d.n_ = n;
    d.edge_paths_ = data.edge_paths;
    d.rotations_ = data.vertex_rotations;
    d.provenance_ = std::move(provenance);
    d.sketch_ = std::move(sketch);
    d.endpoints_.resize(edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.endpoints_[edge_index(n, u, v)] = {u, v};

    for (int u = 0; u < n; ++u) {
        const auto& rot = d.rotations_[u];
        std::vector<char> seen(n, 0);
        if (static_cast<int>(rot.size()) != n - 1)
            throw DrawingError(K::BadRotation, "rotation at " + std::to_string(u) +
                                                   " must list the other n-1 vertices");
        for (int w : rot) {
            if (w < 0 || w >= n || w == u || seen[w])
                throw DrawingError(K::BadRotation, "rotation at " + std::to_string(u) +
                                                       " is not a permutation of the others");
            seen[w] = 1;
        }
    }

    // crossing occurrences
    const int c = static_cast<int>(data.crossing_ccw.size());
    std::vector<std::vector<std::pair<int, int>>> occ(c);
    for (int e = 0; e < edges; ++e) {
        const auto& path = d.edge_paths_[e];
        for (int p = 0; p < static_cast<int>(path.size()); ++p) {
            const int k = path[p];
            if (k < 0 || k >= c)
                throw DrawingError(K::EdgePathInconsistent,
                                   "edge path references unknown crossing " + std::to_string(k));
            occ[k].emplace_back(e, p);
        }
    }
    d.crossings_.resize(c);
    for (int k = 0; k < c; ++k) {
        if (occ[k].size() != 2)
            throw DrawingError(K::BadCrossingDegree,
                               "crossing " + std::to_string(k) + " lies on " +
                                   std::to_string(occ[k].size()) + " edge passes, expected 2");
        auto a = occ[k][0], b = occ[k][1];
        if (b < a) std::swap(a, b);
        d.crossings_[k] = CrossingInfo{a.first, b.first, static_cast<bool>(data.crossing_ccw[k]),
                                       a.second, b.second};
    }

    // darts
    d.edge_dart_begin_.resize(edges);
    int total = 0;
    for (int e = 0; e < edges; ++e) {
        d.edge_dart_begin_[e] = total;
        total += 2 * d.segment_count(e);
    }
    d.darts_.assign(total, Dart{});
    for (int e = 0; e < edges; ++e) {
        const auto [u, v] = d.endpoints_[e];
        const auto& path = d.edge_paths_[e];
        const int segs = d.segment_count(e);
        auto node_at = [&](int i) {
            if (i == 0) return u;
            if (i == segs) return v;
            return n + path[i - 1];
        };
        for (int i = 0; i < segs; ++i) {
            const int f = d.edge_dart_begin_[e] + 2 * i;
            d.darts_[f] = Dart{node_at(i), f + 1, -1, -1, e, i, true, -1};
            d.darts_[f + 1] = Dart{node_at(i + 1), f, -1, -1, e, i, false, -1};
        }
    }

    auto link_cycle = [&](const std::vector<int>& cyc) {
        const int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            d.darts_[cyc[i]].next = cyc[(i + 1) % m];
            d.darts_[cyc[(i + 1) % m]].prev = cyc[i];
        }
    };
    for (int u = 0; u < n; ++u) {
        std::vector<int> cyc;
        for (int w : d.rotations_[u]) cyc.push_back(d.first_dart(u, w));
        link_cycle(cyc);
    }
    for (int k = 0; k < c; ++k) {
        const auto& x = d.crossings_[k];
        auto fwd = [&](int e, int p) { return d.edge_dart_begin_[e] + 2 * (p + 1); };
        auto bwd = [&](int e, int p) { return d.edge_dart_begin_[e] + 2 * p + 1; };
        const int f1 = fwd(x.first_edge, x.first_position), b1 = bwd(x.first_edge, x.first_position);
        const int f2 = fwd(x.second_edge, x.second_position),
                  b2 = bwd(x.second_edge, x.second_position);
        if (x.ccw)
            link_cycle({f1, f2, b1, b2});
        else
            link_cycle({f1, b2, b1, f2});
    }

    for (int s = 0; s < total; ++s) {
        if (d.darts_[s].face >= 0) continue;
        const int face = static_cast<int>(d.faces_.size());
        std::vector<int> cyc;
        int cur = s;
        do {
            d.darts_[cur].face = face;
            cyc.push_back(cur);
            cur = d.darts_[d.darts_[cur].twin].prev;
        } while (cur != s);
        d.faces_.push_back(std::move(cyc));
    }

    const long long V = n + c, E = edges + 2LL * c, F = static_cast<long long>(d.faces_.size());
    if (V - E + F != 2)
        throw DrawingError(K::EulerViolation, "V - E + F = " + std::to_string(V - E + F) +
                                                  " (V=" + std::to_string(V) + ", E=" +
                                                  std::to_string(E) + ", F=" + std::to_string(F) +
                                                  "), the map is not a sphere");

    const auto [ru, rv] = data.reference;
    if (ru < 0 || ru >= n || rv < 0 || rv >= n || ru == rv)
        throw DrawingError(K::EdgePathInconsistent, "reference dart is not an edge");
    d.reference_face_ = d.face_left_of(ru, rv);
    return d;
}

// --- goodness -------------------------------------------------------------

enum class GoodnessViolationKind { SelfCross, AdjacentCross, DoubleCross };

inline const char* to_string(GoodnessViolationKind kind) {
    switch (kind) {
        case GoodnessViolationKind::SelfCross: return "SelfCross";
        case GoodnessViolationKind::AdjacentCross: return "AdjacentCross";
        case GoodnessViolationKind::DoubleCross: return "DoubleCross";
    }
    return "?";
}

struct GoodnessViolation {
    GoodnessViolationKind kind;
    int edge_a;
    int edge_b;
};

// Empty result means the drawing is good.
inline std::vector<GoodnessViolation> validate_good(const Drawing& d) {
    std::vector<GoodnessViolation> out;
    std::map<std::pair<int, int>, int> pair_count;
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& x = d.crossing(k);
        if (x.first_edge == x.second_edge) {
            out.push_back({GoodnessViolationKind::SelfCross, x.first_edge, x.second_edge});
            continue;
        }
        const auto [a, b] = d.endpoints(x.first_edge);
        const auto [p, q] = d.endpoints(x.second_edge);
        if (a == p || a == q || b == p || b == q)
            out.push_back({GoodnessViolationKind::AdjacentCross, x.first_edge, x.second_edge});
        if (++pair_count[{x.first_edge, x.second_edge}] == 2)
            out.push_back({GoodnessViolationKind::DoubleCross, x.first_edge, x.second_edge});
    }
    return out;
}

inline bool is_good(const Drawing& d) { return validate_good(d).empty(); }

// --- rotation systems and weak isomorphism ---------------------------------

struct RotationSystem {
    std::vector<std::vector<int>> order;  // counterclockwise neighbours per vertex
};

inline RotationSystem rotation_system(const Drawing& d) {
    RotationSystem r;
    for (int u = 0; u < d.n(); ++u) r.order.push_back(d.rotation(u));
    return r;
}

inline RotationSystem reversed(const RotationSystem& r) {
    RotationSystem out = r;
    for (auto& cyc : out.order) std::reverse(cyc.begin(), cyc.end());
    return out;
}

inline bool same_cyclic_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    const std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(off + i) % b.size()]) return false;
    return true;
}

inline bool rotation_systems_equal(const RotationSystem& a, const RotationSystem& b) {
    if (a.order.size() != b.order.size()) return false;
    for (std::size_t u = 0; u < a.order.size(); ++u)
        if (!same_cyclic_order(a.order[u], b.order[u])) return false;
    return true;
}

// Canonical code of a rotation system under relabeling and global reversal.
// A relabeling is pinned down by the image of one vertex x and of the first
// neighbour y in x's rotation, because x is adjacent to everything; we try all
// 2 n (n-1) such anchors and keep the lexicographically least encoding.
inline std::vector<int> canonical_rotation_code(const RotationSystem& r) {
    const int n = static_cast<int>(r.order.size());
    std::vector<int> best;
    for (int rev = 0; rev < 2; ++rev) {
        const RotationSystem sys = rev ? reversed(r) : r;
        for (int x = 0; x < n; ++x) {
            const auto& rx = sys.order[x];
            for (std::size_t start = 0; start < rx.size(); ++start) {
                std::vector<int> label(n, -1);
                label[x] = 0;
                for (std::size_t i = 0; i < rx.size(); ++i)
                    label[rx[(start + i) % rx.size()]] = static_cast<int>(i) + 1;
                std::vector<int> code;
                code.reserve(static_cast<std::size_t>(n) * (n - 1));
                std::vector<int> inverse(n);
                for (int v = 0; v < n; ++v) inverse[label[v]] = v;
                for (int nv = 0; nv < n; ++nv) {
                    const auto& cyc = sys.order[inverse[nv]];
                    std::size_t min_pos = 0;
                    for (std::size_t i = 1; i < cyc.size(); ++i)
                        if (label[cyc[i]] < label[cyc[min_pos]]) min_pos = i;
                    for (std::size_t i = 0; i < cyc.size(); ++i)
                        code.push_back(label[cyc[(min_pos + i) % cyc.size()]]);
                }
                if (best.empty() || code < best) best = std::move(code);
            }
        }
    }
    return best;
}

inline bool weak_iso_equal(const RotationSystem& a, const RotationSystem& b, bool relabel = false) {
    if (a.order.size() != b.order.size()) return false;
    if (!relabel) return rotation_systems_equal(a, b) || rotation_systems_equal(a, reversed(b));
    return canonical_rotation_code(a) == canonical_rotation_code(b);
}

// --- K4 census -------------------------------------------------------------

struct K4Census {
    long long planar = 0;   // P
    long long crossed = 0;  // N
};

// Counts the 4-sets whose induced K4 carries a crossing.
inline K4Census k4_census(const Drawing& d) {
    std::vector<VertexMask> crossed_sets;
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& x = d.crossing(k);
        const auto [a, b] = d.endpoints(x.first_edge);
        const auto [p, q] = d.endpoints(x.second_edge);
        const VertexMask m = bit(a) | bit(b) | bit(p) | bit(q);
        if (popcount(m) == 4) crossed_sets.push_back(m);
    }
    std::sort(crossed_sets.begin(), crossed_sets.end());
    crossed_sets.erase(std::unique(crossed_sets.begin(), crossed_sets.end()), crossed_sets.end());
    K4Census c;
    c.crossed = static_cast<long long>(crossed_sets.size());
    c.planar = binomial(d.n(), 4) - c.crossed;
    return c;
}

// --- induced subdrawings ---------------------------------------------------

struct Subdrawing {
    Drawing drawing;
    std::vector<int> original;  // new label -> original vertex
};

// Replanarizes D restricted to the vertices in `keep`, straight from the map
// data (face tracing from scratch). Labels are compacted in increasing order.
// The reference is the face left of the first dart between the two smallest
// kept vertices unless `reference` names an original dart.
inline Subdrawing induced_subdrawing(const Drawing& d, VertexMask keep,
                                     std::optional<std::pair<int, int>> reference = std::nullopt) {
    std::vector<int> original, relabel(d.n(), -1);
    for (int v = 0; v < d.n(); ++v)
        if (keep & bit(v)) {
            relabel[v] = static_cast<int>(original.size());
            original.push_back(v);
        }
    const int m = static_cast<int>(original.size());
    MapData data;
    data.n = m;
    auto survives = [&](int e) {
        const auto [a, b] = d.endpoints(e);
        return relabel[a] >= 0 && relabel[b] >= 0;
    };
    std::vector<int> new_id(d.crossing_count(), -1);
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& x = d.crossing(k);
        if (survives(x.first_edge) && survives(x.second_edge)) {
            new_id[k] = static_cast<int>(data.crossing_ccw.size());
            data.crossing_ccw.push_back(x.ccw);
        }
    }
    data.edge_paths.assign(static_cast<std::size_t>(binomial(m, 2)), {});
    for (int e = 0; e < d.edge_count(); ++e) {
        if (!survives(e)) continue;
        const auto [a, b] = d.endpoints(e);
        auto& path = data.edge_paths[edge_index(m, relabel[a], relabel[b])];
        for (int k : d.edge_path(e))
            if (new_id[k] >= 0) path.push_back(new_id[k]);
    }
    data.vertex_rotations.resize(m);
    for (int i = 0; i < m; ++i)
        for (int w : d.rotation(original[i]))
            if (relabel[w] >= 0) data.vertex_rotations[i].push_back(relabel[w]);
    if (reference)
        data.reference = {relabel[reference->first], relabel[reference->second]};
    else
        data.reference = {0, 1};
    return Subdrawing{build_drawing(data), std::move(original)};
}

}  // namespace kncross
