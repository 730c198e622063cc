#pragma once

// Straight-line drawings of K_n from exact rational point sets.

#include <algorithm>
#include <vector>

#include "drawing.hpp"
#include "errors.hpp"
#include "geometry.hpp"

namespace kncross {

struct SegmentArrangement {
    std::vector<std::vector<int>> edge_paths;  // by edge id, ordered from the smaller endpoint
    std::vector<bool> crossing_ccw;
    std::vector<Point> crossing_points;
    std::vector<std::vector<int>> rotations;  // counterclockwise neighbour order per vertex
};

namespace detail {

// Angular order around the origin starting at the positive x axis.
inline bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx,
                       const Rational& by) {
    auto half = [](const Rational& x, const Rational& y) {
        return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
    };
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return cross(ax, ay, bx, by) > 0;
}

}  // namespace detail

// Rejects coincident points, collinear triples, and three segments through a
// common interior point; otherwise returns the exact arrangement of all
// C(n,2) segments.
inline SegmentArrangement arrange_segments(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) throw DegenerateInput(DegeneracyKind::CoincidentPoints, {i, j, -1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0)
                    throw DegenerateInput(DegeneracyKind::Collinear, {i, j, k});

    const int edges = static_cast<int>(binomial(n, 2));
    std::vector<std::pair<int, int>> ends(edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ends[edge_index(n, u, v)] = {u, v};

    struct Hit {
        Rational param;
        int crossing;
        int other;
    };
    std::vector<std::vector<Hit>> hits(edges);
    SegmentArrangement out;
    for (int e = 0; e < edges; ++e) {
        const auto [a, b] = ends[e];
        for (int f = e + 1; f < edges; ++f) {
            const auto [c, d] = ends[f];
            if (a == c || a == d || b == c || b == d) continue;
            auto params = crossing_parameters(pts[a], pts[b], pts[c], pts[d]);
            if (!params) continue;
            const int k = static_cast<int>(out.crossing_ccw.size());
            const Rational& s = params->first;
            out.crossing_points.push_back(
                Point{pts[a].x + s * (pts[b].x - pts[a].x), pts[a].y + s * (pts[b].y - pts[a].y)});
            out.crossing_ccw.push_back(cross(pts[b].x - pts[a].x, pts[b].y - pts[a].y,
                                             pts[d].x - pts[c].x, pts[d].y - pts[c].y) > 0);
            hits[e].push_back({params->first, k, f});
            hits[f].push_back({params->second, k, e});
        }
    }

    out.edge_paths.resize(edges);
    for (int e = 0; e < edges; ++e) {
        auto& h = hits[e];
        std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.param < y.param; });
        for (std::size_t i = 0; i + 1 < h.size(); ++i)
            if (h[i].param == h[i + 1].param)
                throw DegenerateInput(DegeneracyKind::ConcurrentSegments,
                                      {e, h[i].other, h[i + 1].other});
        for (const auto& x : h) out.edge_paths[e].push_back(x.crossing);
    }

    out.rotations.resize(n);
    for (int u = 0; u < n; ++u) {
        auto& rot = out.rotations[u];
        for (int v = 0; v < n; ++v)
            if (v != u) rot.push_back(v);
        std::sort(rot.begin(), rot.end(), [&](int v, int w) {
            return detail::angle_less(pts[v].x - pts[u].x, pts[v].y - pts[u].y,
                                      pts[w].x - pts[u].x, pts[w].y - pts[u].y);
        });
    }
    return out;
}

inline Sketch straight_line_sketch(const std::vector<Point>& pts, const SegmentArrangement& arr) {
    const int n = static_cast<int>(pts.size());
    Sketch s;
    for (const auto& p : pts) s.vertices.emplace_back(to_double(p.x), to_double(p.y));
    s.edges.resize(arr.edge_paths.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            s.edges[edge_index(n, u, v)] = {s.vertices[u], s.vertices[v]};
    for (const auto& p : arr.crossing_points) s.crossings.emplace_back(to_double(p.x), to_double(p.y));
    return s;
}

// The unbounded face is anchored at the lexicographically largest point P and
// its hull neighbour Q with every other point strictly right of P->Q.
inline std::pair<int, int> unbounded_face_dart(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    int top = 0;
    for (int i = 1; i < n; ++i)
        if (lex_less(pts[top], pts[i])) top = i;
    for (int q = 0; q < n; ++q) {
        if (q == top) continue;
        bool all_right = true;
        for (int r = 0; r < n && all_right; ++r)
            if (r != top && r != q && orient(pts[top], pts[q], pts[r]) >= 0) all_right = false;
        if (all_right) return {top, q};
    }
    throw std::logic_error("no hull edge found at the extreme point");
}

inline Drawing planarize_points(const PointConfiguration& cfg) {
    const auto& pts = cfg.points;
    const int n = static_cast<int>(pts.size());
    if (n < 3 || n > kMaxVertices)
        throw std::invalid_argument("point configuration needs 3..32 points");
    SegmentArrangement arr = arrange_segments(pts);
    MapData data;
    data.n = n;
    data.edge_paths = arr.edge_paths;
    data.crossing_ccw = arr.crossing_ccw;
    data.vertex_rotations = arr.rotations;
    data.reference = unbounded_face_dart(pts);
    Sketch sketch = straight_line_sketch(pts, arr);
    return build_drawing(data, cfg, std::move(sketch));
}

}  // namespace kncross
