#pragma once

#include <kncross/kncross.hpp>

namespace fixtures {

using namespace kncross;

inline Point P(long long x, long long y) { return {Rational(x), Rational(y)}; }

// Triangle 0,1,2 with 3 inside; reference is the outer face.
inline MapData planar_k4_map() {
    MapData m;
    m.n = 4;
    m.edge_paths.assign(6, {});
    m.vertex_rotations = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    m.reference = {1, 0};
    return m;
}

// Unit square 0,1,2,3 counterclockwise; the diagonals cross once. Reference
// is the outer face, bounded by the 4-cycle.
inline MapData crossed_k4_map() {
    MapData m;
    m.n = 4;
    m.edge_paths.assign(6, {});
    m.edge_paths[edge_index(4, 0, 2)] = {0};
    m.edge_paths[edge_index(4, 1, 3)] = {0};
    m.crossing_ccw = {true};
    m.vertex_rotations = {{1, 2, 3}, {2, 3, 0}, {3, 0, 1}, {2, 0, 1}};
    m.reference = {1, 0};
    return m;
}

inline PointConfiguration square() { return {{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}}; }

inline PointConfiguration triangle_with_centre() { return {{P(0, 0), P(4, 0), P(2, 4), P(2, 1)}}; }

}  // namespace fixtures
