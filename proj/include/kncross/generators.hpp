#pragma once

// Canonical drawing families: convex, cylindrical (tin can), 2-page book
// drawings, and seeded random rectilinear drawings.

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "drawing.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "planarizer.hpp"

namespace kncross {

class SpecDegenerate : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

// Dyadic rational close to x.
inline Rational dyadic_near(double x, int bits = 20) {
    const double scale = std::ldexp(1.0, bits);
    return Rational(Integer(static_cast<long long>(std::llround(x * scale))),
                    Integer(1) << bits);
}

inline Rational rational_pow(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Points on the unit circle near the regular positions at the given turns
// (each in (0,1)), perturbed by distinct powers of eps.
inline std::vector<Point> perturbed_circle_points(const std::vector<double>& turns,
                                                  const Rational& eps) {
    std::vector<Point> pts;
    Rational prev;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        Rational u = dyadic_near(std::tan(kPi * (turns[i] - 0.5))) + rational_pow(eps, static_cast<int>(i) + 1);
        if (i > 0 && !(prev < u)) throw SpecDegenerate("circle parameters not increasing");
        prev = u;
        pts.push_back(circle_point(u));
    }
    return pts;
}

}  // namespace detail

// n points in convex position on the unit circle. Regular spacing makes main
// diagonals concurrent, so the parameters are perturbed and the perturbation
// shrinks until the arrangement is generic.
inline Drawing gen_convex(int n) {
    if (n < 3) throw std::invalid_argument("gen_convex needs n >= 3");
    std::vector<double> turns;
    for (int i = 0; i < n; ++i) turns.push_back((i + 0.5) / n);
    Rational eps(1, 64);
    for (int attempt = 0; attempt < 40; ++attempt, eps /= 3) {
        try {
            return planarize_points({detail::perturbed_circle_points(turns, eps)});
        } catch (const DegenerateInput&) {
        } catch (const SpecDegenerate&) {
        }
    }
    throw SpecDegenerate("could not perturb convex position into general position");
}

// --- cylindrical ---------------------------------------------------------------

namespace detail {

// Shorter signed angular difference in turns, in (-1/2, 1/2).
inline Rational shorter_turn(const Rational& to, const Rational& from) {
    Rational d = to - from;
    const Rational half(1, 2);
    while (d > half) d -= 1;
    while (d < -half) d += 1;
    if (d == half || d == -half) throw SpecDegenerate("side edge spans exactly half a turn");
    return d;
}

// Sketch coordinates for unit-circle lid points: rotated by half a turn so the
// lid lines up with the annulus angles.
inline Sketch::XY lid_xy(const Point& p) { return {-to_double(p.x), -to_double(p.y)}; }

inline Sketch::XY flip_outside(Sketch::XY z) {
    const double rho = std::hypot(z.first, z.second);
    if (rho < 1e-12) return {0.0, 3.5};
    const double r = 2.0 + 1.5 * (1.0 - rho);
    return {z.first / rho * r, z.second / rho * r};
}

inline Sketch::XY polar_xy(double r, double turn) {
    return {r * std::cos(2 * kPi * turn), r * std::sin(2 * kPi * turn)};
}

inline Drawing assemble_cylindrical(int n, const Rational& eps, const Rational& lid_eps) {
    const int mo = (n + 1) / 2, mi = n / 2;
    const Rational rho(1, 7);
    std::vector<Rational> turns(n);
    std::vector<double> outer_base, inner_base;
    for (int o = 0; o < mo; ++o) {
        turns[o] = Rational(o, mo) + eps * rational_pow(rho, o + 1);
        outer_base.push_back(static_cast<double>(o) / mo + 0.25 / mo);
    }
    for (int j = 0; j < mi; ++j) {
        turns[mo + j] = Rational(2 * j + 1, 2 * mi) + eps * rational_pow(rho, mo + j + 1);
        inner_base.push_back((j + 0.5) / mi);
    }
    // Lid geometry only has to respect the cyclic order of each circle.
    const std::vector<Point> outer_lid = perturbed_circle_points(outer_base, lid_eps);
    const std::vector<Point> inner_lid = perturbed_circle_points(inner_base, lid_eps);
    const SegmentArrangement outer_arr = arrange_segments(outer_lid);
    const SegmentArrangement inner_arr = arrange_segments(inner_lid);

    MapData data;
    data.n = n;
    data.edge_paths.assign(static_cast<std::size_t>(binomial(n, 2)), {});
    Sketch sketch;
    sketch.guide_circles = {1.0, 2.0};
    sketch.vertices.resize(n);
    sketch.edges.resize(data.edge_paths.size());
    for (int o = 0; o < mo; ++o) {
        auto xy = lid_xy(outer_lid[o]);
        sketch.vertices[o] = {2 * xy.first, 2 * xy.second};
    }
    for (int j = 0; j < mi; ++j) sketch.vertices[mo + j] = lid_xy(inner_lid[j]);

    // Lids. Labels map monotonically, so edge paths keep their direction.
    auto add_lid = [&](const SegmentArrangement& arr, const std::vector<Point>& lid, int offset,
                       bool mirrored) {
        const int m = static_cast<int>(lid.size());
        const int base = static_cast<int>(data.crossing_ccw.size());
        for (std::size_t k = 0; k < arr.crossing_ccw.size(); ++k) {
            data.crossing_ccw.push_back(mirrored ? !arr.crossing_ccw[k] : arr.crossing_ccw[k]);
            auto xy = lid_xy(arr.crossing_points[k]);
            sketch.crossings.push_back(mirrored ? flip_outside(xy) : xy);
        }
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                const int global = edge_index(n, offset + a, offset + b);
                for (int x : arr.edge_paths[edge_index(m, a, b)])
                    data.edge_paths[global].push_back(base + x);
                auto pa = lid_xy(lid[a]), pb = lid_xy(lid[b]);
                auto& poly = sketch.edges[global];
                for (int s = 0; s <= 24; ++s) {
                    const double f = s / 24.0;
                    Sketch::XY z{pa.first + f * (pb.first - pa.first),
                                 pa.second + f * (pb.second - pa.second)};
                    poly.push_back(mirrored ? flip_outside(z) : z);
                }
            }
        // The lid's own rotation must read j+1, j+2, ..., j-1 counterclockwise.
        for (int a = 0; a < m; ++a) {
            std::vector<int> expect;
            for (int i = 1; i < m; ++i) expect.push_back((a + i) % m);
            if (!same_cyclic_order(arr.rotations[a], expect))
                throw std::logic_error("lid rotation disagrees with the circle order");
        }
    };
    add_lid(inner_arr, inner_lid, mo, false);
    add_lid(outer_arr, outer_lid, 0, true);

    // Side edges, parametrized from the inner circle (t = 0, r = 1) to the outer
    // circle (t = 1, r = 2); angle is linear in t with slope delta.
    struct Side {
        int outer, inner, edge;
        Rational delta;
    };
    std::vector<Side> sides;
    std::vector<std::vector<Rational>> delta(mo, std::vector<Rational>(mi));
    for (int o = 0; o < mo; ++o)
        for (int j = 0; j < mi; ++j) {
            delta[o][j] = shorter_turn(turns[o], turns[mo + j]);
            sides.push_back({o, j, edge_index(n, o, mo + j), delta[o][j]});
        }
    struct Hit {
        Rational t;
        int crossing;
    };
    std::vector<std::vector<Hit>> hits(sides.size());
    for (std::size_t p = 0; p < sides.size(); ++p)
        for (std::size_t q = p + 1; q < sides.size(); ++q) {
            const Side& e1 = sides[p];
            const Side& e2 = sides[q];
            if (e1.outer == e2.outer || e1.inner == e2.inner) continue;
            const Rational g0 = turns[mo + e1.inner] - turns[mo + e2.inner];
            const Rational slope = e1.delta - e2.delta;
            const Rational g1 = g0 + slope;
            for (int K = -1; K <= 1; ++K) {
                if (g1 == K) throw SpecDegenerate("side edges meet on the outer circle");
                if (Rational(K - g0).sign() * Rational(K - g1).sign() >= 0) continue;
                const Rational t = (K - g0) / slope;
                const Side& first = e1.edge < e2.edge ? e1 : e2;
                const Side& second = e1.edge < e2.edge ? e2 : e1;
                const int id = static_cast<int>(data.crossing_ccw.size());
                data.crossing_ccw.push_back(second.delta > first.delta);
                hits[p].push_back({t, id});
                hits[q].push_back({t, id});
                const double turn = to_double(turns[mo + e1.inner] + t * e1.delta);
                sketch.crossings.push_back(polar_xy(1.0 + to_double(t), turn));
            }
        }
    for (std::size_t p = 0; p < sides.size(); ++p) {
        auto& h = hits[p];
        // outer endpoint has the smaller label: walk from t = 1 down to t = 0
        std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.t > y.t; });
        for (std::size_t i = 0; i + 1 < h.size(); ++i)
            if (h[i].t == h[i + 1].t) throw SpecDegenerate("three side edges are concurrent");
        for (const auto& x : h) data.edge_paths[sides[p].edge].push_back(x.crossing);
        const Side& sd = sides[p];
        auto& poly = sketch.edges[sd.edge];
        const double b = to_double(turns[mo + sd.inner]), dl = to_double(sd.delta);
        for (int s = 24; s >= 0; --s) {
            const double t = s / 24.0;
            poly.push_back(polar_xy(1.0 + t, b + t * dl));
        }
        poly.front() = sketch.vertices[sd.outer];
        poly.back() = sketch.vertices[mo + sd.inner];
    }

    // Rotations: side edges by increasing delta, then the lid chords
    // (outer region mirrored).
    data.vertex_rotations.resize(n);
    for (int o = 0; o < mo; ++o) {
        std::vector<int> js(mi);
        std::iota(js.begin(), js.end(), 0);
        std::sort(js.begin(), js.end(), [&](int x, int y) { return delta[o][x] < delta[o][y]; });
        auto& rot = data.vertex_rotations[o];
        for (int j : js) rot.push_back(mo + j);
        for (int i = 1; i < mo; ++i) rot.push_back(((o - i) % mo + mo) % mo);
    }
    for (int j = 0; j < mi; ++j) {
        std::vector<int> os(mo);
        std::iota(os.begin(), os.end(), 0);
        std::sort(os.begin(), os.end(), [&](int x, int y) { return delta[x][j] < delta[y][j]; });
        auto& rot = data.vertex_rotations[mo + j];
        for (int o : os) rot.push_back(o);
        for (int i = 1; i < mi; ++i) rot.push_back(mo + (j + i) % mi);
    }
    // Outer rim face: inside the outer circle between outer vertices 0 and 1.
    data.reference = {0, 1};
    return build_drawing(data, CylindricalLayout{mo, turns}, std::move(sketch));
}

}  // namespace detail

// Vertices 0..ceil(n/2)-1 on the outer circle, the rest on the inner circle;
// lid chords inside the inner disk and outside the outer circle, side edges as
// shortest spirals across the annulus.
inline Drawing gen_cylindrical(int n) {
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("gen_cylindrical needs 3 <= n <= 32");
    Rational eps(1, 1000), lid_eps(1, 64);
    for (int attempt = 0; attempt < 40; ++attempt, eps /= 2, lid_eps /= 3) {
        try {
            return detail::assemble_cylindrical(n, eps, lid_eps);
        } catch (const SpecDegenerate&) {
        } catch (const DegenerateInput&) {
        }
    }
    throw SpecDegenerate("could not find generic cylindrical perturbation");
}

// --- two-page book drawings ----------------------------------------------------

inline TwoPageSpec single_page_spec(int n) {
    TwoPageSpec spec;
    for (int i = 0; i < n; ++i) spec.order.push_back(i);
    spec.pages.assign(static_cast<std::size_t>(binomial(n, 2)), Page::Top);
    return spec;
}

// Semicircle model: spine positions 0..n-1, edge {a, b} is the half circle over
// its two spine positions on its page.
inline Drawing gen_twopage(const TwoPageSpec& spec) {
    const int n = static_cast<int>(spec.order.size());
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("two-page spec needs 3..32 vertices");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = spec.order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("spine order is not a permutation");
        pos[v] = i;
    }
    const int edges = static_cast<int>(binomial(n, 2));
    if (static_cast<int>(spec.pages.size()) != edges)
        throw std::invalid_argument("two-page spec needs one page per edge");

    struct Arc {
        int lo, hi;    // spine positions
        bool top;
        int dir;       // +1 when the smaller label sits at lo
    };
    std::vector<Arc> arcs(edges);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int e = edge_index(n, a, b);
            arcs[e] = {std::min(pos[a], pos[b]), std::max(pos[a], pos[b]),
                       spec.pages[e] == Page::Top, pos[a] < pos[b] ? 1 : -1};
        }

    MapData data;
    data.n = n;
    Sketch sketch;
    struct Hit {
        Rational x;
        int crossing;
        int other;
    };
    std::vector<std::vector<Hit>> hits(edges);
    for (int e = 0; e < edges; ++e)
        for (int f = e + 1; f < edges; ++f) {
            const Arc& p = arcs[e];
            const Arc& q = arcs[f];
            if (p.top != q.top) continue;
            const bool interleave = (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) ||
                                    (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi);
            if (!interleave) continue;
            const Rational x = Rational(p.lo * p.hi - q.lo * q.hi) / ((p.lo + p.hi) - (q.lo + q.hi));
            const int centre_sign = ((q.lo + q.hi) - (p.lo + p.hi)) > 0 ? 1 : -1;
            const int sign = (p.top ? 1 : -1) * centre_sign * p.dir * q.dir;
            const int id = static_cast<int>(data.crossing_ccw.size());
            data.crossing_ccw.push_back(sign > 0);
            hits[e].push_back({x, id, f});
            hits[f].push_back({x, id, e});
            const double cx = (p.lo + p.hi) / 2.0, r = (p.hi - p.lo) / 2.0, xd = to_double(x);
            const double y = std::sqrt(std::max(0.0, r * r - (xd - cx) * (xd - cx)));
            sketch.crossings.emplace_back(xd, p.top ? y : -y);
        }
    data.edge_paths.resize(edges);
    sketch.edges.resize(edges);
    for (int e = 0; e < edges; ++e) {
        auto& h = hits[e];
        std::sort(h.begin(), h.end(), [&](const Hit& a, const Hit& b) {
            return arcs[e].dir > 0 ? a.x < b.x : b.x < a.x;
        });
        for (std::size_t i = 0; i + 1 < h.size(); ++i)
            if (h[i].x == h[i + 1].x)
                throw DegenerateInput(DegeneracyKind::ConcurrentSegments, {e, h[i].other, h[i + 1].other});
        for (const auto& x : h) data.edge_paths[e].push_back(x.crossing);
        const Arc& a = arcs[e];
        const double cx = (a.lo + a.hi) / 2.0, r = (a.hi - a.lo) / 2.0;
        auto& poly = sketch.edges[e];
        for (int s = 0; s <= 32; ++s) {
            double phi = detail::kPi * s / 32.0;
            if (a.dir < 0) phi = detail::kPi - phi;
            // start at the smaller label's end
            const double x = cx - r * std::cos(phi), y = r * std::sin(phi);
            poly.emplace_back(x, a.top ? y : -y);
        }
    }
    for (int i = 0; i < n; ++i) sketch.vertices.emplace_back(static_cast<double>(pos[i]), 0.0);

    // Counterclockwise from east: top arcs to the right (nearest first), top
    // arcs to the left (farthest first), bottom left (nearest first), bottom
    // right (farthest first).
    data.vertex_rotations.resize(n);
    for (int v = 0; v < n; ++v) {
        const int p = pos[v];
        auto page_of = [&](int q) { return arcs[edge_index(n, v, spec.order[q])].top; };
        auto& rot = data.vertex_rotations[v];
        for (int q = p + 1; q < n; ++q)
            if (page_of(q)) rot.push_back(spec.order[q]);
        for (int q = 0; q < p; ++q)
            if (page_of(q)) rot.push_back(spec.order[q]);
        for (int q = p - 1; q >= 0; --q)
            if (!page_of(q)) rot.push_back(spec.order[q]);
        for (int q = n - 1; q > p; --q)
            if (!page_of(q)) rot.push_back(spec.order[q]);
    }
    // The unbounded face is west of the leftmost vertex: left of the last top
    // arc there, or of the last arc when none is on top.
    const int left = spec.order[0];
    const auto& rot0 = data.vertex_rotations[left];
    int last_top = -1;
    for (int i = 0; i < static_cast<int>(rot0.size()); ++i)
        if (arcs[edge_index(n, left, rot0[i])].top) last_top = i;
    data.reference = {left, rot0[last_top >= 0 ? last_top : static_cast<int>(rot0.size()) - 1]};
    return build_drawing(data, spec, std::move(sketch));
}

// --- random rectilinear --------------------------------------------------------

inline constexpr int kRandomGrid = 1000;

// Points with integer coordinates in [0, 1000)^2. Each coordinate is
// mt19937_64() % 1000, x then y, point by point; degenerate configurations
// are discarded and redrawn from the same stream.
inline PointConfiguration random_point_configuration(int n, std::uint64_t seed) {
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("random drawing needs 3 <= n <= 32");
    std::mt19937_64 rng(seed);
    for (;;) {
        PointConfiguration cfg;
        for (int i = 0; i < n; ++i) {
            const auto x = static_cast<long long>(rng() % kRandomGrid);
            const auto y = static_cast<long long>(rng() % kRandomGrid);
            cfg.points.push_back(Point{Rational(x), Rational(y)});
        }
        try {
            arrange_segments(cfg.points);
            return cfg;
        } catch (const DegenerateInput&) {
        }
    }
}

inline Drawing gen_random_points(int n, std::uint64_t seed) {
    return planarize_points(random_point_configuration(n, seed));
}

}  // namespace kncross
