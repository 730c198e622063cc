#pragma once

// Sides, k-edges and the crossing-number identities built from them.
//
// For an edge u->v and a third vertex w the triangle uvw is a simple closed
// curve in a good drawing. w gets side R when the reference face lies to the
// left of the triangle traversed u->v->w, and L otherwise. uv is a k-edge when
// k = min(#R, #L). All of this is relative to the drawing's reference face.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "deletion.hpp"
#include "drawing.hpp"

namespace kncross {

enum class Side { L, R };

inline char to_char(Side s) { return s == Side::R ? 'R' : 'L'; }

struct KEdgeVector {
    int n = 0;                      // vertices of the (sub)drawing the counts refer to
    std::vector<long long> counts;  // E_0 .. E_{floor(n/2)-1}

    long long total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }
    long long at(int k) const {
        return (k >= 0 && k < static_cast<int>(counts.size())) ? counts[k] : 0;
    }
};

struct CumulativeSums {
    std::vector<long long> le;    // E_{<=k}
    std::vector<long long> lele;  // E_{<=<=k}
};

inline CumulativeSums cumulative(const KEdgeVector& kv) {
    CumulativeSums c;
    long long le = 0, lele = 0;
    for (long long e : kv.counts) {
        le += e;
        lele += le;
        c.le.push_back(le);
        c.lele.push_back(lele);
    }
    return c;
}

// Side of w relative to u->v, computed from the view keeping only {u, v, w}.
inline Side side_of(const Drawing& d, int u, int v, int w) {
    const VertexMask keep = bit(u) | bit(v) | bit(w);
    DeletionView view(d, all_vertices(d.n()) & ~keep);
    return view.face_class(d.face_left_of(u, v)) == view.reference_class() ? Side::R : Side::L;
}

// All sides of a good drawing, one triangle view per 3-set.
class SideTable {
public:
    explicit SideTable(const Drawing& d) : n_(d.n()), right_(static_cast<std::size_t>(n_) * n_ * n_, 0) {
        const VertexMask all = all_vertices(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                for (int w = v + 1; w < n_; ++w) {
                    DeletionView view(d, all & ~(bit(u) | bit(v) | bit(w)));
                    const int inside = view.face_class(d.face_left_of(u, v));
                    if (view.face_class(d.face_left_of(v, w)) != inside ||
                        view.face_class(d.face_left_of(w, u)) != inside ||
                        view.face_class(d.face_left_of(v, u)) == inside)
                        throw std::logic_error("triangle " + std::to_string(u) + "," +
                                               std::to_string(v) + "," + std::to_string(w) +
                                               " is not a simple closed curve; drawing not good");
                    const bool r = inside == view.reference_class();
                    set(u, v, w, r);
                    set(v, w, u, r);
                    set(w, u, v, r);
                    set(v, u, w, !r);
                    set(u, w, v, !r);
                    set(w, v, u, !r);
                }
    }

    int n() const { return n_; }
    bool is_right(int u, int v, int w) const { return right_[index(u, v, w)] != 0; }
    Side side(int u, int v, int w) const { return is_right(u, v, w) ? Side::R : Side::L; }

    // k-value of edge uv inside D - deleted.
    int k_value(int u, int v, VertexMask deleted = 0) const {
        int r = 0, l = 0;
        for (int w = 0; w < n_; ++w) {
            if (w == u || w == v || ((deleted >> w) & 1)) continue;
            (is_right(u, v, w) ? r : l)++;
        }
        return std::min(r, l);
    }

    KEdgeVector k_edge_vector(VertexMask deleted = 0) const {
        KEdgeVector kv;
        kv.n = n_ - popcount(deleted & all_vertices(n_));
        kv.counts.assign(kv.n / 2, 0);
        for (int u = 0; u < n_; ++u) {
            if ((deleted >> u) & 1) continue;
            for (int v = u + 1; v < n_; ++v) {
                if ((deleted >> v) & 1) continue;
                ++kv.counts[k_value(u, v, deleted)];
            }
        }
        return kv;
    }

private:
    std::size_t index(int u, int v, int w) const {
        return (static_cast<std::size_t>(u) * n_ + v) * n_ + w;
    }
    void set(int u, int v, int w, bool r) { right_[index(u, v, w)] = r ? 1 : 0; }

    int n_;
    std::vector<unsigned char> right_;
};

inline int k_value(const Drawing& d, int e) {
    const auto [u, v] = d.endpoints(e);
    int r = 0, l = 0;
    for (int w = 0; w < d.n(); ++w) {
        if (w == u || w == v) continue;
        (side_of(d, u, v, w) == Side::R ? r : l)++;
    }
    return std::min(r, l);
}

inline KEdgeVector k_edge_vector(const Drawing& d) { return SideTable(d).k_edge_vector(); }

inline long long harary_hill(int n) {
    if (n < 1) throw std::invalid_argument("harary_hill needs n >= 1");
    const long long p = static_cast<long long>(n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2);
    return p / 4;
}

// 3 C(n,4) - sum_k k (n-2-k) E_k
inline long long cr_from_kedges(const KEdgeVector& kv) {
    const int n = kv.n;
    long long s = 0;
    for (int k = 0; k < static_cast<int>(kv.counts.size()); ++k)
        s += static_cast<long long>(k) * (n - 2 - k) * kv.counts[k];
    return 3 * binomial(n, 4) - s;
}

// 2 sum_{k=0}^{m-2} E<=<=k - C(n,2) floor((n-2)/2) / 2 - (1 + (-1)^n) E<=<=(m-2) / 2,
// m = floor(n/2). Evaluated doubled so every intermediate is an integer.
inline long long cr_identity(const KEdgeVector& kv) {
    const int n = kv.n;
    const int top = n / 2 - 2;
    const CumulativeSums c = cumulative(kv);
    long long sum = 0;
    for (int k = 0; k <= top; ++k) sum += c.lele[k];
    const long long last = top >= 0 ? c.lele[top] : 0;
    const long long twice = 4 * sum - binomial(n, 2) * ((n - 2) / 2) - (n % 2 == 0 ? 2 : 0) * last;
    if (twice % 2 != 0) throw std::logic_error("crossing identity produced a half-integer");
    return twice / 2;
}

inline long long cr_from_kedges(const Drawing& d) { return cr_from_kedges(k_edge_vector(d)); }
inline long long cr_identity(const Drawing& d) { return cr_identity(k_edge_vector(d)); }

// E<=<=k >= 3 C(k+3, 3)
inline bool lemma_bound_holds(const KEdgeVector& kv, int k) {
    if (k < 0 || k > kv.n / 2 - 2)
        throw std::invalid_argument("lemma bound needs 0 <= k <= floor(n/2)-2");
    return cumulative(kv).lele[k] >= 3 * binomial(k + 3, 3);
}

inline bool lemma_bound_holds(const Drawing& d, int k) {
    return lemma_bound_holds(k_edge_vector(d), k);
}

}  // namespace kncross
