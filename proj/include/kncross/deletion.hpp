#pragma once

// D - S as a view over D: faces of the subdrawing are unions of base faces,
// tracked with a union-find. Removing an edge merges the two faces on the
// sides of each of its segments; a crossing that loses one of its edges is
// smoothed and merges nothing.

#include <numeric>
#include <vector>

#include "drawing.hpp"

namespace kncross {

class FaceUnionFind {
public:
    explicit FaceUnionFind(int size = 0) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            const int up = parent_[x];
            parent_[x] = root;
            x = up;
        }
        return root;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;  // smallest face index stays the representative
        return true;
    }

    void flatten() {
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) parent_[i] = find(i);
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

class DeletionView {
public:
    explicit DeletionView(const Drawing& base) : base_(&base), classes_(base.face_count()) {}

    DeletionView(const Drawing& base, VertexMask deleted) : DeletionView(base) {
        remove(deleted);
    }

    const Drawing& base() const { return *base_; }
    VertexMask deleted() const { return deleted_; }
    VertexMask surviving() const { return all_vertices(base_->n()) & ~deleted_; }
    bool is_deleted(int v) const { return (deleted_ >> v) & 1; }

    void remove(VertexMask vertices) {
        const Drawing& d = *base_;
        vertices &= ~deleted_;
        if (!vertices) return;
        deleted_ |= vertices;
        for (int e = 0; e < d.edge_count(); ++e) {
            const auto [u, v] = d.endpoints(e);
            if (!((vertices >> u) & 1) && !((vertices >> v) & 1)) continue;
            const int begin = d.edge_dart_begin(e);
            const int end = begin + 2 * d.segment_count(e);
            for (int dart = begin; dart < end; dart += 2)
                classes_.unite(d.left_face(dart), d.left_face(dart + 1));
        }
        classes_.flatten();
    }

    void remove_vertex(int v) { remove(bit(v)); }

    DeletionView without(int v) const {
        DeletionView copy = *this;
        copy.remove_vertex(v);
        return copy;
    }

    bool edge_survives(int e) const {
        const auto [u, v] = base_->endpoints(e);
        return !is_deleted(u) && !is_deleted(v);
    }
    bool dart_survives(int dart) const { return edge_survives(base_->dart(dart).edge); }

    // Representative base face of the class containing `face`.
    int face_class(int face) const { return classes_.find(face); }
    bool same_class(int f, int g) const { return face_class(f) == face_class(g); }
    int reference_class() const { return face_class(base_->reference_face()); }

    int class_count() const {
        int count = 0;
        for (int f = 0; f < classes_.size(); ++f)
            if (classes_.find(f) == f) ++count;
        return count;
    }

    // For each base face, the surviving real vertices incident with its class.
    std::vector<VertexMask> class_vertex_masks() const {
        const Drawing& d = *base_;
        std::vector<VertexMask> by_rep(d.face_count(), 0);
        const VertexMask alive = surviving();
        if (popcount(alive) == 1) {
            // A lone vertex lies in the single remaining face.
            for (auto& m : by_rep) m = alive;
            return by_rep;
        }
        for (int u = 0; u < d.n(); ++u) {
            if (!((alive >> u) & 1)) continue;
            for (int w : d.rotation(u)) {
                if (!((alive >> w) & 1)) continue;
                by_rep[face_class(d.face_left_of(u, w))] |= bit(u);
            }
        }
        std::vector<VertexMask> out(d.face_count());
        for (int f = 0; f < d.face_count(); ++f) out[f] = by_rep[face_class(f)];
        return out;
    }

    // Surviving vertices incident with the class of `face`.
    VertexMask class_vertices(int face) const {
        const Drawing& d = *base_;
        const VertexMask alive = surviving();
        if (popcount(alive) == 1) return alive;
        const int target = face_class(face);
        VertexMask m = 0;
        for (int u = 0; u < d.n(); ++u) {
            if (!((alive >> u) & 1)) continue;
            for (int w : d.rotation(u))
                if (((alive >> w) & 1) && face_class(d.face_left_of(u, w)) == target) {
                    m |= bit(u);
                    break;
                }
        }
        return m;
    }

private:
    const Drawing* base_;
    VertexMask deleted_ = 0;
    FaceUnionFind classes_;
};

inline DeletionView delete_view(const Drawing& d, VertexMask deleted) {
    return DeletionView(d, deleted);
}

inline VertexMask reference_class_vertices(const DeletionView& view) {
    return view.class_vertices(view.base().reference_face());
}

inline std::vector<int> mask_to_vector(VertexMask m) {
    std::vector<int> out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

}  // namespace kncross
