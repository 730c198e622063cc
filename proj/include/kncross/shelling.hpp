#pragma once

// s-shellability and s-bishellability: exhaustive searches, witness
// verification, the witness transformations, and the diagnostics used to
// check the E<=<=k lower bound argument on concrete witnesses.
//
// Throughout, "incident with the face of D - X containing F" is the class of
// base face F in DeletionView(D, X), and a vertex is incident with it when one
// of its surviving darts has its left face in that class.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deletion.hpp"
#include "drawing.hpp"
#include "errors.hpp"
#include "kedge.hpp"

namespace kncross {

struct ShellWitness {
    int face = -1;
    std::vector<int> seq;  // v_1 .. v_s

    int s() const { return static_cast<int>(seq.size()); }
    friend bool operator==(const ShellWitness&, const ShellWitness&) = default;
};

struct BishellWitness {
    int face = -1;
    std::vector<int> a;  // a_0 .. a_s
    std::vector<int> b;  // b_0 .. b_s

    int order() const { return static_cast<int>(a.size()) - 1; }
    friend bool operator==(const BishellWitness&, const BishellWitness&) = default;
};

struct WitnessCheck {
    bool ok = true;
    std::string violation;  // first violated condition, empty when ok

    explicit operator bool() const { return ok; }
    static WitnessCheck fail(std::string why) { return {false, std::move(why)}; }
};

inline VertexMask mask_of(const std::vector<int>& vs, std::size_t begin, std::size_t end) {
    VertexMask m = 0;
    for (std::size_t i = begin; i < end && i < vs.size(); ++i) m |= bit(vs[i]);
    return m;
}

// Memoized incidence lookups keyed on the deleted set. One union-find per
// distinct set answers the query for every reference face at once.
class IncidenceCache {
public:
    explicit IncidenceCache(const Drawing& d) : d_(&d) {}

    VertexMask incident(int face, VertexMask deleted) {
        auto it = cache_.find(deleted);
        if (it == cache_.end())
            it = cache_.emplace(deleted, DeletionView(*d_, deleted).class_vertex_masks()).first;
        return it->second[face];
    }

    std::size_t size() const { return cache_.size(); }

private:
    const Drawing* d_;
    std::unordered_map<VertexMask, std::vector<VertexMask>> cache_;
};

namespace detail {

inline void check_vertices(const Drawing& d, const std::vector<int>& seq, const char* name) {
    VertexMask seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= d.n())
            throw MalformedWitness(std::string(name) + " references vertex " + std::to_string(v) +
                                   " outside 0.." + std::to_string(d.n() - 1));
        if (seen & bit(v))
            throw MalformedWitness(std::string(name) + " repeats vertex " + std::to_string(v));
        seen |= bit(v);
    }
}

inline void check_face(const Drawing& d, int face) {
    if (face < 0 || face >= d.face_count())
        throw MalformedWitness("face " + std::to_string(face) + " out of range");
}

inline std::vector<int> faces_in_scope(const Drawing& d, std::optional<int> face) {
    if (face) {
        if (*face < 0 || *face >= d.face_count())
            throw std::invalid_argument("face " + std::to_string(*face) + " out of range");
        return {*face};
    }
    std::vector<int> all(d.face_count());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

inline int lowest(VertexMask m) { return __builtin_ctz(m); }

}  // namespace detail

// --- verification ------------------------------------------------------------

inline WitnessCheck verify_shell_witness(const Drawing& d, const ShellWitness& w) {
    detail::check_face(d, w.face);
    if (w.seq.empty()) throw MalformedWitness("shell witness needs at least one vertex");
    detail::check_vertices(d, w.seq, "shell sequence");
    const int s = w.s();
    for (int r = 1; r <= s; ++r)
        for (int t = r + 1; t <= s; ++t) {
            const VertexMask gone = mask_of(w.seq, 0, r - 1) | mask_of(w.seq, t, s);
            const VertexMask inc = DeletionView(d, gone).class_vertices(w.face);
            const int vr = w.seq[r - 1], vt = w.seq[t - 1];
            if (!(inc & bit(vr)) || !(inc & bit(vt)))
                return WitnessCheck::fail("pair (r,t)=(" + std::to_string(r) + "," +
                                          std::to_string(t) + ") violated: v_" +
                                          std::to_string(r) + "=" + std::to_string(vr) +
                                          " and v_" + std::to_string(t) + "=" +
                                          std::to_string(vt) + " not both on the face");
        }
    return {};
}

inline WitnessCheck verify_bishell_witness(const Drawing& d, const BishellWitness& w) {
    detail::check_face(d, w.face);
    if (w.a.empty() || w.a.size() != w.b.size())
        throw MalformedWitness("a and b sequences must be non-empty and of equal length");
    detail::check_vertices(d, w.a, "a sequence");
    detail::check_vertices(d, w.b, "b sequence");
    const int s = w.order();
    for (int cond = 1; cond <= 2; ++cond) {
        const auto& seq = cond == 1 ? w.a : w.b;
        for (int i = 0; i <= s; ++i) {
            const VertexMask inc = DeletionView(d, mask_of(seq, 0, i)).class_vertices(w.face);
            if (!(inc & bit(seq[i])))
                return WitnessCheck::fail("condition (" + std::to_string(cond) +
                                          ") violated at i=" + std::to_string(i));
        }
    }
    for (int i = s; i >= 0; --i)
        if (mask_of(w.a, 0, i + 1) & mask_of(w.b, 0, s - i + 1))
            return WitnessCheck::fail("condition (3) violated at i=" + std::to_string(i));
    return {};
}

// --- shelling sequences --------------------------------------------------------

// Depth-first stream of the sequences x_0..x_{len-1} in which each x_i is
// incident with the face of D - {x_0..x_{i-1}} containing `face`. Children are
// visited in increasing vertex order.
class ShellingSequences {
public:
    ShellingSequences(const Drawing& d, int face, int length)
        : face_(face), length_(length), cache_(d) {
        if (face < 0 || face >= d.face_count()) throw std::invalid_argument("face out of range");
        if (length < 0 || length > d.n()) throw std::invalid_argument("length out of range");
    }

    std::optional<std::vector<int>> next() {
        if (!started_) {
            started_ = true;
            if (length_ == 0) return std::vector<int>{};
            stack_.push_back(cache_.incident(face_, 0));
        } else if (!stack_.empty()) {
            seq_.pop_back();
        }
        while (!stack_.empty()) {
            VertexMask& cand = stack_.back();
            if (!cand) {
                stack_.pop_back();
                if (!seq_.empty()) seq_.pop_back();
                continue;
            }
            const int v = detail::lowest(cand);
            cand &= cand - 1;
            seq_.push_back(v);
            if (static_cast<int>(seq_.size()) == length_) return seq_;
            const VertexMask gone = mask_of(seq_, 0, seq_.size());
            stack_.push_back(cache_.incident(face_, gone) & ~gone);
        }
        return std::nullopt;
    }

private:
    int face_;
    int length_;
    IncidenceCache cache_;
    bool started_ = false;
    std::vector<int> seq_;
    std::vector<VertexMask> stack_;
};

inline ShellingSequences shelling_sequences(const Drawing& d, int face, int length) {
    return ShellingSequences(d, face, length);
}

// --- bishellability search ----------------------------------------------------

// Faces ascending, then a-sequences and b-sequences lexicographically; the
// first witness found is therefore the least one in that order. Condition (3)
// is enforced as "b_j avoids a_0..a_{s-j}" at every extension of b.
inline std::optional<BishellWitness> check_bishellable(const Drawing& d, int s,
                                                       std::optional<int> face = std::nullopt) {
    if (s < 0 || s > d.n() - 2)
        throw std::invalid_argument("bishellability order must satisfy 0 <= s <= n-2");
    IncidenceCache cache(d);
    const int len = s + 1;
    for (int f : detail::faces_in_scope(d, face)) {
        if (popcount(cache.incident(f, 0)) < 2) continue;
        std::vector<int> a, b;
        std::vector<VertexMask> a_prefix;  // a_prefix[i] = {a_0..a_i}

        std::function<bool(VertexMask)> grow_b = [&](VertexMask used) -> bool {
            const int j = static_cast<int>(b.size());
            if (j == len) return true;
            VertexMask cand = cache.incident(f, used) & ~used & ~a_prefix[s - j];
            while (cand) {
                const int v = detail::lowest(cand);
                cand &= cand - 1;
                b.push_back(v);
                if (grow_b(used | bit(v))) return true;
                b.pop_back();
            }
            return false;
        };
        std::function<bool(VertexMask)> grow_a = [&](VertexMask used) -> bool {
            if (static_cast<int>(a.size()) == len) return grow_b(0);
            VertexMask cand = cache.incident(f, used) & ~used;
            while (cand) {
                const int v = detail::lowest(cand);
                cand &= cand - 1;
                a.push_back(v);
                a_prefix.push_back(used | bit(v));
                if (grow_a(used | bit(v))) return true;
                a_prefix.pop_back();
                a.pop_back();
            }
            return false;
        };
        if (grow_a(0)) return BishellWitness{f, a, b};
    }
    return std::nullopt;
}

// --- shellability search ------------------------------------------------------

// Positions are filled outside-in (v_1, v_s, v_2, v_{s-1}, ...), candidates in
// increasing order, so each pair (r,t) is checked as soon as v_1..v_r and
// v_t..v_s are all fixed.
inline std::optional<ShellWitness> check_s_shellable(const Drawing& d, int s,
                                                     std::optional<int> face = std::nullopt) {
    if (s < 1 || s > d.n()) throw std::invalid_argument("shellability order must satisfy 1 <= s <= n");
    std::vector<int> positions;
    for (int lo = 1, hi = s; lo <= hi; ++lo, --hi) {
        positions.push_back(lo);
        if (hi != lo) positions.push_back(hi);
    }
    IncidenceCache cache(d);
    std::vector<int> v(s + 1, -1);  // 1-based

    auto known_prefix = [&] {
        int L = 0;
        while (L < s && v[L + 1] >= 0) ++L;
        return L;
    };
    auto known_suffix = [&] {
        int R = 0;
        while (R < s && v[s - R] >= 0) ++R;
        return R;
    };

    for (int f : detail::faces_in_scope(d, face)) {
        if (s >= 2 && popcount(cache.incident(f, 0)) < 2) continue;
        if (s == 1 && popcount(cache.incident(f, 0)) < 1) continue;
        std::fill(v.begin(), v.end(), -1);

        std::function<bool(std::size_t, VertexMask)> place = [&](std::size_t step,
                                                                 VertexMask used) -> bool {
            if (step == positions.size()) return true;
            const int p = positions[step];
            const int L0 = known_prefix(), R0 = known_suffix();
            for (int c = 0; c < d.n(); ++c) {
                if (used & bit(c)) continue;
                v[p] = c;
                const int L = known_prefix(), R = known_suffix();
                bool ok = true;
                for (int r = 1; r <= L && ok; ++r)
                    for (int t = std::max(r + 1, s - R + 1); t <= s && ok; ++t) {
                        if (r <= L0 && t >= s - R0 + 1) continue;  // decided earlier
                        VertexMask gone = 0;
                        for (int i = 1; i < r; ++i) gone |= bit(v[i]);
                        for (int i = t + 1; i <= s; ++i) gone |= bit(v[i]);
                        const VertexMask inc = cache.incident(f, gone);
                        ok = (inc & bit(v[r])) && (inc & bit(v[t]));
                    }
                if (ok && place(step + 1, used | bit(c))) return true;
            }
            v[p] = -1;
            return false;
        };
        if (place(0, 0)) return ShellWitness{f, std::vector<int>(v.begin() + 1, v.end())};
    }
    return std::nullopt;
}

// First s >= floor(n/2) for which a shell witness exists.
inline std::optional<ShellWitness> find_shell_witness(const Drawing& d) {
    for (int s = d.n() / 2; s <= d.n(); ++s)
        if (auto w = check_s_shellable(d, s)) return w;
    return std::nullopt;
}

inline bool is_shellable(const Drawing& d) { return find_shell_witness(d).has_value(); }

inline std::optional<BishellWitness> find_bishell_witness(const Drawing& d) {
    if (d.n() < 4) throw std::invalid_argument("bishellability is defined for n >= 4");
    return check_bishellable(d, d.n() / 2 - 2);
}

inline bool is_bishellable(const Drawing& d) { return find_bishell_witness(d).has_value(); }

// --- witness transformations --------------------------------------------------

// a_i = v_{i+1}, b_i = v_{s-i} for i = 0..s-2.
inline BishellWitness shell_to_bishell(const Drawing& d, const ShellWitness& w) {
    if (w.s() < 2) throw WitnessInvalid("shell_to_bishell needs s >= 2");
    if (!verify_shell_witness(d, w)) throw WitnessInvalid("shell witness does not verify");
    const int s = w.s();
    BishellWitness out;
    out.face = w.face;
    for (int i = 0; i <= s - 2; ++i) {
        out.a.push_back(w.seq[i]);
        out.b.push_back(w.seq[s - i - 1]);
    }
    if (!verify_bishell_witness(d, out))
        throw WitnessInvalid("transformed witness does not verify");
    return out;
}

inline BishellWitness truncate_bishell(const Drawing& d, const BishellWitness& w) {
    if (w.order() < 1) throw WitnessInvalid("truncation needs order >= 1");
    if (!verify_bishell_witness(d, w)) throw WitnessInvalid("bishell witness does not verify");
    BishellWitness out = w;
    out.a.pop_back();
    out.b.pop_back();
    if (!verify_bishell_witness(d, out)) throw WitnessInvalid("truncated witness does not verify");
    return out;
}

// --- sufficient conditions ------------------------------------------------

struct SufficientConditions {
    int uncrossed_cycle_len = 0;  // longest simple cycle of crossing-free edges (0 if none)
    int uncrossed_path_len = 0;   // longest simple path of crossing-free edges, in edges
    bool implies_shellable = false;
    bool implies_bishellable = false;
};

inline SufficientConditions sufficient_conditions(const Drawing& d) {
    const int n = d.n();
    std::vector<VertexMask> adj(n, 0);
    for (int e = 0; e < d.edge_count(); ++e)
        if (d.edge_path(e).empty()) {
            const auto [u, v] = d.endpoints(e);
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
    SufficientConditions out;
    for (int start = 0; start < n; ++start) {
        // Cycles are counted from their smallest vertex only.
        std::function<void(int, VertexMask, int)> walk = [&](int at, VertexMask seen, int len) {
            if (len >= 2 && (adj[at] & bit(start)))
                out.uncrossed_cycle_len = std::max(out.uncrossed_cycle_len, len + 1);
            VertexMask next = adj[at] & ~seen;
            while (next) {
                const int w = detail::lowest(next);
                next &= next - 1;
                if (w < start) continue;
                walk(w, seen | bit(w), len + 1);
            }
        };
        walk(start, bit(start), 0);
    }
    for (int start = 0; start < n; ++start) {
        std::function<void(int, VertexMask, int)> path = [&](int at, VertexMask seen, int len) {
            out.uncrossed_path_len = std::max(out.uncrossed_path_len, len);
            VertexMask next = adj[at] & ~seen;
            while (next) {
                const int w = detail::lowest(next);
                next &= next - 1;
                path(w, seen | bit(w), len + 1);
            }
        };
        path(start, bit(start), 0);
    }
    const int half = n / 2;
    out.implies_shellable = out.uncrossed_cycle_len >= 3 && out.uncrossed_cycle_len >= half;
    out.implies_bishellable =
        out.implies_shellable || (half >= 2 && out.uncrossed_path_len >= 2 * half - 3);
    return out;
}

// --- lower bound diagnostics ------------------------------------------------

struct InvariantEdgeReport {
    int k = 0;
    long long a0_contribution = 0;
    long long invariant_count = 0;
    std::vector<int> a0_j_values;     // j-values of e_0..e_k followed by e'_0..e'_k
    std::vector<int> invariant_per_b; // invariant edges found at b_0..b_k

    bool bounds_hold() const {
        const long long c = binomial(k + 2, 2);
        return a0_contribution >= 2 * c && invariant_count >= c;
    }
};

// Quantities from the inductive argument for E<=<=k >= 3 C(k+3,3), evaluated
// relative to the witness face.
//  * a0_contribution: sum of (k+1-j)^+ over e_0..e_k and e'_0..e'_k, the
//    rotation at a_0 read away from the corner of F in both directions.
//  * invariant_count: over i = 0..k, the edges b_i w of D_i = D - {b_0..b_{i-1}}
//    (w != a_0) whose j-value is the same in D_i and D_i - a_0.
inline InvariantEdgeReport invariant_edge_report(const Drawing& d, const BishellWitness& w) {
    if (!verify_bishell_witness(d, w)) throw WitnessInvalid("bishell witness does not verify");
    const int k = w.order();
    if (k > d.n() / 2 - 2)
        throw WitnessInvalid("diagnostics need order k <= floor(n/2)-2");
    const Drawing ref = d.with_reference(w.face);
    const SideTable table(ref);
    InvariantEdgeReport rep;
    rep.k = k;

    const int a0 = w.a[0];
    const auto& rot = d.rotation(a0);
    const int deg = static_cast<int>(rot.size());
    int corner = -1;
    for (int p = 0; p < deg && corner < 0; ++p)
        if (d.face_left_of(a0, rot[p]) == w.face) corner = p;
    if (corner < 0) throw WitnessInvalid("a_0 does not lie on the witness face");
    auto contribution = [&](int j) { return std::max(0, k + 1 - j); };
    for (int i = 0; i <= k; ++i) {
        const int j = table.k_value(a0, rot[(corner + 1 + i) % deg]);
        rep.a0_j_values.push_back(j);
        rep.a0_contribution += contribution(j);
    }
    for (int i = 0; i <= k; ++i) {
        const int j = table.k_value(a0, rot[((corner - i) % deg + deg) % deg]);
        rep.a0_j_values.push_back(j);
        rep.a0_contribution += contribution(j);
    }

    for (int i = 0; i <= k; ++i) {
        const VertexMask gone = mask_of(w.b, 0, i);
        const int bi = w.b[i];
        int count = 0;
        for (int x = 0; x < d.n(); ++x) {
            if (x == bi || x == a0 || (gone & bit(x))) continue;
            if (table.k_value(bi, x, gone) == table.k_value(bi, x, gone | bit(a0))) ++count;
        }
        rep.invariant_per_b.push_back(count);
        rep.invariant_count += count;
    }
    return rep;
}

}  // namespace kncross
