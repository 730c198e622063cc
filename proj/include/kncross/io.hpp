#pragma once

// Text formats: drawings (points, twopage, map), witness certificates, and
// an SVG rendering for drawings that carry a sketch.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "drawing.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "planarizer.hpp"
#include "shelling.hpp"

namespace kncross {

enum class Format { Points, TwoPage, Map };

inline const char* to_string(Format f) {
    switch (f) {
        case Format::Points: return "points";
        case Format::TwoPage: return "twopage";
        case Format::Map: return "map";
    }
    return "?";
}

namespace detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Non-empty lines with '#' comments stripped.
inline std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline int parse_int(const Line& line, const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    return v;
}

inline int parse_vertex(const Line& line, const std::string& tok, int n) {
    const int v = parse_int(line, tok);
    if (v < 0 || v >= n)
        throw ParseError(line.number, "vertex " + tok + " outside 0.." + std::to_string(n - 1));
    return v;
}

class LineCursor {
public:
    explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }
    int last_number() const { return lines_.empty() ? 1 : lines_.back().number; }

    const Line& expect(const std::string& keyword, std::size_t min_tokens = 1) {
        if (done()) throw ParseError(last_number(), "unexpected end of input, expected '" + keyword + "'");
        const Line& l = lines_[pos_++];
        if (l.tokens[0] != keyword)
            throw ParseError(l.number, "expected '" + keyword + "', got '" + l.tokens[0] + "'");
        if (l.tokens.size() < min_tokens) throw ParseError(l.number, "too few fields");
        return l;
    }

    const Line& take() { return lines_[pos_++]; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

inline void expect_exact(const Line& l, std::size_t count) {
    if (l.tokens.size() != count)
        throw ParseError(l.number, "expected " + std::to_string(count) + " fields, got " +
                                       std::to_string(l.tokens.size()));
}

inline void expect_colon(const Line& l, std::size_t at) {
    if (l.tokens.size() <= at || l.tokens[at] != ":") throw ParseError(l.number, "expected ':'");
}

inline PointConfiguration parse_points_body(LineCursor& cur, int n) {
    PointConfiguration cfg;
    cfg.points.resize(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        const Line& l = cur.expect("v");
        expect_exact(l, 4);
        const int id = parse_vertex(l, l.tokens[1], n);
        if (seen[id]) throw ParseError(l.number, "vertex " + l.tokens[1] + " listed twice");
        seen[id] = true;
        try {
            cfg.points[id] = Point{parse_rational(l.tokens[2]), parse_rational(l.tokens[3])};
        } catch (const std::invalid_argument& e) {
            throw ParseError(l.number, e.what());
        }
    }
    return cfg;
}

inline TwoPageSpec parse_twopage_body(LineCursor& cur, int n) {
    TwoPageSpec spec;
    const Line& o = cur.expect("order");
    expect_exact(o, static_cast<std::size_t>(n) + 1);
    std::vector<bool> placed(n, false);
    for (int i = 0; i < n; ++i) {
        const int v = parse_vertex(o, o.tokens[i + 1], n);
        if (placed[v]) throw ParseError(o.number, "vertex " + o.tokens[i + 1] + " repeated in order");
        placed[v] = true;
        spec.order.push_back(v);
    }
    const int edges = static_cast<int>(binomial(n, 2));
    spec.pages.assign(edges, Page::Top);
    std::vector<bool> seen(edges, false);
    for (int i = 0; i < edges; ++i) {
        const Line& l = cur.expect("e");
        expect_exact(l, 4);
        const int u = parse_vertex(l, l.tokens[1], n), v = parse_vertex(l, l.tokens[2], n);
        if (u == v) throw ParseError(l.number, "loop edge");
        const int e = edge_index(n, std::min(u, v), std::max(u, v));
        if (seen[e]) throw ParseError(l.number, "edge listed twice");
        seen[e] = true;
        if (l.tokens[3] == "T")
            spec.pages[e] = Page::Top;
        else if (l.tokens[3] == "B")
            spec.pages[e] = Page::Bottom;
        else
            throw ParseError(l.number, "page must be T or B");
    }
    return spec;
}

inline MapData parse_map_body(LineCursor& cur, int n) {
    MapData data;
    data.n = n;
    const Line& cl = cur.expect("c");
    expect_exact(cl, 2);
    const int c = parse_int(cl, cl.tokens[1]);
    if (c < 0) throw ParseError(cl.number, "negative crossing count");

    data.vertex_rotations.resize(n);
    std::vector<bool> have_rot(n, false);
    for (int i = 0; i < n; ++i) {
        const Line& l = cur.expect("rot", 3);
        const int u = parse_vertex(l, l.tokens[1], n);
        expect_colon(l, 2);
        if (have_rot[u]) throw ParseError(l.number, "rotation of " + l.tokens[1] + " given twice");
        have_rot[u] = true;
        for (std::size_t t = 3; t < l.tokens.size(); ++t)
            data.vertex_rotations[u].push_back(parse_vertex(l, l.tokens[t], n));
    }

    const int edges = static_cast<int>(binomial(n, 2));
    data.edge_paths.resize(edges);
    std::vector<bool> have_edge(edges, false);
    for (int i = 0; i < edges; ++i) {
        const Line& l = cur.expect("e", 4);
        const int u = parse_vertex(l, l.tokens[1], n), v = parse_vertex(l, l.tokens[2], n);
        expect_colon(l, 3);
        if (u == v) throw ParseError(l.number, "loop edge");
        const int e = edge_index(n, std::min(u, v), std::max(u, v));
        if (have_edge[e]) throw ParseError(l.number, "edge listed twice");
        have_edge[e] = true;
        std::vector<int> path;
        for (std::size_t t = 4; t < l.tokens.size(); ++t) {
            const int k = parse_int(l, l.tokens[t]);
            if (k < 0 || k >= c) throw ParseError(l.number, "crossing id " + l.tokens[t] + " out of range");
            path.push_back(k);
        }
        if (u > v) std::reverse(path.begin(), path.end());
        data.edge_paths[e] = std::move(path);
    }

    data.crossing_ccw.assign(c, true);
    std::vector<bool> have_x(c, false);
    for (int i = 0; i < c; ++i) {
        const Line& l = cur.expect("x");
        expect_exact(l, 4);
        const int k = parse_int(l, l.tokens[1]);
        if (k < 0 || k >= c) throw ParseError(l.number, "crossing id out of range");
        expect_colon(l, 2);
        if (have_x[k]) throw ParseError(l.number, "crossing listed twice");
        have_x[k] = true;
        if (l.tokens[3] == "+")
            data.crossing_ccw[k] = true;
        else if (l.tokens[3] == "-")
            data.crossing_ccw[k] = false;
        else
            throw ParseError(l.number, "orientation must be + or -");
    }

    const Line& r = cur.expect("ref");
    expect_exact(r, 3);
    const int u = parse_vertex(r, r.tokens[1], n), v = parse_vertex(r, r.tokens[2], n);
    if (u == v) throw ParseError(r.number, "reference dart needs two distinct vertices");
    data.reference = {u, v};
    return data;
}

}  // namespace detail

struct DrawingFile {
    Format format = Format::Map;
    Drawing drawing;
};

// Parses and validates. Geometric input goes through the planarizer or the
// two-page generator, so DegenerateInput and DrawingError pass through.
inline DrawingFile parse_drawing_file(const std::string& text) {
    detail::LineCursor cur(detail::tokenize(text));
    const auto& magic = cur.expect("kncross");
    if (magic.tokens.size() != 2 || magic.tokens[1] != "v1")
        throw ParseError(magic.number, "unsupported version");
    const auto& fl = cur.expect("format");
    detail::expect_exact(fl, 2);
    const auto& nl = cur.expect("n");
    detail::expect_exact(nl, 2);
    const int n = detail::parse_int(nl, nl.tokens[1]);
    if (n < 3 || n > kMaxVertices) throw ParseError(nl.number, "n must be between 3 and 32");

    DrawingFile out;
    const std::string& tag = fl.tokens[1];
    if (tag == "points") {
        out.format = Format::Points;
        auto cfg = detail::parse_points_body(cur, n);
        if (!cur.done()) throw ParseError(cur.peek().number, "trailing content");
        out.drawing = planarize_points(cfg);
    } else if (tag == "twopage") {
        out.format = Format::TwoPage;
        auto spec = detail::parse_twopage_body(cur, n);
        if (!cur.done()) throw ParseError(cur.peek().number, "trailing content");
        out.drawing = gen_twopage(spec);
    } else if (tag == "map") {
        out.format = Format::Map;
        auto data = detail::parse_map_body(cur, n);
        if (!cur.done()) throw ParseError(cur.peek().number, "trailing content");
        out.drawing = build_drawing(data);
    } else {
        throw ParseError(fl.number, "unknown format '" + tag + "'");
    }
    return out;
}

inline Drawing parse_drawing(const std::string& text) { return parse_drawing_file(text).drawing; }

// The richest format the drawing's provenance supports.
inline Format natural_format(const Drawing& d) {
    if (std::holds_alternative<PointConfiguration>(d.provenance())) return Format::Points;
    if (std::holds_alternative<TwoPageSpec>(d.provenance())) return Format::TwoPage;
    return Format::Map;
}

inline std::string serialize(const Drawing& d, Format format) {
    std::ostringstream out;
    const int n = d.n();
    out << "kncross v1\nformat " << to_string(format) << "\nn " << n << "\n";
    switch (format) {
        case Format::Points: {
            const auto* cfg = std::get_if<PointConfiguration>(&d.provenance());
            if (!cfg) throw std::invalid_argument("drawing has no point coordinates");
            for (int i = 0; i < n; ++i)
                out << "v " << i << " " << to_string(cfg->points[i].x) << " "
                    << to_string(cfg->points[i].y) << "\n";
            break;
        }
        case Format::TwoPage: {
            const auto* spec = std::get_if<TwoPageSpec>(&d.provenance());
            if (!spec) throw std::invalid_argument("drawing has no two-page layout");
            out << "order";
            for (int v : spec->order) out << " " << v;
            out << "\n";
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    out << "e " << u << " " << v << " "
                        << (spec->pages[edge_index(n, u, v)] == Page::Top ? "T" : "B") << "\n";
            break;
        }
        case Format::Map: {
            const MapData data = d.map_data();
            out << "c " << d.crossing_count() << "\n";
            for (int u = 0; u < n; ++u) {
                out << "rot " << u << " :";
                for (int v : data.vertex_rotations[u]) out << " " << v;
                out << "\n";
            }
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    out << "e " << u << " " << v << " :";
                    for (int k : data.edge_paths[edge_index(n, u, v)]) out << " " << k;
                    out << "\n";
                }
            for (int k = 0; k < d.crossing_count(); ++k)
                out << "x " << k << " : " << (data.crossing_ccw[k] ? "+" : "-") << "\n";
            out << "ref " << data.reference.first << " " << data.reference.second << "\n";
            break;
        }
    }
    return out.str();
}

inline std::string serialize(const Drawing& d) { return serialize(d, natural_format(d)); }

// --- witnesses -----------------------------------------------------------------

enum class WitnessKind { Shell, Bishell };

// Witness as written in a file: the face is still a dart, resolved against a
// drawing by resolve_witness.
struct WitnessFile {
    WitnessKind kind = WitnessKind::Shell;
    std::pair<int, int> face_dart{0, 1};
    std::vector<int> v;  // shell sequence
    std::vector<int> a;
    std::vector<int> b;
};

using Witness = std::variant<ShellWitness, BishellWitness>;

inline WitnessFile parse_witness(const std::string& text) {
    detail::LineCursor cur(detail::tokenize(text));
    const auto& magic = cur.expect("kncross-witness");
    if (magic.tokens.size() != 2 || magic.tokens[1] != "v1")
        throw ParseError(magic.number, "unsupported witness version");
    if (cur.done()) throw ParseError(cur.last_number(), "missing witness kind");
    const auto& kl = cur.take();
    detail::expect_exact(kl, 1);
    WitnessFile w;
    if (kl.tokens[0] == "shell")
        w.kind = WitnessKind::Shell;
    else if (kl.tokens[0] == "bishell")
        w.kind = WitnessKind::Bishell;
    else
        throw ParseError(kl.number, "witness kind must be shell or bishell");

    const auto& fl = cur.expect("face");
    detail::expect_exact(fl, 3);
    w.face_dart = {detail::parse_int(fl, fl.tokens[1]), detail::parse_int(fl, fl.tokens[2])};

    auto sequence = [&](const std::string& key) {
        const auto& l = cur.expect(key);
        std::vector<int> seq;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) {
            const int v = detail::parse_int(l, l.tokens[t]);
            if (std::find(seq.begin(), seq.end(), v) != seq.end())
                throw ParseError(l.number, "vertex " + l.tokens[t] + " repeated in " + key);
            seq.push_back(v);
        }
        if (seq.empty()) throw ParseError(l.number, "empty sequence");
        return std::make_pair(seq, l.number);
    };
    if (w.kind == WitnessKind::Shell) {
        w.v = sequence("v:").first;
    } else {
        w.a = sequence("a:").first;
        auto [b, line] = sequence("b:");
        w.b = std::move(b);
        if (w.a.size() != w.b.size()) throw ParseError(line, "a and b must have the same length");
    }
    if (!cur.done()) throw ParseError(cur.peek().number, "trailing content");
    return w;
}

// Throws MalformedWitness when the dart or a vertex does not exist in d.
inline Witness resolve_witness(const Drawing& d, const WitnessFile& w) {
    const auto [u, v] = w.face_dart;
    if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || u == v)
        throw MalformedWitness("face dart " + std::to_string(u) + " " + std::to_string(v) +
                               " is not an edge of K_" + std::to_string(d.n()));
    const int face = d.face_left_of(u, v);
    auto check = [&](const std::vector<int>& seq, const char* name) { detail::check_vertices(d, seq, name); };
    if (w.kind == WitnessKind::Shell) {
        check(w.v, "shell sequence");
        return ShellWitness{face, w.v};
    }
    check(w.a, "a sequence");
    check(w.b, "b sequence");
    return BishellWitness{face, w.a, w.b};
}

inline std::string serialize_witness(const Drawing& d, const Witness& w) {
    const int face = std::visit([](const auto& x) { return x.face; }, w);
    const auto anchor = d.face_anchor(face);
    if (!anchor) throw std::logic_error("witness face touches no real vertex");
    std::ostringstream out;
    auto list = [&](const char* key, const std::vector<int>& seq) {
        out << key;
        for (int v : seq) out << " " << v;
        out << "\n";
    };
    out << "kncross-witness v1\n";
    if (const auto* s = std::get_if<ShellWitness>(&w)) {
        out << "shell\nface " << anchor->first << " " << anchor->second << "\n";
        list("v:", s->seq);
    } else {
        const auto& b = std::get<BishellWitness>(w);
        out << "bishell\nface " << anchor->first << " " << anchor->second << "\n";
        list("a:", b.a);
        list("b:", b.b);
    }
    return out.str();
}

// --- SVG -------------------------------------------------------------------------

inline std::string export_svg(const Drawing& d) {
    if (!d.sketch()) throw NoGeometry("drawing has no geometric coordinates");
    const Sketch& s = *d.sketch();
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    auto widen = [&](const Sketch::XY& p) {
        lo_x = std::min(lo_x, p.first);
        hi_x = std::max(hi_x, p.first);
        lo_y = std::min(lo_y, p.second);
        hi_y = std::max(hi_y, p.second);
    };
    for (const auto& p : s.vertices) widen(p);
    for (const auto& e : s.edges)
        for (const auto& p : e) widen(p);
    for (double r : s.guide_circles) {
        widen({-r, -r});
        widen({r, r});
    }
    const double size = 640, margin = 24;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = (size - 2 * margin) / span;
    auto X = [&](double x) { return margin + (x - lo_x) * scale; };
    auto Y = [&](double y) { return size - margin - (y - lo_y) * scale; };
    char buf[160];
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (double r : s.guide_circles) {
        std::snprintf(buf, sizeof buf,
                      "<circle class=\"guide\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" "
                      "stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n",
                      X(0), Y(0), r * scale);
        out << buf;
    }
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        const auto [u, v] = d.endpoints(static_cast<int>(e));
        out << "<polyline class=\"edge\" data-edge=\"" << u << "-" << v
            << "\" fill=\"none\" stroke=\"#246\" stroke-width=\"1\" points=\"";
        for (const auto& p : s.edges[e]) {
            std::snprintf(buf, sizeof buf, "%.3f,%.3f ", X(p.first), Y(p.second));
            out << buf;
        }
        out << "\"/>\n";
    }
    for (const auto& p : s.crossings) {
        std::snprintf(buf, sizeof buf,
                      "<circle class=\"crossing\" cx=\"%.3f\" cy=\"%.3f\" r=\"2.5\" fill=\"#c33\"/>\n",
                      X(p.first), Y(p.second));
        out << buf;
    }
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const auto& p = s.vertices[i];
        std::snprintf(buf, sizeof buf,
                      "<circle class=\"vertex\" cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"black\"/>\n",
                      X(p.first), Y(p.second));
        out << buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"12\">%zu</text>\n",
                      X(p.first) + 7, Y(p.second) - 7, i);
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace kncross
