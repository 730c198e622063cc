#pragma once

// The kncross command line, as a function so tests can drive it in-process.
// Exit codes: 0 success, 1 clean negative answer, 2 input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <kncross/kncross.hpp>

namespace kncross::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

inline std::string join(const std::vector<long long>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

inline std::string join(const std::vector<int>& xs) {
    return join(std::vector<long long>(xs.begin(), xs.end()), " ");
}

// --- analyze -----------------------------------------------------------------

inline int analyze(const Drawing& d, bool as_json, std::ostream& out) {
    const auto bad = validate_good(d);
    const int n = d.n();
    if (!bad.empty()) {
        if (as_json) {
            nlohmann::json j;
            j["n"] = n;
            j["cr"] = d.crossing_count();
            j["good"] = false;
            for (const auto& v : bad) {
                const auto [a, b] = d.endpoints(v.edge_a);
                const auto [c, e] = d.endpoints(v.edge_b);
                j["violations"].push_back({{"kind", to_string(v.kind)},
                                           {"edges", {{a, b}, {c, e}}}});
            }
            out << j.dump(2) << "\n";
        } else {
            out << "drawing is not good: " << bad.size() << " violation(s)\n";
            for (const auto& v : bad) {
                const auto [a, b] = d.endpoints(v.edge_a);
                const auto [c, e] = d.endpoints(v.edge_b);
                out << "  " << to_string(v.kind) << " " << a << "-" << b << " / " << c << "-" << e << "\n";
            }
        }
        return kNegative;
    }
    const KEdgeVector kv = k_edge_vector(d);
    const CumulativeSums sums = cumulative(kv);
    const long long cr = d.crossing_count();
    const long long h = harary_hill(n);
    const long long from_kedges = cr_from_kedges(kv);
    const long long identity = cr_identity(kv);
    const bool pass = from_kedges == cr && identity == cr;
    const K4Census census = k4_census(d);
    if (as_json) {
        nlohmann::json j;
        j["n"] = n;
        j["cr"] = cr;
        j["H"] = h;
        j["E"] = kv.counts;
        j["E_le"] = sums.le;
        j["E_lele"] = sums.lele;
        j["cr_from_kedges"] = from_kedges;
        j["cr_identity"] = identity;
        j["identity"] = pass ? "PASS" : "FAIL";
        j["k4"] = {{"planar", census.planar}, {"crossed", census.crossed}};
        j["good"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << "cr=" << cr << " H=" << h << " E=[" << join(kv.counts) << "] identity "
            << (pass ? "PASS" : "FAIL") << "\n";
        out << "n " << n << "\n";
        out << "crossings " << cr << "\n";
        out << "H(n) " << h << "\n";
        out << "E " << join(kv.counts, " ") << "\n";
        out << "E<= " << join(sums.le, " ") << "\n";
        out << "E<=<= " << join(sums.lele, " ") << "\n";
        out << "cr from k-edges " << from_kedges << "\n";
        out << "cr from E<=<= identity " << identity << "\n";
        out << "K4 planar " << census.planar << " crossed " << census.crossed << "\n";
    }
    return pass ? kOk : kNegative;
}

// --- check ---------------------------------------------------------------------

inline int resolve_face(const Drawing& d, const std::vector<int>& uv) {
    if (uv.size() != 2) throw UsageError("--face takes two vertices");
    const int u = uv[0], v = uv[1];
    if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || u == v)
        throw UsageError("--face " + std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    return d.face_left_of(u, v);
}

inline int check(const Drawing& d, const std::string& mode, std::optional<int> s,
                 const std::vector<int>& face_uv, const std::string& witness_out, std::ostream& out) {
    const int n = d.n();
    std::optional<int> face;
    if (!face_uv.empty()) face = resolve_face(d, face_uv);
    std::optional<Witness> found;
    int order = 0;
    if (mode == "shell") {
        if (s && (*s < 1 || *s > n)) throw UsageError("--s must lie in 1..n for shell mode");
        if (s) {
            order = *s;
            if (auto w = check_s_shellable(d, *s, face)) found = *w;
        } else {
            for (order = n / 2; order <= n && !found; ++order)
                if (auto w = check_s_shellable(d, order, face)) found = *w;
            if (found) --order;
            else order = n / 2;
        }
    } else {
        if (s && (*s < 0 || *s > n - 2)) throw UsageError("--s must lie in 0..n-2 for bishell mode");
        if (!s && n < 4) throw UsageError("bishell mode needs n >= 4 unless --s is given");
        order = s ? *s : n / 2 - 2;
        if (auto w = check_bishellable(d, order, face)) found = *w;
    }
    if (!found) {
        out << "not " << mode << "able at s=" << order << " (exhaustive search"
            << (face ? ", fixed face" : ", all faces") << ")\n";
        return kNegative;
    }
    const std::string text = serialize_witness(d, *found);
    out << mode << "able at s=" << order << "\n";
    if (witness_out.empty())
        out << text;
    else
        write_file(witness_out, text);
    return kOk;
}

inline int verify(const Drawing& d, const std::string& witness_text, std::ostream& out) {
    const Witness w = resolve_witness(d, parse_witness(witness_text));
    const WitnessCheck res = std::holds_alternative<ShellWitness>(w)
                                 ? verify_shell_witness(d, std::get<ShellWitness>(w))
                                 : verify_bishell_witness(d, std::get<BishellWitness>(w));
    if (res) {
        out << "witness verifies\n";
        return kOk;
    }
    out << res.violation << "\n";
    return kNegative;
}

// --- generate ------------------------------------------------------------------

inline int generate(const std::string& kind, std::optional<int> n, std::uint64_t seed,
                    const std::string& spec_path, const std::string& out_path,
                    const std::string& svg_path, std::ostream& out) {
    auto need_n = [&] {
        if (!n) throw UsageError("--n is required for " + kind);
        if (*n < 3 || *n > kMaxVertices) throw UsageError("--n must lie in 3..32");
        return *n;
    };
    std::optional<Drawing> d;
    if (kind == "convex") {
        d = gen_convex(need_n());
    } else if (kind == "cylindrical") {
        d = gen_cylindrical(need_n());
    } else if (kind == "random") {
        d = gen_random_points(need_n(), seed);
    } else if (kind == "twopage") {
        if (!spec_path.empty()) {
            DrawingFile f = parse_drawing_file(read_file(spec_path));
            if (f.format != Format::TwoPage) throw UsageError("--spec must be a twopage drawing file");
            if (n && *n != f.drawing.n()) throw UsageError("--n disagrees with the --spec file");
            d = std::move(f.drawing);
        } else {
            d = gen_twopage(single_page_spec(need_n()));
        }
    } else {
        throw UsageError("unknown generator '" + kind + "'");
    }
    write_file(out_path, serialize(*d));
    if (!svg_path.empty()) write_file(svg_path, export_svg(*d));
    out << "cr=" << d->crossing_count() << " H=" << harary_hill(d->n()) << "\n";
    return kOk;
}

// --- hunt ------------------------------------------------------------------------

// Trial t uses gen_random_points(n, seed + t).
inline int hunt(int n, int trials, std::uint64_t seed, const std::string& target, std::ostream& out) {
    if (n < 3 || n > kMaxVertices) throw UsageError("--n must lie in 3..32");
    if (trials < 0) throw UsageError("--trials must be non-negative");
    if (target != "optimal" && target != "non-bishellable")
        throw UsageError("--target must be optimal or non-bishellable");
    if (target == "non-bishellable" && n < 4) throw UsageError("non-bishellable needs n >= 4");
    const long long h = harary_hill(n);
    std::set<std::vector<int>> classes;
    int matches = 0;
    out << "hunt (exploratory, not exhaustive) n=" << n << " trials=" << trials << " target=" << target << "\n";
    for (int t = 0; t < trials; ++t) {
        const Drawing d = gen_random_points(n, seed + static_cast<std::uint64_t>(t));
        if (!classes.insert(canonical_rotation_code(rotation_system(d))).second) continue;
        const bool hit = target == "optimal" ? d.crossing_count() == h : !is_bishellable(d);
        if (!hit) continue;
        ++matches;
        out << "match trial=" << t << " seed=" << seed + static_cast<std::uint64_t>(t)
            << " cr=" << d.crossing_count() << "\n";
    }
    out << "distinct=" << classes.size() << " matches=" << matches << "\n";
    return kOk;
}

// --- entry -------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kncross: good drawings of complete graphs"};
    app.require_subcommand(1);

    std::string file, mode = "bishell", witness_out, witness_path, out_path, svg_path, spec_path,
                kind, target = "optimal";
    bool as_json = false;
    std::optional<int> s, n;
    std::vector<int> face;
    std::uint64_t seed = 1;
    int trials = 100, hunt_n = 0;

    auto* a = app.add_subcommand("analyze", "k-edge statistics and crossing identities");
    a->add_option("file", file, "drawing file")->required();
    a->add_flag("--json", as_json, "JSON report");

    auto* c = app.add_subcommand("check", "search for a shell or bishell witness");
    c->add_option("file", file, "drawing file")->required();
    c->add_option("--mode", mode, "shell or bishell")->required()->check(CLI::IsMember({"shell", "bishell"}));
    c->add_option("--s", s, "order of the witness");
    c->add_option("--face", face, "fix the face left of the dart u->v")->expected(2);
    c->add_option("--witness-out", witness_out, "write the witness here");

    auto* v = app.add_subcommand("verify", "verify a witness file");
    v->add_option("file", file, "drawing file")->required();
    v->add_option("--witness", witness_path, "witness file")->required();

    auto* g = app.add_subcommand("generate", "write a drawing from one of the families");
    g->add_option("kind", kind, "convex|cylindrical|twopage|random")
        ->required()
        ->check(CLI::IsMember({"convex", "cylindrical", "twopage", "random"}));
    g->add_option("--n", n, "number of vertices");
    g->add_option("--seed", seed, "seed for random");
    g->add_option("--spec", spec_path, "twopage drawing file giving the spine order and pages");
    g->add_option("-o,--out", out_path, "output drawing file")->required();
    g->add_option("--svg", svg_path, "also write an SVG rendering");

    auto* h = app.add_subcommand("hunt", "exploratory random search (never exhaustive)");
    h->add_option("--n", hunt_n, "number of vertices")->required();
    h->add_option("--trials", trials, "random drawings to sample");
    h->add_option("--seed", seed, "first seed");
    h->add_option("--target", target, "optimal or non-bishellable");

    auto* x = app.add_subcommand("export-svg", "render a geometric drawing");
    x->add_option("file", file, "drawing file")->required();
    x->add_option("-o,--out", out_path, "output SVG")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (a->parsed()) return analyze(parse_drawing(read_file(file)), as_json, out);
        if (c->parsed()) return check(parse_drawing(read_file(file)), mode, s, face, witness_out, out);
        if (v->parsed()) {
            const Drawing d = parse_drawing(read_file(file));
            return verify(d, read_file(witness_path), out);
        }
        if (g->parsed()) return generate(kind, n, seed, spec_path, out_path, svg_path, out);
        if (h->parsed()) return hunt(hunt_n, trials, seed, target, out);
        if (x->parsed()) {
            write_file(out_path, export_svg(parse_drawing(read_file(file))));
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const DrawingError& e) {
        err << "invalid drawing: " << e.what() << "\n";
    } catch (const DegenerateInput& e) {
        err << "degenerate input: " << e.what() << "\n";
    } catch (const MalformedWitness& e) {
        err << "malformed witness: " << e.what() << "\n";
    } catch (const NoGeometry& e) {
        err << "no geometry: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace kncross::cli
