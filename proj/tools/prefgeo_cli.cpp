#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefgeo/arrangement.hpp"
#include "prefgeo/canonical.hpp"
#include "prefgeo/constructions.hpp"
#include "prefgeo/io.hpp"

using nlohmann::json;
using namespace prefgeo;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitIdentical = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitArity = 5;

NormTag parse_norm(const std::string& s) {
    if (s == "l1") return NormTag::L1;
    if (s == "l2") return NormTag::L2;
    if (s == "linf") return NormTag::Linf;
    throw Error("unknown norm \"" + s + "\" (expected l1, l2 or linf)");
}

Point2 parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error("expected \"x,y\" point, got \"" + s + "\"");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return json::parse(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

const char* kind_name(BisectorKind k) {
    switch (k) {
        case BisectorKind::VMinus: return "V-";
        case BisectorKind::VPlus: return "V+";
        case BisectorKind::HMinus: return "H-";
        case BisectorKind::HPlus: return "H+";
        case BisectorKind::AxisAligned: return "axis-aligned";
        case BisectorKind::QuadrantDegenerate: return "quadrant-degenerate";
    }
    return "?";
}

json point_to_json(const Point2& p) {
    return json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

json ranking_to_json(const Ranking& r) { return json(r.order); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_bisector(const std::string& norm_str, const std::string& c1_str,
                 const std::string& c2_str, const std::string& svg_path) {
    NormTag norm = parse_norm(norm_str);
    Point2 c1 = parse_point(c1_str);
    Point2 c2 = parse_point(c2_str);
    Bisector b = build_bisector(norm, c1, c2);
    json out{{"norm", norm_str}, {"kind", kind_name(b.kind)},
             {"c1", point_to_json(c1)}, {"c2", point_to_json(c2)}};
    switch (b.shape) {
        case Bisector::Shape::Line:
            out["shape"] = "line";
            out["line"] = {{"a", rational_to_json(b.a)},
                           {"b", rational_to_json(b.b)},
                           {"c", rational_to_json(b.c)}};
            break;
        case Bisector::Shape::Poly:
            out["shape"] = "polyline";
            out["segment"] = json::array({point_to_json(b.seg_lo), point_to_json(b.seg_hi)});
            break;
        case Bisector::Shape::Quadrant:
            out["shape"] = "quadrant";
            out["corners"] = json::array({point_to_json(b.m1), point_to_json(b.m2)});
            out["warning"] = "degenerate bisector with two-dimensional parts";
            break;
    }
    json pieces = json::array();
    for (const Piece& p : b.pieces) {
        json pj{{"origin", point_to_json(p.origin)}, {"dir", point_to_json(p.dir)}};
        if (p.has_lo) pj["lo"] = rational_to_json(p.lo);
        if (p.has_hi) pj["hi"] = rational_to_json(p.hi);
        pieces.push_back(pj);
    }
    out["pieces"] = pieces;
    if (!svg_path.empty()) write_file(svg_path, bisector_svg(b));
    emit(out);
    return 0;
}

int cmd_areas(const std::string& norm_str, const std::string& emb_path,
              const std::string& svg_path, bool graph, bool perturb) {
    NormTag norm = parse_norm(norm_str);
    Embedding2 emb = embedding2_from_json(load_json(emb_path));
    if (!detect_degeneracies(norm, emb.positions).empty()) {
        if (!perturb) throw DegenerateEmbedding();
        emb.positions = perturb_generic(norm, emb.positions);
    }
    ArrangementGraph g = build_graph(emb, norm);
    Profile prof;
    prof.m = static_cast<int>(emb.positions.size());
    json cells = json::array();
    for (const Cell& c : g.cells) {
        prof.rankings.insert(c.ranking);
        cells.push_back({{"ranking", ranking_to_json(c.ranking)},
                         {"witness", point_to_json(c.witness)},
                         {"bounded", c.bounded}});
    }
    json out{{"profile", profile_to_json(prof)},
             {"count", prof.size()},
             {"cells", cells}};
    if (graph) {
        EulerReport audit = euler_audit(g, prof.m);
        out["graph"] = {{"n_v", g.n_v},
                        {"n_e", g.n_e},
                        {"unbounded_cells", g.unbounded_cells},
                        {"euler", {{"pass", audit.pass},
                                   {"cell_count", audit.cell_count},
                                   {"bound", audit.bound}}}};
    }
    if (!svg_path.empty()) write_file(svg_path, arrangement_svg(emb, norm, g.cells));
    emit(out);
    return 0;
}

int cmd_recognize4(const std::string& profile_path) {
    Profile prof = profile_from_json(load_json(profile_path));
    if (prof.m != 4) throw WrongArity();
    RecognitionVerdict v = recognize_l2_four(prof);
    SizeBoundReport size_rep = size_bound_report(prof, NormTag::L1);
    LastPlaceReport last_rep = check_last_place_bound(prof, NormTag::L1, 2);
    json out{{"euclidean_l2", v.euclidean}};
    if (v.euclidean) {
        out["witness_profile"] = "P" + std::to_string(v.witness);
        out["permutation"] = v.permutation;
    }
    out["l1_checks"] = {{"size", size_rep.size},
                        {"size_ok", size_rep.within_bound},
                        {"last_place_count", last_rep.last_place_count},
                        {"last_place_ok", last_rep.pass}};
    emit(out);
    return 0;
}

int cmd_construct(const std::string& family, int m, int d, bool verify) {
    json out;
    if (family == "theta-m4") {
        if (m < 2) throw Error("--family theta-m4 requires --m >= 2");
        Embedding2 emb = theta_m4_embedding(m);
        out["embedding"] = embedding2_to_json(emb);
        if (verify) {
            long h = 0, v = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    BisectorKind k = classify_bisector_l1(emb.positions[i], emb.positions[j]);
                    if (is_horizontal(k)) ++h;
                    if (is_vertical(k)) ++v;
                }
            HVCounts expect = hv_counts(m);
            out["verification"] = {{"horizontal", h},
                                   {"vertical", v},
                                   {"expected_horizontal", expect.h},
                                   {"expected_vertical", expect.v},
                                   {"pass", h == expect.h && v == expect.v}};
        }
    } else if (family == "linf-last" || family == "l1-last") {
        if (d < 1) throw Error("--family " + family + " requires --d >= 1");
        bool linf = family == "linf-last";
        EmbeddingD emb = linf ? linf_last_place_embedding(d) : l1_last_place_embedding(d);
        out["embedding"] = embeddingd_to_json(emb);
        if (verify) {
            NormTag norm = linf ? NormTag::Linf : NormTag::L1;
            Profile prof = profile_of_d(emb, norm);
            int last = static_cast<int>(last_place_candidates(prof).size());
            int expect = linf ? 2 * d : (1 << d);
            out["verification"] = {{"last_place_count", last},
                                   {"expected", expect},
                                   {"pass", last == expect}};
        }
    } else {
        throw Error("unknown family \"" + family + "\"");
    }
    emit(out);
    return 0;
}

int cmd_maximal(const std::string& which) {
    const Profile* prof = nullptr;
    if (which == "p0") prof = &canonical_p0();
    else if (which == "p1") prof = &canonical_p1();
    else if (which == "p2") prof = &canonical_p2();
    else if (which == "p3") prof = &canonical_p3();
    else throw Error("unknown selector \"" + which + "\"");
    emit(profile_to_json(*prof));
    return 0;
}

int cmd_experiment_maxsearch(int m, long trials, unsigned long seed) {
    if (m != 4) throw Error("only --m 4 is supported");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, 30);
    long max_cells = 0;
    long hits_19 = 0;
    bool all_isomorphic = true;
    for (long t = 0; t < trials; ++t) {
        Embedding2 emb;
        while (true) {
            emb.positions.clear();
            for (int i = 0; i < 4; ++i)
                emb.positions.push_back(make_point(coord(rng), coord(rng)));
            try {
                emb.positions = perturb_generic(NormTag::L1, emb.positions);
                break;
            } catch (const Error&) {
                continue;  // duplicate sample; redraw
            }
        }
        std::vector<Cell> cells = enumerate_cells(emb, NormTag::L1);
        long n = static_cast<long>(cells.size());
        max_cells = std::max(max_cells, n);
        if (n == 19) {
            ++hits_19;
            Profile prof;
            prof.m = 4;
            for (const Cell& c : cells) prof.rankings.insert(c.ranking);
            bool iso = find_isomorphic_subprofile(prof, canonical_p0()).has_value() &&
                       find_isomorphic_subprofile(canonical_p0(), prof).has_value();
            if (!iso) all_isomorphic = false;
        }
    }
    json out{{"trials", trials}, {"seed", seed}, {"max_cells", max_cells},
             {"hits_19", hits_19}};
    if (hits_19 > 0) out["all_19_isomorphic_p0"] = all_isomorphic;
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact preference-bisector and region-enumeration toolkit"};
    app.require_subcommand(1);

    std::string norm = "l1", c1_str, c2_str, svg_path, emb_path, profile_path;
    std::string family, which;
    bool graph = false, perturb = false, verify = false;
    int m = 0, d = 0;
    long trials = 0;
    unsigned long seed = 0;

    CLI::App* bis = app.add_subcommand("bisector", "Describe one pairwise bisector");
    bis->add_option("--norm", norm)->required();
    bis->add_option("--c1", c1_str)->required();
    bis->add_option("--c2", c2_str)->required();
    bis->add_option("--svg", svg_path);

    CLI::App* areas = app.add_subcommand("areas", "Enumerate preference regions");
    areas->add_option("--norm", norm)->required();
    areas->add_option("--embedding", emb_path)->required();
    areas->add_option("--svg", svg_path);
    areas->add_flag("--graph", graph);
    areas->add_flag("--perturb", perturb);

    CLI::App* rec = app.add_subcommand("recognize4", "Planar l2 recognition for 4 candidates");
    rec->add_option("--profile", profile_path)->required();

    CLI::App* con = app.add_subcommand("construct", "Emit an extremal construction");
    con->add_option("--family", family)->required();
    con->add_option("--m", m);
    con->add_option("--d", d);
    con->add_flag("--verify", verify);

    CLI::App* max = app.add_subcommand("maximal", "Emit a canonical maximal profile");
    max->add_option("--which", which)->required();

    CLI::App* exp = app.add_subcommand("experiment-maxsearch",
                                       "Random search for large l1 profiles");
    exp->add_option("--m", m)->required();
    exp->add_option("--trials", trials)->required();
    exp->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (bis->parsed()) return cmd_bisector(norm, c1_str, c2_str, svg_path);
        if (areas->parsed()) return cmd_areas(norm, emb_path, svg_path, graph, perturb);
        if (rec->parsed()) return cmd_recognize4(profile_path);
        if (con->parsed()) return cmd_construct(family, m, d, verify);
        if (max->parsed()) return cmd_maximal(which);
        if (exp->parsed()) return cmd_experiment_maxsearch(m, trials, seed);
    } catch (const IdenticalCandidates& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentical;
    } catch (const WrongArity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArity;
    } catch (const DegenerateEmbedding& e) {
        std::cerr << "error: " << e.what() << " (pass --perturb to repair)\n";
        return kExitDegenerate;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
