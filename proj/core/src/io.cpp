#include "prefgeo/io.hpp"

#include <algorithm>
#include <cstdio>

namespace prefgeo {

using nlohmann::json;

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return static_cast<long>(q.get_num().get_si());
    return rational_to_string(q);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return make_rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected integer or \"p/q\" string for a rational");
}

json profile_to_json(const Profile& prof) {
    json rankings = json::array();
    for (const Ranking& r : prof.rankings) rankings.push_back(r.order);
    return json{{"m", prof.m}, {"rankings", rankings}};
}

Profile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("rankings"))
        throw Error("profile document requires \"m\" and \"rankings\"");
    Profile prof;
    prof.m = j.at("m").get<int>();
    if (prof.m < 1) throw Error("profile needs at least one candidate");
    for (const json& row : j.at("rankings")) {
        Ranking r;
        r.order = row.get<std::vector<int>>();
        std::vector<bool> seen(prof.m, false);
        if (static_cast<int>(r.order.size()) != prof.m)
            throw Error("ranking length does not match m");
        for (int c : r.order) {
            if (c < 0 || c >= prof.m || seen[c]) throw Error("ranking is not a permutation");
            seen[c] = true;
        }
        prof.rankings.insert(r);
    }
    return prof;
}

json embedding2_to_json(const Embedding2& emb) {
    json positions = json::array();
    for (const Point2& p : emb.positions)
        positions.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    return json{{"dimension", 2}, {"positions", positions}};
}

Embedding2 embedding2_from_json(const json& j) {
    if (!j.is_object() || !j.contains("positions"))
        throw Error("embedding document requires \"positions\"");
    if (j.contains("dimension") && j.at("dimension").get<int>() != 2)
        throw Error("expected a 2-dimensional embedding");
    Embedding2 emb;
    for (const json& row : j.at("positions")) {
        if (!row.is_array() || row.size() != 2) throw Error("positions must be [x, y] pairs");
        emb.positions.push_back({rational_from_json(row[0]), rational_from_json(row[1])});
    }
    for (std::size_t i = 0; i < emb.positions.size(); ++i)
        for (std::size_t k = i + 1; k < emb.positions.size(); ++k)
            if (emb.positions[i] == emb.positions[k]) throw DuplicateCandidates();
    return emb;
}

json embeddingd_to_json(const EmbeddingD& emb) {
    auto points_to_json = [](const std::vector<PointD>& pts) {
        json arr = json::array();
        for (const PointD& p : pts) {
            json row = json::array();
            for (const Rational& c : p.coords) row.push_back(rational_to_json(c));
            arr.push_back(row);
        }
        return arr;
    };
    return json{{"dimension", emb.d},
                {"positions", points_to_json(emb.candidates)},
                {"voters", points_to_json(emb.voters)}};
}

EmbeddingD embeddingd_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("positions"))
        throw Error("embedding document requires \"dimension\" and \"positions\"");
    EmbeddingD emb;
    emb.d = j.at("dimension").get<int>();
    if (emb.d < 1) throw Error("dimension must be positive");
    auto points_from_json = [&](const json& arr) {
        std::vector<PointD> pts;
        for (const json& row : arr) {
            if (!row.is_array() || static_cast<int>(row.size()) != emb.d)
                throw Error("coordinate list length does not match dimension");
            PointD p;
            for (const json& c : row) p.coords.push_back(rational_from_json(c));
            pts.push_back(p);
        }
        return pts;
    };
    emb.candidates = points_from_json(j.at("positions"));
    if (j.contains("voters")) emb.voters = points_from_json(j.at("voters"));
    return emb;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Box {
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;

    void grow(double x, double y) {
        if (first) { xlo = xhi = x; ylo = yhi = y; first = false; return; }
        xlo = std::min(xlo, x); xhi = std::max(xhi, x);
        ylo = std::min(ylo, y); yhi = std::max(yhi, y);
    }
    void grow(const Point2& p) { grow(to_double(p.x), to_double(p.y)); }
    void margin() {
        double mx = std::max((xhi - xlo) * 0.1, 1.0);
        double my = std::max((yhi - ylo) * 0.1, 1.0);
        xlo -= mx; xhi += mx; ylo -= my; yhi += my;
    }
    // SVG's y axis points down; flip within the box
    double flip(double y) const { return yhi + ylo - y; }
};

/// Clips the piece to the box; returns the drawable segment endpoints.
bool clip_piece(const Piece& pc, const Box& box, double out[4]) {
    double ox = to_double(pc.origin.x), oy = to_double(pc.origin.y);
    double dx = to_double(pc.dir.x), dy = to_double(pc.dir.y);
    double lo = pc.has_lo ? to_double(pc.lo) : -1e18;
    double hi = pc.has_hi ? to_double(pc.hi) : 1e18;
    auto clamp_axis = [&](double o, double d, double alo, double ahi) {
        if (d == 0) return o >= alo && o <= ahi;
        double t1 = (alo - o) / d, t2 = (ahi - o) / d;
        if (t1 > t2) std::swap(t1, t2);
        lo = std::max(lo, t1);
        hi = std::min(hi, t2);
        return true;
    };
    if (!clamp_axis(ox, dx, box.xlo, box.xhi)) return false;
    if (!clamp_axis(oy, dy, box.ylo, box.yhi)) return false;
    if (lo > hi) return false;
    out[0] = ox + lo * dx;
    out[1] = oy + lo * dy;
    out[2] = ox + hi * dx;
    out[3] = oy + hi * dy;
    return true;
}

std::string svg_header(const Box& box) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(box.xlo) + " " + fmt(box.ylo) + " " + fmt(box.xhi - box.xlo) + " " +
           fmt(box.yhi - box.ylo) + "\">\n";
}

void svg_piece(std::string& out, const Piece& pc, const Box& box, const char* style) {
    double seg[4];
    if (!clip_piece(pc, box, seg)) return;
    out += "  <line x1=\"" + fmt(seg[0]) + "\" y1=\"" + fmt(box.flip(seg[1])) +
           "\" x2=\"" + fmt(seg[2]) + "\" y2=\"" + fmt(box.flip(seg[3])) + "\" " + style +
           "/>\n";
}

void svg_candidate(std::string& out, const Point2& p, int index, const Box& box) {
    double x = to_double(p.x), y = box.flip(to_double(p.y));
    out += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
           "\" r=\"0.15\" fill=\"black\"/>\n";
    out += "  <text x=\"" + fmt(x + 0.2) + "\" y=\"" + fmt(y - 0.2) +
           "\" font-size=\"0.6\">c" + std::to_string(index) + "</text>\n";
}

constexpr const char* kBisectorStyle = "stroke=\"steelblue\" stroke-width=\"0.05\"";

}  // namespace

std::string bisector_svg(const Bisector& b) {
    Box box;
    box.grow(b.c1);
    box.grow(b.c2);
    if (b.shape == Bisector::Shape::Poly) {
        box.grow(b.seg_lo);
        box.grow(b.seg_hi);
    } else if (b.shape == Bisector::Shape::Quadrant) {
        box.grow(b.m1);
        box.grow(b.m2);
    }
    box.margin();
    std::string out = svg_header(box);
    if (b.shape == Bisector::Shape::Quadrant) {
        Piece diag;
        diag.origin = b.m1;
        diag.dir = {b.m2.x - b.m1.x, b.m2.y - b.m1.y};
        diag.has_lo = diag.has_hi = true;
        diag.lo = 0;
        diag.hi = 1;
        svg_piece(out, diag,
                  box, "stroke=\"steelblue\" stroke-width=\"0.05\" stroke-dasharray=\"0.2\"");
    }
    for (const Piece& pc : b.pieces) svg_piece(out, pc, box, kBisectorStyle);
    svg_candidate(out, b.c1, 0, box);
    svg_candidate(out, b.c2, 1, box);
    out += "</svg>\n";
    return out;
}

std::string arrangement_svg(const Embedding2& emb, NormTag norm,
                            const std::vector<Cell>& cells) {
    Box box;
    for (const Point2& p : emb.positions) box.grow(p);
    const int m = static_cast<int>(emb.positions.size());
    std::vector<Bisector> bisectors;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            bisectors.push_back(build_bisector(norm, emb.positions[i], emb.positions[j]));
    for (const Bisector& b : bisectors)
        if (b.shape == Bisector::Shape::Poly) {
            box.grow(b.seg_lo);
            box.grow(b.seg_hi);
        }
    for (const Cell& c : cells) box.grow(c.witness);
    box.margin();
    std::string out = svg_header(box);
    for (const Bisector& b : bisectors)
        for (const Piece& pc : b.pieces) svg_piece(out, pc, box, kBisectorStyle);
    for (const Cell& c : cells) {
        std::string label;
        for (std::size_t i = 0; i < c.ranking.order.size(); ++i) {
            if (i) label += "&gt;";
            label += std::to_string(c.ranking.order[i]);
        }
        out += "  <text x=\"" + fmt(to_double(c.witness.x)) + "\" y=\"" +
               fmt(box.flip(to_double(c.witness.y))) +
               "\" font-size=\"0.35\" fill=\"dimgray\">" + label + "</text>\n";
    }
    for (int i = 0; i < m; ++i) svg_candidate(out, emb.positions[i], i, box);
    out += "</svg>\n";
    return out;
}

}  // namespace prefgeo
