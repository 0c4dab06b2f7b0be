#include "prefgeo/arrangement.hpp"

#include <algorithm>
#include <map>

namespace prefgeo {

namespace {

std::optional<Rational> param_on_piece(const Piece& pc, const Point2& p) {
    Rational t;
    if (pc.dir.x != 0) {
        t = (p.x - pc.origin.x) / pc.dir.x;
        if (pc.origin.y + t * pc.dir.y != p.y) return std::nullopt;
    } else if (pc.dir.y != 0) {
        if (p.x != pc.origin.x) return std::nullopt;
        t = (p.y - pc.origin.y) / pc.dir.y;
    } else {
        return std::nullopt;
    }
    if (pc.has_lo && t < pc.lo) return std::nullopt;
    if (pc.has_hi && t > pc.hi) return std::nullopt;
    return t;
}

struct ClipResult {
    Rational lo, hi;
    bool entered_lo = false;  // lo comes from the square, not the piece
    bool entered_hi = false;
};

/// Clips a piece to [cx-R, cx+R] x [cy-R, cy+R].
std::optional<ClipResult> clip_to_square(const Piece& pc, const Rational& cx,
                                         const Rational& cy, const Rational& R) {
    bool has_lo = pc.has_lo, has_hi = pc.has_hi;
    Rational lo = pc.lo, hi = pc.hi;
    bool entered_lo = false, entered_hi = false;
    auto clamp_axis = [&](const Rational& o, const Rational& d, const Rational& c) -> bool {
        if (d == 0) return rational_abs(o - c) <= R;
        Rational t1 = (c - R - o) / d;
        Rational t2 = (c + R - o) / d;
        if (t1 > t2) std::swap(t1, t2);
        if (!has_lo || t1 > lo) { lo = t1; has_lo = true; entered_lo = true; }
        if (!has_hi || t2 < hi) { hi = t2; has_hi = true; entered_hi = true; }
        return true;
    };
    if (!clamp_axis(pc.origin.x, pc.dir.x, cx)) return std::nullopt;
    if (!clamp_axis(pc.origin.y, pc.dir.y, cy)) return std::nullopt;
    if (!has_lo || !has_hi || lo > hi) return std::nullopt;
    ClipResult r;
    r.lo = lo;
    r.hi = hi;
    // only flag a square entry when it strictly tightened the piece range
    r.entered_lo = entered_lo && (!pc.has_lo || lo > pc.lo);
    r.entered_hi = entered_hi && (!pc.has_hi || hi < pc.hi);
    return r;
}

struct Enumeration {
    CriticalSet crit;
    std::vector<Cell> cells;
    long unbounded_cells = 0;
};

Rational perimeter_param(const Point2& p, const Rational& cx, const Rational& cy,
                         const Rational& R) {
    if (p.y == cy - R) return p.x - (cx - R);
    if (p.x == cx + R) return 2 * R + (p.y - (cy - R));
    if (p.y == cy + R) return 4 * R + ((cx + R) - p.x);
    return 6 * R + ((cy + R) - p.y);
}

Point2 perimeter_point(Rational s, const Rational& cx, const Rational& cy,
                       const Rational& R) {
    if (s < 2 * R) return {cx - R + s, cy - R};
    if (s < 4 * R) return {cx + R, cy - R + (s - 2 * R)};
    if (s < 6 * R) return {cx + R - (s - 4 * R), cy + R};
    return {cx - R, cy + R - (s - 6 * R)};
}

Enumeration enumerate_core(const Embedding2& emb, NormTag norm) {
    Enumeration out;
    out.crit = critical_points(emb, norm);
    const CriticalSet& crit = out.crit;

    // epsilon: a quarter of the smallest positive coordinate gap among
    // critical vertices and breakpoints (candidates as fallback)
    std::vector<Rational> xs, ys;
    auto add = [&](const Point2& p) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    };
    for (const Point2& p : crit.vertices) add(p);
    for (const Point2& p : crit.breakpoints) add(p);
    if (xs.empty())
        for (const Point2& p : emb.positions) add(p);
    Rational eps;
    bool have_eps = false;
    for (std::vector<Rational>* coords : {&xs, &ys}) {
        std::sort(coords->begin(), coords->end());
        for (std::size_t i = 0; i + 1 < coords->size(); ++i) {
            Rational gap = (*coords)[i + 1] - (*coords)[i];
            if (gap > 0 && (!have_eps || gap < eps)) { eps = gap; have_eps = true; }
        }
    }
    eps = have_eps ? eps / 4 : Rational(1, 4);

    // bounding square: everything critical plus the candidates, with slack
    Rational xlo, xhi, ylo, yhi;
    bool first = true;
    auto grow = [&](const Point2& p) {
        if (first) { xlo = xhi = p.x; ylo = yhi = p.y; first = false; return; }
        xlo = std::min(xlo, p.x); xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y); yhi = std::max(yhi, p.y);
    };
    for (const Point2& p : emb.positions) grow(p);
    for (const Point2& p : crit.vertices) grow(p);
    for (const Point2& p : crit.breakpoints) grow(p);
    Rational spread = std::max(xhi - xlo, yhi - ylo);
    Rational R = 3 * spread + 1;
    Rational cx = (xlo + xhi) / 2, cy = (ylo + yhi) / 2;

    std::vector<std::pair<Point2, bool>> seeds;  // (point, from_perimeter)

    // (i) eight offsets around every critical vertex
    for (const Point2& v : crit.vertices)
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                if (dx || dy) seeds.push_back({{v.x + dx * eps, v.y + dy * eps}, false});

    // (ii) perpendicular offsets at sub-piece midpoints, (iii) perimeter arcs
    std::vector<std::pair<Rational, Point2>> crossings;
    for (const auto& [pair, bis] : crit.bisectors) {
        for (const Piece& pc : bis.pieces) {
            auto clip = clip_to_square(pc, cx, cy, R);
            if (!clip) continue;
            std::vector<Rational> ts{clip->lo, clip->hi};
            for (const Point2& v : crit.vertices)
                if (auto t = param_on_piece(pc, v); t && *t >= clip->lo && *t <= clip->hi)
                    ts.push_back(*t);
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            Rational scale = std::max(rational_abs(pc.dir.x), rational_abs(pc.dir.y));
            Point2 perp{-pc.dir.y * eps / scale, pc.dir.x * eps / scale};
            for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
                Point2 mid = pc.at((ts[i] + ts[i + 1]) / 2);
                seeds.push_back({{mid.x + perp.x, mid.y + perp.y}, false});
                seeds.push_back({{mid.x - perp.x, mid.y - perp.y}, false});
            }
            if (clip->entered_lo) {
                Point2 p = pc.at(clip->lo);
                crossings.push_back({perimeter_param(p, cx, cy, R), p});
            }
            if (clip->entered_hi) {
                Point2 p = pc.at(clip->hi);
                crossings.push_back({perimeter_param(p, cx, cy, R), p});
            }
        }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (crossings.empty()) {
        seeds.push_back({{cx, cy}, true});
        out.unbounded_cells = 1;
    } else {
        out.unbounded_cells = static_cast<long>(crossings.size());
        Rational total = 8 * R;
        for (std::size_t i = 0; i < crossings.size(); ++i) {
            Rational a = crossings[i].first;
            Rational b = (i + 1 < crossings.size()) ? crossings[i + 1].first
                                                    : crossings.front().first + total;
            Rational mid = (a + b) / 2;
            if (mid >= total) mid -= total;
            seeds.push_back({perimeter_point(mid, cx, cy, R), true});
        }
    }

    std::map<Ranking, std::size_t> index;
    for (const auto& [p, perimeter] : seeds) {
        Ranking r;
        try {
            r = ranking_at(emb, norm, p);
        } catch (const TieError&) {
            continue;  // seed landed exactly on a bisector
        }
        auto it = index.find(r);
        if (it == index.end()) {
            index.emplace(r, out.cells.size());
            out.cells.push_back({r, p, !perimeter});
        } else if (perimeter) {
            out.cells[it->second].bounded = false;
        }
    }
    std::sort(out.cells.begin(), out.cells.end(),
              [](const Cell& a, const Cell& b) { return a.ranking < b.ranking; });
    return out;
}

}  // namespace

CriticalSet critical_points(const Embedding2& emb, NormTag norm) {
    if (!detect_degeneracies(norm, emb.positions).empty()) throw DegenerateEmbedding();
    CriticalSet crit;
    const int m = static_cast<int>(emb.positions.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            crit.bisectors.emplace(IndexPair{i, j},
                                   build_bisector(norm, emb.positions[i], emb.positions[j]));
    for (const auto& [pair, bis] : crit.bisectors) {
        if (bis.shape == Bisector::Shape::Poly) {
            crit.breakpoints.insert(bis.seg_lo);
            crit.breakpoints.insert(bis.seg_hi);
        }
    }
    for (auto it1 = crit.bisectors.begin(); it1 != crit.bisectors.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != crit.bisectors.end(); ++it2)
            for (const Point2& p : intersect(it1->second, it2->second).points)
                crit.vertices.insert(p);
    // order the vertices on each bisector along its traversal
    for (const auto& [pair, bis] : crit.bisectors) {
        std::vector<std::pair<std::pair<int, Rational>, Point2>> keyed;
        for (const Point2& v : crit.vertices) {
            for (int pi = 0; pi < static_cast<int>(bis.pieces.size()); ++pi) {
                if (auto t = param_on_piece(bis.pieces[pi], v)) {
                    // the first poly piece is a ray traversed inward
                    Rational key = (bis.pieces.size() > 1 && pi == 0) ? Rational(-*t) : *t;
                    keyed.push_back({{pi, key}, v});
                    break;
                }
            }
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first.first != b.first.first) return a.first.first < b.first.first;
            return a.first.second < b.first.second;
        });
        std::vector<Point2>& tr = crit.traversals[pair];
        for (auto& [k, v] : keyed)
            if (tr.empty() || !(tr.back() == v)) tr.push_back(v);
    }
    return crit;
}

std::vector<Cell> enumerate_cells(const Embedding2& emb, NormTag norm) {
    return enumerate_core(emb, norm).cells;
}

ArrangementGraph build_graph(const Embedding2& emb, NormTag norm) {
    Enumeration e = enumerate_core(emb, norm);
    ArrangementGraph g;
    g.n_v = static_cast<long>(e.crit.vertices.size());
    for (const auto& [pair, tr] : e.crit.traversals)
        if (tr.size() >= 2) g.n_e += static_cast<long>(tr.size()) - 1;
    g.unbounded_cells = e.unbounded_cells;
    g.cells = std::move(e.cells);
    return g;
}

EulerReport euler_audit(const ArrangementGraph& g, int m) {
    EulerReport rep;
    rep.cell_count = static_cast<long>(g.cells.size());
    rep.bound = g.n_e - g.n_v + 1 + g.unbounded_cells;
    rep.pass = rep.cell_count <= rep.bound;
    if (m == 4) {
        rep.m4_checks_apply = true;
        rep.m4_pass = g.n_v <= 8 && rep.cell_count <= 19;
        rep.pass = rep.pass && rep.m4_pass;
    }
    return rep;
}

bool check_prop6(const Embedding2& emb, NormTag norm) {
    if (emb.positions.size() != 4) throw WrongArity();
    const IndexPair cross[3][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    int doubles = 0;
    for (const auto& pr : cross) {
        Bisector b1 = build_bisector(norm, emb.positions[pr[0].first], emb.positions[pr[0].second]);
        Bisector b2 = build_bisector(norm, emb.positions[pr[1].first], emb.positions[pr[1].second]);
        IntersectionResult r = intersect(b1, b2);
        if (r.infinite() || r.points.size() >= 2) ++doubles;
    }
    return doubles <= 1;
}

}  // namespace prefgeo
