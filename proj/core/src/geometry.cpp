#include "prefgeo/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace prefgeo {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point out
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        Integer num(digits, 10);
        Integer den(1);
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash), 10);
        Integer den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in " + text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(Integer(s, 10));
}

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_vertical(BisectorKind k) {
    return k == BisectorKind::VMinus || k == BisectorKind::VPlus;
}
bool is_horizontal(BisectorKind k) {
    return k == BisectorKind::HMinus || k == BisectorKind::HPlus;
}

Point2 rotate45(const Point2& p) { return {p.x - p.y, p.x + p.y}; }
Point2 rotate45_inv(const Point2& p) {
    return {(p.x + p.y) / 2, (p.y - p.x) / 2};
}

Rational distance_key(NormTag norm, const Point2& p, const Point2& q) {
    Rational dx = rational_abs(p.x - q.x);
    Rational dy = rational_abs(p.y - q.y);
    switch (norm) {
        case NormTag::L1: return dx + dy;
        case NormTag::L2: return dx * dx + dy * dy;
        case NormTag::Linf: return std::max(dx, dy);
    }
    return {};
}

Side side(NormTag norm, const Point2& c1, const Point2& c2, const Point2& p) {
    if (c1 == c2) throw IdenticalCandidates();
    int c = cmp(distance_key(norm, p, c1), distance_key(norm, p, c2));
    if (c < 0) return Side::CloserToFirst;
    if (c > 0) return Side::CloserToSecond;
    return Side::OnBoundary;
}

BisectorKind classify_bisector_l1(const Point2& c1, const Point2& c2) {
    if (c1 == c2) throw IdenticalCandidates();
    Rational dx = rational_abs(c1.x - c2.x);
    Rational dy = rational_abs(c1.y - c2.y);
    if (dx == 0 || dy == 0) return BisectorKind::AxisAligned;
    if (dx == dy) return BisectorKind::QuadrantDegenerate;
    // order the pair by x; the sign suffix encodes whether the y-order agrees
    const Point2& lo = (c1.x < c2.x) ? c1 : c2;
    const Point2& hi = (c1.x < c2.x) ? c2 : c1;
    bool y_agrees = lo.y < hi.y;
    if (dx > dy) return y_agrees ? BisectorKind::VMinus : BisectorKind::VPlus;
    return y_agrees ? BisectorKind::HMinus : BisectorKind::HPlus;
}

BisectorKind classify_bisector(NormTag norm, const Point2& c1, const Point2& c2) {
    switch (norm) {
        case NormTag::L1: return classify_bisector_l1(c1, c2);
        case NormTag::Linf:
            return classify_bisector_l1(rotate45_inv(c1), rotate45_inv(c2));
        case NormTag::L2:
            if (c1 == c2) throw IdenticalCandidates();
            return BisectorKind::AxisAligned;  // lines only; kind is unused
    }
    throw Error("bad norm");
}

namespace {

Piece make_segment(const Point2& a, const Point2& b) {
    Piece p;
    p.origin = a;
    p.dir = {b.x - a.x, b.y - a.y};
    p.has_lo = p.has_hi = true;
    p.lo = 0;
    p.hi = 1;
    return p;
}

Piece make_ray(const Point2& from, const Point2& dir) {
    Piece p;
    p.origin = from;
    p.dir = dir;
    p.has_lo = true;
    p.lo = 0;
    p.has_hi = false;
    return p;
}

Piece make_line_piece(const Rational& a, const Rational& b, const Rational& c) {
    Piece p;
    if (a != 0)
        p.origin = {c / a, Rational(0)};
    else
        p.origin = {Rational(0), c / b};
    p.dir = {b, -a};
    p.has_lo = p.has_hi = false;
    return p;
}

Bisector build_line_bisector(NormTag norm, const Point2& c1, const Point2& c2) {
    Bisector b;
    b.shape = Bisector::Shape::Line;
    b.norm = norm;
    b.c1 = c1;
    b.c2 = c2;
    // squared-distance equality: 2(x2-x1)x + 2(y2-y1)y = |c2|^2 - |c1|^2
    b.a = 2 * (c2.x - c1.x);
    b.b = 2 * (c2.y - c1.y);
    b.c = c2.x * c2.x + c2.y * c2.y - c1.x * c1.x - c1.y * c1.y;
    b.pieces.push_back(make_line_piece(b.a, b.b, b.c));
    return b;
}

Bisector build_bisector_l1(const Point2& c1, const Point2& c2) {
    BisectorKind kind = classify_bisector_l1(c1, c2);
    if (kind == BisectorKind::AxisAligned) {
        Bisector b = build_line_bisector(NormTag::L1, c1, c2);
        b.kind = kind;
        return b;
    }
    Bisector b;
    b.norm = NormTag::L1;
    b.c1 = c1;
    b.c2 = c2;
    b.kind = kind;
    Rational dx = rational_abs(c1.x - c2.x);
    Rational dy = rational_abs(c1.y - c2.y);
    Rational sx = c1.x + c2.x;
    Rational sy = c1.y + c2.y;
    if (kind == BisectorKind::QuadrantDegenerate) {
        b.shape = Bisector::Shape::Quadrant;
        // the square's two free corners
        Rational xlo = std::min(c1.x, c2.x), xhi = std::max(c1.x, c2.x);
        Rational ylo = std::min(c1.y, c2.y), yhi = std::max(c1.y, c2.y);
        bool y_agrees = ((c1.x < c2.x) == (c1.y < c2.y));
        if (y_agrees) {
            b.m1 = {xlo, yhi};
            b.m2 = {xhi, ylo};
        } else {
            b.m1 = {xlo, ylo};
            b.m2 = {xhi, yhi};
        }
        return b;
    }
    b.shape = Bisector::Shape::Poly;
    if (is_vertical(kind)) {
        // endpoints at the pair's extreme heights, at equal l1 distance
        // (dx+dy)/2 from both candidates
        Rational sign = (kind == BisectorKind::VMinus) ? 1 : -1;
        b.seg_lo = {(sx + sign * dy) / 2, std::min(c1.y, c2.y)};
        b.seg_hi = {(sx - sign * dy) / 2, std::max(c1.y, c2.y)};
        b.pieces.push_back(make_ray(b.seg_lo, {Rational(0), Rational(-1)}));
        b.pieces.push_back(make_segment(b.seg_lo, b.seg_hi));
        b.pieces.push_back(make_ray(b.seg_hi, {Rational(0), Rational(1)}));
    } else {
        Rational sign = (kind == BisectorKind::HMinus) ? 1 : -1;
        b.seg_lo = {std::min(c1.x, c2.x), (sy + sign * dx) / 2};
        b.seg_hi = {std::max(c1.x, c2.x), (sy - sign * dx) / 2};
        b.pieces.push_back(make_ray(b.seg_lo, {Rational(-1), Rational(0)}));
        b.pieces.push_back(make_segment(b.seg_lo, b.seg_hi));
        b.pieces.push_back(make_ray(b.seg_hi, {Rational(1), Rational(0)}));
    }
    return b;
}

}  // namespace

Bisector build_bisector(NormTag norm, const Point2& c1, const Point2& c2) {
    if (c1 == c2) throw IdenticalCandidates();
    switch (norm) {
        case NormTag::L2:
            return build_line_bisector(NormTag::L2, c1, c2);
        case NormTag::L1:
            return build_bisector_l1(c1, c2);
        case NormTag::Linf: {
            // conjugate: |p - c|_inf == |inv(p) - inv(c)|_1
            Bisector inner = build_bisector_l1(rotate45_inv(c1), rotate45_inv(c2));
            Bisector b;
            b.shape = inner.shape;
            b.norm = NormTag::Linf;
            b.c1 = c1;
            b.c2 = c2;
            b.kind = inner.kind;
            b.seg_lo = rotate45(inner.seg_lo);
            b.seg_hi = rotate45(inner.seg_hi);
            b.m1 = rotate45(inner.m1);
            b.m2 = rotate45(inner.m2);
            if (inner.shape == Bisector::Shape::Line) {
                // a*u + b*v = c with (u,v) = inv(x,y) maps to
                // (a-b)x + (a+b)y = 2c
                b.a = (inner.a - inner.b) / 2;
                b.b = (inner.a + inner.b) / 2;
                b.c = inner.c;
            }
            for (const Piece& p : inner.pieces) {
                Piece q = p;
                q.origin = rotate45(p.origin);
                q.dir = rotate45(p.dir);
                b.pieces.push_back(q);
            }
            return b;
        }
    }
    throw Error("bad norm");
}

namespace {

bool point_on_piece(const Piece& pc, const Point2& p) {
    Rational t;
    if (pc.dir.x != 0) {
        t = (p.x - pc.origin.x) / pc.dir.x;
        if (pc.origin.y + t * pc.dir.y != p.y) return false;
    } else if (pc.dir.y != 0) {
        if (p.x != pc.origin.x) return false;
        t = (p.y - pc.origin.y) / pc.dir.y;
    } else {
        return p == pc.origin;
    }
    if (pc.has_lo && t < pc.lo) return false;
    if (pc.has_hi && t > pc.hi) return false;
    return true;
}

}  // namespace

bool on_bisector(const Bisector& b, const Point2& p) {
    if (b.shape == Bisector::Shape::Quadrant)
        return distance_key(b.norm, p, b.c1) == distance_key(b.norm, p, b.c2);
    for (const Piece& pc : b.pieces)
        if (point_on_piece(pc, p)) return true;
    return false;
}

namespace {

Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

struct Interval {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
};

// intersection of two pieces: at most one point, or a collinear overlap
void intersect_pieces(const Piece& p1, const Piece& p2, std::set<Point2>& points,
                      std::optional<Overlap>& overlap) {
    Point2 diff{p2.origin.x - p1.origin.x, p2.origin.y - p1.origin.y};
    Rational det = cross(p1.dir, p2.dir);
    if (det != 0) {
        Rational t = cross(diff, p2.dir) / det;
        Rational s = cross(diff, p1.dir) / det;
        if (p1.has_lo && t < p1.lo) return;
        if (p1.has_hi && t > p1.hi) return;
        if (p2.has_lo && s < p2.lo) return;
        if (p2.has_hi && s > p2.hi) return;
        points.insert(p1.at(t));
        return;
    }
    if (cross(diff, p1.dir) != 0) return;  // parallel, not collinear

    // express p2's range in p1's parameter: t(s) = t0 + s * k
    Rational dd = dot(p1.dir, p1.dir);
    Rational t0 = dot(diff, p1.dir) / dd;
    Rational k = dot(p2.dir, p1.dir) / dd;

    Interval r2;  // p2's range mapped onto p1's parameter
    if (k > 0) {
        r2.has_lo = p2.has_lo;
        if (p2.has_lo) r2.lo = t0 + p2.lo * k;
        r2.has_hi = p2.has_hi;
        if (p2.has_hi) r2.hi = t0 + p2.hi * k;
    } else {
        r2.has_lo = p2.has_hi;
        if (p2.has_hi) r2.lo = t0 + p2.hi * k;
        r2.has_hi = p2.has_lo;
        if (p2.has_lo) r2.hi = t0 + p2.lo * k;
    }
    Interval r;
    r.has_lo = p1.has_lo || r2.has_lo;
    if (p1.has_lo && r2.has_lo) r.lo = std::max(p1.lo, r2.lo);
    else if (p1.has_lo) r.lo = p1.lo;
    else if (r2.has_lo) r.lo = r2.lo;
    r.has_hi = p1.has_hi || r2.has_hi;
    if (p1.has_hi && r2.has_hi) r.hi = std::min(p1.hi, r2.hi);
    else if (p1.has_hi) r.hi = p1.hi;
    else if (r2.has_hi) r.hi = r2.hi;

    if (r.has_lo && r.has_hi) {
        if (r.lo > r.hi) return;
        if (r.lo == r.hi) {
            points.insert(p1.at(r.lo));
            return;
        }
        if (!overlap) overlap = Overlap{p1.at(r.lo), p1.at(r.hi), false};
        return;
    }
    // unbounded overlap (common ray or line)
    if (!overlap) {
        Point2 anchor = r.has_lo ? p1.at(r.lo) : (r.has_hi ? p1.at(r.hi) : p1.origin);
        overlap = Overlap{anchor, anchor, true};
    }
}

}  // namespace

IntersectionResult intersect(const Bisector& b1, const Bisector& b2) {
    if (b1.shape == Bisector::Shape::Quadrant || b2.shape == Bisector::Shape::Quadrant)
        throw DegenerateInput("quadrant bisector in intersection; perturb first");
    std::set<Point2> pts;
    std::optional<Overlap> overlap;
    for (const Piece& p1 : b1.pieces)
        for (const Piece& p2 : b2.pieces) intersect_pieces(p1, p2, pts, overlap);
    IntersectionResult res;
    res.points.assign(pts.begin(), pts.end());
    res.overlap = overlap;
    return res;
}

std::optional<Point2> triple_intersection(const Point2& c1, const Point2& c2,
                                          const Point2& c3, NormTag norm) {
    if (norm == NormTag::L2) {
        Bisector b12 = build_bisector(norm, c1, c2);
        Bisector b13 = build_bisector(norm, c1, c3);
        Rational det = b12.a * b13.b - b12.b * b13.a;
        if (det == 0) return std::nullopt;  // collinear candidates
        Point2 p{(b12.c * b13.b - b12.b * b13.c) / det,
                 (b12.a * b13.c - b12.c * b13.a) / det};
        return p;
    }
    // orientation of each pair's bisector; an axis-aligned pair still has
    // one (a horizontally separated pair bisects along a vertical line)
    auto orient = [&](const Point2& a, const Point2& b) -> bool /* vertical */ {
        BisectorKind k = classify_bisector(norm, a, b);
        if (k == BisectorKind::QuadrantDegenerate)
            throw DegenerateInput("quadrant pair in triple intersection");
        if (k == BisectorKind::AxisAligned) {
            const Point2 ra = norm == NormTag::Linf ? rotate45_inv(a) : a;
            const Point2 rb = norm == NormTag::Linf ? rotate45_inv(b) : b;
            return ra.y == rb.y;
        }
        return is_vertical(k);
    };
    struct Pair { const Point2 *a, *b; bool vertical; };
    Pair pairs[3] = {{&c1, &c2, orient(c1, c2)},
                     {&c1, &c3, orient(c1, c3)},
                     {&c2, &c3, orient(c2, c3)}};
    const Pair* v = nullptr;
    const Pair* h = nullptr;
    for (const Pair& pr : pairs) {
        if (pr.vertical && !v) v = &pr;
        if (!pr.vertical && !h) h = &pr;
    }
    if (!v || !h) return std::nullopt;  // all three share orientation
    IntersectionResult r = intersect(build_bisector(norm, *v->a, *v->b),
                                     build_bisector(norm, *h->a, *h->b));
    if (r.infinite() || r.points.size() != 1)
        throw Error("vertical/horizontal bisectors must cross exactly once");
    const Point2& p = r.points.front();
    assert(distance_key(norm, p, c1) == distance_key(norm, p, c2) &&
           distance_key(norm, p, c1) == distance_key(norm, p, c3));
    return p;
}

Parallelogram parallelogram(const Point2& ci, const Point2& cj) {
    if (ci == cj) throw IdenticalCandidates();
    if (ci.y - ci.x == cj.y - cj.x || ci.y + ci.x == cj.y + cj.x)
        throw DegenerateDiagonal();
    Parallelogram par;
    par.ci = ci;
    par.cj = cj;
    par.a = {(ci.x - ci.y + cj.x + cj.y) / 2, (-ci.x + ci.y + cj.x + cj.y) / 2};
    par.b = {(cj.x - cj.y + ci.x + ci.y) / 2, (-cj.x + cj.y + ci.x + ci.y) / 2};
    return par;
}

bool contains(const Parallelogram& par, const Point2& p) {
    // strict interior of the two diagonal strips
    Rational si = par.ci.y - par.ci.x, sj = par.cj.y - par.cj.x;
    Rational ui = par.ci.y + par.ci.x, uj = par.cj.y + par.cj.x;
    Rational s = p.y - p.x, u = p.y + p.x;
    if (!(std::min(si, sj) < s && s < std::max(si, sj))) return false;
    if (!(std::min(ui, uj) < u && u < std::max(ui, uj))) return false;
    return true;
}

namespace {

DegeneracyReport detect_degeneracies_impl(NormTag norm, const std::vector<Point2>& positions,
                                          const std::vector<Point2>& voters) {
    const int n = static_cast<int>(positions.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (positions[i] == positions[j]) throw DuplicateCandidates();

    DegeneracyReport rep;
    std::map<IndexPair, Bisector> bisectors;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (norm == NormTag::L1) {
                BisectorKind k = classify_bisector_l1(positions[i], positions[j]);
                if (k == BisectorKind::QuadrantDegenerate) {
                    rep.square_pairs.insert({i, j});
                    continue;
                }
                if (k == BisectorKind::AxisAligned) {
                    rep.axis_pairs.insert({i, j});
                    continue;
                }
            }
            bisectors.emplace(IndexPair{i, j}, build_bisector(norm, positions[i], positions[j]));
        }
    }

    std::set<Point2> vertices;
    for (auto it1 = bisectors.begin(); it1 != bisectors.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != bisectors.end(); ++it2) {
            IntersectionResult r = intersect(it1->second, it2->second);
            if (r.infinite()) rep.infinite_pairs.insert({it1->first, it2->first});
            for (const Point2& p : r.points) vertices.insert(p);
        }
    }
    for (const Point2& p : vertices) {
        int through = 0;
        for (const auto& [pair, bis] : bisectors)
            if (on_bisector(bis, p)) ++through;
        if (through >= 4) rep.fat_points.push_back(p);
    }
    for (int v = 0; v < static_cast<int>(voters.size()); ++v)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (distance_key(norm, voters[v], positions[i]) ==
                    distance_key(norm, voters[v], positions[j]))
                    rep.voter_ties.push_back({v, {i, j}});
    return rep;
}

std::vector<Point2> map_points(const std::vector<Point2>& pts, Point2 (*f)(const Point2&)) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.push_back(f(p));
    return out;
}

}  // namespace

DegeneracyReport detect_degeneracies(NormTag norm, const std::vector<Point2>& positions,
                                     const std::vector<Point2>& voters) {
    if (norm == NormTag::Linf) {
        // the conjugated l1 frame carries the degeneracy taxonomy
        DegeneracyReport rep = detect_degeneracies_impl(
            NormTag::L1, map_points(positions, rotate45_inv), map_points(voters, rotate45_inv));
        for (Point2& p : rep.fat_points) p = rotate45(p);
        return rep;
    }
    return detect_degeneracies_impl(norm, positions, voters);
}

namespace {

struct Budgets {
    Rational eps;  // half the min of the applicable budgets
};

Budgets compute_budgets(NormTag norm, const std::vector<Point2>& positions,
                        const std::vector<Point2>& voters) {
    const int n = static_cast<int>(positions.size());
    bool have = false;
    Rational m;
    auto fold = [&](const Rational& v) {
        if (v <= 0) return;
        if (!have || v < m) { m = v; have = true; }
    };
    for (const Point2& v : voters) {
        bool strict = false;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Rational d = rational_abs(distance_key(norm, v, positions[i]) -
                                          distance_key(norm, v, positions[j]));
                if (d > 0) strict = true;
                fold(d);
            }
        }
        if (n >= 2 && !strict) throw NoStrictGap();
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational dx = rational_abs(positions[i].x - positions[j].x);
            Rational dy = rational_abs(positions[i].y - positions[j].y);
            fold(dx);
            fold(dy);
            fold(rational_abs(dx - dy));
        }
    }
    if (!have) m = 1;
    return {m / 2};
}

std::vector<Point2> perturb_generic_impl(NormTag norm, std::vector<Point2> positions,
                                         const std::vector<Point2>& voters) {
    int last_size = -1;
    bool use_y = false;
    Rational shrink = 1;
    for (int iter = 0; iter < 1000; ++iter) {
        DegeneracyReport rep = detect_degeneracies(norm, positions, voters);
        if (rep.empty()) return positions;

        int size = static_cast<int>(rep.square_pairs.size() + rep.axis_pairs.size() +
                                    rep.infinite_pairs.size() + rep.fat_points.size() +
                                    rep.voter_ties.size());
        if (size == last_size) {
            // a nudge did not help; try the other axis, then smaller steps
            if (!use_y) use_y = true;
            else { use_y = false; shrink /= 3; }
        } else {
            use_y = false;
            shrink = 1;
        }
        last_size = size;

        int idx;
        bool axis_y = use_y;
        if (!rep.square_pairs.empty()) {
            idx = rep.square_pairs.begin()->first;
        } else if (!rep.axis_pairs.empty()) {
            IndexPair pr = *rep.axis_pairs.begin();
            idx = pr.first;
            if (!use_y)
                axis_y = positions[pr.first].x == positions[pr.second].x ? false : true;
        } else if (!rep.infinite_pairs.empty()) {
            auto [p1, p2] = *rep.infinite_pairs.begin();
            idx = std::min(p1.first, p2.first);
        } else if (!rep.fat_points.empty()) {
            // move the lowest-index candidate equidistant at the fat point
            const Point2& fp = rep.fat_points.front();
            idx = 0;
            Rational best = distance_key(norm, fp, positions[0]);
            // any candidate works; pick the lowest index attaining the
            // repeated distance (index 0 if it participates, else scan)
            std::map<Rational, std::vector<int>> by_key;
            for (int i = 0; i < static_cast<int>(positions.size()); ++i)
                by_key[distance_key(norm, fp, positions[i])].push_back(i);
            for (auto& [k, ids] : by_key)
                if (ids.size() >= 2) { idx = ids.front(); break; }
            (void)best;
        } else {
            idx = rep.voter_ties.front().second.first;
        }

        Rational eps = compute_budgets(norm, positions, voters).eps * shrink;
        if (axis_y)
            positions[idx].y += eps;
        else
            positions[idx].x += eps;
    }
    throw Error("perturbation did not converge");
}

}  // namespace

std::vector<Point2> perturb_generic(NormTag norm, std::vector<Point2> positions,
                                    const std::vector<Point2>& voters) {
    if (norm == NormTag::Linf) {
        std::vector<Point2> out = perturb_generic_impl(
            NormTag::L1, map_points(positions, rotate45_inv), map_points(voters, rotate45_inv));
        return map_points(out, rotate45);
    }
    return perturb_generic_impl(norm, std::move(positions), voters);
}

}  // namespace prefgeo
