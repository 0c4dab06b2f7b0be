#pragma once

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "prefgeo/errors.hpp"
#include "prefgeo/rational.hpp"

namespace prefgeo {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Point2& a, const Point2& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.y < b.y;
    }
};

inline Point2 make_point(long x, long y) { return {make_rational(x), make_rational(y)}; }

enum class NormTag { L1, L2, Linf };

enum class Side { CloserToFirst, CloserToSecond, OnBoundary };

/// The generic l1 polyline shapes, plus the two non-generic cases.
enum class BisectorKind { VMinus, VPlus, HMinus, HPlus, AxisAligned, QuadrantDegenerate };

bool is_vertical(BisectorKind k);
bool is_horizontal(BisectorKind k);

/// One maximal straight part of a bisector: p + t*dir for t in [lo, hi],
/// where either bound may be infinite. Directions are not normalized.
struct Piece {
    Point2 origin;
    Point2 dir;  // used as a vector
    bool has_lo = false;
    bool has_hi = false;
    Rational lo;
    Rational hi;

    Point2 at(const Rational& t) const {
        return {origin.x + t * dir.x, origin.y + t * dir.y};
    }
};

struct Bisector {
    enum class Shape { Line, Poly, Quadrant };

    Shape shape;
    NormTag norm;
    Point2 c1, c2;

    // Line: ax + by = c (shape == Line only)
    Rational a, b, c;

    // Poly: the l1 taxonomy; for Linf the kind refers to the conjugated
    // l1 frame and seg_lo/seg_hi are already mapped back.
    BisectorKind kind = BisectorKind::AxisAligned;
    Point2 seg_lo, seg_hi;

    // Quadrant: the square's two free corners.
    Point2 m1, m2;

    // Ordered traversal pieces (one for Line, three for Poly). Empty for
    // Quadrant.
    std::vector<Piece> pieces;
};

struct Overlap {
    Point2 a, b;            // endpoints of the common part (b meaningful only if bounded)
    bool unbounded = false; // common part is a ray or line
};

struct IntersectionResult {
    std::vector<Point2> points;        // 0, 1 or 2 distinct points
    std::optional<Overlap> overlap;    // set iff the intersection is infinite

    bool empty() const { return points.empty() && !overlap; }
    bool infinite() const { return overlap.has_value(); }
};

struct Parallelogram {
    Point2 ci, a, cj, b;  // vertex cycle ci -> a -> cj -> b
};

using IndexPair = std::pair<int, int>;

struct DegeneracyReport {
    std::set<IndexPair> square_pairs;                 // dx == dy (in the norm's l1 frame)
    std::set<IndexPair> axis_pairs;                   // dx == 0 or dy == 0
    std::set<std::pair<IndexPair, IndexPair>> infinite_pairs;
    std::vector<Point2> fat_points;                   // on >= 4 hypersurfaces
    std::vector<std::pair<int, IndexPair>> voter_ties;  // (voter, candidate pair)

    bool empty() const {
        return square_pairs.empty() && axis_pairs.empty() && infinite_pairs.empty() &&
               fat_points.empty() && voter_ties.empty();
    }
};

/// Order-isomorphic distance key: |dx|+|dy| for L1, max for Linf, and the
/// squared euclidean distance for L2.
Rational distance_key(NormTag norm, const Point2& p, const Point2& q);

Side side(NormTag norm, const Point2& c1, const Point2& c2, const Point2& p);

BisectorKind classify_bisector_l1(const Point2& c1, const Point2& c2);

/// Classification in the norm's own frame (for Linf the pair is first
/// conjugated through the 45-degree map).
BisectorKind classify_bisector(NormTag norm, const Point2& c1, const Point2& c2);

Bisector build_bisector(NormTag norm, const Point2& c1, const Point2& c2);

bool on_bisector(const Bisector& b, const Point2& p);

IntersectionResult intersect(const Bisector& b1, const Bisector& b2);

std::optional<Point2> triple_intersection(const Point2& c1, const Point2& c2,
                                          const Point2& c3, NormTag norm);

Parallelogram parallelogram(const Point2& ci, const Point2& cj);
bool contains(const Parallelogram& par, const Point2& p);

DegeneracyReport detect_degeneracies(NormTag norm, const std::vector<Point2>& positions,
                                     const std::vector<Point2>& voters = {});

/// Repairs all degeneracy classes by iterated single-coordinate nudges of
/// size half the applicable budget, preserving every strict voter
/// comparison. Deterministic: lowest-index candidate of the offending
/// pair moves, x-coordinate first.
std::vector<Point2> perturb_generic(NormTag norm, std::vector<Point2> positions,
                                    const std::vector<Point2>& voters = {});

// 45-degree conjugation map and its inverse: (x,y) -> (x-y, x+y).
// Satisfies |p|_1 = |rotate45(p)|_inf exactly.
Point2 rotate45(const Point2& p);
Point2 rotate45_inv(const Point2& p);

}  // namespace prefgeo
