#pragma once

#include <map>

#include "prefgeo/profiles.hpp"

namespace prefgeo {

/// All pairwise bisector intersection points, the polyline breakpoints,
/// and for each bisector the ordered list of vertices along it.
struct CriticalSet {
    std::map<IndexPair, Bisector> bisectors;
    std::set<Point2> vertices;
    std::set<Point2> breakpoints;
    std::map<IndexPair, std::vector<Point2>> traversals;  // ordered along the bisector
};

struct Cell {
    Ranking ranking;
    Point2 witness;
    bool bounded = true;
};

struct ArrangementGraph {
    long n_v = 0;
    long n_e = 0;
    long unbounded_cells = 0;
    std::vector<Cell> cells;  // distinct rankings, sorted by ranking
};

/// Requires an embedding with an empty DegeneracyReport; throws
/// DegenerateEmbedding otherwise.
CriticalSet critical_points(const Embedding2& emb, NormTag norm);

/// Exact set of realizable rankings, one witness each, found by seeded
/// sampling around the critical set (vertex offsets, sub-piece midpoints,
/// and perimeter arcs of a large bounding square).
std::vector<Cell> enumerate_cells(const Embedding2& emb, NormTag norm);

ArrangementGraph build_graph(const Embedding2& emb, NormTag norm);

struct EulerReport {
    bool pass = false;
    long cell_count = 0;
    long bound = 0;  // n_e - n_v + 1 + unbounded_cells
    bool m4_checks_apply = false;
    bool m4_pass = true;  // n_v <= 8 and cells <= 19 when they apply
};

EulerReport euler_audit(const ArrangementGraph& g, int m);

/// For a generic 4-candidate embedding: at most one of the three
/// disjoint-pair bisector pairs intersects in two points.
bool check_prop6(const Embedding2& emb, NormTag norm);

}  // namespace prefgeo
