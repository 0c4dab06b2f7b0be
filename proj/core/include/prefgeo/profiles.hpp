#pragma once

#include <optional>
#include <set>
#include <vector>

#include "prefgeo/geometry.hpp"

namespace prefgeo {

/// A strict total order on candidate indices, best first.
struct Ranking {
    std::vector<int> order;

    friend bool operator==(const Ranking& a, const Ranking& b) { return a.order == b.order; }
    friend bool operator<(const Ranking& a, const Ranking& b) { return a.order < b.order; }
};

/// A deduplicated set of distinct rankings over m candidates.
struct Profile {
    int m = 0;
    std::set<Ranking> rankings;

    std::size_t size() const { return rankings.size(); }
};

/// Candidate positions in the plane; index = candidate id.
struct Embedding2 {
    std::vector<Point2> positions;
};

/// Sorts candidates by strictly increasing distance from p; throws
/// TieError when p is equidistant from two candidates.
Ranking ranking_at(const Embedding2& emb, NormTag norm, const Point2& p);

/// The deduplicated set of rankings induced by the voters. TieError is
/// rethrown with the offending voter index attached.
Profile profile_of(const Embedding2& emb, NormTag norm, const std::vector<Point2>& voters);

std::set<int> last_place_candidates(const Profile& prof);

struct LastPlaceReport {
    bool pass = false;
    int last_place_count = 0;
    int bound = 0;
};

/// Necessary condition for d-dimensional realizability: at most 2^d
/// candidates ranked last under l1, at most 2d under linf.
LastPlaceReport check_last_place_bound(const Profile& prof, NormTag norm, int d);

/// Searches for a candidate relabeling sigma with sigma(p) a subset of q.
/// Brute force over permutations; refuses m > 8.
std::optional<std::vector<int>> find_isomorphic_subprofile(const Profile& p, const Profile& q);

struct RecognitionVerdict {
    bool euclidean = false;
    int witness = -1;  // 1, 2 or 3 selecting the canonical maximal profile
    std::vector<int> permutation;
};

/// Four-candidate planar l2 recognition: euclidean iff isomorphic to a
/// subprofile of one of the three canonical 18-ranking maximal profiles.
RecognitionVerdict recognize_l2_four(const Profile& prof);

/// Maximum size of a planar l2 profile on m candidates:
/// m(3m-10)(m-1)(m+1)/24 + m(m-1) + 1.
Integer l2_planar_max_size(int m);

/// Sum of unsigned Stirling numbers of the first kind |s(m,k)| for
/// k = m-d .. m: the maximum number of rankings induced by m points and a
/// sweep direction in d dimensions.
Integer bennett_max_size(int m, int d);

struct SizeBoundReport {
    bool within_bound = true;
    std::size_t size = 0;
    std::optional<Integer> bound;  // unset when no bound applies
};

SizeBoundReport size_bound_report(const Profile& prof, NormTag norm);

}  // namespace prefgeo
