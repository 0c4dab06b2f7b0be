#pragma once

#include "prefgeo/profiles.hpp"

namespace prefgeo {

struct PointD {
    std::vector<Rational> coords;
};

struct EmbeddingD {
    int d = 0;
    std::vector<PointD> candidates;
    std::vector<PointD> voters;
};

struct HVCounts {
    long h = 0;  // horizontal bisectors
    long v = 0;  // vertical bisectors
};

/// The planar l1 family with Theta(m^4) cells: candidates placed so that
/// each even-indexed addition contributes only horizontal bisectors and
/// each odd-indexed one only vertical bisectors.
Embedding2 theta_m4_embedding(int m);

/// Horizontal/vertical bisector counts of theta_m4_embedding(m) by the
/// recurrence; (h+1)(v+1) is the guaranteed cell lower bound.
HVCounts hv_counts(int m);

/// 2d candidates at +/- unit vectors, one voter on each, tie-broken by
/// distinct per-candidate nudges: every candidate is ranked last by its
/// partner's voter under linf.
EmbeddingD linf_last_place_embedding(int d);

/// 2^d candidates on hypercube vertices with opposite voters, tie-broken:
/// every candidate is ranked last under l1.
EmbeddingD l1_last_place_embedding(int d);

/// d-dimensional ranking by exact l1/linf distance; L2 is unsupported.
Ranking ranking_at_d(const EmbeddingD& emb, NormTag norm, const PointD& p);

/// Deduplicated profile of the embedding's own voters.
Profile profile_of_d(const EmbeddingD& emb, NormTag norm);

}  // namespace prefgeo
