#include "prefgeo/constructions.hpp"

#include <algorithm>

namespace prefgeo {

namespace {

// distinct small tie-breaking nudge for candidate index j
Rational nudge(int j) { return Rational(1, 100 * (j + 3)); }

}  // namespace

Embedding2 theta_m4_embedding(int m) {
    if (m < 2) throw Error("m must be at least 2");
    Embedding2 emb;
    emb.positions = {make_point(0, 0), make_point(1, 2)};
    for (int k = 3; k <= m; ++k) {
        Rational min_x = emb.positions[0].x, max_x = emb.positions[0].x;
        Rational min_y = emb.positions[0].y, max_y = emb.positions[0].y;
        for (const Point2& p : emb.positions) {
            min_x = std::min(min_x, p.x); max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y); max_y = std::max(max_y, p.y);
        }
        if (k % 2 == 0) {
            // high above the others: all new bisectors are horizontal
            emb.positions.push_back({(max_x + min_x) / 2, max_y + 2 * (max_x - min_x)});
        } else {
            // far to the right: all new bisectors are vertical
            emb.positions.push_back({max_x + 2 * (max_y - min_y), (max_y + min_y) / 2});
        }
    }
    if (!detect_degeneracies(NormTag::L1, emb.positions).empty())
        emb.positions = perturb_generic(NormTag::L1, emb.positions);
    return emb;
}

HVCounts hv_counts(int m) {
    if (m < 2) throw Error("m must be at least 2");
    HVCounts c{1, 0};  // the first pair's bisector is horizontal
    for (int k = 3; k <= m; ++k) {
        if (k % 2 == 0)
            c.h += k - 1;
        else
            c.v += k - 1;
    }
    return c;
}

EmbeddingD linf_last_place_embedding(int d) {
    if (d < 1) throw Error("d must be positive");
    EmbeddingD emb;
    emb.d = d;
    for (int i = 0; i < d; ++i) {
        for (int sign : {-1, 1}) {
            PointD c, v;
            c.coords.assign(d, 0);
            v.coords.assign(d, 0);
            int j = static_cast<int>(emb.candidates.size());
            v.coords[i] = sign;
            c.coords[i] = sign * (1 + nudge(j));
            emb.candidates.push_back(c);
            emb.voters.push_back(v);
        }
    }
    return emb;
}

EmbeddingD l1_last_place_embedding(int d) {
    if (d < 1) throw Error("d must be positive");
    EmbeddingD emb;
    emb.d = d;
    for (int mask = 0; mask < (1 << d); ++mask) {
        PointD c, v;
        for (int i = 0; i < d; ++i) {
            int s = (mask >> i) & 1 ? 1 : -1;
            c.coords.push_back(s);
            v.coords.push_back(-s);
        }
        // shifting the first coordinate keeps every distance comparison strict
        c.coords[0] += nudge(mask);
        emb.candidates.push_back(c);
        emb.voters.push_back(v);
    }
    return emb;
}

namespace {

Rational distance_key_d(NormTag norm, const PointD& p, const PointD& q) {
    Rational acc = 0;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        Rational diff = rational_abs(p.coords[i] - q.coords[i]);
        if (norm == NormTag::L1)
            acc += diff;
        else
            acc = std::max(acc, diff);
    }
    return acc;
}

}  // namespace

Ranking ranking_at_d(const EmbeddingD& emb, NormTag norm, const PointD& p) {
    if (norm == NormTag::L2) throw UnsupportedNorm();
    const int m = static_cast<int>(emb.candidates.size());
    if (m == 0) throw Error("empty embedding");
    std::vector<std::pair<Rational, int>> keyed;
    keyed.reserve(m);
    for (int i = 0; i < m; ++i)
        keyed.push_back({distance_key_d(norm, p, emb.candidates[i]), i});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i + 1 < m; ++i)
        if (keyed[i].first == keyed[i + 1].first)
            throw TieError(keyed[i].second, keyed[i + 1].second);
    Ranking r;
    r.order.reserve(m);
    for (auto& [k, i] : keyed) r.order.push_back(i);
    return r;
}

Profile profile_of_d(const EmbeddingD& emb, NormTag norm) {
    Profile prof;
    prof.m = static_cast<int>(emb.candidates.size());
    for (std::size_t v = 0; v < emb.voters.size(); ++v) {
        try {
            prof.rankings.insert(ranking_at_d(emb, norm, emb.voters[v]));
        } catch (TieError& e) {
            e.voter = static_cast<int>(v);
            throw;
        }
    }
    return prof;
}

}  // namespace prefgeo
