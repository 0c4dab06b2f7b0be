#include "prefgeo/profiles.hpp"

#include <algorithm>
#include <numeric>

#include "prefgeo/canonical.hpp"

namespace prefgeo {

Ranking ranking_at(const Embedding2& emb, NormTag norm, const Point2& p) {
    const int m = static_cast<int>(emb.positions.size());
    if (m == 0) throw Error("empty embedding");
    std::vector<std::pair<Rational, int>> keyed;
    keyed.reserve(m);
    for (int i = 0; i < m; ++i) keyed.push_back({distance_key(norm, p, emb.positions[i]), i});
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

Profile profile_of(const Embedding2& emb, NormTag norm, const std::vector<Point2>& voters) {
    Profile prof;
    prof.m = static_cast<int>(emb.positions.size());
    for (std::size_t v = 0; v < voters.size(); ++v) {
        try {
            prof.rankings.insert(ranking_at(emb, norm, voters[v]));
        } catch (TieError& e) {
            e.voter = static_cast<int>(v);
            throw;
        }
    }
    return prof;
}

std::set<int> last_place_candidates(const Profile& prof) {
    std::set<int> last;
    for (const Ranking& r : prof.rankings)
        if (!r.order.empty()) last.insert(r.order.back());
    return last;
}

LastPlaceReport check_last_place_bound(const Profile& prof, NormTag norm, int d) {
    if (norm == NormTag::L2) throw UnsupportedNorm();
    LastPlaceReport rep;
    rep.last_place_count = static_cast<int>(last_place_candidates(prof).size());
    rep.bound = (norm == NormTag::L1) ? (1 << d) : 2 * d;
    rep.pass = rep.last_place_count <= rep.bound;
    return rep;
}

std::optional<std::vector<int>> find_isomorphic_subprofile(const Profile& p, const Profile& q) {
    if (p.m != q.m) throw SizeMismatch();
    if (p.m > 8) throw ComplexityGuard();
    std::vector<int> sigma(p.m);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (const Ranking& r : p.rankings) {
            Ranking mapped;
            mapped.order.reserve(r.order.size());
            for (int c : r.order) mapped.order.push_back(sigma[c]);
            if (!q.rankings.count(mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

RecognitionVerdict recognize_l2_four(const Profile& prof) {
    if (prof.m != 4) throw WrongArity();
    const Profile* canon[3] = {&canonical_p1(), &canonical_p2(), &canonical_p3()};
    for (int w = 0; w < 3; ++w) {
        if (auto sigma = find_isomorphic_subprofile(prof, *canon[w])) {
            RecognitionVerdict v;
            v.euclidean = true;
            v.witness = w + 1;
            v.permutation = *sigma;
            return v;
        }
    }
    return {};
}

Integer l2_planar_max_size(int m) {
    if (m < 1) throw Error("m must be positive");
    Integer mm(m);
    Integer quartic = mm * (3 * mm - 10) * (mm - 1) * (mm + 1);
    // the quartic term is always divisible by 24
    return quartic / 24 + mm * (mm - 1) + 1;
}

Integer bennett_max_size(int m, int d) {
    if (d < 1 || d > m) throw Error("require 1 <= d <= m");
    // unsigned Stirling numbers of the first kind, row by row
    std::vector<Integer> row{1};  // s(0,0)
    for (int n = 1; n <= m; ++n) {
        std::vector<Integer> next(n + 1, 0);
        for (int k = 1; k <= n; ++k)
            next[k] = row[k - 1] + (n - 1) * (k < n ? row[k] : Integer(0));
        row = std::move(next);
    }
    Integer sum = 0;
    for (int k = m - d; k <= m; ++k) sum += row[k];
    return sum;
}

SizeBoundReport size_bound_report(const Profile& prof, NormTag norm) {
    SizeBoundReport rep;
    rep.size = prof.size();
    if (norm == NormTag::L2 && prof.m >= 1) {
        rep.bound = l2_planar_max_size(prof.m);
    } else if ((norm == NormTag::L1 || norm == NormTag::Linf) && prof.m == 4) {
        rep.bound = 19;
    }
    if (rep.bound) rep.within_bound = Integer(static_cast<long>(rep.size)) <= *rep.bound;
    return rep;
}

}  // namespace prefgeo
