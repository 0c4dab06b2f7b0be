#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prefgeo/arrangement.hpp"
#include "prefgeo/constructions.hpp"
#include "support.hpp"

using namespace prefgeo;
using testsupport::Rng;

namespace {

Point2 pt(long x, long y) { return make_point(x, y); }

PointD pd(std::vector<long> coords) {
    PointD p;
    for (long c : coords) p.coords.push_back(make_rational(c));
    return p;
}

}  // namespace

TEST_CASE("rotate45 examples") {
    CHECK(rotate45(pt(1, 0)) == pt(1, 1));
    CHECK(rotate45(pt(3, 4)) == pt(-1, 7));
    CHECK(rotate45(pt(0, 0)) == pt(0, 0));
    CHECK(distance_key(NormTag::Linf, rotate45(pt(3, 4)), pt(0, 0)) == 7);
}

TEST_CASE("theta_m4_embedding positions") {
    Embedding2 m2 = theta_m4_embedding(2);
    CHECK(m2.positions == std::vector<Point2>{pt(0, 0), pt(1, 2)});

    Embedding2 m3 = theta_m4_embedding(3);
    CHECK(m3.positions[2] == pt(5, 1));

    Embedding2 m4 = theta_m4_embedding(4);
    CHECK(m4.positions[3] == Point2{parse_rational("5/2"), parse_rational("12")});

    CHECK_THROWS(theta_m4_embedding(1));
}

TEST_CASE("theta_m4_embedding is generic and correctly oriented") {
    for (int m : {4, 6, 9, 12}) {
        Embedding2 emb = theta_m4_embedding(m);
        CHECK(detect_degeneracies(NormTag::L1, emb.positions).empty());
        // candidate k (1-based) adds only horizontal bisectors when k is
        // even and only vertical ones when k is odd
        for (int j = 2; j < m; ++j) {
            for (int i = 0; i < j; ++i) {
                BisectorKind k = classify_bisector_l1(emb.positions[i], emb.positions[j]);
                if ((j + 1) % 2 == 0)
                    CHECK(is_horizontal(k));
                else
                    CHECK(is_vertical(k));
            }
        }
    }
}

TEST_CASE("hv_counts") {
    HVCounts c2 = hv_counts(2);
    CHECK(c2.h == 1);
    CHECK(c2.v == 0);
    HVCounts c3 = hv_counts(3);
    CHECK(c3.h == 1);
    CHECK(c3.v == 2);
    HVCounts c4 = hv_counts(4);
    CHECK(c4.h == 4);
    CHECK(c4.v == 2);
    for (int m = 2; m <= 14; ++m) {
        HVCounts c = hv_counts(m);
        CHECK(c.h + c.v == m * (m - 1) / 2);
    }
}

TEST_CASE("theta family cell counts meet the lower bound") {
    std::vector<double> log_m, log_n;
    for (int m : {4, 6, 8, 10, 12}) {
        Embedding2 emb = theta_m4_embedding(m);
        std::vector<Cell> cells = enumerate_cells(emb, NormTag::L1);
        HVCounts hv = hv_counts(m);
        CHECK(static_cast<long>(cells.size()) >= (hv.h + 1) * (hv.v + 1));
        if (m >= 6) {
            log_m.push_back(std::log(static_cast<double>(m)));
            log_n.push_back(std::log(static_cast<double>(cells.size())));
        }
    }
    // least-squares slope of log(count) against log(m)
    double n = static_cast<double>(log_m.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_m.size(); ++i) {
        sx += log_m[i];
        sy += log_n[i];
        sxx += log_m[i] * log_m[i];
        sxy += log_m[i] * log_n[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope >= 3.3);
    CHECK(slope <= 4.5);
}

TEST_CASE("linf_last_place_embedding") {
    for (int d : {1, 2, 3, 4}) {
        EmbeddingD emb = linf_last_place_embedding(d);
        REQUIRE(static_cast<int>(emb.candidates.size()) == 2 * d);
        REQUIRE(static_cast<int>(emb.voters.size()) == 2 * d);
        Profile prof = profile_of_d(emb, NormTag::Linf);
        CHECK(static_cast<int>(last_place_candidates(prof).size()) == 2 * d);
        // each voter ranks its pair partner last
        for (int v = 0; v < 2 * d; ++v) {
            Ranking r = ranking_at_d(emb, NormTag::Linf, emb.voters[v]);
            CHECK(r.order.back() == (v ^ 1));
        }
    }
}

TEST_CASE("l1_last_place_embedding") {
    for (int d : {1, 2, 3, 4}) {
        EmbeddingD emb = l1_last_place_embedding(d);
        REQUIRE(static_cast<int>(emb.candidates.size()) == (1 << d));
        Profile prof = profile_of_d(emb, NormTag::L1);
        CHECK(static_cast<int>(last_place_candidates(prof).size()) == (1 << d));
        // the opposite-corner voter ranks its candidate last
        for (int u = 0; u < (1 << d); ++u) {
            Ranking r = ranking_at_d(emb, NormTag::L1, emb.voters[u]);
            CHECK(r.order.back() == u);
        }
    }
}

TEST_CASE("ranking_at_d") {
    // agrees with the planar ranking on 2-dimensional data
    Embedding2 planar{{pt(0, 8), pt(10, 10), pt(4, 1), pt(8, 3)}};
    EmbeddingD lifted;
    lifted.d = 2;
    for (const Point2& p : planar.positions) lifted.candidates.push_back({{p.x, p.y}});
    Rng rng(51);
    int done = 0;
    while (done < 200) {
        Point2 v = testsupport::random_int_point(rng, -5, 15);
        PointD vd{{v.x, v.y}};
        try {
            Ranking l1d = ranking_at_d(lifted, NormTag::L1, vd);
            Ranking l1p = ranking_at(planar, NormTag::L1, v);
            Ranking linfd = ranking_at_d(lifted, NormTag::Linf, vd);
            Ranking linfp = ranking_at(planar, NormTag::Linf, v);
            CHECK(l1d == l1p);
            CHECK(linfd == linfp);
            ++done;
        } catch (const TieError&) {
            continue;
        }
    }

    // the d=3 conjugate-free cases from the tight constructions
    EmbeddingD linf3 = linf_last_place_embedding(3);
    Ranking r = ranking_at_d(linf3, NormTag::Linf, linf3.voters[1]);
    CHECK(r.order.back() == 0);

    CHECK_THROWS_AS(ranking_at_d(linf3, NormTag::L2, linf3.voters[0]), UnsupportedNorm);
    EmbeddingD tie;
    tie.d = 1;
    tie.candidates = {pd({-1}), pd({1})};
    CHECK_THROWS_AS(ranking_at_d(tie, NormTag::L1, pd({0})), TieError);
}

TEST_CASE("property: random d-dimensional instances respect the last-place bounds") {
    Rng rng(52);
    std::uniform_int_distribution<int> d_pick(1, 3);
    std::uniform_int_distribution<int> m_pick(2, 10);
    std::uniform_int_distribution<long> coord(-12, 12);
    for (NormTag norm : {NormTag::L1, NormTag::Linf}) {
        for (int trial = 0; trial < 100; ++trial) {
            int d = d_pick(rng);
            int m = m_pick(rng);
            EmbeddingD emb;
            emb.d = d;
            while (static_cast<int>(emb.candidates.size()) < m) {
                PointD c;
                for (int i = 0; i < d; ++i) c.coords.push_back(make_rational(coord(rng)));
                emb.candidates.push_back(c);
            }
            Profile prof;
            prof.m = m;
            int voters = 0;
            while (voters < 50) {
                PointD v;
                for (int i = 0; i < d; ++i) v.coords.push_back(make_rational(coord(rng)));
                try {
                    prof.rankings.insert(ranking_at_d(emb, norm, v));
                    ++voters;
                } catch (const TieError&) {
                    ++voters;  // tied voters induce no ranking; skip them
                }
            }
            int bound = norm == NormTag::L1 ? (1 << d) : 2 * d;
            CHECK(static_cast<int>(last_place_candidates(prof).size()) <= bound);
        }
    }
}
