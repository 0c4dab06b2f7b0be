#pragma once

// Shared helpers for the test suites: deterministic random instance
// generation and an independent dense-grid oracle for cell enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prefgeo/arrangement.hpp"
#include "prefgeo/profiles.hpp"

namespace testsupport {

using namespace prefgeo;

using Rng = std::mt19937_64;

inline Point2 random_int_point(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return make_point(dist(rng), dist(rng));
}

/// Integer-coordinate positions that are already generic (rejection
/// sampling; no perturbation, so the coordinates stay integral).
inline std::vector<Point2> random_generic_int_positions(Rng& rng, int m, NormTag norm,
                                                        long lo = 0, long hi = 8) {
    while (true) {
        std::vector<Point2> pts;
        for (int i = 0; i < m; ++i) pts.push_back(random_int_point(rng, lo, hi));
        bool dup = false;
        for (int i = 0; i < m && !dup; ++i)
            for (int j = i + 1; j < m; ++j)
                if (pts[i] == pts[j]) { dup = true; break; }
        if (dup) continue;
        if (detect_degeneracies(norm, pts).empty()) return pts;
    }
}

/// Generic positions obtained by perturbing random integer samples;
/// coordinates may be non-integral.
inline std::vector<Point2> random_generic_positions(Rng& rng, int m, NormTag norm,
                                                    long lo = 0, long hi = 30) {
    while (true) {
        std::vector<Point2> pts;
        for (int i = 0; i < m; ++i) pts.push_back(random_int_point(rng, lo, hi));
        try {
            return perturb_generic(norm, pts);
        } catch (const Error&) {
            continue;  // duplicates or a stuck perturbation; redraw
        }
    }
}

/// Independent dense-grid enumeration oracle. Walks a grid of pitch
/// eps/2 over the critical bounding box (plus margin) in scaled 64-bit
/// integer arithmetic and collects every tie-free ranking. Returns false
/// when the grid would be unreasonably large for a unit test.
inline bool grid_oracle(const std::vector<Point2>& positions, NormTag norm,
                        std::set<std::vector<int>>& out, std::size_t max_points = 8000000) {
    const int m = static_cast<int>(positions.size());

    // pitch: half of the seeded-sampling epsilon, straight from the
    // critical coordinates (the cell search below shares nothing with
    // enumerate_cells)
    CriticalSet crit = critical_points(Embedding2{positions}, norm);
    std::vector<Rational> xs, ys;
    for (const Point2& p : crit.vertices) { xs.push_back(p.x); ys.push_back(p.y); }
    for (const Point2& p : crit.breakpoints) { xs.push_back(p.x); ys.push_back(p.y); }
    if (xs.empty())
        for (const Point2& p : positions) { xs.push_back(p.x); ys.push_back(p.y); }
    Rational eps;
    bool have = false;
    for (std::vector<Rational>* coords : {&xs, &ys}) {
        std::sort(coords->begin(), coords->end());
        for (std::size_t i = 0; i + 1 < coords->size(); ++i) {
            Rational gap = (*coords)[i + 1] - (*coords)[i];
            if (gap > 0 && (!have || gap < eps)) { eps = gap; have = true; }
        }
    }
    if (!have) eps = 1;
    Rational pitch = eps / 8;

    // integer bounding box around everything critical
    long xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    auto grow = [&](const Point2& p) {
        long px = static_cast<long>(std::floor(to_double(p.x)));
        long py = static_cast<long>(std::floor(to_double(p.y)));
        if (first) { xlo = px; xhi = px + 1; ylo = py; yhi = py + 1; first = false; return; }
        xlo = std::min(xlo, px); xhi = std::max(xhi, px + 1);
        ylo = std::min(ylo, py); yhi = std::max(yhi, py + 1);
    };
    for (const Point2& p : positions) grow(p);
    for (const Point2& p : crit.vertices) grow(p);
    for (const Point2& p : crit.breakpoints) grow(p);
    xlo -= 2; ylo -= 2; xhi += 2; yhi += 2;

    // scale everything by the pitch denominator; grid points and
    // candidates become plain 64-bit integers
    if (!pitch.get_den().fits_slong_p() || !pitch.get_num().fits_slong_p()) return false;
    long q = pitch.get_den().get_si();
    long p_num = pitch.get_num().get_si();
    std::vector<std::pair<std::int64_t, std::int64_t>> cand;
    for (const Point2& c : positions) {
        Rational sx = c.x * q, sy = c.y * q;
        if (sx.get_den() != 1 || sy.get_den() != 1) return false;  // needs integer input
        cand.push_back({sx.get_num().get_si(), sy.get_num().get_si()});
    }
    std::int64_t nx = ((xhi - xlo) * q) / p_num;
    std::int64_t ny = ((yhi - ylo) * q) / p_num;
    if (nx <= 0 || ny <= 0) return false;
    if (static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) > max_points) return false;

    std::vector<std::pair<std::int64_t, int>> keyed(m);
    std::vector<int> order(m);
    for (std::int64_t ix = 0; ix <= nx; ++ix) {
        std::int64_t gx = xlo * q + ix * p_num;
        for (std::int64_t iy = 0; iy <= ny; ++iy) {
            std::int64_t gy = ylo * q + iy * p_num;
            for (int i = 0; i < m; ++i) {
                std::int64_t dx = gx - cand[i].first;
                std::int64_t dy = gy - cand[i].second;
                if (dx < 0) dx = -dx;
                if (dy < 0) dy = -dy;
                std::int64_t key;
                switch (norm) {
                    case NormTag::L1: key = dx + dy; break;
                    case NormTag::Linf: key = dx > dy ? dx : dy; break;
                    case NormTag::L2: key = dx * dx + dy * dy; break;
                }
                keyed[i] = {key, i};
            }
            std::sort(keyed.begin(), keyed.end());
            bool tie = false;
            for (int i = 0; i + 1 < m; ++i)
                if (keyed[i].first == keyed[i + 1].first) { tie = true; break; }
            if (tie) continue;
            for (int i = 0; i < m; ++i) order[i] = keyed[i].second;
            out.insert(order);
        }
    }
    return true;
}

}  // namespace testsupport
