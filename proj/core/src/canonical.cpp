#include "prefgeo/canonical.hpp"

#include <array>
#include <initializer_list>

namespace prefgeo {

namespace {

// Rankings are written 1-based for readability and shifted to 0-based ids.
Profile make_profile4(std::initializer_list<std::array<int, 4>> rows) {
    Profile p;
    p.m = 4;
    for (const auto& row : rows) {
        Ranking r;
        for (int c : row) r.order.push_back(c - 1);
        p.rankings.insert(r);
    }
    return p;
}

}  // namespace

const Profile& canonical_p0() {
    static const Profile p = make_profile4({
        {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3},
        {1, 4, 3, 2}, {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 4, 1, 3}, {2, 4, 3, 1},
        {3, 1, 4, 2}, {3, 4, 1, 2}, {3, 4, 2, 1}, {4, 1, 2, 3}, {4, 1, 3, 2},
        {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 3, 1, 2}, {4, 3, 2, 1},
    });
    return p;
}

const Profile& canonical_p1() {
    static const Profile p = make_profile4({
        {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {2, 1, 3, 4}, {2, 1, 4, 3},
        {2, 3, 1, 4}, {2, 3, 4, 1}, {2, 4, 1, 3}, {2, 4, 3, 1}, {3, 2, 1, 4},
        {3, 2, 4, 1}, {3, 4, 2, 1}, {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 1, 3},
        {4, 2, 3, 1}, {4, 3, 1, 2}, {4, 3, 2, 1},
    });
    return p;
}

const Profile& canonical_p2() {
    static const Profile p = make_profile4({
        {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3},
        {1, 4, 3, 2}, {2, 1, 3, 4}, {2, 3, 1, 4}, {3, 1, 2, 4}, {3, 1, 4, 2},
        {3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 1, 2}, {3, 4, 2, 1}, {4, 1, 2, 3},
        {4, 1, 3, 2}, {4, 3, 1, 2}, {4, 3, 2, 1},
    });
    return p;
}

const Profile& canonical_p3() {
    static const Profile p = make_profile4({
        {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 4, 2, 3}, {2, 1, 3, 4},
        {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 3, 4, 1}, {2, 4, 1, 3}, {2, 4, 3, 1},
        {3, 1, 2, 4}, {3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 2, 1}, {4, 1, 2, 3},
        {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 3, 2, 1},
    });
    return p;
}

const Profile& example_nine_profile() {
    static const Profile p = make_profile4({
        {4, 3, 1, 2}, {3, 4, 1, 2}, {4, 3, 2, 1}, {3, 4, 2, 1}, {2, 1, 4, 3},
        {2, 1, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 4}, {2, 3, 1, 4},
    });
    return p;
}

}  // namespace prefgeo
