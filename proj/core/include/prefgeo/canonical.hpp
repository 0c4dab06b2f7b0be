#pragma once

#include "prefgeo/profiles.hpp"

namespace prefgeo {

/// The unique known voter-maximal planar l1 profile on 4 candidates
/// (19 rankings).
const Profile& canonical_p0();

/// The three voter-maximal planar l2 profiles on 4 candidates
/// (18 rankings each, pairwise non-isomorphic).
const Profile& canonical_p1();
const Profile& canonical_p2();
const Profile& canonical_p3();

/// The classic 9-ranking profile that is planar l1 but not planar l2.
const Profile& example_nine_profile();

}  // namespace prefgeo
