#pragma once

#include "xprod/config.hpp"

#include <string>
#include <vector>

namespace xprod {

// F1  Z2, scalars, trivial action, w = (1, 2)
// F2  Z2, C^2 sup norm, coordinate flip, w = 1
// F3  S3, M_2, conjugation by a non-unitary realization of the 2-dim irrep, w = 1 + length
// F4  Z2, column algebra (right identity only), y -> -y, w = (1, 2)
// F5  Z4, C^2 sup norm, flip, w = (1, 2, 3, 2), chi(g) = i
Fixture builtin_fixture(const std::string& id);
std::vector<std::string> builtin_fixture_ids();

// The induced pair when A has a one-sided identity, else catalogue line 1.
RepClass default_class(const DynamicalSystem& sys, const Weight& w);

// The non-unitary 2x2 realization of S3 used by F3.
std::vector<Mat> s3_realization();

// Same matrices read on another normed space.
CovariantPair with_space(const DynamicalSystem& sys, const CovariantPair& p, SpaceNorm space);

// Pairs of the fixture moved to l^p coordinates: catalogue line 1 with each
// character, then the non-induced members of R.
RepClass lp_class(const Fixture& fx, PNorm p, std::size_t max_pairs = 3);

// S p S^-1 for random invertible S, on l^2 coordinates.
RepClass random_nondegenerate_pairs(const Fixture& fx, Rng& rng, std::size_t count);

} // namespace xprod
