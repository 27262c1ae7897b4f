#pragma once

// Exhaustive zero-tolerance identity suites for the tree combinatorics: the
// geometric mean value property, the cocycle law of the metric derivative,
// and the change-of-variables mass identity.  These run over large index
// spaces, so they work on flat tables rather than the one-off operations.

#include <cstdint>

#include "loglab/word_tree.hpp"

namespace loglab {

struct SuiteStats {
    long long checks = 0;
    long long failures = 0;
    bool pass() const { return checks > 0 && failures == 0; }
};

// d(g c1, g c2)^2 = D_g(c1) D_g(c2) d(c1, c2)^2 in exponents, over all
// disjoint cylinder pairs of depth <= max_depth and all |g| <= max_glen with
// preconditions met.  corrupt_orientation flips the derivative's reference
// word and is expected to fail.
SuiteStats run_gmv_suite(const TreeBoundarySpace& s, int max_depth, int max_glen,
                         bool corrupt_orientation, int threads);

// D_{gh}(c) = D_g(h c) D_h(c) at depth |g| + |h| + 1: exhaustive for
// |g|, |h| <= exhaustive_len, then seeded random (g, h, c) up to sampled_len.
SuiteStats run_cocycle_suite(const TreeBoundarySpace& s, int exhaustive_len, int sampled_len,
                             int sampled_pairs, int samples_per_pair, std::uint64_t seed,
                             int threads);

// sum over depth-(|g|+1) cylinders of D_g^D nu(c) = 1, exact: exhaustive for
// |g| <= exhaustive_glen, then sampled_per_len random g per length up to
// max_glen.
SuiteStats run_change_of_var_suite(const TreeBoundarySpace& s, int exhaustive_glen, int max_glen,
                                   int sampled_per_len, std::uint64_t seed, int threads);

}  // namespace loglab
