#pragma once

#include <cstdint>

#include "gdmcf/graph.hpp"
#include "gdmcf/schedule.hpp"

namespace gdmcf {

// Samples R^t ~ q(R^t | R^0) under the cumulative transition Qbar^t.
// Per-cell categorical sampling is realized sparsely: present edges survive
// with Qbar[1][1] and absent cells switch on as a Bernoulli(Qbar[0][1])
// process walked with geometric skips, so the cost is O(nnz + flips) while
// the distribution matches independent per-cell draws. Deterministic given
// (seed, t); rows consume streams derived per (user, t).
InteractionMatrix corrupt_structure(const InteractionMatrix& r0, const DiscreteSchedule& s,
                                    int t, uint64_t seed);

// One-step transition of an existing state under a single Q (used by the
// guided reverse chain). touched selects the rows that transition; nullptr
// means all rows. RNG streams are derived per row from seed alone, so a
// skipped row leaves other rows' draws unchanged.
InteractionMatrix transition_structure(const InteractionMatrix& r, const TransitionMatrix2& q,
                                       const std::vector<char>* touched, uint64_t seed);

// X^t = sqrt(abar^t) X^0 + sqrt(1-abar^t) eps, eps ~ N(0, I) per entry.
FeatureMatrix corrupt_features(const FeatureMatrix& x0, const ContinuousSchedule& s,
                               int t, uint64_t seed);

}  // namespace gdmcf
