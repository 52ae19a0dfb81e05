#pragma once

#include "affweights/weight_space.hpp"

#include <vector>

namespace affweights {

/// Recursive ground truth: reduce to the dominant representative of the
/// W-orbit, then test it against Lambda (dominant weights of L(Lambda) are
/// exactly the dominant eta <= Lambda).
bool is_weight_oracle(const HighestWeight& lambda, const Content& b);

/// All weights with 0 <= b_0 <= floor_bound, found breadth-first from Lambda
/// by subtracting simple roots while membership holds. Sorted
/// lexicographically; empty for a negative bound.
std::vector<Content> enumerate_weights(const HighestWeight& lambda, long floor_bound);

/// Weights of a single floor (b_0 == floor), sorted.
std::vector<Content> floor_of(const std::vector<Content>& weights, long floor);

} // namespace affweights
