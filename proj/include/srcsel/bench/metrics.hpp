#pragma once

#include <cstddef>

#include "srcsel/bench/ground_truth.hpp"

namespace srcsel {

// Share (in %) of nonempty subsets whose profit is strictly below P(s).
// The empty subset is not counted in the denominator.
double subset_percentile(const SourceSet& s, const GroundTruthTable& table);

// 100 * explored / (2^m - 1).
double models_explored_pct(std::size_t explored, std::size_t m);

// (p_star - p_method) / p_star. Throws NonpositiveOptimum when p_star <= 0.
double ground_truth_diff(double p_star, double p_method);

}  // namespace srcsel
