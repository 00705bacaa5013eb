#pragma once

#include <cstdint>
#include <vector>

namespace lw {
namespace setcover {

// Minimum set cover on at most 32 elements, sets as bitmasks.
// Used by the exact covering-number solver.

using Mask = std::uint32_t;

// Drop sets contained in another set and duplicates; the optimum over the
// reduced family equals the optimum over the original.
std::vector<Mask> keep_maximal(std::vector<Mask> sets);

// Standard greedy: pick the set covering the most uncovered elements
// (lowest index wins ties).  Upper bound with the usual ln(n)+1 guarantee.
int greedy_cover(int n_elems, const std::vector<Mask>& sets);

// Exact minimum via branch-and-bound: branch on the sets containing the
// lowest uncovered element, prune with a pairwise-conflict lower bound and
// the greedy incumbent.
int exact_min_cover(int n_elems, const std::vector<Mask>& sets);

// Exhaustive reference: dynamic program over all 2^n element subsets.
// Exponential in n_elems; kept as the independent oracle for the
// branch-and-bound solver.
int exhaustive_min_cover(int n_elems, const std::vector<Mask>& sets);

}  // namespace setcover
}  // namespace lw
