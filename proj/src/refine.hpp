#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alexlab/poset.hpp"

namespace alexlab::detail {

// Iterated invariant refinement (height, degree pair, beat kinds, then
// neighbor-class multisets to a fixpoint) computed jointly for two posets so
// the class ids are comparable.  Returns nullopt early when the class
// histograms already rule out an isomorphism.
std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_stable_colors(
    const Poset& p, const Poset& q);

// Color-respecting backtracking over candidate bijections, candidates in
// ascending index order.  With all == nullptr returns the first isomorphism
// p -> q (or nullopt); otherwise collects every one into *all (and returns
// nullopt), throwing SearchBudgetExceeded when *all outgrows group_cap.
// budget caps the number of candidate expansions.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q,
                                                 std::size_t budget,
                                                 std::vector<std::vector<int>>* all,
                                                 std::size_t group_cap = static_cast<std::size_t>(-1));

}  // namespace alexlab::detail
