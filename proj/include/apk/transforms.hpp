#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apk/types.hpp"

namespace apk {

enum class UnionCase { case1, case2, case3 };

// Which deformation hypothesis the adjacent pair (k-1, k) satisfies, if any:
// (1) same twisted eta and A_k - l_k = A_{k-1} - l_{k-1};
// (2) same twisted eta and B_k + l_k = B_{k-1} + l_{k-1};
// (3) opposite twisted eta and B_k + l_k = A_{k-1} - l_{k-1} + 1.
// Requires A_k > A_{k-1}, B_k > B_{k-1} and B >= 0; returns nullopt when the
// pair does not qualify. Rows with l = b/2 may realize either eta reading.
std::optional<UnionCase> union_case(const Block& blk, int k);

// Replaces the pair by (union, intersection): row k-1 becomes
// [A_k, B_{k-1}], row k becomes [A_{k-1}, B_k], with (l, eta) given by the
// case formulas. An empty intersection row is deleted. Output normalized.
Block union_move(const Block& blk, int k);
ExtendedMultiSegment union_move(const ExtendedMultiSegment& e, const std::string& rho, int k);

// Fixed point of the union deformation: repeatedly makes the minimal
// maximal-B row adjacent (over some admissible order) to a row it strictly
// dominates and applies the applicable union move. Deterministic policy:
// candidates j in ascending stored order, admissible orders in lexicographic
// order, cases tried (1), (2), (3); after each move the block is brought
// back to the canonical (B, A) order. Requires B >= 0 and nonzero(E).
ExtendedMultiSegment algorithm_star(const ExtendedMultiSegment& e);

struct DerivativeRecord {
    std::vector<std::pair<std::string, HalfInt>> removed;  // ascending per rho
    ExtendedMultiSegment result;
};

// One derivative step at the maximal B of each block: runs algorithm_star,
// removes the exponents of the maximal-B rows of the reduced form, and
// decrements those rows. Requires B >= 0, nonzero(E) and max B >= 1.
DerivativeRecord derivative_step(const ExtendedMultiSegment& e);

}  // namespace apk
