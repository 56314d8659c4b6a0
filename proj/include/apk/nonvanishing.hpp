#pragma once

#include <map>
#include <optional>
#include <string>

#include "apk/orders.hpp"
#include "apk/types.hpp"

namespace apk {

enum class NecCase { shifted, contained, containing };

struct NecVerdict {
    int i = 0;  // later row (position k in the checked order)
    int j = 0;  // earlier row
    NecCase case_used = NecCase::shifted;
    bool passed = false;
    std::string witness;
};

// The necessary condition for the adjacent pair (k-1, k) of the stored
// order. Requires B >= 0 throughout the block. Rows with l = b/2 pass when
// some eta representative passes.
NecVerdict nec_adjacent(const Block& blk, int k);

// Sufficient criterion for ladder-shaped blocks: every adjacent pair must
// satisfy A_k >= A_{k-1} and B_k >= B_{k-1} (throws otherwise), and the
// verdict is the conjunction of the adjacent-pair conditions. Serves as an
// independent oracle for nonzero_nonneg on that domain.
bool ladder_nonzero(const ExtendedMultiSegment& e);

// Full criterion for non-negative E: the necessary conditions must hold for
// every pair adjacent in some admissible order, each checked on the
// transformed E for that order.
bool nonzero_nonneg(const ExtendedMultiSegment& e);

// Per-row lower bound on B + l governing the negative-B part. Requires (P')
// when the block has negative B.
bool star_condition(const ExtendedMultiSegment& e);

// pi(E) != 0: star condition on E plus the non-negative criterion on the
// minimally shifted E.
bool nonzero(const ExtendedMultiSegment& e);

// Same verdict with a human-readable reason for a "zero" answer.
struct NonzeroExplanation {
    bool nonzero = false;
    std::string reason;  // empty when nonzero
};
NonzeroExplanation nonzero_explain(const ExtendedMultiSegment& e);

// Order data per rho computed once from the (shifted) support and shared
// across candidates with the same support.
using OrderCache = std::map<std::string, BlockOrderInfo>;
OrderCache make_order_cache(const ExtendedMultiSegment& shifted);
bool nonzero_nonneg_cached(const ExtendedMultiSegment& e, const OrderCache& cache);
bool nonzero_cached(const ExtendedMultiSegment& e, long long t, const OrderCache& cache);

}  // namespace apk
