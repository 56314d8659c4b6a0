#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/types.hpp"

namespace apk {

// A linear extension of the dominance order: seq[p] = row index placed at
// position p.
using Order = std::vector<int>;

// All linear extensions of the block's dominance poset, in lexicographic
// order of the index sequence. Rows with identical segments are
// interchangeable and contribute one representative.
std::vector<Order> enumerate_admissible_orders(const Block& blk);

// True iff some admissible order places i immediately after j; equivalently
// no row sits strictly dominance-between the two.
bool adjacency_realizable(const Block& blk, int i, int j);

struct AdjTriple {
    int i;      // later row (original index)
    int j;      // earlier row (original index)
    int order;  // index into enumerate_admissible_orders(blk)
};

// Every (later, earlier) adjacency of every admissible order.
std::vector<AdjTriple> realizable_adjacent_pairs(const Block& blk);

// Transposes the adjacent rows k-1 < k and recomputes (l, eta) so that the
// represented object is unchanged. The pair must be nested or equal; equal
// segments leave the data untouched. With negative B in the block only
// equal-B pairs may swap, so (P') survives.
Block swap_adjacent(const Block& blk, int k);
ExtendedMultiSegment swap_adjacent(const ExtendedMultiSegment& e, const std::string& rho, int k);

// Adjacent-transposition schedule (each entry is the later position of the
// swapped pair) that turns the stored order into `target`.
std::vector<int> swap_schedule(const Order& target);

// Applies the schedule for `target` row by row; the result is normalized.
Block reorder(const Block& blk, const Order& target);
ExtendedMultiSegment reorder(const ExtendedMultiSegment& e, const std::string& rho,
                             const Order& target);

// Stable (B, A) sort as a target order; satisfies (P) and, when applicable,
// (P').
Order canonical_order(const Block& blk);

// Cached order data for one block support, reused across candidates that
// share the support (the packet loop revisits the same orders many times).
struct BlockOrderInfo {
    std::vector<Order> orders;
    std::vector<std::vector<int>> schedules;  // parallel to orders
};

BlockOrderInfo block_order_info(const Block& blk);

}  // namespace apk
