#include "apk/orders.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace apk {

namespace {

// prec[i][j] = true when row j must precede row i (row i dominates row j).
std::vector<std::vector<bool>> precedence(const Block& blk) {
    int n = static_cast<int>(blk.rows.size());
    std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && dominates(blk.rows[i].seg, blk.rows[j].seg)) prec[i][j] = true;
    return prec;
}

void extend(const Block& blk, const std::vector<std::vector<bool>>& prec,
            std::vector<bool>& used, Order& cur, std::vector<Order>& out) {
    int n = static_cast<int>(blk.rows.size());
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    std::set<std::pair<long long, long long>> tried;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        bool ready = true;
        for (int j = 0; j < n && ready; ++j)
            if (!used[j] && prec[i][j]) ready = false;
        if (!ready) continue;
        auto key = std::make_pair(blk.rows[i].seg.A.twice, blk.rows[i].seg.B.twice);
        if (!tried.insert(key).second) continue;
        used[i] = true;
        cur.push_back(i);
        extend(blk, prec, used, cur, out);
        cur.pop_back();
        used[i] = false;
    }
}

}  // namespace

std::vector<Order> enumerate_admissible_orders(const Block& blk) {
    std::vector<Order> out;
    auto prec = precedence(blk);
    std::vector<bool> used(blk.rows.size(), false);
    Order cur;
    extend(blk, prec, used, cur, out);
    return out;
}

bool adjacency_realizable(const Block& blk, int i, int j) {
    if (i == j) return false;
    const Segment& si = blk.rows[i].seg;
    const Segment& sj = blk.rows[j].seg;
    if (dominates(sj, si)) return false;  // j would have to come after i
    for (std::size_t m = 0; m < blk.rows.size(); ++m) {
        if (static_cast<int>(m) == i || static_cast<int>(m) == j) continue;
        const Segment& sm = blk.rows[m].seg;
        if (dominates(sm, sj) && dominates(si, sm)) return false;
    }
    return true;
}

std::vector<AdjTriple> realizable_adjacent_pairs(const Block& blk) {
    std::vector<AdjTriple> out;
    auto orders = enumerate_admissible_orders(blk);
    for (std::size_t o = 0; o < orders.size(); ++o)
        for (std::size_t p = 1; p < orders[o].size(); ++p)
            out.push_back({orders[o][p], orders[o][p - 1], static_cast<int>(o)});
    return out;
}

namespace {

// The order-change formulas for one adjacent pair on concrete eta
// representatives. `prev` sits at position k-1, `next` at k; returns the new
// pair in position order (next first).
std::pair<ExtSegment, ExtSegment> swap_pair_raw(const ExtSegment& prev, const ExtSegment& next) {
    const Segment& sp = prev.seg;
    const Segment& sn = next.seg;
    long long bp = sp.length(), bn = sn.length();
    long long d_prev = (sp.A - sp.B).as_integer();  // A_{k-1} - B_{k-1}
    long long d_next = (sn.A - sn.B).as_integer();  // A_k - B_k
    bool same = next.eta == neg_one_pow(d_prev) * prev.eta;
    int eps = neg_one_pow(d_prev) * prev.eta * next.eta;

    if (sp.A <= sn.A && sp.B >= sn.B) {
        // [A_{k-1}, B_{k-1}] contained in [A_k, B_k]
        ExtSegment new_prev{sp, prev.l, neg_one_pow(d_next) * prev.eta};
        long long l_raw = next.l + eps * (bp - 2 * prev.l);
        int eta;
        if (same && bn - 2 * next.l < 2 * (bp - 2 * prev.l))
            eta = neg_one_pow(d_prev) * next.eta;
        else
            eta = neg_one_pow(d_prev - 1) * next.eta;
        ExtSegment new_next = normalize_row(sn, l_raw, eta);
        return {new_next, normalize_row(new_prev)};
    }
    // [A_{k-1}, B_{k-1}] contains [A_k, B_k]
    ExtSegment new_next{sn, next.l, neg_one_pow(d_prev) * next.eta};
    long long l_raw = prev.l + eps * (bn - 2 * next.l);
    int eta;
    if (same && bp - 2 * prev.l < 2 * (bn - 2 * next.l))
        eta = neg_one_pow(d_next) * prev.eta;
    else
        eta = neg_one_pow(d_next - 1) * prev.eta;
    ExtSegment new_prev = normalize_row(sp, l_raw, eta);
    return {normalize_row(new_next), new_prev};
}

std::vector<int> eta_reps(const ExtSegment& row) {
    if (row.eta_ambiguous()) return {1, -1};
    return {row.eta};
}

}  // namespace

Block swap_adjacent(const Block& blk, int k) {
    if (k < 1 || k >= static_cast<int>(blk.rows.size()))
        throw InputError("swap: position out of range");
    const ExtSegment& prev = blk.rows[k - 1];
    const ExtSegment& next = blk.rows[k];
    if (!nested_or_equal(prev.seg, next.seg))
        throw InputError("swap: rows " + std::to_string(k - 1) + " and " + std::to_string(k) +
                         " are not nested; the transposed order would not be admissible");
    bool has_negative = false;
    for (const auto& r : blk.rows)
        if (r.seg.B < 0) has_negative = true;
    if (has_negative && prev.seg.B != next.seg.B)
        throw InputError("swap: would break (P') while negative B is present");

    Block out = blk;
    if (prev.seg == next.seg) {
        // Symmetric situation; the position data is unchanged.
        return out;
    }

    std::optional<std::pair<ExtSegment, ExtSegment>> result;
    for (int ep : eta_reps(prev)) {
        for (int en : eta_reps(next)) {
            ExtSegment p = prev, n = next;
            p.eta = ep;
            n.eta = en;
            auto r = swap_pair_raw(p, n);
            if (!result) {
                result = r;
            } else {
                internal_check(rows_equivalent(result->first, r.first) &&
                                   rows_equivalent(result->second, r.second),
                               "swap: result depends on the eta representative");
            }
        }
    }
    out.rows[k - 1] = result->first;
    out.rows[k] = result->second;
    return out;
}

ExtendedMultiSegment swap_adjacent(const ExtendedMultiSegment& e, const std::string& rho, int k) {
    ExtendedMultiSegment out = e;
    out.block(rho) = swap_adjacent(out.block(rho), k);
    return out;
}

std::vector<int> swap_schedule(const Order& target) {
    int n = static_cast<int>(target.size());
    Order cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<int> sched;
    for (int p = 0; p < n; ++p) {
        int q = p;
        while (cur[q] != target[p]) ++q;
        for (; q > p; --q) {
            std::swap(cur[q - 1], cur[q]);
            sched.push_back(q);
        }
    }
    return sched;
}

Block reorder(const Block& blk, const Order& target) {
    if (target.size() != blk.rows.size()) throw InputError("reorder: order size mismatch");
    Block out = blk;
    for (int k : swap_schedule(target)) out = swap_adjacent(out, k);
    for (auto& row : out.rows) row = normalize_row(row);
    return out;
}

ExtendedMultiSegment reorder(const ExtendedMultiSegment& e, const std::string& rho,
                             const Order& target) {
    ExtendedMultiSegment out = e;
    out.block(rho) = reorder(out.block(rho), target);
    return out;
}

Order canonical_order(const Block& blk) {
    Order ord(blk.rows.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int x, int y) {
        const Segment& sx = blk.rows[x].seg;
        const Segment& sy = blk.rows[y].seg;
        if (sx.B != sy.B) return sx.B < sy.B;
        return sx.A < sy.A;
    });
    return ord;
}

BlockOrderInfo block_order_info(const Block& blk) {
    BlockOrderInfo info;
    info.orders = enumerate_admissible_orders(blk);
    info.schedules.reserve(info.orders.size());
    for (const auto& ord : info.orders) info.schedules.push_back(swap_schedule(ord));
    return info;
}

}  // namespace apk
