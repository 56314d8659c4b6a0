#include "apk/transforms.hpp"

#include <algorithm>

#include "apk/core.hpp"
#include "apk/nonvanishing.hpp"
#include "apk/orders.hpp"

namespace apk {

namespace {

std::vector<int> eta_reps(const ExtSegment& row) {
    if (row.eta_ambiguous()) return {1, -1};
    return {row.eta};
}

bool case_matches(UnionCase c, const ExtSegment& prev, const ExtSegment& next, int ep, int en) {
    long long d_prev = (prev.seg.A - prev.seg.B).as_integer();
    bool same = en == neg_one_pow(d_prev) * ep;
    switch (c) {
        case UnionCase::case1:
            return same && next.seg.A - next.l == prev.seg.A - prev.l;
        case UnionCase::case2:
            return same && next.seg.B + next.l == prev.seg.B + prev.l;
        case UnionCase::case3:
            return !same && next.seg.B + next.l == prev.seg.A - prev.l + 1;
    }
    return false;
}

bool pair_qualifies(const Block& blk, int k) {
    if (k < 1 || k >= static_cast<int>(blk.rows.size())) return false;
    const ExtSegment& prev = blk.rows[k - 1];
    const ExtSegment& next = blk.rows[k];
    if (prev.seg.B < 0 || next.seg.B < 0) return false;
    return next.seg.A > prev.seg.A && next.seg.B > prev.seg.B;
}

// The union/intersection data for concrete eta representatives; returns the
// new (row k-1, row k) before normalization. The intersection may be empty.
std::pair<ExtSegment, ExtSegment> union_pair_raw(UnionCase c, const ExtSegment& prev,
                                                 const ExtSegment& next, int ep, int en) {
    Segment uni{next.seg.A, prev.seg.B};
    Segment inter{prev.seg.A, next.seg.B};
    long long delta = (next.seg.A - prev.seg.A).as_integer();
    long long bp = prev.seg.length();
    switch (c) {
        case UnionCase::case1:
            return {ExtSegment{uni, prev.l, ep},
                    ExtSegment{inter, next.l - delta, neg_one_pow(delta) * en}};
        case UnionCase::case2:
            if (bp - 2 * prev.l >= delta)
                return {ExtSegment{uni, prev.l + delta, ep},
                        ExtSegment{inter, next.l, neg_one_pow(delta) * en}};
            return {ExtSegment{uni, bp - prev.l, -ep},
                    ExtSegment{inter, next.l, neg_one_pow(delta) * en}};
        case UnionCase::case3:
            if (next.l <= prev.l)
                return {ExtSegment{uni, prev.l, ep},
                        ExtSegment{inter, next.l, neg_one_pow(delta) * en}};
            return {ExtSegment{uni, prev.l, ep},
                    ExtSegment{inter, prev.l, neg_one_pow(delta - 1) * en}};
    }
    throw InternalError("union_pair_raw: unreachable");
}

}  // namespace

std::optional<UnionCase> union_case(const Block& blk, int k) {
    if (!pair_qualifies(blk, k)) return std::nullopt;
    const ExtSegment& prev = blk.rows[k - 1];
    const ExtSegment& next = blk.rows[k];
    for (UnionCase c : {UnionCase::case1, UnionCase::case2, UnionCase::case3})
        for (int ep : eta_reps(prev))
            for (int en : eta_reps(next))
                if (case_matches(c, prev, next, ep, en)) return c;
    return std::nullopt;
}

Block union_move(const Block& blk, int k) {
    auto c = union_case(blk, k);
    if (!c) throw InputError("union_move: no deformation case applies to this pair");
    const ExtSegment& prev = blk.rows[k - 1];
    const ExtSegment& next = blk.rows[k];

    // Apply the formulas for every representative realizing some case and
    // check they agree; pi(E) is well defined on equivalence classes.
    std::optional<std::pair<ExtSegment, ExtSegment>> result;
    for (UnionCase cc : {UnionCase::case1, UnionCase::case2, UnionCase::case3}) {
        for (int ep : eta_reps(prev)) {
            for (int en : eta_reps(next)) {
                if (!case_matches(cc, prev, next, ep, en)) continue;
                auto raw = union_pair_raw(cc, prev, next, ep, en);
                auto norm = std::make_pair(normalize_row(raw.first), normalize_row(raw.second));
                if (!result) {
                    result = norm;
                } else {
                    internal_check(rows_equivalent(result->first, norm.first) &&
                                       rows_equivalent(result->second, norm.second),
                                   "union_move: result depends on the eta representative");
                }
            }
        }
    }

    Block out = blk;
    out.rows[k - 1] = result->first;
    if (result->second.seg.empty())
        out.rows.erase(out.rows.begin() + k);
    else
        out.rows[k] = result->second;
    return out;
}

ExtendedMultiSegment union_move(const ExtendedMultiSegment& e, const std::string& rho, int k) {
    ExtendedMultiSegment out = e;
    out.block(rho) = union_move(out.block(rho), k);
    return out;
}

namespace {

// One pass of Steps 1-3 on a single block at the fixed maximal-B level.
// Returns true when a union move was applied (the block is replaced by the
// reduced, re-canonicalized form).
bool algorithm_star_pass(Block& blk, HalfInt bmax) {
    std::vector<int> imax;
    for (std::size_t i = 0; i < blk.rows.size(); ++i)
        if (blk.rows[i].seg.B == bmax) imax.push_back(static_cast<int>(i));
    if (imax.empty()) return false;

    auto orders = enumerate_admissible_orders(blk);
    for (int i : imax) {
        for (int j = 0; j < static_cast<int>(blk.rows.size()); ++j) {
            if (j == i) continue;
            if (!(dominates(blk.rows[i].seg, blk.rows[j].seg))) continue;
            if (!adjacency_realizable(blk, i, j)) continue;
            for (const auto& ord : orders) {
                int pos_j = -1;
                for (std::size_t p = 0; p < ord.size(); ++p)
                    if (ord[p] == j) pos_j = static_cast<int>(p);
                if (pos_j < 0 || pos_j + 1 >= static_cast<int>(ord.size()) ||
                    ord[pos_j + 1] != i)
                    continue;
                Block cur = reorder(blk, ord);
                int k = pos_j + 1;
                if (!union_case(cur, k)) continue;
                cur = union_move(cur, k);
                blk = reorder(cur, canonical_order(cur));
                return true;
            }
        }
    }
    return false;
}

}  // namespace

ExtendedMultiSegment algorithm_star(const ExtendedMultiSegment& e) {
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows)
            if (row.seg.B < 0) throw InputError("algorithm_star: requires non-negative B");
    if (!nonzero(e)) throw InputError("algorithm_star: pi(E) = 0");

    ExtendedMultiSegment out = normalized(e);
    for (auto& blk : out.blocks) {
        if (blk.rows.empty()) continue;
        blk = reorder(blk, canonical_order(blk));
        HalfInt bmax = blk.rows[0].seg.B;
        for (const auto& r : blk.rows) bmax = std::max(bmax, r.seg.B);
        while (algorithm_star_pass(blk, bmax)) {
        }
    }
    return out;
}

DerivativeRecord derivative_step(const ExtendedMultiSegment& e) {
    HalfInt global_bmax = HalfInt::of(0);
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows) global_bmax = std::max(global_bmax, row.seg.B);
    if (global_bmax < 1) throw InputError("derivative_step: max B < 1, no derivative defined");

    // B^max is fixed per block before the reduction; the reduction may empty
    // the maximal-B set, in which case nothing is removed for that block.
    std::map<std::string, HalfInt> input_bmax;
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows) {
            auto [it, fresh] = input_bmax.emplace(blk.rho, row.seg.B);
            if (!fresh) it->second = std::max(it->second, row.seg.B);
        }

    DerivativeRecord rec;
    rec.result = algorithm_star(e);
    for (auto& blk : rec.result.blocks) {
        if (blk.rows.empty()) continue;
        HalfInt bmax = input_bmax.at(blk.rho);
        if (bmax < 1) continue;
        std::vector<HalfInt> removed;
        for (auto& row : blk.rows) {
            if (row.seg.B != bmax) continue;
            for (const auto& x : row.seg.exponents()) removed.push_back(x);
            row.seg.A = row.seg.A - 1;
            row.seg.B = row.seg.B - 1;
        }
        std::sort(removed.begin(), removed.end());
        for (const auto& x : removed) rec.removed.emplace_back(blk.rho, x);
    }
    internal_check(nonzero(rec.result), "derivative_step: result vanishes");
    return rec;
}

}  // namespace apk
