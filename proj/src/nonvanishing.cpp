#include "apk/nonvanishing.hpp"

#include <algorithm>
#include <sstream>

#include "apk/core.hpp"

namespace apk {

namespace {

std::vector<int> eta_reps(const ExtSegment& row) {
    if (row.eta_ambiguous()) return {1, -1};
    return {row.eta};
}

// Condition of case (1): A_k >= A_{k-1}, B_k >= B_{k-1}.
bool nec_shifted(const ExtSegment& prev, const ExtSegment& next, int ep, int en) {
    long long d = (prev.seg.A - prev.seg.B).as_integer();
    if (en == neg_one_pow(d) * ep)
        return next.seg.A - next.l >= prev.seg.A - prev.l &&
               next.seg.B + next.l >= prev.seg.B + prev.l;
    return next.seg.B + next.l > prev.seg.A - prev.l;
}

// Condition of case (2): [A_{k-1}, B_{k-1}] contained in [A_k, B_k].
bool nec_contained(const ExtSegment& prev, const ExtSegment& next, int ep, int en) {
    long long d = (prev.seg.A - prev.seg.B).as_integer();
    long long bp = prev.seg.length(), bn = next.seg.length();
    if (en == neg_one_pow(d) * ep)
        return 0 <= next.l - prev.l && next.l - prev.l <= bn - bp;
    return next.l + prev.l >= bp;
}

// Condition of case (3): [A_{k-1}, B_{k-1}] contains [A_k, B_k].
bool nec_containing(const ExtSegment& prev, const ExtSegment& next, int ep, int en) {
    long long d = (prev.seg.A - prev.seg.B).as_integer();
    long long bp = prev.seg.length(), bn = next.seg.length();
    if (en == neg_one_pow(d) * ep)
        return 0 <= prev.l - next.l && prev.l - next.l <= bp - bn;
    return next.l + prev.l >= bn;
}

}  // namespace

NecVerdict nec_adjacent(const Block& blk, int k) {
    if (k < 1 || k >= static_cast<int>(blk.rows.size()))
        throw InputError("nec_adjacent: position out of range");
    const ExtSegment& prev = blk.rows[k - 1];
    const ExtSegment& next = blk.rows[k];
    if (prev.seg.B < 0 || next.seg.B < 0)
        throw InputError("nec_adjacent: requires non-negative B");

    NecVerdict v;
    v.i = k;
    v.j = k - 1;

    bool (*check)(const ExtSegment&, const ExtSegment&, int, int);
    if (next.seg.A >= prev.seg.A && next.seg.B >= prev.seg.B) {
        v.case_used = NecCase::shifted;
        check = nec_shifted;
    } else if (next.seg.A >= prev.seg.A && next.seg.B <= prev.seg.B) {
        v.case_used = NecCase::contained;
        check = nec_contained;
    } else if (next.seg.A <= prev.seg.A && next.seg.B >= prev.seg.B) {
        v.case_used = NecCase::containing;
        check = nec_containing;
    } else {
        throw InternalError("nec_adjacent: earlier row dominates later row");
    }

    for (int ep : eta_reps(prev))
        for (int en : eta_reps(next))
            if (check(prev, next, ep, en)) v.passed = true;

    std::ostringstream w;
    const char* name = v.case_used == NecCase::shifted
                           ? "shifted"
                           : (v.case_used == NecCase::contained ? "contained" : "containing");
    w << "case " << name << " for rows ([" << prev.seg.A.str() << "," << prev.seg.B.str()
      << "],l=" << prev.l << ",eta=" << (prev.eta_ambiguous() ? std::string("*")
                                                              : std::to_string(prev.eta))
      << ") < ([" << next.seg.A.str() << "," << next.seg.B.str() << "],l=" << next.l
      << ",eta=" << (next.eta_ambiguous() ? std::string("*") : std::to_string(next.eta))
      << "): " << (v.passed ? "pass" : "fail");
    v.witness = w.str();
    return v;
}

bool ladder_nonzero(const ExtendedMultiSegment& e) {
    for (const auto& blk : e.blocks) {
        for (std::size_t k = 1; k < blk.rows.size(); ++k) {
            const Segment& sp = blk.rows[k - 1].seg;
            const Segment& sn = blk.rows[k].seg;
            if (!(sn.A >= sp.A && sn.B >= sp.B))
                throw InputError("ladder_nonzero: adjacent rows not ladder-shaped");
        }
        for (std::size_t k = 1; k < blk.rows.size(); ++k)
            if (!nec_adjacent(blk, static_cast<int>(k)).passed) return false;
    }
    return true;
}

namespace {

bool block_nonzero_nonneg(const Block& blk, const BlockOrderInfo& info) {
    for (std::size_t o = 0; o < info.orders.size(); ++o) {
        Block cur = blk;
        for (int k : info.schedules[o]) cur = swap_adjacent(cur, k);
        for (std::size_t k = 1; k < cur.rows.size(); ++k)
            if (!nec_adjacent(cur, static_cast<int>(k)).passed) return false;
    }
    return true;
}

std::optional<std::string> block_nonzero_nonneg_explain(const Block& blk,
                                                        const BlockOrderInfo& info) {
    for (std::size_t o = 0; o < info.orders.size(); ++o) {
        Block cur = blk;
        for (int k : info.schedules[o]) cur = swap_adjacent(cur, k);
        for (std::size_t k = 1; k < cur.rows.size(); ++k) {
            NecVerdict v = nec_adjacent(cur, static_cast<int>(k));
            if (!v.passed) {
                std::ostringstream s;
                s << "rho " << blk.rho << ", admissible order #" << o << " (";
                for (std::size_t p = 0; p < info.orders[o].size(); ++p)
                    s << (p ? " " : "") << info.orders[o][p];
                s << "): " << v.witness;
                return s.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

OrderCache make_order_cache(const ExtendedMultiSegment& shifted) {
    OrderCache cache;
    for (const auto& blk : shifted.blocks) cache.emplace(blk.rho, block_order_info(blk));
    return cache;
}

bool nonzero_nonneg_cached(const ExtendedMultiSegment& e, const OrderCache& cache) {
    for (const auto& blk : e.blocks) {
        auto it = cache.find(blk.rho);
        internal_check(it != cache.end(), "order cache missing a block");
        if (!block_nonzero_nonneg(blk, it->second)) return false;
    }
    return true;
}

bool nonzero_nonneg(const ExtendedMultiSegment& e) {
    return nonzero_nonneg_cached(e, make_order_cache(e));
}

namespace {

// Evaluates (*) for one row given beta = sum of A_j - B_j over earlier rows.
bool star_row(const ExtSegment& row, long long beta) {
    HalfInt bound = row.seg.B + row.l;
    if (row.seg.B.is_integer()) return bound >= 0;
    bool eta_matches = !row.eta_ambiguous() && row.eta == neg_one_pow(beta);
    if (eta_matches) return bound.twice >= -1;  // >= -1/2
    return bound.twice >= 1;                    // >= 1/2
}

}  // namespace

bool star_condition(const ExtendedMultiSegment& e) {
    for (const auto& blk : e.blocks) {
        bool has_negative = false;
        for (const auto& r : blk.rows)
            if (r.seg.B < 0) has_negative = true;
        if (has_negative)
            for (std::size_t i = 1; i < blk.rows.size(); ++i)
                if (blk.rows[i - 1].seg.B > blk.rows[i].seg.B)
                    throw InputError("star_condition: order lacks (P') with negative B present");
        long long beta = 0;
        for (const auto& row : blk.rows) {
            if (!star_row(row, beta)) return false;
            beta += (row.seg.A - row.seg.B).as_integer();
        }
    }
    return true;
}

bool nonzero(const ExtendedMultiSegment& e) {
    long long t = min_shift_to_nonneg(e);
    if (!star_condition(e)) return false;
    return nonzero_nonneg(shift(e, t));
}

bool nonzero_cached(const ExtendedMultiSegment& e, long long t, const OrderCache& cache) {
    if (!star_condition(e)) return false;
    return nonzero_nonneg_cached(shift(e, t), cache);
}

NonzeroExplanation nonzero_explain(const ExtendedMultiSegment& e) {
    NonzeroExplanation out;
    for (const auto& blk : e.blocks) {
        long long beta = 0;
        for (std::size_t i = 0; i < blk.rows.size(); ++i) {
            const ExtSegment& row = blk.rows[i];
            if (!star_row(row, beta)) {
                std::ostringstream s;
                s << "(*) fails at rho " << blk.rho << " row " << i << ": B + l = "
                  << (row.seg.B + row.l).str() << " with B = " << row.seg.B.str()
                  << (row.seg.B.is_integer() ? " (integer, bound 0)"
                                             : " (non-integer, bound +-1/2)");
                out.reason = s.str();
                return out;
            }
            beta += (row.seg.A - row.seg.B).as_integer();
        }
    }
    ExtendedMultiSegment shifted = shift(e, min_shift_to_nonneg(e));
    OrderCache cache = make_order_cache(shifted);
    for (const auto& blk : shifted.blocks) {
        auto reason = block_nonzero_nonneg_explain(blk, cache.at(blk.rho));
        if (reason) {
            out.reason = "necessary condition fails on the shifted rows: " + *reason;
            return out;
        }
    }
    out.nonzero = true;
    return out;
}

}  // namespace apk
