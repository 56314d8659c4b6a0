#include "apk/arthur.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "apk/nonvanishing.hpp"
#include "apk/orders.hpp"

namespace apk {

namespace {

void require_p_prime(const Block& blk, const char* who) {
    for (std::size_t i = 1; i < blk.rows.size(); ++i)
        if (blk.rows[i - 1].seg.B > blk.rows[i].seg.B)
            throw InputError(std::string(who) + ": stored order does not satisfy (P')");
}

}  // namespace

std::vector<int> z_set(const Block& blk, int i, bool literal_parity) {
    const ExtSegment& ri = blk.rows[i];
    long long bi = ri.seg.length();
    HalfInt mid_i = ri.seg.A + ri.seg.B;  // twice the midpoint
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(blk.rows.size()); ++j) {
        if (j == i) continue;
        const ExtSegment& rj = blk.rows[j];
        long long bj = rj.seg.length();
        long long parity = literal_parity ? (rj.seg.A - ri.seg.A).as_integer() : (bi - bj);
        if (parity % 2 == 0) continue;
        HalfInt mid_j = rj.seg.A + rj.seg.B;
        if (j < i) {
            if (mid_j > mid_i && bj > bi) out.push_back(j);
        } else {
            if (mid_j < mid_i && bj < bi) out.push_back(j);
        }
    }
    return out;
}

Character character_of(const ExtendedMultiSegment& e, bool literal_parity) {
    Character chi;
    for (const auto& blk : e.blocks) {
        require_p_prime(blk, "character_of");
        for (int i = 0; i < static_cast<int>(blk.rows.size()); ++i) {
            const ExtSegment& row = blk.rows[i];
            long long a = (row.seg.A + row.seg.B + 1).as_integer();
            long long b = row.seg.length();
            long long z = static_cast<long long>(z_set(blk, i, literal_parity).size());
            int sgn = neg_one_pow(z + b / 2 + row.l) * sign_pow(row.eta, b);
            chi.by_row.emplace_back(ASummand{blk.rho, a, b}, sgn);
        }
    }
    internal_check(chi.well_defined(),
                   "character_of: equal summands received different signs");
    return chi;
}

ExtendedMultiSegment aubert_dual(const ExtendedMultiSegment& e) {
    ExtendedMultiSegment out = e;
    for (std::size_t bi = 0; bi < e.blocks.size(); ++bi) {
        const Block& blk = e.blocks[bi];
        require_p_prime(blk, "aubert_dual");
        int n = static_cast<int>(blk.rows.size());

        long long beta_total = 0;
        for (const auto& r : blk.rows) beta_total += r.seg.length();

        std::vector<ExtSegment> hat(n);
        long long beta_before = 0;  // sum of (A_j - B_j) over j < i
        for (int i = 0; i < n; ++i) {
            const ExtSegment& row = blk.rows[i];
            Segment seg{row.seg.A, -row.seg.B};
            long long b = row.seg.length();
            long long l_hat;
            int eta_hat;
            if (row.seg.B.is_integer()) {
                l_hat = row.l + row.seg.B.as_integer();
                eta_hat = neg_one_pow(beta_total - b) * row.eta;
            } else {
                long long alpha_after = 0;  // sum of (A_j + B_j) over j > i
                for (int j = i + 1; j < n; ++j)
                    alpha_after += (blk.rows[j].seg.A + blk.rows[j].seg.B).as_integer();
                bool matches = !row.eta_ambiguous() && row.eta == neg_one_pow(beta_before);
                // value of B + 1/2 resp. B - 1/2 as an integer
                l_hat = row.l + (row.seg.B.twice + (matches ? 1 : -1)) / 2;
                int eta_rep = row.eta_ambiguous() ? -neg_one_pow(beta_before) : row.eta;
                eta_hat = neg_one_pow(alpha_after + beta_before + 1) * eta_rep;
            }
            if (l_hat < 0 || 2 * l_hat > seg.length())
                throw InputError("aubert_dual: dual l out of range at rho " + blk.rho +
                                 " row " + std::to_string(i) + " (pi(E) = 0)");
            hat[i] = normalize_row(seg, l_hat, eta_hat);
            beta_before += (row.seg.A - row.seg.B).as_integer();
        }
        std::reverse(hat.begin(), hat.end());
        out.blocks[bi].rows = std::move(hat);
    }
    ValidationReport rep = validate(out, false);
    internal_check(rep.ok(), "aubert_dual: produced an invalid extended multi-segment");
    return out;
}

namespace {

// Distinct (l, eta) classes of a row: l in [0, b/2], eta = +1 then -1, one
// class at l = b/2.
std::vector<std::pair<long long, int>> row_classes(const Segment& seg) {
    std::vector<std::pair<long long, int>> out;
    long long b = seg.length();
    for (long long l = 0; 2 * l <= b; ++l) {
        if (2 * l == b) {
            out.push_back({l, 1});
        } else {
            out.push_back({l, 1});
            out.push_back({l, -1});
        }
    }
    return out;
}

struct CandidateSpace {
    ExtendedMultiSegment base;                                   // rows in (P') order
    std::vector<std::vector<std::pair<long long, int>>> classes; // per flat row
    std::vector<std::pair<int, int>> row_at;                     // flat -> (block, row)
    std::vector<bool> same_as_prev;                              // equal segment as previous row

    ExtendedMultiSegment materialize(const std::vector<int>& choice) const {
        ExtendedMultiSegment e = base;
        for (std::size_t f = 0; f < choice.size(); ++f) {
            auto [bi, ri] = row_at[f];
            auto [l, eta] = classes[f][static_cast<std::size_t>(choice[f])];
            e.blocks[bi].rows[ri].l = l;
            e.blocks[bi].rows[ri].eta = eta;
        }
        return e;
    }
};

CandidateSpace candidate_space(const AParameter& psi) {
    CandidateSpace cs;
    cs.base = parameter_rows(psi);
    for (std::size_t bi = 0; bi < cs.base.blocks.size(); ++bi) {
        const Block& blk = cs.base.blocks[bi];
        for (std::size_t ri = 0; ri < blk.rows.size(); ++ri) {
            cs.classes.push_back(row_classes(blk.rows[ri].seg));
            cs.row_at.emplace_back(static_cast<int>(bi), static_cast<int>(ri));
            cs.same_as_prev.push_back(ri > 0 && blk.rows[ri - 1].seg == blk.rows[ri].seg);
        }
    }
    return cs;
}

// All sign-valid assignments; within runs of identical segments the class
// indices are non-decreasing, so equivalent multisets appear once.
void enumerate_choices(const CandidateSpace& cs, std::size_t f, int min_class, int parity,
                       std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (f == cs.classes.size()) {
        if (parity == 1) out.push_back(cur);
        return;
    }
    int start = cs.same_as_prev[f] ? min_class : 0;
    for (int c = start; c < static_cast<int>(cs.classes[f].size()); ++c) {
        auto [l, eta] = cs.classes[f][static_cast<std::size_t>(c)];
        auto [bi, ri] = cs.row_at[f];
        long long b = cs.base.blocks[bi].rows[ri].seg.length();
        int contrib = neg_one_pow(b / 2 + l) * sign_pow(eta, b);
        cur.push_back(c);
        enumerate_choices(cs, f + 1, c, parity * contrib, cur, out);
        cur.pop_back();
    }
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

std::vector<char> nonzero_flags(const CandidateSpace& cs,
                                const std::vector<std::vector<int>>& choices, int threads) {
    ExtendedMultiSegment shifted_base = shift(cs.base, min_shift_to_nonneg(cs.base));
    OrderCache cache = make_order_cache(shifted_base);
    long long t = min_shift_to_nonneg(cs.base);

    std::vector<char> flags(choices.size(), 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t c = lo; c < hi; ++c) {
            ExtendedMultiSegment e = cs.materialize(choices[c]);
            flags[c] = nonzero_cached(e, t, cache) ? 1 : 0;
        }
    };
    threads = resolve_threads(threads);
    if (threads <= 1 || choices.size() < 64) {
        work(0, choices.size());
        return flags;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (choices.size() + threads - 1) / threads;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        std::size_t lo = std::min(choices.size(), static_cast<std::size_t>(w) * chunk);
        std::size_t hi = std::min(choices.size(), lo + chunk);
        pool.emplace_back([&, lo, hi, w] {
            try {
                work(lo, hi);
            } catch (...) {
                errs[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errs)
        if (err) std::rethrow_exception(err);
    return flags;
}

}  // namespace

std::vector<PacketMember> packet_enumerate(const AParameter& psi, int threads) {
    CandidateSpace cs = candidate_space(psi);
    std::vector<std::vector<int>> choices;
    std::vector<int> cur;
    enumerate_choices(cs, 0, 0, 1, cur, choices);
    std::vector<char> flags = nonzero_flags(cs, choices, threads);

    std::vector<PacketMember> out;
    for (std::size_t c = 0; c < choices.size(); ++c) {
        if (!flags[c]) continue;
        ExtendedMultiSegment e = cs.materialize(choices[c]);
        Character chi = character_of(e);
        out.push_back({std::move(e), std::move(chi)});
    }
    return out;
}

long long packet_count(const AParameter& psi, int threads) {
    CandidateSpace cs = candidate_space(psi);
    std::vector<std::vector<int>> choices;
    std::vector<int> cur;
    enumerate_choices(cs, 0, 0, 1, cur, choices);
    std::vector<char> flags = nonzero_flags(cs, choices, threads);
    long long n = 0;
    for (char f : flags) n += f;
    return n;
}

LanglandsData langlands_separated(const ExtendedMultiSegment& e) {
    for (const auto& blk : e.blocks)
        for (std::size_t j = 0; j < blk.rows.size(); ++j)
            for (std::size_t i = j + 1; i < blk.rows.size(); ++i)
                if (!(blk.rows[i].seg.B > blk.rows[j].seg.A))
                    throw InputError(
                        "langlands: E is not separated (row " + std::to_string(i) + " of rho " +
                        blk.rho + " does not start above row " + std::to_string(j) + ")");
    if (!nonzero(e)) throw InputError("langlands: pi(E) = 0");

    long long t = min_shift_to_nonneg(e);
    ExtendedMultiSegment shifted = shift(e, t);

    LanglandsData data;
    for (const auto& blk : shifted.blocks) {
        for (const auto& row : blk.rows) {
            long long b = row.seg.length();
            for (long long k = 0; k < row.l; ++k) {
                // Delta[B+k, -(A-k)], shifted back by t on both endpoints.
                HalfInt x = row.seg.B + k - t;
                HalfInt y = -(row.seg.A - k) + t;
                if ((x - y).as_integer() + 1 == 0) continue;  // length-0 segment
                internal_check(x >= y, "langlands: shifted-back Steinberg segment is negative");
                data.steinberg.push_back({blk.rho, x, y});
            }
            for (long long k = 0; k + 2 * row.l < b; ++k) {
                long long a = 2 * ((row.seg.B + row.l + k).as_integer()) + 1 - 2 * t;
                internal_check(a >= 0, "langlands: tempered part underflows");
                if (a == 0) continue;
                data.tempered.push_back({blk.rho, a, neg_one_pow(k) * row.eta});
            }
        }
    }
    std::stable_sort(data.steinberg.begin(), data.steinberg.end(),
                     [](const SteinbergEntry& p, const SteinbergEntry& q) {
                         if (p.x + p.y != q.x + q.y) return p.x + p.y < q.x + q.y;
                         if (p.rho != q.rho) return p.rho < q.rho;
                         return p.x < q.x;
                     });
    std::stable_sort(data.tempered.begin(), data.tempered.end(),
                     [](const TemperedEntry& p, const TemperedEntry& q) {
                         if (p.rho != q.rho) return p.rho < q.rho;
                         return p.a < q.a;
                     });
    for (std::size_t i = 1; i < data.tempered.size(); ++i)
        internal_check(data.tempered[i - 1].rho != data.tempered[i].rho ||
                           data.tempered[i - 1].a != data.tempered[i].a,
                       "langlands: tempered part is not multiplicity-free");
    return data;
}

std::string format_langlands(const LanglandsData& data, bool ascii, bool tag_rho) {
    const char* delta = ascii ? "D" : "Δ";
    const char* pi = ascii ? "pi" : "π";
    std::ostringstream s;
    s << "L(";
    bool first = true;
    for (const auto& st : data.steinberg) {
        if (!first) s << ", ";
        first = false;
        s << delta;
        if (tag_rho) s << "_{" << st.rho << "}";
        s << "[" << st.x.str() << "," << st.y.str() << "]";
    }
    if (!first) s << "; ";
    s << pi << "(";
    first = true;
    for (const auto& tp : data.tempered) {
        if (!first) s << ", ";
        first = false;
        if (tag_rho) s << tp.rho << ":";
        s << HalfInt(tp.a - 1).str() << "^" << (tp.eps == 1 ? "+" : "-");
    }
    s << "))";
    return s.str();
}

}  // namespace apk
