#include "apk/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace apk {

ExtendedMultiSegment normalized(ExtendedMultiSegment e) {
    for (auto& blk : e.blocks)
        for (auto& row : blk.rows) row = normalize_row(row);
    return e;
}

bool equivalent(const ExtendedMultiSegment& e1, const ExtendedMultiSegment& e2) {
    if (e1.group != e2.group) return false;
    auto nonempty = [](const ExtendedMultiSegment& e) {
        std::map<std::string, const Block*> m;
        for (const auto& b : e.blocks)
            if (!b.rows.empty()) m[b.rho] = &b;
        return m;
    };
    auto m1 = nonempty(e1), m2 = nonempty(e2);
    if (m1.size() != m2.size()) return false;
    for (const auto& [rho, b1] : m1) {
        auto it = m2.find(rho);
        if (it == m2.end()) return false;
        const Block* b2 = it->second;
        if (b1->rows.size() != b2->rows.size()) return false;
        for (std::size_t i = 0; i < b1->rows.size(); ++i)
            if (!rows_equivalent(b1->rows[i], b2->rows[i])) return false;
    }
    return true;
}

bool good_parity(const GroupSpec& group, Selfdual type, long long a, long long b) {
    bool even = (a + b) % 2 == 0;
    if (group.family == Family::Sp) return (type == Selfdual::orthogonal) == even;
    return (type == Selfdual::symplectic) == even;
}

int sign_contribution(const ExtSegment& row) {
    long long b = row.seg.length();
    return neg_one_pow(b / 2 + row.l) * sign_pow(row.eta, b);
}

bool sign_condition(const ExtendedMultiSegment& e) {
    int prod = 1;
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows) prod *= sign_contribution(row);
    return prod == 1;
}

namespace {

void validate_block(const ExtendedMultiSegment& e, const Block& blk, bool strict,
                    ValidationReport& rep) {
    auto add = [&](std::string code, int row, std::string msg) {
        rep.violations.push_back({std::move(code), blk.rho, row, std::move(msg)});
    };

    bool rows_ok = true;
    for (std::size_t i = 0; i < blk.rows.size(); ++i) {
        const ExtSegment& r = blk.rows[i];
        long long b;
        try {
            b = r.seg.length();
        } catch (const InputError& err) {
            add("segment", static_cast<int>(i), err.what());
            rows_ok = false;
            continue;
        }
        if (b == 0) {
            add("segment", static_cast<int>(i), "empty segment");
            rows_ok = false;
            continue;
        }
        if (r.l < 0 || 2 * r.l > b)
            add("l-range", static_cast<int>(i),
                "l = " + std::to_string(r.l) + " outside [0, " + std::to_string(b) + "/2]");
        if (r.eta != 1 && r.eta != -1) add("eta", static_cast<int>(i), "eta must be +1 or -1");
        if ((r.seg.A + r.seg.B) < 0)
            add("a-plus-b", static_cast<int>(i),
                "A + B = " + (r.seg.A + r.seg.B).str() + " < 0");
    }
    if (!rows_ok) return;

    for (std::size_t i = 1; i < blk.rows.size(); ++i) {
        HalfInt d = blk.rows[i].seg.B - blk.rows[0].seg.B;
        if (!d.is_integer()) {
            add("coset", static_cast<int>(i), "B not in the same coset of Z as row 0");
            return;
        }
    }

    bool has_negative = false;
    for (const auto& r : blk.rows)
        if (r.seg.B < 0) has_negative = true;

    for (std::size_t j = 0; j < blk.rows.size(); ++j)
        for (std::size_t i = j + 1; i < blk.rows.size(); ++i)
            if (dominates(blk.rows[j].seg, blk.rows[i].seg))
                add("admissible-order", static_cast<int>(i),
                    "row " + std::to_string(j) + " dominates later row " + std::to_string(i));

    if (has_negative) {
        for (std::size_t i = 1; i < blk.rows.size(); ++i)
            if (blk.rows[i - 1].seg.B > blk.rows[i].seg.B)
                add("order-p-prime", static_cast<int>(i),
                    "negative B present but B decreases at row " + std::to_string(i));
    }

    if (strict) {
        const RhoInfo* info = nullptr;
        try {
            info = &e.rho_info(blk.rho);
        } catch (const InputError& err) {
            add("rho", -1, err.what());
        }
        if (info) {
            for (std::size_t i = 0; i < blk.rows.size(); ++i) {
                const ExtSegment& r = blk.rows[i];
                long long a = (r.seg.A + r.seg.B + 1).as_integer();
                long long b = r.seg.length();
                if (!good_parity(e.group, info->selfdual, a, b))
                    add("good-parity", static_cast<int>(i),
                        "a + b = " + std::to_string(a + b) + " has the wrong parity");
            }
        }
    }
}

}  // namespace

ValidationReport validate(const ExtendedMultiSegment& e, bool strict) {
    ValidationReport rep;
    std::set<std::string> seen;
    for (const auto& r : e.rhos) {
        if (!seen.insert(r.id).second)
            rep.violations.push_back({"rho-unique", r.id, -1, "duplicate rho id"});
        if (r.dim < 1) rep.violations.push_back({"rho-dim", r.id, -1, "dim must be positive"});
    }
    if (e.group.rank < 0)
        rep.violations.push_back({"group-rank", "", -1, "rank must be non-negative"});
    std::set<std::string> block_rhos;
    for (const auto& blk : e.blocks) {
        if (!block_rhos.insert(blk.rho).second)
            rep.violations.push_back({"block-unique", blk.rho, -1, "duplicate block for rho"});
        if (!seen.count(blk.rho))
            rep.violations.push_back({"rho", blk.rho, -1, "block references unknown rho"});
        validate_block(e, blk, strict, rep);
    }
    if (rep.ok() && !sign_condition(e))
        rep.violations.push_back({"sign-condition", "", -1,
                                  "product of (-1)^{floor(b/2)+l} eta^b over all rows is -1"});
    if (strict && rep.ok()) {
        long long total = 0;
        for (const auto& blk : e.blocks) {
            const RhoInfo& info = e.rho_info(blk.rho);
            for (const auto& r : blk.rows) {
                long long a = (r.seg.A + r.seg.B + 1).as_integer();
                total += info.dim * a * r.seg.length();
            }
        }
        if (total != e.group.std_dim())
            rep.violations.push_back(
                {"dimension", "", -1,
                 "sum dim(rho)*a*b = " + std::to_string(total) + " but N(group) = " +
                     std::to_string(e.group.std_dim())});
    }
    return rep;
}

ValidationReport validate(const AParameter& psi, bool strict) {
    ValidationReport rep;
    std::set<std::string> seen;
    for (const auto& r : psi.rhos) {
        if (!seen.insert(r.id).second)
            rep.violations.push_back({"rho-unique", r.id, -1, "duplicate rho id"});
        if (r.dim < 1) rep.violations.push_back({"rho-dim", r.id, -1, "dim must be positive"});
    }
    if (psi.group.rank < 0)
        rep.violations.push_back({"group-rank", "", -1, "rank must be non-negative"});
    for (std::size_t i = 0; i < psi.summands.size(); ++i) {
        const ASummand& s = psi.summands[i];
        if (!seen.count(s.rho))
            rep.violations.push_back({"rho", s.rho, static_cast<int>(i), "unknown rho"});
        if (s.a < 1 || s.b < 1)
            rep.violations.push_back(
                {"summand", s.rho, static_cast<int>(i), "a and b must be positive"});
    }
    if (strict && rep.ok()) {
        long long total = 0;
        for (const auto& s : psi.summands) {
            const RhoInfo& info = psi.rho_info(s.rho);
            if (!good_parity(psi.group, info.selfdual, s.a, s.b))
                rep.violations.push_back({"good-parity", s.rho, -1,
                                          "a + b = " + std::to_string(s.a + s.b) +
                                              " has the wrong parity"});
            total += info.dim * s.a * s.b;
        }
        if (total != psi.group.std_dim())
            rep.violations.push_back(
                {"dimension", "", -1,
                 "sum dim(rho)*a*b = " + std::to_string(total) + " but N(group) = " +
                     std::to_string(psi.group.std_dim())});
    }
    return rep;
}

MultiSegment support(const ExtendedMultiSegment& e) {
    MultiSegment ms;
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows) ms.items.emplace_back(blk.rho, row.seg);
    std::sort(ms.items.begin(), ms.items.end());
    return ms;
}

AParameter to_parameter(const ExtendedMultiSegment& e) {
    AParameter psi;
    psi.group = e.group;
    psi.rhos = e.rhos;
    for (const auto& blk : e.blocks) {
        for (const auto& row : blk.rows) {
            long long a = (row.seg.A + row.seg.B + 1).as_integer();
            long long b = row.seg.length();
            if (a <= 0) throw InputError("to_parameter: a = A+B+1 <= 0");
            psi.summands.push_back({blk.rho, a, b});
        }
    }
    return psi;
}

ExtendedMultiSegment shift(const ExtendedMultiSegment& e, long long t) {
    if (t < 0) throw InputError("shift: t must be non-negative");
    ExtendedMultiSegment out = e;
    long long extra = 0;
    for (auto& blk : out.blocks) {
        long long dim = 1;
        for (const auto& r : e.rhos)
            if (r.id == blk.rho) dim = r.dim;
        for (auto& row : blk.rows) {
            extra += t * dim * row.seg.length();
            row.seg.A = row.seg.A + t;
            row.seg.B = row.seg.B + t;
        }
    }
    out.group.rank += extra;
    return out;
}

long long min_shift_to_nonneg(const ExtendedMultiSegment& e) {
    long long t = 0;
    for (const auto& blk : e.blocks)
        for (const auto& row : blk.rows) t = std::max(t, -row.seg.B.floor());
    return t;
}

ExtendedMultiSegment parameter_rows(const AParameter& psi) {
    ExtendedMultiSegment e;
    e.group = psi.group;
    e.rhos = psi.rhos;
    std::map<std::string, std::vector<ExtSegment>> by_rho;
    std::vector<std::string> order;
    for (const auto& s : psi.summands) {
        if (!by_rho.count(s.rho)) order.push_back(s.rho);
        Segment seg{HalfInt(s.a + s.b - 2), HalfInt(s.a - s.b)};
        by_rho[s.rho].push_back(ExtSegment{seg, 0, 1});
    }
    for (const auto& rho : order) {
        auto rows = by_rho[rho];
        std::stable_sort(rows.begin(), rows.end(), [](const ExtSegment& x, const ExtSegment& y) {
            if (x.seg.B != y.seg.B) return x.seg.B < y.seg.B;
            return x.seg.A < y.seg.A;
        });
        e.blocks.push_back({rho, std::move(rows)});
    }
    return e;
}

}  // namespace apk
