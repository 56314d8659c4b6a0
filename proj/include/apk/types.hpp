#pragma once

#include <map>
#include <string>
#include <vector>

#include "apk/halfint.hpp"

namespace apk {

enum class Selfdual { orthogonal, symplectic };
enum class Family { SO_odd, Sp };

struct GroupSpec {
    Family family = Family::Sp;
    long long rank = 0;

    // Dimension of the standard representation of the dual group:
    // 2n for SO_{2n+1} (dual Sp_{2n}(C)), 2n+1 for Sp_{2n} (dual SO_{2n+1}(C)).
    long long std_dim() const { return family == Family::SO_odd ? 2 * rank : 2 * rank + 1; }

    bool operator==(const GroupSpec&) const = default;
};

struct RhoInfo {
    std::string id;
    long long dim = 1;
    Selfdual selfdual = Selfdual::orthogonal;

    bool operator==(const RhoInfo&) const = default;
};

// Segment [A,B] = {A, A-1, ..., B} of exponents; A-B must be an integer and
// the length A-B+1 >= 0. Length 0 encodes the empty segment, which only
// appears transiently inside union moves.
struct Segment {
    HalfInt A, B;

    long long length() const {
        HalfInt d = A - B;
        if (!d.is_integer()) throw InputError("segment: A - B is not an integer");
        long long b = d.as_integer() + 1;
        if (b < 0) throw InputError("segment: negative length");
        return b;
    }

    bool empty() const { return length() == 0; }

    // Exponents B..A in ascending order.
    std::vector<HalfInt> exponents() const {
        std::vector<HalfInt> xs;
        long long b = length();
        xs.reserve(static_cast<std::size_t>(b));
        for (long long k = 0; k < b; ++k) xs.push_back(B + k);
        return xs;
    }

    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;
};

inline long long seg_length(const Segment& s) { return s.length(); }

// Strict dominance: both endpoints strictly larger. Rows comparable under
// dominance have a forced relative position in every admissible order.
inline bool dominates(const Segment& s1, const Segment& s2) {
    return s1.A > s2.A && s1.B > s2.B;
}

// Neither dominates the other, i.e. one contains the other (or they are
// equal). Exactly these pairs may sit in either relative order.
inline bool nested_or_equal(const Segment& s1, const Segment& s2) {
    return !dominates(s1, s2) && !dominates(s2, s1);
}

// ([A,B], l, eta). l counts the leading/trailing bracket pairs of the symbol
// row; eta is the sign of the first interior slot. At l = b/2 there is no
// interior, eta is immaterial, and +1 is the canonical representative.
struct ExtSegment {
    Segment seg;
    long long l = 0;
    int eta = 1;

    long long b() const { return seg.length(); }
    bool eta_ambiguous() const { return 2 * l == b(); }

    bool operator==(const ExtSegment&) const = default;
};

// Folds a raw integer l into [0, b/2] via (Z/bZ)/{±1} and canonicalizes eta
// at l = b/2. eta is otherwise carried through unchanged.
inline ExtSegment normalize_row(const Segment& seg, long long l_raw, int eta) {
    long long b = seg.length();
    if (b == 0) {
        if (l_raw != 0) throw InputError("normalize_row: empty segment with l != 0");
        return ExtSegment{seg, 0, 1};
    }
    long long r = ((l_raw % b) + b) % b;
    if (2 * r > b) r = b - r;
    if (2 * r == b) eta = 1;
    return ExtSegment{seg, r, eta};
}

inline ExtSegment normalize_row(const ExtSegment& row) {
    return normalize_row(row.seg, row.l, row.eta);
}

// Two rows are equivalent when the segments and l agree and eta agrees
// whenever l < b/2.
inline bool rows_equivalent(const ExtSegment& r1, const ExtSegment& r2) {
    if (r1.seg != r2.seg || r1.l != r2.l) return false;
    return r1.eta_ambiguous() || r1.eta == r2.eta;
}

struct Block {
    std::string rho;
    std::vector<ExtSegment> rows;
};

// The central object: per-rho ordered rows plus the group context. The
// stored row order is the fixed admissible order; the tool never silently
// reorders it.
struct ExtendedMultiSegment {
    GroupSpec group;
    std::vector<RhoInfo> rhos;
    std::vector<Block> blocks;

    const RhoInfo& rho_info(const std::string& id) const {
        for (const auto& r : rhos)
            if (r.id == id) return r;
        throw InputError("unknown rho id: " + id);
    }

    const Block& block(const std::string& id) const {
        for (const auto& b : blocks)
            if (b.rho == id) return b;
        throw InputError("no block for rho: " + id);
    }

    Block& block(const std::string& id) {
        for (auto& b : blocks)
            if (b.rho == id) return b;
        throw InputError("no block for rho: " + id);
    }
};

ExtendedMultiSegment normalized(ExtendedMultiSegment e);
bool equivalent(const ExtendedMultiSegment& e1, const ExtendedMultiSegment& e2);

// Order-free, multiplicity-aware collection of plain segments.
struct MultiSegment {
    std::vector<std::pair<std::string, Segment>> items;  // kept sorted

    bool operator==(const MultiSegment&) const = default;
};

struct ASummand {
    std::string rho;
    long long a = 1;
    long long b = 1;

    bool operator==(const ASummand&) const = default;
    auto operator<=>(const ASummand&) const = default;
};

// Formal sum of rho (x) S_a (x) S_b; summand order follows the source
// document and is the reference order for character tuples.
struct AParameter {
    GroupSpec group;
    std::vector<RhoInfo> rhos;
    std::vector<ASummand> summands;

    const RhoInfo& rho_info(const std::string& id) const {
        for (const auto& r : rhos)
            if (r.id == id) return r;
        throw InputError("unknown rho id: " + id);
    }
};

}  // namespace apk
