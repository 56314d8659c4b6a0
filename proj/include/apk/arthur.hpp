#pragma once

#include <string>
#include <vector>

#include "apk/core.hpp"
#include "apk/types.hpp"

namespace apk {

// Sign assignment on A-parameter summand occurrences, stored per row of the
// extended multi-segment (document order). Equal summands carry equal signs
// and the total product is +1.
struct Character {
    std::vector<std::pair<ASummand, int>> by_row;

    int sign_for(const ASummand& s) const {
        for (const auto& [sum, sgn] : by_row)
            if (sum == s) return sgn;
        throw InputError("character: no such summand");
    }
    bool well_defined() const {
        for (const auto& [s1, g1] : by_row)
            for (const auto& [s2, g2] : by_row)
                if (s1 == s2 && g1 != g2) return false;
        return true;
    }
    int total_product() const {
        int p = 1;
        for (const auto& [s, g] : by_row) p *= g;
        return p;
    }
};

// Indices j of the block with b_j of opposite parity to b_i that wedge the
// row i: earlier rows need larger midpoint and longer segment, later rows
// smaller midpoint and shorter segment. Midpoints are compared via A+B.
// With literal_parity the clause compares A_i - A_j instead of b_i - b_j
// (the reading that fails the worked character tables; kept selectable for
// comparison).
std::vector<int> z_set(const Block& blk, int i, bool literal_parity = false);

// eta_E(rho x S_a x S_b at row i) = (-1)^{#Z_i + floor(b_i/2) + l_i} eta_i^{b_i}.
// Requires a (P') stored order and pi(E) != 0.
Character character_of(const ExtendedMultiSegment& e, bool literal_parity = false);

// The involution E -> E-hat: segments [A,-B], order reversed, (l, eta)
// updated by the integral/non-integral rules. Requires a (P') stored order;
// throws when some new l falls outside its range (which signals pi(E) = 0).
ExtendedMultiSegment aubert_dual(const ExtendedMultiSegment& e);

struct PacketMember {
    ExtendedMultiSegment e;
    Character character;
};

// All equivalence classes of (l, eta) data on the rows of psi that satisfy
// the sign condition and have pi(E) != 0, each paired with its character.
// Deterministic order; candidates are checked in parallel over `threads`
// workers (<= 1 means sequential).
std::vector<PacketMember> packet_enumerate(const AParameter& psi, int threads = 1);
long long packet_count(const AParameter& psi, int threads = 1);

struct SteinbergEntry {
    std::string rho;
    HalfInt x;  // segment [x, y], exponent sum x + y < 0
    HalfInt y;
};

struct TemperedEntry {
    std::string rho;
    long long a = 1;
    int eps = 1;
};

struct LanglandsData {
    std::vector<SteinbergEntry> steinberg;
    std::vector<TemperedEntry> tempered;
};

// Langlands data of pi(E) for separated E (within each block every later
// row starts strictly above every earlier row's end): shift to
// non-negativity, read the standard-module data off the rows, shift back.
// Requires nonzero(E).
LanglandsData langlands_separated(const ExtendedMultiSegment& e);

std::string format_langlands(const LanglandsData& data, bool ascii, bool tag_rho);

}  // namespace apk
