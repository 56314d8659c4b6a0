#pragma once

#include <string>

#include "apk/types.hpp"

namespace apk {

// Glyph set for symbol rendering. The unicode set matches the usual display
// (lhd/rhd triangles, circled plus/minus); ascii is < > + -.
struct Glyphs {
    const char* lhd;
    const char* rhd;
    const char* plus;
    const char* minus;
};

Glyphs unicode_glyphs();
Glyphs ascii_glyphs();

// The glyph at a single column of one row, or "" outside [B, A].
std::string row_glyph(const ExtSegment& row, HalfInt col, const Glyphs& g);

// One grid per block: a header line "(rho)", a line of column coordinates
// from min B to max A, then one line per row. Cells are right-aligned to a
// common width and separated by single spaces; trailing blanks are trimmed.
std::string render_block(const Block& blk, const Glyphs& g);
std::string render_symbol(const ExtendedMultiSegment& e, bool ascii = false);

}  // namespace apk
