#include "apk/symbol.hpp"

#include <algorithm>
#include <sstream>

namespace apk {

Glyphs unicode_glyphs() { return {"⊲", "⊳", "⊕", "⊖"}; }
Glyphs ascii_glyphs() { return {"<", ">", "+", "-"}; }

std::string row_glyph(const ExtSegment& row, HalfInt col, const Glyphs& g) {
    if (col < row.seg.B || col > row.seg.A) return "";
    long long k = (col - row.seg.B).as_integer();
    long long b = row.seg.length();
    if (k < row.l) return g.lhd;
    if (k >= b - row.l) return g.rhd;
    int sign = row.eta * neg_one_pow(k - row.l);
    return sign == 1 ? g.plus : g.minus;
}

namespace {

// Display width: every cell here is either an ASCII label or a single glyph.
std::size_t display_width(const std::string& cell) {
    std::size_t w = 0;
    for (unsigned char c : cell)
        if ((c & 0xc0) != 0x80) ++w;
    return w;
}

void append_cells(std::string& out, const std::vector<std::string>& cells, std::size_t width) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ' ';
        std::size_t w = display_width(cells[i]);
        line.append(width - w, ' ');
        line += cells[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
}

}  // namespace

std::string render_block(const Block& blk, const Glyphs& g) {
    std::string out = "(" + blk.rho + ")\n";
    if (blk.rows.empty()) return out;
    HalfInt lo = blk.rows[0].seg.B, hi = blk.rows[0].seg.A;
    for (const auto& row : blk.rows) {
        lo = std::min(lo, row.seg.B);
        hi = std::max(hi, row.seg.A);
    }
    std::vector<HalfInt> cols;
    for (HalfInt c = lo; c <= hi; c = c + 1) cols.push_back(c);

    std::vector<std::string> header;
    std::size_t width = 1;
    for (const auto& c : cols) {
        header.push_back(c.str());
        width = std::max(width, display_width(header.back()));
    }
    append_cells(out, header, width);

    for (const auto& row : blk.rows) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(row_glyph(row, c, g));
        append_cells(out, cells, width);
    }
    return out;
}

std::string render_symbol(const ExtendedMultiSegment& e, bool ascii) {
    Glyphs g = ascii ? ascii_glyphs() : unicode_glyphs();
    std::string out;
    bool first = true;
    for (const auto& blk : e.blocks) {
        if (!first) out += '\n';
        first = false;
        out += render_block(blk, g);
    }
    return out;
}

}  // namespace apk
