#include "apk/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace apk {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const json& member(const json& obj, const std::string& where, const char* key) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

long long get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<long long>();
}

std::string get_str(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

HalfInt get_halfint(const json& v, const std::string& where) {
    if (v.is_number_integer()) return HalfInt::of(v.get<long long>());
    if (v.is_string()) {
        try {
            return HalfInt::parse(v.get<std::string>());
        } catch (const InputError& err) {
            fail(where, err.what());
        }
    }
    fail(where, "expected a half-integer string like \"3\" or \"-5/2\"");
}

GroupSpec parse_group(const json& v, const std::string& where) {
    GroupSpec g;
    std::string fam = get_str(member(v, where, "family"), where + ".family");
    if (fam == "SO_odd")
        g.family = Family::SO_odd;
    else if (fam == "Sp")
        g.family = Family::Sp;
    else
        fail(where + ".family", "expected \"SO_odd\" or \"Sp\", got \"" + fam + "\"");
    g.rank = get_int(member(v, where, "rank"), where + ".rank");
    return g;
}

std::vector<RhoInfo> parse_rhos(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    std::vector<RhoInfo> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string at = where + "[" + std::to_string(i) + "]";
        RhoInfo r;
        r.id = get_str(member(v[i], at, "id"), at + ".id");
        r.dim = get_int(member(v[i], at, "dim"), at + ".dim");
        std::string sd = get_str(member(v[i], at, "selfdual"), at + ".selfdual");
        if (sd == "orthogonal")
            r.selfdual = Selfdual::orthogonal;
        else if (sd == "symplectic")
            r.selfdual = Selfdual::symplectic;
        else
            fail(at + ".selfdual", "expected \"orthogonal\" or \"symplectic\"");
        out.push_back(std::move(r));
    }
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw InputError(std::string("JSON syntax: ") + err.what());
    }
}

void check_report(const ValidationReport& rep) {
    if (rep.ok()) return;
    throw InputError("invalid document:\n" + report_to_text(rep));
}

ExtendedMultiSegment ems_from_json(const json& doc, bool strict) {
    ExtendedMultiSegment e;
    e.group = parse_group(member(doc, "document", "group"), "group");
    e.rhos = parse_rhos(member(doc, "document", "rhos"), "rhos");
    const json& blocks = member(doc, "document", "blocks");
    if (!blocks.is_array()) fail("blocks", "expected an array");
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        std::string at = "blocks[" + std::to_string(bi) + "]";
        Block blk;
        blk.rho = get_str(member(blocks[bi], at, "rho"), at + ".rho");
        const json& rows = member(blocks[bi], at, "rows");
        if (!rows.is_array()) fail(at + ".rows", "expected an array");
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            std::string rat = at + ".rows[" + std::to_string(ri) + "]";
            Segment seg;
            seg.A = get_halfint(member(rows[ri], rat, "A"), rat + ".A");
            seg.B = get_halfint(member(rows[ri], rat, "B"), rat + ".B");
            long long l = get_int(member(rows[ri], rat, "l"), rat + ".l");
            long long eta = get_int(member(rows[ri], rat, "eta"), rat + ".eta");
            if (eta != 1 && eta != -1) fail(rat + ".eta", "expected 1 or -1");
            ExtSegment row{seg, l, static_cast<int>(eta)};
            // Range errors are reported by validate; only fold the canonical
            // representative when the row is already in range.
            try {
                if (seg.length() >= 1 && l >= 0 && 2 * l <= seg.length())
                    row = normalize_row(row);
            } catch (const InputError&) {
            }
            blk.rows.push_back(row);
        }
        e.blocks.push_back(std::move(blk));
    }
    check_report(validate(e, strict));
    return e;
}

AParameter parameter_from_json(const json& doc, bool strict) {
    AParameter psi;
    psi.group = parse_group(member(doc, "document", "group"), "group");
    psi.rhos = parse_rhos(member(doc, "document", "rhos"), "rhos");
    const json& summands = member(doc, "document", "summands");
    if (!summands.is_array()) fail("summands", "expected an array");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        std::string at = "summands[" + std::to_string(i) + "]";
        ASummand s;
        s.rho = get_str(member(summands[i], at, "rho"), at + ".rho");
        s.a = get_int(member(summands[i], at, "a"), at + ".a");
        s.b = get_int(member(summands[i], at, "b"), at + ".b");
        psi.summands.push_back(std::move(s));
    }
    check_report(validate(psi, strict));
    return psi;
}

json group_to_json(const GroupSpec& g) {
    json v;
    v["family"] = g.family == Family::SO_odd ? "SO_odd" : "Sp";
    v["rank"] = g.rank;
    return v;
}

json rhos_to_json(const std::vector<RhoInfo>& rhos) {
    json arr = json::array();
    for (const auto& r : rhos) {
        json v;
        v["id"] = r.id;
        v["dim"] = r.dim;
        v["selfdual"] = r.selfdual == Selfdual::orthogonal ? "orthogonal" : "symplectic";
        arr.push_back(std::move(v));
    }
    return arr;
}

}  // namespace

Document parse_document(const std::string& text, bool strict) {
    json doc = parse_text(text);
    if (!doc.is_object()) fail("document", "expected an object");
    bool has_blocks = doc.contains("blocks");
    bool has_summands = doc.contains("summands");
    if (has_blocks == has_summands)
        fail("document", "expected exactly one of \"blocks\" or \"summands\"");
    if (has_blocks) return ems_from_json(doc, strict);
    return parameter_from_json(doc, strict);
}

ExtendedMultiSegment parse_ems(const std::string& text, bool strict) {
    Document d = parse_document(text, strict);
    if (auto* e = std::get_if<ExtendedMultiSegment>(&d)) return std::move(*e);
    throw InputError("expected an extended multi-segment document (with \"blocks\")");
}

AParameter parse_parameter(const std::string& text, bool strict) {
    Document d = parse_document(text, strict);
    if (auto* p = std::get_if<AParameter>(&d)) return std::move(*p);
    throw InputError("expected an A-parameter document (with \"summands\")");
}

std::string emit(const ExtendedMultiSegment& e) {
    ExtendedMultiSegment n = normalized(e);
    json doc;
    doc["group"] = group_to_json(n.group);
    doc["rhos"] = rhos_to_json(n.rhos);
    json blocks = json::array();
    for (const auto& blk : n.blocks) {
        json b;
        b["rho"] = blk.rho;
        json rows = json::array();
        for (const auto& row : blk.rows) {
            json r;
            r["A"] = row.seg.A.str();
            r["B"] = row.seg.B.str();
            r["l"] = row.l;
            r["eta"] = row.eta;
            rows.push_back(std::move(r));
        }
        b["rows"] = std::move(rows);
        blocks.push_back(std::move(b));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump(2) + "\n";
}

std::string emit(const AParameter& psi) {
    json doc;
    doc["group"] = group_to_json(psi.group);
    doc["rhos"] = rhos_to_json(psi.rhos);
    json arr = json::array();
    for (const auto& s : psi.summands) {
        json v;
        v["rho"] = s.rho;
        v["a"] = s.a;
        v["b"] = s.b;
        arr.push_back(std::move(v));
    }
    doc["summands"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string report_to_json(const ValidationReport& rep) {
    json doc;
    doc["valid"] = rep.ok();
    json arr = json::array();
    for (const auto& v : rep.violations) {
        json item;
        item["code"] = v.code;
        if (!v.rho.empty()) item["rho"] = v.rho;
        if (v.row >= 0) item["row"] = v.row;
        item["message"] = v.message;
        arr.push_back(std::move(item));
    }
    doc["violations"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string report_to_text(const ValidationReport& rep) {
    if (rep.ok()) return "valid\n";
    std::ostringstream s;
    for (const auto& v : rep.violations) {
        s << v.code;
        if (!v.rho.empty()) s << " (rho " << v.rho;
        if (v.row >= 0) s << (v.rho.empty() ? " (row " : ", row ") << v.row;
        if (!v.rho.empty() || v.row >= 0) s << ")";
        s << ": " << v.message << "\n";
    }
    return s.str();
}

}  // namespace apk
