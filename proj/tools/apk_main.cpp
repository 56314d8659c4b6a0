#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apk/arthur.hpp"
#include "apk/core.hpp"
#include "apk/json_io.hpp"
#include "apk/nonvanishing.hpp"
#include "apk/orders.hpp"
#include "apk/symbol.hpp"
#include "apk/transforms.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string out_path;
    bool json_out = false;
    bool ascii = false;
    bool strict = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw apk::InputError("cannot open file: " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw apk::InputError("cannot open output file: " + opt.out_path);
    f << payload;
}

apk::ExtendedMultiSegment load_ems(const Options& opt) {
    return apk::parse_ems(read_input(opt.input), opt.strict);
}

int threads_from_env() {
    if (const char* s = std::getenv("APK_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return std::min(v, 64);
    }
    return 0;  // auto
}

void add_common(CLI::App* cmd, Options& opt, bool takes_input = true) {
    if (takes_input)
        cmd->add_option("file", opt.input, "input document (\"-\" for stdin)")->required();
    cmd->add_flag("--json", opt.json_out, "machine-readable output");
    cmd->add_flag("--ascii", opt.ascii, "ascii symbol glyphs (< > + -)");
    cmd->add_flag("--strict", opt.strict, "check good parity and dimension sum");
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
}

json ems_json(const apk::ExtendedMultiSegment& e) { return json::parse(apk::emit(e)); }

std::string character_tuple(const apk::AParameter& psi, const apk::Character& chi) {
    std::string s = "(";
    for (std::size_t i = 0; i < psi.summands.size(); ++i) {
        if (i) s += ",";
        s += chi.sign_for(psi.summands[i]) == 1 ? "+" : "-";
    }
    s += ")";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended-multi-segment calculus for local Arthur packets"};
    app.require_subcommand(1);

    Options opt;

    auto* c_validate = app.add_subcommand("validate", "check the invariants of a document");
    add_common(c_validate, opt);

    auto* c_render = app.add_subcommand("render", "print the symbol grid");
    add_common(c_render, opt);

    auto* c_orders = app.add_subcommand("orders", "list admissible orders per block");
    add_common(c_orders, opt);

    auto* c_swap = app.add_subcommand("swap", "transpose two adjacent rows");
    std::string swap_rho;
    int swap_pos = 0;
    add_common(c_swap, opt);
    c_swap->add_option("--rho", swap_rho, "block id")->required();
    c_swap->add_option("--pos", swap_pos, "swap rows at positions POS and POS+1 (0-based)")
        ->required();

    auto* c_nonzero = app.add_subcommand("nonzero", "decide whether pi(E) is nonzero");
    bool explain = false;
    add_common(c_nonzero, opt);
    c_nonzero->add_flag("--explain", explain, "print the reason for a zero verdict");

    auto* c_reduce = app.add_subcommand("reduce", "apply the union deformation to a fixed point");
    add_common(c_reduce, opt);

    auto* c_derive = app.add_subcommand("derive", "one derivative step at the maximal B");
    add_common(c_derive, opt);

    auto* c_shift = app.add_subcommand("shift", "shift every segment by t");
    long long shift_t = 0;
    add_common(c_shift, opt);
    c_shift->add_option("-t,--by", shift_t, "non-negative shift amount")->required();

    auto* c_dual = app.add_subcommand("dual", "Aubert dual of the extended multi-segment");
    add_common(c_dual, opt);

    auto* c_packet = app.add_subcommand("packet", "enumerate the packet of an A-parameter");
    std::string param_path;
    bool count_only = false, with_characters = false;
    c_packet->add_option("--param", param_path, "A-parameter document")->required();
    c_packet->add_flag("--count", count_only, "print only the packet size");
    c_packet->add_flag("--characters", with_characters, "include the characters");
    c_packet->add_flag("--json", opt.json_out, "machine-readable output");
    c_packet->add_flag("--ascii", opt.ascii, "ascii symbol glyphs");
    c_packet->add_flag("--strict", opt.strict, "check good parity and dimension sum");
    c_packet->add_option("--out", opt.out_path, "write output to a file instead of stdout");

    auto* c_langlands =
        app.add_subcommand("langlands", "Langlands data of pi(E) for separated E");
    add_common(c_langlands, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err);
    }

    try {
        if (c_validate->parsed()) {
            auto doc = apk::parse_document(read_input(opt.input), false);
            apk::ValidationReport rep;
            if (auto* e = std::get_if<apk::ExtendedMultiSegment>(&doc))
                rep = apk::validate(*e, opt.strict);
            else
                rep = apk::validate(std::get<apk::AParameter>(doc), opt.strict);
            write_output(opt, opt.json_out ? apk::report_to_json(rep) : apk::report_to_text(rep));
            return rep.ok() ? 0 : 1;
        }

        if (c_render->parsed()) {
            auto e = load_ems(opt);
            write_output(opt, apk::render_symbol(e, opt.ascii));
            return 0;
        }

        if (c_orders->parsed()) {
            auto e = load_ems(opt);
            if (opt.json_out) {
                json doc;
                json blocks = json::array();
                for (const auto& blk : e.blocks) {
                    json b;
                    b["rho"] = blk.rho;
                    b["orders"] = apk::enumerate_admissible_orders(blk);
                    blocks.push_back(std::move(b));
                }
                doc["blocks"] = std::move(blocks);
                write_output(opt, doc.dump(2) + "\n");
            } else {
                std::ostringstream s;
                for (const auto& blk : e.blocks) {
                    s << "(" << blk.rho << ")\n";
                    for (const auto& ord : apk::enumerate_admissible_orders(blk)) {
                        for (std::size_t p = 0; p < ord.size(); ++p) s << (p ? " " : "") << ord[p];
                        s << "\n";
                    }
                }
                write_output(opt, s.str());
            }
            return 0;
        }

        if (c_swap->parsed()) {
            auto e = load_ems(opt);
            write_output(opt, apk::emit(apk::swap_adjacent(e, swap_rho, swap_pos + 1)));
            return 0;
        }

        if (c_nonzero->parsed()) {
            auto e = load_ems(opt);
            if (explain || opt.json_out) {
                auto ex = apk::nonzero_explain(e);
                if (opt.json_out) {
                    json doc;
                    doc["nonzero"] = ex.nonzero;
                    if (!ex.nonzero) doc["reason"] = ex.reason;
                    write_output(opt, doc.dump(2) + "\n");
                } else {
                    std::string s = ex.nonzero ? "nonzero\n" : "zero\n" + ex.reason + "\n";
                    write_output(opt, s);
                }
            } else {
                write_output(opt, apk::nonzero(e) ? "nonzero\n" : "zero\n");
            }
            return 0;
        }

        if (c_reduce->parsed()) {
            auto e = load_ems(opt);
            write_output(opt, apk::emit(apk::algorithm_star(e)));
            return 0;
        }

        if (c_derive->parsed()) {
            auto e = load_ems(opt);
            auto rec = apk::derivative_step(e);
            if (opt.json_out) {
                json doc;
                json removed = json::array();
                for (const auto& [rho, x] : rec.removed) {
                    json item;
                    item["rho"] = rho;
                    item["x"] = x.str();
                    removed.push_back(std::move(item));
                }
                doc["removed"] = std::move(removed);
                doc["result"] = ems_json(rec.result);
                write_output(opt, doc.dump(2) + "\n");
            } else {
                std::ostringstream s;
                s << "removed:";
                for (const auto& [rho, x] : rec.removed) s << " " << rho << ":" << x.str();
                s << "\n" << apk::render_symbol(rec.result, opt.ascii);
                write_output(opt, s.str());
            }
            return 0;
        }

        if (c_shift->parsed()) {
            auto e = load_ems(opt);
            write_output(opt, apk::emit(apk::shift(e, shift_t)));
            return 0;
        }

        if (c_dual->parsed()) {
            auto e = load_ems(opt);
            write_output(opt, apk::emit(apk::aubert_dual(e)));
            return 0;
        }

        if (c_packet->parsed()) {
            auto psi = apk::parse_parameter(read_input(param_path), opt.strict);
            int threads = threads_from_env();
            if (count_only && !opt.json_out) {
                write_output(opt, std::to_string(apk::packet_count(psi, threads)) + "\n");
                return 0;
            }
            auto members = apk::packet_enumerate(psi, threads);
            if (opt.json_out) {
                json doc;
                doc["count"] = members.size();
                if (!count_only) {
                    json arr = json::array();
                    for (const auto& m : members) {
                        json item;
                        item["document"] = ems_json(m.e);
                        item["symbol"] = apk::render_symbol(m.e, opt.ascii);
                        if (with_characters)
                            item["character"] = character_tuple(psi, m.character);
                        arr.push_back(std::move(item));
                    }
                    doc["members"] = std::move(arr);
                }
                write_output(opt, doc.dump(2) + "\n");
            } else {
                std::ostringstream s;
                s << members.size() << " members\n";
                for (std::size_t i = 0; i < members.size(); ++i) {
                    s << "\n# member " << i << "\n";
                    s << apk::render_symbol(members[i].e, opt.ascii);
                    if (with_characters)
                        s << "eta_E = " << character_tuple(psi, members[i].character) << "\n";
                }
                write_output(opt, s.str());
            }
            return 0;
        }

        if (c_langlands->parsed()) {
            auto e = load_ems(opt);
            auto data = apk::langlands_separated(e);
            if (opt.json_out) {
                json doc;
                json st = json::array();
                for (const auto& d : data.steinberg) {
                    json item;
                    item["rho"] = d.rho;
                    item["x"] = d.x.str();
                    item["y"] = d.y.str();
                    st.push_back(std::move(item));
                }
                json tp = json::array();
                for (const auto& d : data.tempered) {
                    json item;
                    item["rho"] = d.rho;
                    item["a"] = d.a;
                    item["eps"] = d.eps;
                    tp.push_back(std::move(item));
                }
                doc["steinberg"] = std::move(st);
                doc["tempered"] = std::move(tp);
                write_output(opt, doc.dump(2) + "\n");
            } else {
                bool tag = e.rhos.size() > 1;
                write_output(opt, apk::format_langlands(data, opt.ascii, tag) + "\n");
            }
            return 0;
        }
    } catch (const apk::InternalError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    } catch (const apk::InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
