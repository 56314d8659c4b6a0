// End-to-end checks of the command-line surface: verbs, flags, exit codes.
//
// usage: cli_tests <path-to-apk-binary> <path-to-data-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "apk/json_io.hpp"
#include "testutil.hpp"

using namespace apk;
using namespace apk::test;

namespace {

std::string g_bin, g_data;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = "'" + g_bin + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r;
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAILED: " << what << "\n";
        ++g_failures;
    }
}

std::string data(const std::string& name) { return "'" + g_data + "/" + name + "'"; }

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path.string();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_tests <apk-binary> <data-dir>\n";
        return 2;
    }
    g_bin = argv[1];
    g_data = argv[2];

    {
        RunResult r = run("validate " + data("ex1.json") + " --strict");
        check(r.exit_code == 0 && r.out == "valid\n", "validate accepts a strict-valid document");
    }
    {
        RunResult r = run("validate " + data("xu.json") + " --strict --json");
        check(r.exit_code == 0 && r.out.find("\"valid\": true") != std::string::npos,
              "validate --json on a parameter document");
    }
    {
        std::string bad = write_temp("apk_bad_sign.json", R"({
          "group": {"family": "Sp", "rank": 0},
          "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
          "blocks": [{"rho": "r1", "rows": [{"A": "1", "B": "0", "l": 0, "eta": 1}]}]
        })");
        RunResult r = run("validate '" + bad + "'");
        check(r.exit_code == 1 && r.out.find("sign-condition") != std::string::npos,
              "validate reports violations and exits 1");
        r = run("render '" + bad + "'");
        check(r.exit_code == 1, "other verbs refuse invalid documents with exit 1");
    }
    {
        std::string quarter = write_temp("apk_bad_halfint.json", R"({
          "group": {"family": "Sp", "rank": 0},
          "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
          "blocks": [{"rho": "r1", "rows": [{"A": "3/4", "B": "0", "l": 0, "eta": 1}]}]
        })");
        RunResult r = run("render '" + quarter + "'");
        check(r.exit_code == 1, "schema errors exit 1");
        r = run("render '" + g_data + "/no_such_file.json'");
        check(r.exit_code == 1, "missing files exit 1");
    }
    {
        RunResult r = run("render " + data("ex53.json") + " --ascii");
        std::string grid =
            "(r1)\n"
            "0 1 2 3\n"
            "+ -\n"
            "  < >\n"
            "  < + >\n"
            "    + -\n";
        check(r.exit_code == 0 && r.out == grid, "render --ascii prints the grid");
    }
    {
        RunResult r = run("orders " + data("ex1.json"));
        check(r.exit_code == 0 && r.out == "(r1)\n0 1 2 3\n0 1 3 2\n0 3 1 2\n",
              "orders lists the admissible orders");
    }
    {
        RunResult r = run("swap " + data("ex53.json") + " --rho r1 --pos 2");
        check(r.exit_code == 0, "swap on a nested pair succeeds");
        ExtendedMultiSegment swapped = parse_ems(r.out, false);
        ExtendedMultiSegment expect = make_ems(
            {Family::Sp, 19}, {rw(1, 0, 0, 1), rw(2, 1, 1, 1), rw(3, 2, 0, 1), rw(3, 1, 0, -1)});
        check(equivalent(swapped, expect), "swap output matches the worked transposition");
        RunResult bad = run("swap " + data("ex53.json") + " --rho r1 --pos 1");
        check(bad.exit_code == 1, "swap on a non-nested pair exits 1");
    }
    {
        RunResult r = run("nonzero " + data("ex53.json"));
        check(r.exit_code == 0 && r.out == "nonzero\n", "nonzero prints the verdict");
        std::string zero = write_temp("apk_zero.json", emit(make_ems(
            {Family::Sp, 16}, {rw(4, 0, 0, -1), rw(2, 0, 0, 1)})));
        r = run("nonzero '" + zero + "'");
        check(r.exit_code == 0 && r.out == "zero\n", "a zero verdict still exits 0");
        r = run("nonzero '" + zero + "' --explain");
        check(r.exit_code == 0 && r.out.find("zero") == 0 && r.out.size() > 5,
              "nonzero --explain names the failure");
        r = run("nonzero '" + zero + "' --json");
        check(r.exit_code == 0 && r.out.find("\"nonzero\": false") != std::string::npos,
              "nonzero --json");
    }
    {
        RunResult r = run("shift " + data("ex53.json") + " -t 2");
        ExtendedMultiSegment shifted = parse_ems(r.out, true);
        check(r.exit_code == 0 && shifted.blocks[0].rows[0].seg.B == HalfInt::of(2),
              "shift moves every row and stays strict-valid");
    }
    {
        RunResult r = run("dual " + data("ex_aubert.json") + " --out /tmp/apk_dual_out.json");
        check(r.exit_code == 0 && r.out.empty(), "--out writes to a file instead of stdout");
        std::ifstream f("/tmp/apk_dual_out.json", std::ios::binary);
        std::stringstream s;
        s << f.rdbuf();
        ExtendedMultiSegment expect = make_ems(
            {Family::Sp, 13}, {rw(2, -1, 1, -1), rw(3, 0, 1, 1), rw(1, 1, 0, 1)});
        check(equivalent(parse_ems(s.str(), false), expect), "dual output file content");
    }
    {
        RunResult r = run("packet --param " + data("so13.json") + " --characters --json");
        check(r.exit_code == 0 && r.out.find("\"count\": 4") != std::string::npos &&
                  r.out.find("\"character\"") != std::string::npos,
              "packet --json carries count and characters");
        r = run("packet --param " + data("sp32.json") + " --characters");
        check(r.exit_code == 0 && r.out.find("7 members") == 0 &&
                  r.out.find("eta_E = (-,-)") != std::string::npos &&
                  r.out.find("eta_E = (+,+)") != std::string::npos,
              "packet text output lists members and sign tuples");
        r = run("packet --param " + data("ex1.json"));
        check(r.exit_code == 1, "packet refuses a non-parameter document");
    }
    {
        RunResult r = run("langlands " + data("sep.json") + " --ascii");
        check(r.exit_code == 0 && r.out == "L(D[6,-8], D[0,-1], D[3,-4]; pi(7^+))\n",
              "langlands prints the separated-case data");
        r = run("langlands " + data("ex1.json"));
        check(r.exit_code == 1, "langlands refuses non-separated input");
        r = run("langlands " + data("sep.json") + " --json");
        check(r.exit_code == 0 && r.out.find("\"steinberg\"") != std::string::npos,
              "langlands --json");
    }
    {
        // determinism under the thread cap
        RunResult a = run("packet --param " + data("sp32.json") + " --characters");
        std::string cmd = "APK_THREADS=3 '" + g_bin + "' packet --param " + data("sp32.json") +
                          " --characters 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        std::string out;
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
        pclose(p);
        check(a.out == out, "packet output is byte-identical across thread counts");
    }

    if (g_failures) {
        std::cout << g_failures << " cli check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
