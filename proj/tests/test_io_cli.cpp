#include <doctest.h>

#include "apk/json_io.hpp"
#include "testutil.hpp"

using namespace apk;
using namespace apk::test;

TEST_CASE("documents round-trip through the codec") {
    for (const ExtendedMultiSegment& e : {ex1(), ex53(), ex_aubert()}) {
        std::string text = emit(e);
        ExtendedMultiSegment back = parse_ems(text, true);
        CHECK(equivalent(back, e));
        CHECK(emit(back) == text);
    }

    RandomEms rnd(9501);
    for (int it = 0; it < 200; ++it) {
        ExtendedMultiSegment e = rnd.gen(true, 5);
        std::string text = emit(e);
        CHECK(equivalent(parse_ems(text, false), normalized(e)));
        CHECK(emit(parse_ems(text, false)) == text);
    }
}

TEST_CASE("parameter documents round-trip") {
    for (const AParameter& psi : {so13_parameter(), sp32_parameter(), xu_parameter()}) {
        AParameter back = parse_parameter(emit(psi), true);
        CHECK(back.summands == psi.summands);
        CHECK(back.group == psi.group);
        CHECK(emit(back) == emit(psi));
    }
}

TEST_CASE("schema errors carry field paths") {
    std::string quarter = R"({
      "group": {"family": "Sp", "rank": 1},
      "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
      "blocks": [{"rho": "r1", "rows": [{"A": "3/4", "B": "0", "l": 0, "eta": 1}]}]
    })";
    CHECK_THROWS_WITH_AS(parse_ems(quarter, false),
                         doctest::Contains("blocks[0].rows[0].A"), InputError);

    CHECK_THROWS_AS(parse_document("{", false), InputError);
    CHECK_THROWS_AS(parse_document("{\"group\": {\"family\": \"Sp\", \"rank\": 0}}", false),
                    InputError);
    CHECK_THROWS_AS(parse_document("[1,2]", false), InputError);

    std::string bad_family = R"({
      "group": {"family": "SO_even", "rank": 1},
      "rhos": [], "blocks": []
    })";
    CHECK_THROWS_WITH_AS(parse_document(bad_family, false), doctest::Contains("family"),
                         InputError);

    std::string both = R"({
      "group": {"family": "Sp", "rank": 1},
      "rhos": [], "blocks": [], "summands": []
    })";
    CHECK_THROWS_AS(parse_document(both, false), InputError);
}

TEST_CASE("invariant violations fail the parse with a report") {
    std::string unsorted = R"({
      "group": {"family": "Sp", "rank": 53},
      "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
      "blocks": [{"rho": "r1", "rows": [
        {"A": "5", "B": "2", "l": 1, "eta": -1},
        {"A": "3", "B": "1", "l": 0, "eta": -1}
      ]}]
    })";
    CHECK_THROWS_WITH_AS(parse_ems(unsorted, false), doctest::Contains("admissible-order"),
                         InputError);

    // integer tokens are accepted for half-integers
    std::string ints = R"({
      "group": {"family": "Sp", "rank": 0},
      "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
      "blocks": [{"rho": "r1", "rows": [{"A": 1, "B": 0, "l": 1, "eta": 1}]}]
    })";
    ExtendedMultiSegment e = parse_ems(ints, false);
    CHECK(e.blocks[0].rows[0].seg.A == HalfInt::of(1));

    // eta is canonicalized at l = b/2 during parsing
    std::string amb = R"({
      "group": {"family": "Sp", "rank": 0},
      "rhos": [{"id": "r1", "dim": 1, "selfdual": "orthogonal"}],
      "blocks": [{"rho": "r1", "rows": [{"A": 1, "B": 0, "l": 1, "eta": -1}]}]
    })";
    CHECK(parse_ems(amb, false).blocks[0].rows[0].eta == 1);
}

TEST_CASE("validation reports serialize in both shapes") {
    ExtendedMultiSegment e = ex1();
    e.blocks[0].rows[0].eta = 1;
    ValidationReport rep = validate(e, false);
    REQUIRE_FALSE(rep.ok());
    CHECK(report_to_text(rep).find("sign-condition") != std::string::npos);
    CHECK(report_to_json(rep).find("\"valid\": false") != std::string::npos);
    CHECK(report_to_text(ValidationReport{}) == "valid\n");
}
