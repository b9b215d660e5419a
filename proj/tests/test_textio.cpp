#include <doctest.h>

#include "ccwb/fixtures.hpp"
#include "ccwb/textio.hpp"

using namespace ccwb;

#ifndef CCWB_DATA_DIR
#define CCWB_DATA_DIR "data"
#endif

namespace {
const std::string kData = CCWB_DATA_DIR;

std::string strip_annotation(const std::string& s) {
    return s.rfind("(D)", 0) == 0 ? s.substr(3) : s;
}
}  // namespace

TEST_CASE("poly grammar basics") {
    const Field& F5 = Field::get(5);
    Poly p = parse_poly("0123", F5);
    CHECK(p.deg() == 3);
    CHECK(p.at(0) == 0);
    CHECK(F5.residue(p.at(1)) == 1);
    CHECK(F5.residue(p.at(2)) == 2);
    CHECK(F5.residue(p.at(3)) == 3);
    CHECK(poly_string(p) == "0123");

    const Field& F4 = Field::get(4);
    Poly p4 = parse_poly("1A^20A^2A^2AA0A1", F4);
    CHECK(p4.deg() == 9);
    CHECK(p4.at(0) == F4.one());
    CHECK(p4.at(1) == F4.from_power(2));
    CHECK(poly_string(p4) == "1A^20A^2A^2AA0A1");

    CHECK_THROWS(parse_poly("", F5));
    CHECK_THROWS(parse_poly("A1", F5));   // 'A' not in a prime field
    CHECK_THROWS(parse_poly("16", F5));   // digit out of range
    CHECK_THROWS(parse_poly("3", F4));    // only digits < p in extension fields
    CHECK_THROWS(parse_poly("1A^", F4));  // missing exponent
}

TEST_CASE("element grammar") {
    const Field& F9 = Field::get(9);
    CHECK(parse_element("A", F9) == F9.gen());
    CHECK(parse_element("A^5", F9) == F9.from_power(5));
    CHECK(parse_element("2", F9) == F9.from_digit(2));
    CHECK(parse_element("0", F9) == 0);
    CHECK_THROWS(parse_element("", F9));
    CHECK_THROWS(parse_element("AA", F9));
    const Field& F7 = Field::get(7);
    CHECK(F7.residue(parse_element("6", F7)) == 6);
    CHECK_THROWS(parse_element("A", F7));
}

TEST_CASE("(D) annotation is consumed") {
    const Field& F7 = Field::get(7);
    CHECK(parse_poly("(D)6341", F7) == parse_poly("6341", F7));
    CHECK(poly_string(parse_poly("(D)6341", F7)) == "6341");
}

TEST_CASE("round trip over every fixtured polynomial string") {
    int checked = 0;
    for (auto& r : load_prop_fixture(kData + "/tables/properties.csv")) {
        const Field& F = Field::get(r.q);
        Poly p = parse_poly(r.poly, F);
        CHECK(poly_string(p) == strip_annotation(r.poly));
        // also round-trip the shift constant
        fe a = parse_element(r.a, F);
        CHECK(element_string(a, F) == r.a);
        ++checked;
    }
    for (auto& r : load_equiv_fixture(kData + "/tables/equiv_verdicts.csv")) {
        const Field& F = Field::get(r.q);
        CHECK(poly_string(parse_poly(r.g1, F)) == r.g1);
        CHECK(poly_string(parse_poly(r.g2, F)) == r.g2);
        checked += 2;
    }
    for (auto& r : load_cx_fixture(kData + "/chains/construction_x.csv")) {
        if (r.g.empty()) continue;
        const Field& F = Field::get(5);
        CHECK(poly_string(parse_poly(r.g, F)) == r.g);
        ++checked;
    }
    {
        auto root = load_root_code(kData + "/chains/root_code_gf7.txt");
        const Field& F = Field::get(root.q);
        CHECK(poly_string(parse_poly(root.g, F)) == root.g);
        ++checked;
    }
    CHECK(checked > 110);
}

TEST_CASE("fixture dimensions are consistent") {
    // k = deg h for check polynomials, k = n - deg g for generators
    for (auto& r : load_prop_fixture(kData + "/tables/properties.csv")) {
        const Field& F = Field::get(r.q);
        Poly p = parse_poly(r.poly, F);
        if (r.kind == "h")
            CHECK(p.deg() == r.k);
        else
            CHECK(p.deg() == r.n - r.k);
    }
}
