#include <doctest.h>

#include "ccwb/ext_field.hpp"
#include "ccwb/field.hpp"
#include "ccwb/numtheory.hpp"

using namespace ccwb;

namespace {

// independent order oracle: enumerate powers until 1
int order_by_enumeration(const Field& F, fe x) {
    fe cur = x;
    int e = 1;
    while (cur != F.one()) {
        cur = F.mul(cur, x);
        ++e;
    }
    return e;
}

const int kSupported[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("field construction basics") {
    const Field& F5 = Field::get(5);
    CHECK(F5.p() == 5);
    CHECK(F5.m() == 1);

    const Field& F9 = Field::get(9);
    CHECK(F9.p() == 3);
    CHECK(F9.m() == 2);
    CHECK(F9.modulus().size() == 3);

    CHECK_THROWS(Field::get(6));
    CHECK_THROWS(Field::get(11));
}

TEST_CASE("pinned moduli and generators") {
    CHECK(Field::get(4).modulus_string() == "x^2 + x + 1");
    CHECK(Field::get(8).modulus_string() == "x^3 + x + 1");
    CHECK(Field::get(9).modulus_string() == "x^2 + 2*x + 2");
    // prime-field primitive roots
    CHECK(Field::get(3).residue(Field::get(3).gen()) == 2);
    CHECK(Field::get(5).residue(Field::get(5).gen()) == 2);
    CHECK(Field::get(7).residue(Field::get(7).gen()) == 3);
}

TEST_CASE("field axioms, exhaustive") {
    for (int q : kSupported) {
        const Field& F = Field::get(q);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(fe(a), fe(b)) == F.add(fe(b), fe(a)));
                CHECK(F.mul(fe(a), fe(b)) == F.mul(fe(b), fe(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(fe(a), fe(b)), fe(c)) == F.add(fe(a), F.add(fe(b), fe(c))));
                    CHECK(F.mul(F.mul(fe(a), fe(b)), fe(c)) == F.mul(fe(a), F.mul(fe(b), fe(c))));
                    CHECK(F.mul(fe(a), F.add(fe(b), fe(c))) ==
                          F.add(F.mul(fe(a), fe(b)), F.mul(fe(a), fe(c))));
                }
            }
            CHECK(F.add(fe(a), F.neg(fe(a))) == 0);
            if (a) CHECK(F.mul(fe(a), F.inv(fe(a))) == 1);
        }
    }
}

TEST_CASE("element order") {
    const Field& F5 = Field::get(5);
    CHECK(element_order(F5, F5.one()) == 1);
    CHECK(element_order(F5, F5.from_digit(2)) == 4);
    const Field& F4 = Field::get(4);
    CHECK(element_order(F4, F4.gen()) == 3);
    CHECK_THROWS(element_order(F5, 0));

    for (int q : kSupported) {
        const Field& F = Field::get(q);
        for (int a = 1; a < q; ++a) {
            int o = element_order(F, fe(a));
            CHECK(o == order_by_enumeration(F, fe(a)));
            CHECK((q - 1) % o == 0);
        }
    }
}

TEST_CASE("pt_root") {
    const Field& F2 = Field::get(2);
    CHECK(pt_root(F2, F2.one(), 2) == F2.one());
    const Field& F3 = Field::get(3);
    CHECK(F3.residue(pt_root(F3, F3.from_digit(2), 9)) == 2);  // 2^9 = 512 = 2 mod 3
    const Field& F5 = Field::get(5);
    CHECK(F5.residue(pt_root(F5, F5.from_digit(2), 1)) == 2);
    CHECK_THROWS(pt_root(F5, 0, 5));

    // b^(p^t) = a and |b| = |a|, exhaustively over all supported fields
    for (int q : kSupported) {
        const Field& F = Field::get(q);
        for (long long pt : {1LL, (long long)F.p(), (long long)F.p() * F.p()}) {
            for (int a = 1; a < q; ++a) {
                fe b = pt_root(F, fe(a), pt);
                CHECK(F.pow(b, pt) == fe(a));
                CHECK(element_order(F, b) == element_order(F, fe(a)));
            }
        }
    }
}

TEST_CASE("mult_order_mod") {
    CHECK(mult_order_mod(2, 7) == 3);
    CHECK(mult_order_mod(5, 16) == 4);
    CHECK(mult_order_mod(3, 2) == 1);
    CHECK_THROWS(mult_order_mod(2, 8));
}

TEST_CASE("extension fields host roots of unity") {
    const Field& F2 = Field::get(2);
    ExtField E8(F2, 3);
    CHECK(E8.size() == 8);
    CHECK(E8.element_order(E8.gen()) == 7);

    const Field& F5 = Field::get(5);
    ExtField E625(F5, 4);
    CHECK(E625.size() == 625);
    CHECK(E625.element_order(E625.gen()) == 624);
    // 16th roots of unity live here since ord_16(5) = 4
    ExtElem w = E625.pow(E625.gen(), 624 / 16);
    CHECK(E625.element_order(w) == 16);
}

TEST_CASE("degree-1 extension is the field itself up to isomorphism") {
    for (int q : kSupported) {
        const Field& F = Field::get(q);
        ExtField E(F, 1);
        CHECK(E.size() == (u128)q);
        // embedding must be the identity map on arithmetic
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(E.project(E.mul(E.embed(fe(a)), E.embed(fe(b)))) == F.mul(fe(a), fe(b)));
                CHECK(E.project(E.add(E.embed(fe(a)), E.embed(fe(b)))) == F.add(fe(a), fe(b)));
            }
        CHECK(E.element_order(E.gen()) == (u128)(q - 1));
    }
}

TEST_CASE("embedding is an injective ring homomorphism") {
    for (int q : {2, 3, 4, 5, 9}) {
        const Field& F = Field::get(q);
        ExtField E(F, q <= 3 ? 4 : 2);
        std::vector<ExtElem> images;
        for (int a = 0; a < q; ++a) {
            ExtElem ea = E.embed(fe(a));
            for (const auto& prev : images) CHECK(!(prev == ea));
            images.push_back(ea);
            for (int b = 0; b < q; ++b) {
                CHECK(E.add(E.embed(fe(a)), E.embed(fe(b))) == E.embed(F.add(fe(a), fe(b))));
                CHECK(E.mul(E.embed(fe(a)), E.embed(fe(b))) == E.embed(F.mul(fe(a), fe(b))));
            }
        }
    }
}

TEST_CASE("extension field arithmetic sanity") {
    const Field& F3 = Field::get(3);
    ExtField E(F3, 4);
    ExtElem x = E.gen();
    CHECK(E.mul(x, E.inv(x)) == E.one());
    CHECK(E.pow(x, E.unit_order()) == E.one());
    // random-ish spot checks of distributivity
    ExtElem a = E.pow(x, 17), b = E.pow(x, 55), c = E.pow(x, 61);
    CHECK(E.mul(a, E.add(b, c)) == E.add(E.mul(a, b), E.mul(a, c)));
}

TEST_CASE("element strings") {
    const Field& F7 = Field::get(7);
    CHECK(F7.to_string(F7.from_digit(0)) == "0");
    CHECK(F7.to_string(F7.from_digit(6)) == "6");
    const Field& F9 = Field::get(9);
    CHECK(F9.to_string(0) == "0");
    CHECK(F9.to_string(F9.one()) == "1");
    CHECK(F9.to_string(F9.gen()) == "A");
    CHECK(F9.to_string(F9.from_power(5)) == "A^5");
    CHECK(F9.to_string(F9.from_digit(2)) == "2");  // 2 = A^4, printed as the digit
    CHECK(F9.from_digit(2) == F9.from_power(4));
}
