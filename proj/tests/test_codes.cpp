#include <doctest.h>

#include "ccwb/constructions.hpp"
#include "ccwb/distance.hpp"
#include "ccwb/linear_code.hpp"
#include "ccwb/textio.hpp"

using namespace ccwb;

namespace {

LinearCode make_cc(int q, int n, const std::string& a_s, const std::string& g_s) {
    const Field& F = Field::get(q);
    CCParams P = cc_params(F, n, parse_element(a_s, F));
    return cc_code(P, parse_poly(g_s, F));
}

LinearCode from_check(int q, int n, const std::string& a_s, const std::string& h_s) {
    const Field& F = Field::get(q);
    fe a = parse_element(a_s, F);
    auto [g, rem] = poly_divmod(poly_xn_minus_a(F, n, a), parse_poly(h_s, F));
    REQUIRE(rem.is_zero());
    CCParams P = cc_params(F, n, a);
    return cc_code(P, g);
}

LinearCode random_code(const Field& F, int n, int k, unsigned seed) {
    Mat m(k, n);
    unsigned s = seed;
    for (auto& x : m.a) {
        s = s * 1103515245u + 12345u;
        x = fe((s >> 16) % F.q());
    }
    return LinearCode(F, m);
}

}  // namespace

TEST_CASE("cc_code basics") {
    LinearCode rep = make_cc(2, 3, "1", "111");
    CHECK(rep.n() == 3);
    CHECK(rep.k() == 1);

    LinearCode c84 = from_check(7, 8, "6", "15221");
    CHECK(c84.n() == 8);
    CHECK(c84.k() == 4);

    LinearCode c73 = from_check(4, 7, "1", "1011");
    CHECK(c73.n() == 7);
    CHECK(c73.k() == 3);

    // non-divisor rejected
    const Field& F2 = Field::get(2);
    CCParams P = cc_params(F2, 7, 1);
    CHECK_THROWS(cc_code(P, parse_poly("111", F2)));
}

TEST_CASE("constacyclic closure") {
    for (auto [q, n, a_s, h_s] : {std::tuple<int, int, const char*, const char*>{2, 7, "1", "1011"},
                                  {3, 12, "2", "11221"},
                                  {7, 8, "6", "15221"}}) {
        const Field& F = Field::get(q);
        fe a = parse_element(a_s, F);
        LinearCode C = from_check(q, n, a_s, h_s);
        // shift every basis row and test membership
        for (int i = 0; i < C.k(); ++i) {
            std::vector<fe> row(C.gen_matrix().row(i), C.gen_matrix().row(i) + n);
            std::vector<fe> sh(n);
            sh[0] = F.mul(a, row[n - 1]);
            for (int j = 1; j < n; ++j) sh[j] = row[j - 1];
            CHECK(C.contains(sh));
        }
    }
}

TEST_CASE("dual") {
    LinearCode rep = make_cc(2, 3, "1", "111");
    LinearCode par = dual(rep);
    CHECK(par.n() == 3);
    CHECK(par.k() == 2);
    CHECK(min_distance(par).d() == 2);

    // involution on random codes
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        LinearCode C = random_code(Field::get(5), 9, 4, seed);
        CHECK(dual(dual(C)) == C);
        // orthogonality
        Mat prod = mat_mul(C.rref_matrix(), transpose(dual(C).rref_matrix()), Field::get(5));
        CHECK(is_zero(prod));
    }

    // the [8,4,5] code over GF(7) is its own dual
    LinearCode c84 = from_check(7, 8, "6", "15221");
    CHECK(dual(c84) == c84);
}

TEST_CASE("min distance by full enumeration") {
    CHECK(min_distance(make_cc(2, 3, "1", "111")).d() == 3);
    auto r = min_distance(from_check(7, 8, "6", "15221"));
    CHECK(r.exact);
    CHECK(r.d() == 5);
    auto r2 = min_distance(from_check(3, 12, "2", "11221"));
    CHECK(r2.exact);
    CHECK(r2.d() == 6);
}

TEST_CASE("weight distribution") {
    auto wd = weight_distribution(make_cc(2, 3, "1", "111"));
    CHECK(wd[0] == 1);
    CHECK(wd[3] == 1);
    CHECK(wd[1] == 0);
    CHECK(wd[2] == 0);

    // counts sum to q^k, zero word counted once
    LinearCode c = from_check(3, 12, "2", "11221");
    auto wd2 = weight_distribution(c);
    unsigned long long sum = 0;
    for (auto v : wd2) sum += v;
    CHECK(sum == 81);
    CHECK(wd2[0] == 1);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    for (auto [q, n, a_s, h_s] : {std::tuple<int, int, const char*, const char*>{3, 12, "2", "11221"},
                                  {7, 8, "6", "15221"},
                                  {2, 10, "1", "11111"},
                                  {5, 26, "2", "41331"}}) {
        LinearCode C = from_check(q, n, a_s, h_s);
        CHECK(weight_histogram(C) == weight_histogram_serial(C));
        CHECK(min_weight_full(C) == min_weight_full_serial(C));
    }
}

TEST_CASE("information-set bounds match exhaustive distance") {
    // every code with q^k <= 2^16 must come out exact and equal
    std::vector<LinearCode> codes;
    codes.push_back(from_check(3, 12, "2", "11221"));
    codes.push_back(from_check(7, 8, "6", "15221"));
    codes.push_back(from_check(2, 10, "1", "11111"));
    codes.push_back(from_check(4, 17, "1", "11A11"));
    codes.push_back(from_check(5, 26, "2", "41331"));
    for (unsigned seed : {7u, 8u, 9u}) codes.push_back(random_code(Field::get(3), 14, 6, seed));
    for (unsigned seed : {4u, 5u}) codes.push_back(random_code(Field::get(2), 20, 10, seed));
    for (const auto& C : codes) {
        int exact = min_weight_full(C);
        DistanceResult bz = min_distance_infoset(C, 1ull << 62);
        CHECK(bz.exact);
        CHECK(bz.lower == exact);
        CHECK(bz.upper == exact);
    }
}

TEST_CASE("singleton bound holds on exact results") {
    for (auto [q, n, a_s, h_s] : {std::tuple<int, int, const char*, const char*>{3, 12, "2", "11221"},
                                  {7, 8, "6", "15221"}}) {
        LinearCode C = from_check(q, n, a_s, h_s);
        auto r = min_distance(C);
        CHECK(r.exact);
        CHECK(r.d() <= C.n() - C.k() + 1);
    }
}

TEST_CASE("classify: property battery") {
    {
        auto ps = classify(from_check(7, 8, "6", "15221"));
        CHECK(ps.self_dual);
        CHECK(ps.self_orthogonal);
        CHECK(ps.dual_containing);
        CHECK(!ps.lcd);
    }
    {
        auto ps = classify(from_check(4, 7, "1", "1011"));
        CHECK(ps.self_orthogonal);
        REQUIRE(ps.two_weight.has_value());
        CHECK(*ps.two_weight);
    }
    {
        auto ps = classify(from_check(5, 26, "2", "41331"));
        CHECK(ps.lcd);
        REQUIRE(ps.two_weight.has_value());
        CHECK(*ps.two_weight);
    }
    {
        // [3,2] parity code: reversible but not self-orthogonal
        LinearCode par = dual(make_cc(2, 3, "1", "111"));
        auto ps = classify(par);
        CHECK(ps.reversible);
        CHECK(!ps.self_orthogonal);
    }
}

TEST_CASE("classify consistency lattice") {
    std::vector<LinearCode> codes;
    codes.push_back(from_check(7, 8, "6", "15221"));
    codes.push_back(from_check(3, 12, "2", "11221"));
    for (unsigned seed : {11u, 12u, 13u, 14u, 15u}) {
        codes.push_back(random_code(Field::get(3), 10, 4, seed));
        codes.push_back(random_code(Field::get(4), 8, 3, seed));
    }
    for (const auto& C : codes) {
        auto ps = classify(C);
        if (ps.self_dual) {
            CHECK(ps.self_orthogonal);
            CHECK(ps.dual_containing);
            CHECK(2 * C.k() == C.n());
        }
        if (ps.lcd && C.k() > 0) CHECK(!ps.self_orthogonal);
        // hull dimension two ways: rank defect of the Gram matrix vs
        // dimension of the intersection via a stacked-matrix rank
        int hull = hull_dimension(C);
        LinearCode D = dual(C);
        Mat stacked(C.k() + D.k(), C.n());
        for (int i = 0; i < C.k(); ++i)
            for (int j = 0; j < C.n(); ++j) stacked.at(i, j) = C.rref_matrix().at(i, j);
        for (int i = 0; i < D.k(); ++i)
            for (int j = 0; j < C.n(); ++j) stacked.at(C.k() + i, j) = D.rref_matrix().at(i, j);
        int inter = C.k() + D.k() - rank(stacked, C.field());
        CHECK(hull == inter);
        CHECK(ps.lcd == (hull == 0));
        CHECK(ps.self_orthogonal == (hull == C.k()));
    }
}

TEST_CASE("membership") {
    LinearCode C = from_check(3, 12, "2", "11221");
    // every generator row is a member; a perturbed row is not
    std::vector<fe> row(C.gen_matrix().row(0), C.gen_matrix().row(0) + C.n());
    CHECK(C.contains(row));
    row[0] = C.field().add(row[0], 1);
    CHECK(!C.contains(row));
}
