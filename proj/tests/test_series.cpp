#include <doctest.h>

#include <random>

#include "rpl/series.hpp"

using namespace rpl;

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly a = LaurentPoly::monomial(2, 1, 0) + LaurentPoly::monomial(-1, 0, 1);
    LaurentPoly b = LaurentPoly::monomial(1, -1, 0);
    LaurentPoly prod = a * b;
    CHECK(prod.coeff(0, 0) == 2);
    CHECK(prod.coeff(-1, 1) == -1);
    CHECK((a - a).is_zero());
    CHECK(LaurentPoly::constant(1).is_one());
    CHECK(LaurentPoly::constant(0).is_zero());
    CHECK((a + (-a)).is_zero());
    CHECK(a.str() == "-y + 2*x");

    LaurentPoly wide;
    wide.add_term(0, 0, 1);
    wide.add_term(5, 0, 1);
    wide.add_term(-5, 2, 1);
    std::vector<BigInt> totals = wide.x_residue_totals(5);
    CHECK(totals[0] == 3);
    CHECK(totals[1] == 0);
    CHECK(wide.y_residue_part(4, 2).coeff(-5, 2) == 1);
    CHECK(wide.y_residue_part(4, 2).coeff(0, 0) == 0);
    CHECK(wide.x_reduced_mod(5).coeff(0, 0) == 2);
}

TEST_CASE("pochhammer examples") {
    Series euler = pochhammer_inf(1, 0, 0, 1, 1, 6);
    CHECK(euler[0].coeff(0, 0) == 1);
    CHECK(euler[1].coeff(0, 0) == -1);
    CHECK(euler[2].coeff(0, 0) == -1);
    CHECK(euler[3].coeff(0, 0) == 0);
    CHECK(euler[4].coeff(0, 0) == 0);
    CHECK(euler[5].coeff(0, 0) == 1);

    CHECK(pochhammer_inf(-1, 0, 0, 1, 2, 8)[0].is_one());

    Series xq4 = pochhammer_inf(1, 1, 0, 4, 4, 6);
    CHECK(xq4[4].coeff(1, 0) == -1);
    CHECK(xq4[4].coeff(0, 0) == 0);

    CHECK_THROWS_AS(pochhammer_inf(1, 0, 0, 0, 1, 5), std::domain_error);
    CHECK_THROWS_AS(pochhammer_inf(1, 0, 0, -2, 1, 5), std::domain_error);
}

TEST_CASE("series inverse and powers") {
    Series euler = pochhammer_inf(1, 0, 0, 1, 1, 30);
    Series inv = euler.inverse();
    CHECK((euler * inv) == Series::one(30));
    for (int k = 0; k < 30; ++k) CHECK(inv[k].coeff(0, 0) == partition_count(k));
    CHECK(euler.pow(0) == Series::one(30));
    CHECK(euler.pow(-2) == inv * inv);
    Series shifted_q = Series(5);
    shifted_q.at(1) = LaurentPoly::constant(1);
    CHECK_THROWS_AS(shifted_q.inverse(), std::domain_error);
}

TEST_CASE("series multiplication is associative and commutative (seeded)") {
    std::mt19937 rng(20240309);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
    auto random_series = [&]() {
        Series s(12);
        for (int k = 0; k < 12; ++k)
            for (int terms = 0; terms < 3; ++terms)
                s.at(k).add_term(expo(rng), expo(rng), coeff(rng));
        return s;
    };
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(), b = random_series(), c = random_series();
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

TEST_CASE("named series spot values") {
    CHECK(build_named_series("rambest_rhs", 5)[0].coeff(0, 0) == 5);
    Series jtpa = build_named_series("jtpa_lhs", 11);
    for (int k = 0; k < 11; ++k) {
        bool triangular = (k == 0 || k == 1 || k == 3 || k == 6 || k == 10);
        CHECK(jtpa[k].coeff(0, 0) == (triangular ? 1 : 0));
    }
    CHECK(build_named_series("tcore_rhs", 10, 5)[9].coeff(0, 0) == 5);
    CHECK_THROWS_AS(build_named_series("nonsense", 5), std::invalid_argument);
    for (const std::string& name : named_series_catalog())
        CHECK_NOTHROW(build_named_series(name, 8));
}

TEST_CASE("enumerative series examples") {
    Series g = enumerative_series(6, SeriesWeight::StcrankSrank);
    CHECK(g[0].is_one());
    CHECK(g[1].is_one());  // (1) has stcrank 0 and srank 0

    Series joint = enumerative_series(6, SeriesWeight::OddBoth);
    CHECK(joint[4].coeff(2, 2) == 2);  // (3,1) and (2,1,1)

    Series crank_w = enumerative_series(3, SeriesWeight::CrankAnomalous);
    CHECK(crank_w[1].coeff(1, 0) == 1);
    CHECK(crank_w[1].coeff(-1, 0) == 1);
    CHECK(crank_w[1].coeff(0, 0) == -1);

    CHECK_THROWS_AS(enumerative_series(kEnumerationBudget + 1, SeriesWeight::SrankOnly),
                    std::domain_error);
}

TEST_CASE("slicing and shifting") {
    Series s(10);
    for (int k = 0; k < 10; ++k) s.at(k) = LaurentPoly::constant(k);
    Series sliced = arithmetic_slice(s, 4, 5);
    CHECK(sliced.order() == 2);
    CHECK(sliced[0].coeff(0, 0) == 4);
    CHECK(sliced[1].coeff(0, 0) == 9);
    Series moved = shifted(s, 2);
    CHECK(moved[0].is_zero());
    CHECK(moved[2].is_zero());  // constant 0 at source position 0
    CHECK(moved[3].coeff(0, 0) == 1);
    CHECK_THROWS_AS(shifted(s, -1), std::domain_error);
}

TEST_CASE("assert_equal reports the first difference") {
    Series a = Series::one(5), b = Series::one(5);
    b.at(3) = LaurentPoly::monomial(2, 1, 0);
    SeriesComparison cmp = assert_equal(a, b);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.first_difference == 3);
    CHECK(cmp.delta.coeff(1, 0) == -2);
    CHECK(assert_equal(a, a).equal);
    CHECK_THROWS_AS(assert_equal(a, Series::one(6)), std::invalid_argument);
}

TEST_CASE("cyclic reduction verdict directions") {
    // a constant series is concentrated at residue 0: not all-equal at m = 5
    Series constant = Series::one(6);
    CyclicReduceResult bad = cyclic_reduce_check(constant, 5, 0, 1);
    CHECK_FALSE(bad.all_equal);
    CHECK(bad.first_failure == 0);
    CHECK(bad.failing_totals[0] == 1);
    // but trivially all-equal at m = 1
    CHECK(cyclic_reduce_check(constant, 1, 0, 1).all_equal);
    // and all-equal when every class carries the same total
    Series flat(3);
    for (int x = 0; x < 5; ++x) flat.at(1).add_term(x, 0, 7);
    CHECK(cyclic_reduce_check(flat, 5, 1, 1).all_equal);
}
