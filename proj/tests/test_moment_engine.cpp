#include "latwalk/moment_engine.hpp"

#include "latwalk/walk_oracle.hpp"

#include <doctest.h>

#include <cstdio>

using namespace latwalk;

TEST_CASE("kernel polynomials: first members") {
    CHECK(skew_kernel(0) == BiPoly::constant(1));

    BiPoly a1 = BiPoly::var1() - BiPoly::var2();
    CHECK(skew_kernel(1) == a1);

    BiPoly a2; // x^2 + y^2 - 6xy + x + y
    a2.add_term(2, 0, 1);
    a2.add_term(0, 2, 1);
    a2.add_term(1, 1, -6);
    a2.add_term(1, 0, 1);
    a2.add_term(0, 1, 1);
    CHECK(skew_kernel(2) == a2);

    CHECK_THROWS_AS(skew_kernel(-1), std::invalid_argument);
}

TEST_CASE("kernel polynomials: degree and alternating swap parity") {
    for (int n = 0; n <= 12; ++n) {
        BiPoly a = skew_kernel(n);
        CHECK(a.total_degree() == n);
        BiPoly swapped = skew_kernel(n).swap_vars();
        CHECK(swapped == (n % 2 ? -a : a));
    }
}

TEST_CASE("kernel products ignore zero parts and ordering") {
    BiPoly sq = skew_kernel(1) * skew_kernel(1);
    CHECK(skew_kernel_product({1, 1}) == sq);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(1, 1) == -2);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(skew_kernel_product({}) == BiPoly::constant(1));
    CHECK(skew_kernel_product({0, 0}) == BiPoly::constant(1));
    CHECK(skew_kernel_product({1, 2}) == skew_kernel_product({2, 1}));
    CHECK(skew_kernel_product({0, 3}) == skew_kernel(3));
}

TEST_CASE("axis1 weights: frozen low order values") {
    BiPoly third = BiPoly::monomial(1, 0, BigRat(1, 3));
    CHECK(axis1_factor(Composition({2})) == third);
    CHECK(axis1_factor(Composition({1, 1})) == BiPoly::monomial(1, 0, BigRat(-1, 12)));
    CHECK(axis1_factor(Composition({0, 2})) == BiPoly::monomial(1, 0, BigRat(1, 6)));
    // slots are exchangeable once k and the multiset of parts are fixed
    CHECK(axis1_factor(Composition({2, 0})) == axis1_factor(Composition({0, 2})));
}

TEST_CASE("axis1 weights vanish for odd total weight") {
    CHECK(axis1_factor(Composition({1})).is_zero());
    CHECK(axis1_factor(Composition({1, 2})).is_zero());
    CHECK(axis1_factor(Composition({3, 0})).is_zero());
}

TEST_CASE("axis1 weights against the double composition sum") {
    CHECK(coupling_sum(Composition({2}), 1) == 2);
    CHECK(coupling_sum(Composition({1, 1}), 1) == -2);

    std::vector<std::vector<int>> comps;
    for (int total = 2; total <= 6; total += 2)
        for (int k = 1; k <= total && k <= 4; ++k)
            for_each_composition(total, k, [&](const std::vector<int>& v) {
                comps.push_back(v);
            });
    for (const auto& parts : comps) {
        Composition c(parts);
        int k = c.slots();
        BiPoly p = axis1_factor(c);
        for (int n1 = 0; n1 <= 6; ++n1) {
            BigRat expected = p.eval(n1, 0) *
                              BigRat(factorial(2 * n1 + k), factorial(n1) * factorial(n1));
            CHECK(coupling_sum(c, n1) == expected);
        }
    }
    CHECK_THROWS_AS(coupling_sum(Composition({2}), -1), std::invalid_argument);
    CHECK_THROWS_AS(coupling_sum(Composition(std::vector<int>(10, 1)), 8),
                    std::length_error);
}

TEST_CASE("sign sum closed form") {
    BiPoly two_n2 = BiPoly::monomial(0, 1, 2);
    CHECK(eps_power_sum({2}, 1) == two_n2);
    CHECK(eps_power_sum({1, 1}, 2) == -two_n2);
    // (2 n2 - 1)(2 n2)
    BiPoly prod = (two_n2 - BiPoly::constant(1)) * two_n2;
    CHECK(eps_power_sum({2, 2}, 2) == prod);
    CHECK(eps_power_sum({0, 2}, 2).is_zero()); // free sign variable
    CHECK(eps_power_sum({1, 2}, 2).is_zero()); // odd number of odd exponents
    CHECK_THROWS_AS(eps_power_sum({1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(eps_power_sum({-1, 1}, 2), std::invalid_argument);
}

TEST_CASE("axis2 weights: frozen low order values") {
    BiPoly two_n2 = BiPoly::monomial(0, 1, 2);
    CHECK(axis2_factor(Composition({2})) == two_n2);
    CHECK(axis2_factor(Composition({1, 1})) == -two_n2);
    CHECK(axis2_factor(Composition({0, 2})) == BiPoly::monomial(0, 1, -4));
    CHECK(axis2_factor(Composition({2, 0})).is_zero());
}

TEST_CASE("axis2 weights match the full sign sweep") {
    // suffix dominant compositions carry the value...
    for (int total = 2; total <= 8; total += 2)
        for (int k = 1; k <= total; ++k)
            for_each_suffix_dominant_composition(total, k, [&](const std::vector<int>& v) {
                Composition c(v);
                CHECK(axis2_factor(c) == axis2_factor_direct(c));
            });
    // ...and everything else vanishes on both routes
    for (int total = 2; total <= 6; total += 2)
        for (int k = 1; k <= 5; ++k)
            for_each_composition(total, k, [&](const std::vector<int>& v) {
                if (is_suffix_dominant(v)) return;
                CHECK(axis2_factor(Composition(v)).is_zero());
                CHECK(axis2_factor_direct(Composition(v)).is_zero());
            });
}

TEST_CASE("moment polynomials: orders zero and two") {
    CHECK(moment_polynomial(0).poly == BiPoly::constant(1));
    BiPoly p2 = moment_polynomial(2).poly;
    CHECK(p2 == BiPoly::monomial(1, 1, BigRat(1, 3)));
}

TEST_CASE("moment polynomial order four") {
    BiPoly p4 = moment_polynomial(4).poly;
    auto ts = to_elementary_symmetric(p4);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].prod_pow == 2);
    CHECK(ts[0].sum_pow == 0);
    CHECK(ts[0].coeff == BigRat(7, 15));
    CHECK(ts[1].prod_pow == 1);
    CHECK(ts[1].sum_pow == 1);
    CHECK(ts[1].coeff == BigRat(-1, 15));
}

TEST_CASE("moment polynomial guards and structure") {
    CHECK_THROWS_AS(moment_polynomial(3), std::invalid_argument);
    CHECK_THROWS_AS(moment_polynomial(-2), std::invalid_argument);
    for (int tl = 2; tl <= 8; tl += 2) {
        MomentPolynomial mp = moment_polynomial(tl); // ctor path already validates
        CHECK(mp.poly.is_symmetric());
        CHECK(mp.poly.total_degree() == tl);
        CHECK(mp.poly.degree_var1() == tl / 2);
        CHECK(mp.poly.eval(1, 1) == BigRat(1, 3));
        CHECK(mp.poly.eval(0, 5) == 0);
        CHECK(mp.poly.eval(5, 0) == 0);
    }
}

TEST_CASE("moments against the exact walk histograms") {
    for (int tl = 0; tl <= 6; tl += 2) {
        BiPoly p = moment_polynomial(tl).poly;
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = 0; n2 <= 3; ++n2) {
                AreaDistribution d = area_histogram_dp({n1, n2});
                BigRat predicted = BigRat(loop_count({n1, n2})) * p.eval(n1, n2);
                CHECK(BigRat(moment(d, tl)) == predicted);
            }
    }
}

TEST_CASE("summed moments over one walk length") {
    CHECK(fixed_length_moment_sum(2, 2) == 8);
    CHECK(fixed_length_moment_closed_form(2, 2) == 8);
    CHECK(fixed_length_moment_sum(4, 2) == 8);
    CHECK(fixed_length_moment_closed_form(4, 2) == 8);
    for (int n = 1; n <= 6; ++n) {
        CHECK(fixed_length_moment_sum(2, n) == fixed_length_moment_closed_form(2, n));
        CHECK(fixed_length_moment_sum(4, n) == fixed_length_moment_closed_form(4, n));
    }
    CHECK_THROWS_AS(fixed_length_moment_sum(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(fixed_length_moment_closed_form(2, 0), std::invalid_argument);
}

TEST_CASE("moment cache") {
    MomentCache cache;
    CHECK(!cache.lookup(2).has_value());
    const BiPoly& p2 = cache.get(2);
    CHECK(p2 == BiPoly::monomial(1, 1, BigRat(1, 3)));
    CHECK(cache.lookup(2).has_value());
    cache.get(4);
    CHECK(cache.size() == 2);

    MomentCache back = MomentCache::from_json(cache.to_json());
    CHECK(back == cache);

    std::string path = "moment_cache_test.json";
    cache.save(path);
    CHECK(MomentCache::load(path) == cache);
    std::remove(path.c_str());

    // a tampered entry violates the value pin at (1,1)
    CHECK_THROWS_AS(cache.put(2, BiPoly::monomial(1, 1, BigRat(1, 2))), std::logic_error);
    nlohmann::json bad = cache.to_json();
    bad["format_version"] = 2;
    CHECK_THROWS_AS(MomentCache::from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(MomentCache::load("no_such_dir/nope.json"), std::runtime_error);
}
