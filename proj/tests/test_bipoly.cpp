#include "latwalk/bipoly.hpp"

#include <doctest.h>

#include <random>

using namespace latwalk;

namespace {

BiPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
    BiPoly p;
    int nterms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < nterms; ++t) p.add_term(deg(rng), deg(rng), coef(rng));
    return p;
}

} // namespace

TEST_CASE("term bookkeeping drops zeros") {
    BiPoly p;
    CHECK(p.is_zero());
    CHECK(p.total_degree() == -1);
    p.add_term(2, 1, BigRat(3));
    CHECK(p.coeff(2, 1) == 3);
    CHECK(p.total_degree() == 3);
    p.add_term(2, 1, BigRat(-3));
    CHECK(p.is_zero());
    CHECK(p.coeff(2, 1) == 0);
}

TEST_CASE("arithmetic against pointwise evaluation") {
    std::mt19937 rng(424242);
    std::vector<std::pair<BigRat, BigRat>> points{{0, 0}, {1, 1}, {2, -3}, {BigRat(1, 2), 5}};
    for (int round = 0; round < 25; ++round) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        for (const auto& [x, y] : points) {
            CHECK((a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y));
            CHECK((a - b).eval(x, y) == a.eval(x, y) - b.eval(x, y));
            CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
            CHECK((-a).eval(x, y) == -a.eval(x, y));
        }
    }
}

TEST_CASE("skew derivative scales terms by exponent gap") {
    // x^2 y - 3 x y^3 maps to x^2 y + 6 x y^3
    BiPoly p;
    p.add_term(2, 1, 1);
    p.add_term(1, 3, -3);
    BiPoly d = euler_diff(p);
    CHECK(d.coeff(2, 1) == 1);
    CHECK(d.coeff(1, 3) == 6);
    CHECK(d.terms().size() == 2);
    CHECK(euler_diff(BiPoly::constant(7)).is_zero());
}

TEST_CASE("skew derivative satisfies the Leibniz rule") {
    std::mt19937 rng(99);
    for (int round = 0; round < 20; ++round) {
        BiPoly f = random_poly(rng), g = random_poly(rng);
        CHECK(euler_diff(f * g) == euler_diff(f) * g + f * euler_diff(g));
    }
}

TEST_CASE("falling factorial polynomials") {
    BiPoly f = falling_factorial_poly(1, 3); // v(v-1)(v-2) = v^3-3v^2+2v
    CHECK(f.coeff(3, 0) == 1);
    CHECK(f.coeff(2, 0) == -3);
    CHECK(f.coeff(1, 0) == 2);
    CHECK(f.terms().size() == 3);
    CHECK(falling_factorial_poly(2, 0) == BiPoly::constant(1));
    BiPoly g = falling_factorial_poly(2, 2);
    CHECK(g.eval(0, 5) == 20);
    CHECK(g.eval(0, 1) == 0);
    CHECK_THROWS_AS(falling_factorial_poly(3, 1), std::invalid_argument);
}

TEST_CASE("rising factorial of a polynomial base") {
    BiPoly base = BiPoly::monomial(1, 0, 2) + BiPoly::constant(3); // 2x+3
    BiPoly r = rising_factorial_poly(base, 2);                     // (2x+4)(2x+5)
    CHECK(r.coeff(2, 0) == 4);
    CHECK(r.coeff(1, 0) == 18);
    CHECK(r.coeff(0, 0) == 20);
    CHECK(rising_factorial_poly(base, 0) == BiPoly::constant(1));
}

TEST_CASE("symmetry predicate and variable swap") {
    BiPoly sym = BiPoly::var1() + BiPoly::var2();
    BiPoly skew = BiPoly::var1() - BiPoly::var2();
    CHECK(sym.is_symmetric());
    CHECK(!skew.is_symmetric());
    CHECK(skew.swap_vars() == -skew);
    CHECK((sym * sym * skew).swap_vars() == -(sym * sym * skew));
}

TEST_CASE("json round trip") {
    std::mt19937 rng(7);
    for (int round = 0; round < 10; ++round) {
        BiPoly p = random_poly(rng);
        CHECK(BiPoly::from_json(p.to_json()) == p);
    }
    CHECK(BiPoly::from_json(BiPoly().to_json()).is_zero());
    BiPoly q = BiPoly::monomial(1, 2, BigRat(-7, 3));
    CHECK(BiPoly::from_json(q.to_json()) == q);
}

TEST_CASE("elementary symmetric basis round trip") {
    // 7/15 (xy)^2 - 1/15 (xy)(x+y)
    BiPoly p;
    p.add_term(2, 2, BigRat(7, 15));
    p.add_term(2, 1, BigRat(-1, 15));
    p.add_term(1, 2, BigRat(-1, 15));
    auto ts = to_elementary_symmetric(p);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].prod_pow == 2);
    CHECK(ts[0].sum_pow == 0);
    CHECK(ts[0].coeff == BigRat(7, 15));
    CHECK(ts[1].prod_pow == 1);
    CHECK(ts[1].sum_pow == 1);
    CHECK(ts[1].coeff == BigRat(-1, 15));
    CHECK(from_elementary_symmetric(ts) == p);

    std::mt19937 rng(3131);
    for (int round = 0; round < 15; ++round) {
        BiPoly h = random_poly(rng);
        BiPoly s = h + h.swap_vars(); // symmetrize
        CHECK(from_elementary_symmetric(to_elementary_symmetric(s)) == s);
    }
    CHECK_THROWS_AS(to_elementary_symmetric(BiPoly::var1()), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(format_monomial_basis(BiPoly()) == "0");
    BiPoly p;
    p.add_term(1, 1, BigRat(1, 3));
    CHECK(format_monomial_basis(p) == "n1*n2/3");
    std::vector<SymmetricTerm> ts{{2, 0, BigRat(7, 15)}, {1, 1, BigRat(-1, 15)}};
    CHECK(format_elementary_basis(ts) == "7*(n1*n2)^2/15 - (n1*n2)*(n1+n2)/15");
    CHECK(format_elementary_basis({}, "q", "s") == "0");
}
