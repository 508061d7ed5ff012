#pragma once

#include "latwalk/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace latwalk {

// Sparse polynomial in two variables with exact rational coefficients.
// Zero coefficients are never stored, so the zero polynomial has an empty
// term map and equality is structural.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (exponent of var1, exponent of var2)
    using TermMap = std::map<Key, BigRat>;

    BiPoly() = default;

    static BiPoly constant(const BigRat& c);
    static BiPoly monomial(int e1, int e2, const BigRat& c);
    static BiPoly var1();
    static BiPoly var2();

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_var1() const;
    int degree_var2() const;

    const TermMap& terms() const { return terms_; }
    BigRat coeff(int e1, int e2) const;
    void add_term(int e1, int e2, const BigRat& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    BiPoly operator-() const;

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const BigRat& c);
    friend BiPoly operator*(BiPoly a, const BigRat& c) { a *= c; return a; }
    friend BiPoly operator*(const BigRat& c, BiPoly a) { a *= c; return a; }

    bool operator==(const BiPoly&) const = default;

    BigRat eval(const BigRat& x, const BigRat& y) const;
    BiPoly swap_vars() const;
    bool is_symmetric() const;

    // {"terms": [[e1, e2, "num/den"], ...]} sorted by (e1, e2)
    nlohmann::json to_json() const;
    static BiPoly from_json(const nlohmann::json& j);

private:
    TermMap terms_;
};

// x d/dx - y d/dy: scales each term by (e1 - e2)
BiPoly euler_diff(const BiPoly& p);

// v (v-1) ... (v-depth+1) in the chosen variable (1 or 2)
BiPoly falling_factorial_poly(int var_index, int depth);

// prod_{j=1..count} (base + j)
BiPoly rising_factorial_poly(const BiPoly& base, int count);

// One term of a symmetric polynomial rewritten on the basis
// (var1*var2)^prod_pow * (var1+var2)^sum_pow.
struct SymmetricTerm {
    int prod_pow = 0;
    int sum_pow = 0;
    BigRat coeff;
};

// Display-only change of basis; throws std::invalid_argument when p is not
// symmetric under var1 <-> var2.
std::vector<SymmetricTerm> to_elementary_symmetric(const BiPoly& p);
BiPoly from_elementary_symmetric(const std::vector<SymmetricTerm>& ts);

std::string format_monomial_basis(const BiPoly& p,
                                  const std::string& v1 = "n1",
                                  const std::string& v2 = "n2");
std::string format_elementary_basis(const std::vector<SymmetricTerm>& ts,
                                    const std::string& v1 = "n1",
                                    const std::string& v2 = "n2");

} // namespace latwalk
