#pragma once

#include "latwalk/bipoly.hpp"
#include "latwalk/composition.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latwalk {

// Kernel polynomials of the skew derivative D = x d/dx - y d/dy acting on
// 1/(1-x-y): D^n [1/(1-x-y)] = A_n(x,y)/(1-x-y)^(n+1), A_0 = 1. Recursion:
// A_{n+1} = (n+1)(x-y) A_n + (1-x-y) D A_n. deg A_n = n and
// A_n(y,x) = (-1)^n A_n(x,y).
BiPoly skew_kernel(int n);

// prod_i A_{parts[i]}; zero parts contribute A_0 = 1. Total degree is at
// most the sum of the parts.
BiPoly skew_kernel_product(const std::vector<int>& parts);

// Weight carried by the unit-hop budget for one composition: a polynomial
// in the first variable, from the diagonal coefficient of
// prod_i A_{l_i} / (1-x-y)^(1+k+2l). Permutation invariant in the parts.
BiPoly axis1_factor(const Composition& c);

// Brute-force double-composition sum behind axis1_factor:
//   sum over alpha, beta compositions of n1 into k+1 slots of
//   prod_i binom(alpha_i+beta_i, alpha_i) * prod_{i>=1} (alpha_i-beta_i)^{l_i}
// Equals axis1_factor(c)(n1) * (2 n1 + k)! / n1!^2. Keep n1 small.
BigRat coupling_sum(const Composition& c, int n1);

// Weight carried by the double-hop budget: reference 3^k sign-sequence sum,
// a polynomial in the second variable.
BiPoly axis2_factor_direct(const Composition& c);

// Sign-sequence sum against a fixed monomial prod_i eps_i^{lambda_i}:
// zero when some lambda_i = 0 or the number of odd lambda_i is odd;
// otherwise (-1)^p (2p)!/p! * ff(n2, p) * prod_{j=1..e} (2 n2 - k + j)
// with 2p odd exponents and e even exponents.
BiPoly eps_power_sum(const std::vector<int>& lambdas, int k);

// Production path for the same weight: expands prod_i sigma_i^{l_i} over
// the monomials covering every sign variable and resolves each against
// eps_power_sum. Agrees with axis2_factor_direct identically.
BiPoly axis2_factor(const Composition& c);

struct MomentPolynomial {
    int order = 0; // even moment order
    BiPoly poly;   // in (n1, n2)
};

// throws std::logic_error when an invariant fails: symmetry, total degree
// (= order for order >= 2), per-variable degree <= order/2, divisibility by
// n1*n2, value 1/3 at (1,1), value 1 at order 0
void check_moment_invariants(const MomentPolynomial& mp);

// Exact moment polynomial of the area distribution, normalized by the loop
// count. Sums k = 1..order over suffix-dominant slot weightings, grouped by
// permutation class: axis1_factor once per class, axis2_factor summed over
// the members.
MomentPolynomial moment_polynomial(int two_l);

// Aggregate cardinal-weighted moments over all splits n1 + n2 = n, and the
// matching closed forms; order restricted to {2, 4}.
BigRat fixed_length_moment_sum(int two_l, int n);
BigRat fixed_length_moment_closed_form(int two_l, int n);

class MomentCache {
public:
    // computes and stores on miss
    const BiPoly& get(int two_l);
    std::optional<BiPoly> lookup(int two_l) const;
    void put(int two_l, const BiPoly& p); // validates invariants
    std::size_t size() const { return entries_.size(); }

    // {"format_version": 1, "moments": {"2": {...}, ...}}
    nlohmann::json to_json() const;
    static MomentCache from_json(const nlohmann::json& j); // re-validates
    void save(const std::string& path) const;
    static MomentCache load(const std::string& path);

    bool operator==(const MomentCache&) const = default;

private:
    std::map<int, BiPoly> entries_;
};

} // namespace latwalk
