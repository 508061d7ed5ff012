#pragma once

#include "latwalk/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace latwalk {

// One checked instance of a combinatorial identity. lhs is the expanded sum,
// rhs the closed form; pass is lhs == rhs.
struct IdentityReport {
    std::string name;
    std::string params;
    BigRat lhs;
    BigRat rhs;
    bool pass = false;

    nlohmann::json to_json() const;
};

// Sum over compositions b of total_b into k+1 slots of
// prod_i (a_i + b_i)!/b_i!, against prod_i a_i! * (A+B+k)! / (B! (A+k)!)
// where A = sum a_i, B = total_b. The weight vector a must have k+1 entries,
// all nonnegative.
IdentityReport check_factorial_convolution(const std::vector<int>& a, int total_b);

// Double sum over compositions alpha, beta of n1 into k+1 slots of
// prod_i binom(alpha_i + beta_i, alpha_i), against (2 n1 + k)! / (k! n1!^2).
IdentityReport check_binomial_double_sum(int k, int n1);

// Signed sum over eps in {-1,0,+1}^k of
// (-1)^{#zeros} (2 n2 - n_+ - n_-)! / ((n2 - n_+)! (n2 - n_-)!),
// multiplied by the weight n2!^2 / (k! (2 n2 - k)!). A reciprocal factorial
// of a negative integer counts as zero, which silently drops terms with
// n_+ > n2 or n_- > n2 and kills the weight once k > 2 n2. The product
// vanishes for every k >= 1, n2 >= 1; the bare sum alone does not once
// k > 2 n2.
IdentityReport check_signed_eps_vanishing(int k, int n2);

// The same signed sum split by the number of zeros in eps. raw is the
// truncated sum over that group; closed is (-1)^{n0} binom(k, n0)
// binom(2 n2, n2), which the Chu-Vandermonde convolution gives whenever no
// term was truncated away (vandermonde_exact, i.e. 2 n2 - k + n0 >= 0).
struct SignedEpsGroup {
    int n0;
    BigRat raw;
    BigRat closed;
    bool vandermonde_exact;
};
std::vector<SignedEpsGroup> signed_eps_groups(int k, int n2);

// Double composition sum weighted by (alpha_i - beta_i)^2 for one slot i,
// against 2 k n1 / (k+2)! * (2 n1 + k)! / n1!^2. Slots are exchangeable, so
// any i in 0..k gives the same value; index < 0 selects slot k.
IdentityReport check_diff_square_sum(int k, int n1, int index = -1);

// Double composition sum weighted by (alpha_i - beta_i)(alpha_j - beta_j)
// for two distinct slots, against -2 n1 / (k+2)! * (2 n1 + k)! / n1!^2.
// Negative i, j select slots k-1 and k. Requires k >= 1 and i != j.
IdentityReport check_diff_cross_sum(int k, int n1, int i = -1, int j = -1);

// Every identity above over a parameter grid: factorial convolutions for
// k = 0..max_k with three weight patterns and totals 0..max_n, the double
// sums for k up to max_k and n up to max_n, the signed eps sweep for
// k, n2 >= 1. Defaults cover 261 instances.
std::vector<IdentityReport> run_identity_sweep(int max_k = 5, int max_n = 6);

} // namespace latwalk
