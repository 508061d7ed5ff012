#include "latwalk/identities.hpp"

#include "latwalk/composition.hpp"

#include <sstream>
#include <stdexcept>

namespace latwalk {

namespace {

BigRat reciprocal_factorial(int n) {
    if (n < 0) return 0;
    return BigRat(BigInt(1), factorial(n));
}

void check_slot_count(int k, const char* who) {
    if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
    if (k > 12) throw std::length_error(std::string(who) + ": k capped at 12");
}

void check_pair_budget(int k, int n1, const char* who) {
    if (n1 < 0) throw std::invalid_argument(std::string(who) + ": n1 must be >= 0");
    if (binomial(n1 + k, k) > 2000)
        throw std::length_error(std::string(who) + ": composition pair sweep too large");
}

} // namespace

nlohmann::json IdentityReport::to_json() const {
    return {{"name", name},
            {"params", params},
            {"lhs", to_fraction_string(lhs)},
            {"rhs", to_fraction_string(rhs)},
            {"pass", pass}};
}

IdentityReport check_factorial_convolution(const std::vector<int>& a, int total_b) {
    const int k = static_cast<int>(a.size()) - 1;
    check_slot_count(k, "check_factorial_convolution");
    if (total_b < 0)
        throw std::invalid_argument("check_factorial_convolution: negative total");
    BigInt asum = 0;
    for (int v : a) {
        if (v < 0) throw std::invalid_argument("check_factorial_convolution: negative weight");
        asum += v;
    }
    BigRat lhs = 0;
    for_each_composition(total_b, k + 1, [&](const std::vector<int>& b) {
        BigRat term = 1;
        for (int i = 0; i <= k; ++i)
            term *= BigRat(factorial(a[i] + b[i]), factorial(b[i]));
        lhs += term;
    });
    BigRat rhs = 1;
    for (int v : a) rhs *= BigRat(factorial(v));
    int total_a = asum.convert_to<int>();
    rhs *= BigRat(factorial(total_a + total_b + k),
                  factorial(total_b) * factorial(total_a + k));
    std::ostringstream ps;
    ps << "k=" << k << " a=(";
    for (int i = 0; i <= k; ++i) ps << (i ? "," : "") << a[i];
    ps << ") B=" << total_b;
    return {"factorial_convolution", ps.str(), lhs, rhs, lhs == rhs};
}

IdentityReport check_binomial_double_sum(int k, int n1) {
    check_slot_count(k, "check_binomial_double_sum");
    check_pair_budget(k, n1, "check_binomial_double_sum");
    BigInt acc = 0;
    for_each_composition(n1, k + 1, [&](const std::vector<int>& alpha) {
        for_each_composition(n1, k + 1, [&](const std::vector<int>& beta) {
            BigInt term = 1;
            for (int i = 0; i <= k; ++i) term *= binomial(alpha[i] + beta[i], alpha[i]);
            acc += term;
        });
    });
    BigRat lhs(acc);
    BigRat rhs(factorial(2 * n1 + k), factorial(k) * factorial(n1) * factorial(n1));
    std::ostringstream ps;
    ps << "k=" << k << " n1=" << n1;
    return {"binomial_double_sum", ps.str(), lhs, rhs, lhs == rhs};
}

IdentityReport check_signed_eps_vanishing(int k, int n2) {
    if (k < 1) throw std::invalid_argument("check_signed_eps_vanishing: k must be >= 1");
    check_slot_count(k, "check_signed_eps_vanishing");
    if (n2 < 1) throw std::invalid_argument("check_signed_eps_vanishing: n2 must be >= 1");
    BigRat inner = 0;
    for_each_sign_sequence(k, [&](const SignSequence& s) {
        int np = s.plus_count(), nm = s.minus_count();
        BigRat tails = reciprocal_factorial(n2 - np) * reciprocal_factorial(n2 - nm);
        if (tails == 0) return; // truncated term, head factorial may not exist
        BigRat term = BigRat(factorial(2 * n2 - np - nm)) * tails;
        inner += s.zero_count() % 2 ? -term : term;
    });
    BigRat weight = BigRat(factorial(n2) * factorial(n2), factorial(k)) *
                    reciprocal_factorial(2 * n2 - k);
    BigRat lhs = weight * inner;
    std::ostringstream ps;
    ps << "k=" << k << " n2=" << n2;
    return {"signed_eps_vanishing", ps.str(), lhs, BigRat(0), lhs == 0};
}

std::vector<SignedEpsGroup> signed_eps_groups(int k, int n2) {
    if (k < 1) throw std::invalid_argument("signed_eps_groups: k must be >= 1");
    check_slot_count(k, "signed_eps_groups");
    if (n2 < 1) throw std::invalid_argument("signed_eps_groups: n2 must be >= 1");
    std::vector<SignedEpsGroup> groups;
    for (int n0 = 0; n0 <= k; ++n0) {
        BigRat raw = 0;
        for_each_sign_sequence(k, [&](const SignSequence& s) {
            if (s.zero_count() != n0) return;
            int np = s.plus_count(), nm = s.minus_count();
            BigRat tails = reciprocal_factorial(n2 - np) * reciprocal_factorial(n2 - nm);
            if (tails == 0) return;
            raw += BigRat(factorial(2 * n2 - np - nm)) * tails;
        });
        if (n0 % 2) raw = -raw;
        BigRat closed(binomial(k, n0) * binomial(2 * n2, n2));
        if (n0 % 2) closed = -closed;
        groups.push_back({n0, raw, closed, 2 * n2 - k + n0 >= 0});
    }
    return groups;
}

namespace {

BigRat diff_weighted_sum(int k, int n1, int i, int j) {
    BigInt acc = 0;
    for_each_composition(n1, k + 1, [&](const std::vector<int>& alpha) {
        for_each_composition(n1, k + 1, [&](const std::vector<int>& beta) {
            BigInt term = 1;
            for (int s = 0; s <= k; ++s) term *= binomial(alpha[s] + beta[s], alpha[s]);
            term *= alpha[i] - beta[i];
            term *= alpha[j] - beta[j];
            acc += term;
        });
    });
    return BigRat(acc);
}

} // namespace

IdentityReport check_diff_square_sum(int k, int n1, int index) {
    if (k < 1) throw std::invalid_argument("check_diff_square_sum: k must be >= 1");
    check_slot_count(k, "check_diff_square_sum");
    check_pair_budget(k, n1, "check_diff_square_sum");
    if (index < 0) index = k;
    if (index > k) throw std::invalid_argument("check_diff_square_sum: slot out of range");
    BigRat lhs = diff_weighted_sum(k, n1, index, index);
    BigRat rhs = BigRat(BigInt(2) * k * n1, factorial(k + 2)) *
                 BigRat(factorial(2 * n1 + k), factorial(n1) * factorial(n1));
    std::ostringstream ps;
    ps << "k=" << k << " n1=" << n1 << " i=" << index;
    return {"diff_square_sum", ps.str(), lhs, rhs, lhs == rhs};
}

IdentityReport check_diff_cross_sum(int k, int n1, int i, int j) {
    if (k < 1) throw std::invalid_argument("check_diff_cross_sum: k must be >= 1");
    check_slot_count(k, "check_diff_cross_sum");
    check_pair_budget(k, n1, "check_diff_cross_sum");
    if (i < 0) i = k - 1;
    if (j < 0) j = k;
    if (i > k || j > k || i < 0 || i == j)
        throw std::invalid_argument("check_diff_cross_sum: need two distinct slots in 0..k");
    BigRat lhs = diff_weighted_sum(k, n1, i, j);
    BigRat rhs = BigRat(BigInt(-2) * n1, factorial(k + 2)) *
                 BigRat(factorial(2 * n1 + k), factorial(n1) * factorial(n1));
    std::ostringstream ps;
    ps << "k=" << k << " n1=" << n1 << " i=" << i << " j=" << j;
    return {"diff_cross_sum", ps.str(), lhs, rhs, lhs == rhs};
}

std::vector<IdentityReport> run_identity_sweep(int max_k, int max_n) {
    if (max_k < 2 || max_n < 1)
        throw std::invalid_argument("run_identity_sweep: need max_k >= 2 and max_n >= 1");
    std::vector<IdentityReport> out;
    for (int k = 0; k <= max_k; ++k) {
        for (int pattern = 0; pattern < 3; ++pattern) {
            std::vector<int> a(k + 1);
            for (int i = 0; i <= k; ++i)
                a[i] = pattern == 0 ? 0 : pattern == 1 ? 1 : i % 3;
            for (int b = 0; b <= max_n; ++b)
                out.push_back(check_factorial_convolution(a, b));
        }
        for (int n1 = 0; n1 <= max_n; ++n1)
            out.push_back(check_binomial_double_sum(k, n1));
    }
    for (int k = 1; k <= max_k; ++k)
        for (int n2 = 1; n2 <= max_n; ++n2)
            out.push_back(check_signed_eps_vanishing(k, n2));
    for (int k = 1; k <= max_k; ++k)
        for (int n1 = 0; n1 <= max_n; ++n1)
            out.push_back(check_diff_square_sum(k, n1));
    for (int k = 2; k <= max_k; ++k)
        for (int n1 = 0; n1 <= max_n; ++n1)
            out.push_back(check_diff_cross_sum(k, n1));
    return out;
}

} // namespace latwalk
