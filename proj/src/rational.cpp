#include "latwalk/rational.hpp"

#include <stdexcept>

namespace latwalk {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt falling_factorial(int n, int depth) {
    if (depth < 0) throw std::invalid_argument("falling_factorial: negative depth");
    BigInt r = 1;
    for (int j = 0; j < depth; ++j) r *= n - j;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0; // covers every negative n as well
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is a binomial coefficient
    }
    return r;
}

BigInt multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
    }
    BigInt r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

std::string to_fraction_string(const BigRat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return BigRat(num, den);
}

} // namespace latwalk
