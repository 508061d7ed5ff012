#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace latwalk {

// Exact arithmetic used by everything in this library. cpp_rational keeps
// values in lowest terms with a positive denominator, so == is canonical.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// n (n-1) ... (n-depth+1); depth = 0 gives 1
BigInt falling_factorial(int n, int depth);

// zero outside 0 <= k <= n
BigInt binomial(int n, int k);

// (sum parts)! / prod parts[i]!
BigInt multinomial(const std::vector<int>& parts);

// canonical "num/den" form, e.g. "-7/15", "4/1"
std::string to_fraction_string(const BigRat& q);

// accepts "num/den" or a plain integer string
BigRat rat_from_string(const std::string& s);

} // namespace latwalk
