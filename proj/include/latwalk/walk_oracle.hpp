#pragma once

#include "latwalk/rational.hpp"

#include <json.hpp>

#include <complex>
#include <map>

namespace latwalk {

// Step budget of one closed-walk family: n1 unit hops in each horizontal
// direction and n2 double hops in each vertical direction, walk length
// 2*(n1+n2).
struct StepCounts {
    int n1 = 0;
    int n2 = 0;
    bool operator==(const StepCounts&) const = default;
};

// (2(n1+n2))! / (n1!^2 n2!^2): number of closed walks with that budget
BigInt loop_count(const StepCounts& sc);

// Exact histogram of the algebraic area over the family. A vertical +2 hop
// taken at column x adds x to the area, a -2 hop subtracts it; closed walks
// keep the area within [-n1*n2, n1*n2] and the histogram is even in area.
class AreaDistribution {
public:
    AreaDistribution(StepCounts sc, std::map<int, BigInt> hist);

    const StepCounts& step_counts() const { return sc_; }
    const std::map<int, BigInt>& histogram() const { return hist_; }
    BigInt total() const;

    // {"n1":..., "n2":..., "histogram":[[area,"count"],...]} sorted by area
    nlohmann::json to_json() const;
    static AreaDistribution from_json(const nlohmann::json& j);

private:
    StepCounts sc_;
    std::map<int, BigInt> hist_; // zero counts never stored
};

inline constexpr long long kDefaultAreaBudget = 25; // cap on n1*n2 for the DP

// Enumerates every ordering of the step multiset; length capped at 12 steps.
AreaDistribution area_histogram_bruteforce(const StepCounts& sc);

// Layered dynamic program over (used step counts, partial area); rejects
// inputs with n1*n2 above the budget.
AreaDistribution area_histogram_dp(const StepCounts& sc,
                                   long long area_budget = kDefaultAreaBudget);

BigInt moment(const AreaDistribution& d, int order);
std::complex<double> characteristic_function(const AreaDistribution& d, double phi);

} // namespace latwalk
