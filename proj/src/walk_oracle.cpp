#include "latwalk/walk_oracle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace latwalk {

namespace {

void require_counts(const StepCounts& sc) {
    if (sc.n1 < 0 || sc.n2 < 0)
        throw std::invalid_argument("step counts must be nonnegative");
}

} // namespace

BigInt loop_count(const StepCounts& sc) {
    require_counts(sc);
    BigInt f1 = factorial(sc.n1), f2 = factorial(sc.n2);
    return factorial(2 * (sc.n1 + sc.n2)) / (f1 * f1 * f2 * f2);
}

AreaDistribution::AreaDistribution(StepCounts sc, std::map<int, BigInt> hist)
    : sc_(sc), hist_(std::move(hist)) {
    require_counts(sc_);
    for (auto it = hist_.begin(); it != hist_.end();) {
        if (it->second == 0) {
            it = hist_.erase(it);
        } else if (it->second < 0) {
            throw std::invalid_argument("AreaDistribution: negative count");
        } else {
            ++it;
        }
    }
}

BigInt AreaDistribution::total() const {
    BigInt t = 0;
    for (const auto& [a, c] : hist_) t += c;
    return t;
}

nlohmann::json AreaDistribution::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, c] : hist_) arr.push_back({a, c.str()});
    return nlohmann::json{{"n1", sc_.n1}, {"n2", sc_.n2}, {"histogram", arr}};
}

AreaDistribution AreaDistribution::from_json(const nlohmann::json& j) {
    StepCounts sc{j.at("n1").get<int>(), j.at("n2").get<int>()};
    std::map<int, BigInt> hist;
    for (const auto& e : j.at("histogram")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("AreaDistribution::from_json: malformed entry");
        hist[e[0].get<int>()] = BigInt(e[1].get<std::string>());
    }
    return AreaDistribution(sc, std::move(hist));
}

namespace {

void brute_rec(int rem_p1, int rem_m1, int rem_p2, int rem_m2, int x, int area,
               std::map<int, BigInt>& hist) {
    if (rem_p1 == 0 && rem_m1 == 0 && rem_p2 == 0 && rem_m2 == 0) {
        hist[area] += 1; // x == 0 here: both horizontal budgets are spent
        return;
    }
    if (rem_p1 > 0) brute_rec(rem_p1 - 1, rem_m1, rem_p2, rem_m2, x + 1, area, hist);
    if (rem_m1 > 0) brute_rec(rem_p1, rem_m1 - 1, rem_p2, rem_m2, x - 1, area, hist);
    if (rem_p2 > 0) brute_rec(rem_p1, rem_m1, rem_p2 - 1, rem_m2, x, area + x, hist);
    if (rem_m2 > 0) brute_rec(rem_p1, rem_m1, rem_p2, rem_m2 - 1, x, area - x, hist);
}

} // namespace

AreaDistribution area_histogram_bruteforce(const StepCounts& sc) {
    require_counts(sc);
    int len = 2 * (sc.n1 + sc.n2);
    if (len > 12)
        throw std::length_error("area_histogram_bruteforce: walk length " +
                                std::to_string(len) + " exceeds the cap of 12 steps");
    std::map<int, BigInt> hist;
    brute_rec(sc.n1, sc.n1, sc.n2, sc.n2, 0, 0, hist);
    return AreaDistribution(sc, std::move(hist));
}

AreaDistribution area_histogram_dp(const StepCounts& sc, long long area_budget) {
    require_counts(sc);
    long long span = 1LL * sc.n1 * sc.n2;
    if (span > area_budget)
        throw std::length_error("area_histogram_dp: state budget exceeded, n1*n2 = " +
                                std::to_string(span) + " > " + std::to_string(area_budget));

    const int n1 = sc.n1, n2 = sc.n2;
    const int d1 = n1 + 1, d2 = n2 + 1;
    const int aspan = static_cast<int>(span);
    const int awidth = 2 * aspan + 1; // prefix areas stay within [-n1*n2, n1*n2]
    auto idx = [&](int p1, int m1, int p2, int m2, int a) {
        return ((((p1 * d1) + m1) * d2 + p2) * d2 + m2) * awidth + (a + aspan);
    };

    std::vector<BigInt> cur(static_cast<size_t>(d1) * d1 * d2 * d2 * awidth);
    std::vector<BigInt> next(cur.size());
    cur[idx(0, 0, 0, 0, 0)] = 1;

    const int steps = 2 * (n1 + n2);
    for (int s = 0; s < steps; ++s) {
        for (auto& v : next) v = 0;
        for (int p1 = 0; p1 <= n1; ++p1)
            for (int m1 = 0; m1 <= n1; ++m1)
                for (int p2 = 0; p2 <= n2; ++p2)
                    for (int m2 = 0; m2 <= n2; ++m2) {
                        if (p1 + m1 + p2 + m2 != s) continue;
                        int x = p1 - m1;
                        for (int a = -aspan; a <= aspan; ++a) {
                            const BigInt& c = cur[idx(p1, m1, p2, m2, a)];
                            if (c == 0) continue;
                            if (p1 < n1) next[idx(p1 + 1, m1, p2, m2, a)] += c;
                            if (m1 < n1) next[idx(p1, m1 + 1, p2, m2, a)] += c;
                            // prefix areas provably stay within [-n1*n2, n1*n2]
                            if (p2 < n2) {
                                if (std::abs(a + x) > aspan)
                                    throw std::logic_error("area bound violated in DP");
                                next[idx(p1, m1, p2 + 1, m2, a + x)] += c;
                            }
                            if (m2 < n2) {
                                if (std::abs(a - x) > aspan)
                                    throw std::logic_error("area bound violated in DP");
                                next[idx(p1, m1, p2, m2 + 1, a - x)] += c;
                            }
                        }
                    }
        cur.swap(next);
    }

    std::map<int, BigInt> hist;
    for (int a = -aspan; a <= aspan; ++a) {
        const BigInt& c = cur[idx(n1, n1, n2, n2, a)];
        if (c != 0) hist[a] = c;
    }
    return AreaDistribution(sc, std::move(hist));
}

BigInt moment(const AreaDistribution& d, int order) {
    if (order < 0) throw std::invalid_argument("moment: negative order");
    BigInt acc = 0;
    for (const auto& [a, c] : d.histogram()) {
        BigInt t = c;
        for (int i = 0; i < order; ++i) t *= a;
        acc += t;
    }
    return acc;
}

std::complex<double> characteristic_function(const AreaDistribution& d, double phi) {
    std::complex<double> acc = 0;
    for (const auto& [a, c] : d.histogram())
        acc += c.convert_to<double>() * std::exp(std::complex<double>(0.0, phi * a));
    return acc;
}

} // namespace latwalk
