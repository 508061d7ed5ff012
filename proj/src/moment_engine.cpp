#include "latwalk/moment_engine.hpp"

#include "latwalk/walk_oracle.hpp"

#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace latwalk {

BiPoly skew_kernel(int n) {
    if (n < 0) throw std::invalid_argument("skew_kernel: negative order");
    static std::mutex mu;
    static std::vector<BiPoly> table{BiPoly::constant(1)};
    std::scoped_lock lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        int next = static_cast<int>(table.size());
        const BiPoly& prev = table.back();
        BiPoly x_minus_y = BiPoly::var1() - BiPoly::var2();
        BiPoly one_minus_xy = BiPoly::constant(1) - BiPoly::var1() - BiPoly::var2();
        table.push_back(BiPoly::constant(next) * x_minus_y * prev +
                        one_minus_xy * euler_diff(prev));
    }
    return table[n];
}

BiPoly skew_kernel_product(const std::vector<int>& parts) {
    std::vector<int> key;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("skew_kernel_product: negative part");
        if (p > 0) key.push_back(p);
    }
    std::sort(key.begin(), key.end());
    static std::mutex mu;
    static std::map<std::vector<int>, BiPoly> memo;
    std::scoped_lock lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BiPoly prod = BiPoly::constant(1);
    for (int p : key) prod *= skew_kernel(p);
    memo.emplace(key, prod);
    return prod;
}

BiPoly axis1_factor(const Composition& c) {
    const int k = c.slots();
    const int two_l = c.total();
    BiPoly prod = skew_kernel_product(c.parts);
    BiPoly acc;
    BiPoly base = BiPoly::monomial(1, 0, 2) + BiPoly::constant(k); // 2 n1 + k
    for (const auto& [key, a_mn] : prod.terms()) {
        int m = key.first, n = key.second;
        if (m + n > two_l)
            throw std::logic_error("axis1_factor: kernel product degree exceeds slot total");
        BiPoly term = falling_factorial_poly(1, m) * falling_factorial_poly(1, n) *
                      rising_factorial_poly(base, two_l - m - n);
        acc += BiPoly::constant(a_mn) * term;
    }
    acc *= BigRat(BigInt(1), factorial(k + two_l));
    // everything beyond degree total/2 cancels in the extraction
    if (2 * acc.degree_var1() > two_l)
        throw std::logic_error("axis1_factor: degree failed to cancel down to total/2");
    return acc;
}

BigRat coupling_sum(const Composition& c, int n1) {
    if (n1 < 0) throw std::invalid_argument("coupling_sum: negative n1");
    const int k = c.slots();
    if (binomial(n1 + k, k) > 2000)
        throw std::length_error(
            "coupling_sum: direct sum too large, binomial(n1+k, k) exceeds 2000");
    BigInt acc = 0;
    for_each_composition(n1, k + 1, [&](const std::vector<int>& alpha) {
        for_each_composition(n1, k + 1, [&](const std::vector<int>& beta) {
            BigInt term = 1;
            for (int i = 0; i <= k; ++i) term *= binomial(alpha[i] + beta[i], alpha[i]);
            for (int i = 1; i <= k; ++i) {
                BigInt d = alpha[i] - beta[i];
                for (int rep = 0; rep < c.parts[i - 1]; ++rep) term *= d;
            }
            acc += term;
        });
    });
    return BigRat(acc);
}

namespace {

// sum over eps in {-1,+1,0}^k against a monomial with ke even exponents and
// 2p odd exponents, every exponent >= 1
BiPoly sign_sum_value(int k, int ke, int p) {
    BigRat lead = BigRat(factorial(2 * p), factorial(p));
    if (p % 2) lead = -lead;
    BiPoly acc = BiPoly::constant(lead) * falling_factorial_poly(2, p);
    BiPoly base = BiPoly::monomial(0, 1, 2) - BiPoly::constant(k); // 2 n2 - k
    return acc * rising_factorial_poly(base, ke);
}

} // namespace

BiPoly axis2_factor_direct(const Composition& c) {
    const int k = c.slots();
    if (k > 13)
        throw std::length_error("axis2_factor_direct: 3^k sweep capped at k = 13");
    std::map<std::pair<int, int>, BigInt> weight; // (plus, minus) -> signed sum
    for_each_sign_sequence(k, [&](const SignSequence& s) {
        BigInt prod = 1;
        int sigma = 0;
        for (int i = 0; i < k; ++i) {
            sigma += s.eps[i];
            for (int rep = 0; rep < c.parts[i]; ++rep) prod *= sigma;
        }
        if (prod == 0) return;
        if (s.zero_count() % 2) prod = -prod;
        weight[{s.plus_count(), s.minus_count()}] += prod;
    });
    BiPoly acc;
    BiPoly base = BiPoly::monomial(0, 1, 2) - BiPoly::constant(k); // 2 n2 - k
    for (const auto& [key, w] : weight) {
        if (w == 0) continue;
        auto [np, nm] = key;
        BiPoly term = falling_factorial_poly(2, np) * falling_factorial_poly(2, nm) *
                      rising_factorial_poly(base, k - np - nm);
        acc += BiPoly::constant(BigRat(w)) * term;
    }
    return acc;
}

BiPoly eps_power_sum(const std::vector<int>& lambdas, int k) {
    if (static_cast<int>(lambdas.size()) != k)
        throw std::invalid_argument("eps_power_sum: exponent list must have length k");
    int ke = 0, ko = 0;
    for (int v : lambdas) {
        if (v < 0) throw std::invalid_argument("eps_power_sum: negative exponent");
        if (v == 0) return {}; // free sign variable, the three values cancel
        ++(v % 2 ? ko : ke);
    }
    if (ko % 2) return {}; // global sign flip
    return sign_sum_value(k, ke, ko / 2);
}

BiPoly axis2_factor(const Composition& c) {
    const int k = c.slots();
    const std::vector<int>& l = c.parts;
    if (!is_suffix_dominant(l)) return {};

    // Expand prod_i sigma_i^{l_i} over exponent vectors that can still end
    // covering every variable. Slots are processed last to first; once slot
    // s is done, positions >= s are final. Coefficients are bounded by
    // prod_i (i+1)^{l_i} <= 12^12, comfortably inside int64.
    std::map<std::vector<int>, long long> terms{{std::vector<int>(k, 0), 1}};
    for (int s = k - 1; s >= 0; --s) {
        const int li = l[s];
        const long long li_fact = factorial(li).convert_to<long long>();
        // cap[t]: total weight of the remaining slots t..s-1
        std::vector<int> cap(std::max(s, 1), 0);
        for (int t = s - 1; t >= 0; --t) cap[t] = (t + 1 < s ? cap[t + 1] : 0) + l[t];

        std::map<std::vector<int>, long long> next;
        std::vector<int> vec;
        long long coef = 0;
        // assign m to position pos (descending); zright = zeros among
        // final-after-this-slot positions (pos, s-1]; mf = prod of m!
        std::function<void(int, int, int, long long)> rec =
            [&](int pos, int budget, int zright, long long mf) {
                if (pos == 0) {
                    vec[0] += budget;
                    bool ok = true;
                    if (s == 0 && vec[0] == 0) ok = false; // own position must be covered
                    if (s > 0 && zright + (vec[0] == 0 ? 1 : 0) > cap[0]) ok = false;
                    if (ok) {
                        long long mul = li_fact / (mf * factorial(budget).convert_to<long long>());
                        next[vec] += coef * mul;
                    }
                    vec[0] -= budget;
                    return;
                }
                for (int m = 0; m <= budget; ++m) {
                    vec[pos] += m;
                    bool ok = true;
                    int z = zright;
                    if (pos == s) {
                        if (vec[pos] == 0) ok = false; // position s is final now
                    } else {
                        z += vec[pos] == 0 ? 1 : 0;
                        if (z > cap[pos]) ok = false; // Hall bound on suffix [pos, s-1]
                    }
                    if (ok)
                        rec(pos - 1, budget - m, z,
                            mf * factorial(m).convert_to<long long>());
                    vec[pos] -= m;
                }
            };
        for (const auto& [v, cf] : terms) {
            vec = v;
            coef = cf;
            rec(s, li, 0, 1);
        }
        terms.swap(next);
    }

    // every surviving vector covers all variables; group by parity signature
    std::map<int, BigInt> by_even_count;
    for (const auto& [vec, cf] : terms) {
        int ke = 0;
        for (int v : vec) {
            if (v < 1) throw std::logic_error("axis2_factor: uncovered variable survived");
            if (v % 2 == 0) ++ke;
        }
        if ((k - ke) % 2) throw std::logic_error("axis2_factor: odd count of odd exponents");
        by_even_count[ke] += cf;
    }
    BiPoly acc;
    for (const auto& [ke, w] : by_even_count) {
        if (w == 0) continue;
        acc += BiPoly::constant(BigRat(w)) * sign_sum_value(k, ke, (k - ke) / 2);
    }
    return acc;
}

void check_moment_invariants(const MomentPolynomial& mp) {
    if (mp.order < 0 || mp.order % 2)
        throw std::logic_error("moment polynomial: order must be even and nonnegative");
    if (mp.order == 0) {
        if (!(mp.poly == BiPoly::constant(1)))
            throw std::logic_error("moment polynomial: order 0 must be the constant 1");
        return;
    }
    if (!mp.poly.is_symmetric())
        throw std::logic_error("moment polynomial: not symmetric");
    if (mp.poly.total_degree() != mp.order)
        throw std::logic_error("moment polynomial: total degree != order");
    if (mp.poly.degree_var1() > mp.order / 2 || mp.poly.degree_var2() > mp.order / 2)
        throw std::logic_error("moment polynomial: per-variable degree exceeds order/2");
    for (const auto& [key, c] : mp.poly.terms())
        if (key.first < 1 || key.second < 1)
            throw std::logic_error("moment polynomial: not divisible by n1*n2");
    if (mp.poly.eval(1, 1) != BigRat(1, 3))
        throw std::logic_error("moment polynomial: value at (1,1) is not 1/3");
}

MomentPolynomial moment_polynomial(int two_l) {
    if (two_l < 0 || two_l % 2)
        throw std::invalid_argument("moment_polynomial: order must be even and nonnegative");
    if (two_l == 0) {
        MomentPolynomial mp{0, BiPoly::constant(1)};
        check_moment_invariants(mp);
        return mp;
    }
    BiPoly total;
    for (int k = 1; k <= two_l; ++k) {
        // permutation classes share the axis1 weight and the multinomial
        std::map<std::vector<int>, BiPoly> q_by_class;
        for_each_suffix_dominant_composition(two_l, k, [&](const std::vector<int>& parts) {
            Composition comp(parts);
            q_by_class[comp.class_key()] += axis2_factor(comp);
        });
        for (const auto& [key, qsum] : q_by_class) {
            if (qsum.is_zero()) continue;
            BigRat mult(factorial(two_l));
            for (int p : key) mult /= BigRat(factorial(p));
            total += BiPoly::constant(mult) * axis1_factor(Composition(key)) * qsum;
        }
    }
    MomentPolynomial mp{two_l, total};
    check_moment_invariants(mp);
    return mp;
}

BigRat fixed_length_moment_sum(int two_l, int n) {
    if (two_l != 2 && two_l != 4)
        throw std::invalid_argument("fixed_length_moment_sum: order must be 2 or 4");
    if (n < 1) throw std::invalid_argument("fixed_length_moment_sum: n must be >= 1");
    BiPoly poly = moment_polynomial(two_l).poly;
    BigRat acc = 0;
    for (int n1 = 0; n1 <= n; ++n1)
        acc += BigRat(loop_count({n1, n - n1})) * poly.eval(n1, n - n1);
    return acc;
}

BigRat fixed_length_moment_closed_form(int two_l, int n) {
    if (n < 1)
        throw std::invalid_argument("fixed_length_moment_closed_form: n must be >= 1");
    BigInt c = binomial(2 * n, n);
    BigRat csq(c * c);
    BigInt nn(n);
    // divide instead of the (num, den) constructor: 2n - 3 is negative at n = 1
    if (two_l == 2)
        return csq * BigRat(nn * nn * (nn - 1)) / BigRat(BigInt(6) * (2 * nn - 1));
    if (two_l == 4)
        return csq * BigRat(nn * nn * nn * (nn - 1) * (7 * nn * nn - 18 * nn + 13)) /
               BigRat(BigInt(60) * (2 * nn - 1) * (2 * nn - 3));
    throw std::invalid_argument("fixed_length_moment_closed_form: order must be 2 or 4");
}

const BiPoly& MomentCache::get(int two_l) {
    auto it = entries_.find(two_l);
    if (it == entries_.end())
        it = entries_.emplace(two_l, moment_polynomial(two_l).poly).first;
    return it->second;
}

std::optional<BiPoly> MomentCache::lookup(int two_l) const {
    auto it = entries_.find(two_l);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void MomentCache::put(int two_l, const BiPoly& p) {
    check_moment_invariants({two_l, p});
    entries_[two_l] = p;
}

nlohmann::json MomentCache::to_json() const {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [order, poly] : entries_) m[std::to_string(order)] = poly.to_json();
    return nlohmann::json{{"format_version", 1}, {"moments", m}};
}

MomentCache MomentCache::from_json(const nlohmann::json& j) {
    if (j.at("format_version").get<int>() != 1)
        throw std::invalid_argument("MomentCache: unsupported format_version");
    MomentCache c;
    for (const auto& [key, val] : j.at("moments").items())
        c.put(std::stoi(key), BiPoly::from_json(val)); // put() re-validates
    return c;
}

void MomentCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("MomentCache: cannot write " + path);
    out << to_json().dump(1) << "\n";
    if (!out) throw std::runtime_error("MomentCache: write failed for " + path);
}

MomentCache MomentCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("MomentCache: cannot read " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

} // namespace latwalk
