#include "latwalk/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace latwalk {

BiPoly BiPoly::constant(const BigRat& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int e1, int e2, const BigRat& c) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    if (c != 0) p.terms_[{e1, e2}] = c;
    return p;
}

BiPoly BiPoly::var1() { return monomial(1, 0, 1); }
BiPoly BiPoly::var2() { return monomial(0, 1, 1); }

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::degree_var1() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_var2() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

BigRat BiPoly::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? BigRat(0) : it->second;
}

void BiPoly::add_term(int e1, int e2, const BigRat& c) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const BigRat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

BigRat BiPoly::eval(const BigRat& x, const BigRat& y) const {
    // exponents are tiny here; repeated squaring would be noise
    BigRat acc = 0;
    for (const auto& [k, c] : terms_) {
        BigRat t = c;
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int i = 0; i < k.second; ++i) t *= y;
        acc += t;
    }
    return acc;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

bool BiPoly::is_symmetric() const { return *this == swap_vars(); }

nlohmann::json BiPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) // map order is already (e1, e2) lexicographic
        arr.push_back({k.first, k.second, to_fraction_string(c)});
    return nlohmann::json{{"terms", arr}};
}

BiPoly BiPoly::from_json(const nlohmann::json& j) {
    BiPoly p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("BiPoly::from_json: malformed term");
        p.add_term(t[0].get<int>(), t[1].get<int>(), rat_from_string(t[2].get<std::string>()));
    }
    return p;
}

BiPoly euler_diff(const BiPoly& p) {
    BiPoly r;
    for (const auto& [k, c] : p.terms())
        r.add_term(k.first, k.second, c * BigRat(k.first - k.second));
    return r;
}

BiPoly falling_factorial_poly(int var_index, int depth) {
    if (var_index != 1 && var_index != 2)
        throw std::invalid_argument("falling_factorial_poly: var_index must be 1 or 2");
    if (depth < 0) throw std::invalid_argument("falling_factorial_poly: negative depth");
    BiPoly v = var_index == 1 ? BiPoly::var1() : BiPoly::var2();
    BiPoly r = BiPoly::constant(1);
    for (int j = 0; j < depth; ++j) r *= v - BiPoly::constant(j);
    return r;
}

BiPoly rising_factorial_poly(const BiPoly& base, int count) {
    if (count < 0) throw std::invalid_argument("rising_factorial_poly: negative count");
    BiPoly r = BiPoly::constant(1);
    for (int j = 1; j <= count; ++j) r *= base + BiPoly::constant(j);
    return r;
}

std::vector<SymmetricTerm> to_elementary_symmetric(const BiPoly& p) {
    if (!p.is_symmetric())
        throw std::invalid_argument("to_elementary_symmetric: polynomial is not symmetric");
    std::vector<SymmetricTerm> out;
    BiPoly rest = p;
    while (!rest.is_zero()) {
        // leading term under (total degree, e1): symmetry puts e1 >= e2 on it
        BiPoly::Key lead{-1, -1};
        int best = -1;
        for (const auto& [k, c] : rest.terms()) {
            int deg = k.first + k.second;
            if (deg > best || (deg == best && k.first > lead.first)) {
                best = deg;
                lead = k;
            }
        }
        SymmetricTerm t{lead.second, lead.first - lead.second, rest.coeff(lead.first, lead.second)};
        out.push_back(t);
        rest -= from_elementary_symmetric({t});
    }
    std::sort(out.begin(), out.end(), [](const SymmetricTerm& a, const SymmetricTerm& b) {
        int wa = 2 * a.prod_pow + a.sum_pow, wb = 2 * b.prod_pow + b.sum_pow;
        if (wa != wb) return wa > wb;
        return a.prod_pow > b.prod_pow;
    });
    return out;
}

BiPoly from_elementary_symmetric(const std::vector<SymmetricTerm>& ts) {
    BiPoly prod = BiPoly::monomial(1, 1, 1);
    BiPoly sum = BiPoly::var1() + BiPoly::var2();
    BiPoly acc;
    for (const auto& t : ts) {
        BiPoly m = BiPoly::constant(t.coeff);
        for (int i = 0; i < t.prod_pow; ++i) m *= prod;
        for (int i = 0; i < t.sum_pow; ++i) m *= sum;
        acc += m;
    }
    return acc;
}

namespace {

// shared renderer: terms arrive as (numerator, denominator, monomial text)
std::string render_terms(const std::vector<std::tuple<BigInt, BigInt, std::string>>& ts) {
    if (ts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [num, den, mono] : ts) {
        bool neg = num < 0;
        BigInt num_abs = neg ? BigInt(-num) : num;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        if (mono.empty()) {
            body = num_abs.str();
        } else {
            body = (num_abs == 1) ? mono : num_abs.str() + "*" + mono;
        }
        if (den != 1) body += "/" + den.str();
        out += body;
    }
    return out;
}

std::string power(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string join_factors(std::initializer_list<std::string> fs) {
    std::string out;
    for (const auto& f : fs) {
        if (f.empty()) continue;
        if (!out.empty()) out += "*";
        out += f;
    }
    return out;
}

} // namespace

std::string format_monomial_basis(const BiPoly& p, const std::string& v1, const std::string& v2) {
    std::vector<BiPoly::Key> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const BiPoly::Key& a, const BiPoly::Key& b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::vector<std::tuple<BigInt, BigInt, std::string>> ts;
    for (const auto& k : keys) {
        BigRat c = p.coeff(k.first, k.second);
        ts.emplace_back(numerator(c), denominator(c),
                        join_factors({power(v1, k.first), power(v2, k.second)}));
    }
    return render_terms(ts);
}

std::string format_elementary_basis(const std::vector<SymmetricTerm>& ts,
                                    const std::string& v1, const std::string& v2) {
    std::vector<std::tuple<BigInt, BigInt, std::string>> rs;
    for (const auto& t : ts) {
        rs.emplace_back(numerator(t.coeff), denominator(t.coeff),
                        join_factors({power("(" + v1 + "*" + v2 + ")", t.prod_pow),
                                      power("(" + v1 + "+" + v2 + ")", t.sum_pow)}));
    }
    return render_terms(rs);
}

} // namespace latwalk
