// Batch interface to the walk statistics library. Subcommands print exact
// results in pretty, json, or csv form; exit code 0 means every asserted
// check passed.

#include "latwalk/bipoly.hpp"
#include "latwalk/hofstadter.hpp"
#include "latwalk/identities.hpp"
#include "latwalk/moment_engine.hpp"
#include "latwalk/walk_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace latwalk;

namespace {

struct Options {
    std::string cache = "areamoments_cache.json";
    std::string format = "pretty";
    double tolerance = 1e-9;
    long long budget = kDefaultAreaBudget;
    int quad_margin = 0;
};

bool valid_format(const std::string& f) {
    return f == "pretty" || f == "json" || f == "csv";
}

// defaults < config file < environment; command line flags land on top later
bool load_layered_config(Options& opt, std::string& err) {
    std::string path;
    if (const char* env = std::getenv("AREAMOMENTS_CONFIG"))
        path = env;
    else if (std::filesystem::exists("areamoments.json"))
        path = "areamoments.json";
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            err = "cannot read config file " + path;
            return false;
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            err = "config file " + path + " is not valid JSON: " + e.what();
            return false;
        }
        try {
            if (j.contains("cache")) opt.cache = j.at("cache").get<std::string>();
            if (j.contains("format")) opt.format = j.at("format").get<std::string>();
            if (j.contains("tolerance")) opt.tolerance = j.at("tolerance").get<double>();
            if (j.contains("budget")) opt.budget = j.at("budget").get<long long>();
            if (j.contains("quad_margin"))
                opt.quad_margin = j.at("quad_margin").get<int>();
        } catch (const std::exception& e) {
            err = "config file " + path + ": " + e.what();
            return false;
        }
    }
    if (const char* env = std::getenv("AREAMOMENTS_CACHE")) opt.cache = env;
    if (const char* env = std::getenv("AREAMOMENTS_FORMAT")) opt.format = env;
    try {
        if (const char* env = std::getenv("AREAMOMENTS_TOLERANCE"))
            opt.tolerance = std::stod(env);
        if (const char* env = std::getenv("AREAMOMENTS_BUDGET")) opt.budget = std::stoll(env);
        if (const char* env = std::getenv("AREAMOMENTS_QUAD_MARGIN"))
            opt.quad_margin = std::stoi(env);
    } catch (const std::exception&) {
        err = "environment override is not a number";
        return false;
    }
    return true;
}

// final values after flags are layered on top
bool validate_options(const Options& opt, std::string& err) {
    if (!valid_format(opt.format)) {
        err = "format must be pretty, json, or csv (got '" + opt.format + "')";
        return false;
    }
    if (opt.tolerance <= 0 || opt.budget <= 0 || opt.quad_margin < 0) {
        err = "tolerance and budget must be positive, quad-margin nonnegative";
        return false;
    }
    return true;
}

MomentCache open_cache(const std::string& path) {
    if (std::filesystem::exists(path)) return MomentCache::load(path);
    return {};
}

std::string num(const BigInt& v) { return v.str(); }

// --- moments ---------------------------------------------------------------

int run_moments(const Options& opt, int max_order) {
    if (max_order < 2 || max_order % 2) {
        std::cerr << "moments: --max must be an even integer >= 2\n";
        return 2;
    }
    MomentCache cache = open_cache(opt.cache);
    struct Row {
        int order;
        std::string monomial, symmetric;
    };
    std::vector<Row> rows;
    for (int tl = 2; tl <= max_order; tl += 2) {
        const BiPoly& p = cache.get(tl);
        rows.push_back({tl, format_monomial_basis(p),
                        format_elementary_basis(to_elementary_symmetric(p))});
    }
    cache.save(opt.cache);

    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"order", r.order},
                           {"monomial", r.monomial},
                           {"symmetric", r.symmetric}});
        std::cout << nlohmann::json{{"moments", arr}}.dump(1) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "order,monomial,symmetric\n";
        for (const auto& r : rows)
            std::cout << r.order << ',' << r.monomial << ',' << r.symmetric << '\n';
    } else {
        for (const auto& r : rows) {
            std::cout << "order " << r.order << "\n  monomial:  " << r.monomial
                      << "\n  symmetric: " << r.symmetric << "\n";
        }
    }
    return 0;
}

// --- distribution ----------------------------------------------------------

int run_distribution(const Options& opt, int n1, int n2) {
    AreaDistribution d = area_histogram_dp({n1, n2}, opt.budget);
    std::vector<std::pair<int, BigInt>> moments;
    for (int order = 0; order <= 12; ++order) moments.emplace_back(order, moment(d, order));

    if (opt.format == "json") {
        nlohmann::json j = d.to_json();
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& [order, value] : moments)
            ms.push_back({order, num(value)});
        j["total"] = num(d.total());
        j["moments"] = ms;
        std::cout << j.dump(1) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "row,key,value\n";
        std::cout << "walks,," << num(d.total()) << "\n";
        for (const auto& [area, count] : d.histogram())
            std::cout << "histogram," << area << ',' << num(count) << "\n";
        for (const auto& [order, value] : moments)
            std::cout << "moment," << order << ',' << num(value) << "\n";
    } else {
        std::cout << "walks(n1=" << n1 << ", n2=" << n2 << "): " << num(d.total())
                  << "\narea histogram:\n";
        for (const auto& [area, count] : d.histogram())
            std::cout << "  " << area << "  " << num(count) << "\n";
        std::cout << "moments:\n";
        for (const auto& [order, value] : moments)
            std::cout << "  order " << order << ":  " << num(value) << "\n";
    }
    return 0;
}

// --- verify ----------------------------------------------------------------

int run_verify(const Options& opt, int n_max, int max_order) {
    if (n_max < 0) {
        std::cerr << "verify: --n must be >= 0\n";
        return 2;
    }
    if (max_order < 2 || max_order % 2) {
        std::cerr << "verify: --moments must be an even integer >= 2\n";
        return 2;
    }
    MomentCache cache = open_cache(opt.cache);
    struct Row {
        int n1, n2, two_l;
        BigInt cardinal, value;
        bool pass;
    };
    std::vector<Row> rows;
    bool all_pass = true;
    for (int n1 = 0; n1 <= n_max; ++n1)
        for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
            AreaDistribution d = area_histogram_dp({n1, n2}, opt.budget);
            BigInt cardinal = loop_count({n1, n2});
            for (int tl = 2; tl <= max_order; tl += 2) {
                BigInt value = moment(d, tl);
                bool pass = BigRat(value) == BigRat(cardinal) * cache.get(tl).eval(n1, n2);
                if (!pass) all_pass = false;
                rows.push_back({n1, n2, tl, cardinal, value, pass});
            }
        }
    cache.save(opt.cache);

    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"n1", r.n1},
                           {"n2", r.n2},
                           {"two_l", r.two_l},
                           {"cardinal", num(r.cardinal)},
                           {"moment", num(r.value)},
                           {"pass", r.pass}});
        std::cout << nlohmann::json{{"cases", arr}, {"all_pass", all_pass}}.dump(1)
                  << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n1,n2,two_l,cardinal,moment\n";
        for (const auto& r : rows)
            std::cout << r.n1 << ',' << r.n2 << ',' << r.two_l << ','
                      << num(r.cardinal) << ',' << num(r.value) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << "n1=" << r.n1 << " n2=" << r.n2 << " order=" << r.two_l
                      << "  walks=" << num(r.cardinal) << "  moment=" << num(r.value)
                      << (r.pass ? "" : "  MISMATCH") << "\n";
        std::cout << (all_pass ? "verified " : "FAILED ") << rows.size() << " cases\n";
    }
    for (const auto& r : rows)
        if (!r.pass)
            std::cerr << "mismatch at n1=" << r.n1 << " n2=" << r.n2
                      << " order=" << r.two_l << "\n";
    return all_pass ? 0 : 1;
}

// --- identities ------------------------------------------------------------

int run_identities(const Options& opt, int max_k, int max_n) {
    auto reports = run_identity_sweep(max_k, max_n);
    bool all_pass = true;
    for (const auto& r : reports)
        if (!r.pass) all_pass = false;

    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << nlohmann::json{{"reports", arr}, {"all_pass", all_pass}}.dump(1)
                  << "\n";
    } else if (opt.format == "csv") {
        std::cout << "name,params,lhs,rhs,pass\n";
        for (const auto& r : reports)
            std::cout << r.name << ",\"" << r.params << "\"," << to_fraction_string(r.lhs)
                      << ',' << to_fraction_string(r.rhs) << ','
                      << (r.pass ? "true" : "false") << "\n";
    } else {
        std::map<std::string, std::pair<int, int>> tally; // name -> (pass, total)
        for (const auto& r : reports) {
            auto& [pass, total] = tally[r.name];
            pass += r.pass ? 1 : 0;
            ++total;
        }
        for (const auto& [name, counts] : tally)
            std::cout << name << ": " << counts.first << "/" << counts.second
                      << " pass\n";
        std::cout << (all_pass ? "all " : "FAILURES among ") << reports.size()
                  << " instances\n";
        for (const auto& r : reports)
            if (!r.pass) std::cout << "  failed: " << r.name << " " << r.params << "\n";
    }
    return all_pass ? 0 : 1;
}

// --- hh ---------------------------------------------------------------------

int run_hh(const Options& opt, int n1, int n2, std::vector<double> phis) {
    if (phis.empty()) phis = {0.0, 1.1, 2.3};
    FluxCheckReport r =
        check_flux_identity(n1, n2, phis, opt.tolerance, opt.budget, opt.quad_margin);

    if (opt.format == "json") {
        nlohmann::json j = r.to_json();
        j["all_pass"] = r.all_pass();
        std::cout << j.dump(1) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n1,n2,phi,lhs_re,lhs_im,rhs_re,rhs_im,residual,pass\n";
        for (const auto& s : r.samples)
            std::cout << s.n1 << ',' << s.n2 << ',' << s.phi << ',' << s.lhs.real()
                      << ',' << s.lhs.imag() << ',' << s.rhs.real() << ','
                      << s.rhs.imag() << ',' << s.residual << ','
                      << (s.pass ? "true" : "false") << "\n";
    } else {
        for (const auto& s : r.samples)
            std::cout << "phi=" << s.phi << "  lhs=" << s.lhs.real()
                      << (s.lhs.imag() >= 0 ? "+" : "") << s.lhs.imag() << "i"
                      << "  rhs=" << s.rhs.real() << (s.rhs.imag() >= 0 ? "+" : "")
                      << s.rhs.imag() << "i"
                      << "  residual=" << s.residual
                      << (s.pass ? "" : "  FAIL") << "\n";
        std::cout << (r.all_pass() ? "all " : "FAILURES among ") << r.samples.size()
                  << " samples\n";
    }
    return r.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    std::string err;
    if (!load_layered_config(opt, err)) {
        std::cerr << "areamoments: " << err << "\n";
        return 2;
    }

    CLI::App app{"Exact area statistics of closed walks on the square lattice"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format: pretty, json, or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--cache", opt.cache, "moment polynomial cache file");
    app.add_option("--tolerance", opt.tolerance, "relative tolerance for hh residuals")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget, "distribution state budget, caps n1*n2")
        ->check(CLI::PositiveNumber);
    app.add_option("--quad-margin", opt.quad_margin,
                   "extra quadrature points for hh flux averages")
        ->check(CLI::NonNegativeNumber);

    int max_order = 8;
    auto* cmd_moments =
        app.add_subcommand("moments", "print moment polynomials up to an order");
    cmd_moments->add_option("--max", max_order, "highest order, even and >= 2");

    int d_n1 = 0, d_n2 = 0;
    auto* cmd_dist =
        app.add_subcommand("distribution", "exact area histogram and moments 0..12");
    cmd_dist->add_option("n1", d_n1, "unit step pairs")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_dist->add_option("n2", d_n2, "double step pairs")->required()
        ->check(CLI::NonNegativeNumber);

    int v_n = 5, v_moments = 12;
    auto* cmd_verify = app.add_subcommand(
        "verify", "check histogram moments against the polynomials");
    cmd_verify->add_option("--n", v_n, "max n1+n2");
    cmd_verify->add_option("--moments", v_moments, "highest moment order");

    int i_max_k = 5, i_max_n = 6;
    auto* cmd_ident =
        app.add_subcommand("identities", "sweep the combinatorial identities");
    cmd_ident->add_option("--max-k", i_max_k, "largest slot count");
    cmd_ident->add_option("--max-n", i_max_n, "largest weight / composition total");

    int h_n1 = 0, h_n2 = 0;
    std::vector<double> h_phis;
    auto* cmd_hh = app.add_subcommand(
        "hh", "flux-averaged transfer check against the histogram transform");
    cmd_hh->add_option("--n1", h_n1, "unit step pairs")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_hh->add_option("--n2", h_n2, "double step pairs")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_hh->add_option("--phi", h_phis, "flux value, repeatable");

    CLI11_PARSE(app, argc, argv);
    if (!validate_options(opt, err)) {
        std::cerr << "areamoments: " << err << "\n";
        return 2;
    }

    try {
        if (cmd_moments->parsed()) return run_moments(opt, max_order);
        if (cmd_dist->parsed()) return run_distribution(opt, d_n1, d_n2);
        if (cmd_verify->parsed()) return run_verify(opt, v_n, v_moments);
        if (cmd_ident->parsed()) return run_identities(opt, i_max_k, i_max_n);
        if (cmd_hh->parsed()) return run_hh(opt, h_n1, h_n2, h_phis);
    } catch (const std::length_error& e) {
        std::cerr << "areamoments: " << e.what()
                  << " (raise --budget to allow larger states)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "areamoments: " << e.what() << "\n";
        return 1;
    }
    return 2; // unreachable: require_subcommand enforces one
}
