#include "latwalk/hofstadter.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace latwalk {

MixedPowerState::MixedPowerState(int n1, int n2, int base, int extra_width,
                                 bool prune_unreachable)
    : n1_(n1), n2_(n2), base_(base), width_(n1 + 1 + extra_width),
      prune_(prune_unreachable) {
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("MixedPowerState: negative step count");
    if (extra_width < 0)
        throw std::invalid_argument("MixedPowerState: negative extra_width");
    amp_.assign(static_cast<size_t>(2 * width_ + 1) * (2 * n1_ + 1) * (2 * n2_ + 1),
                {0.0, 0.0});
}

MixedPowerState MixedPowerState::unit(int n1, int n2, int base, int extra_width,
                                      bool prune_unreachable) {
    MixedPowerState s(n1, n2, base, extra_width, prune_unreachable);
    s.amp_[s.cell(base, 0, 0)] = {1.0, 0.0};
    return s;
}

int MixedPowerState::cell(int column, int p1, int p2) const {
    int off = column - base_ + width_;
    return (off * (2 * n1_ + 1) + p1) * (2 * n2_ + 1) + p2;
}

std::complex<double> MixedPowerState::amplitude(int column, int p1, int p2) const {
    if (std::abs(column - base_) > width_) return {0.0, 0.0};
    if (p1 < 0 || p1 > 2 * n1_ || p2 < 0 || p2 > 2 * n2_)
        throw std::invalid_argument("MixedPowerState::amplitude: tag out of range");
    return amp_[cell(column, p1, p2)];
}

double MixedPowerState::abs_mass() const {
    double m = 0.0;
    for (const auto& a : amp_) m += std::abs(a);
    return m;
}

double MixedPowerState::boundary_mass() const {
    double m = 0.0;
    for (int p1 = 0; p1 <= 2 * n1_; ++p1)
        for (int p2 = 0; p2 <= 2 * n2_; ++p2)
            m += std::abs(amp_[cell(base_ - width_, p1, p2)]) +
                 std::abs(amp_[cell(base_ + width_, p1, p2)]);
    return m;
}

MixedPowerState MixedPowerState::apply_hop() const {
    MixedPowerState out(n1_, n2_, base_, width_ - n1_ - 1, prune_);
    for (int col = base_ - width_; col <= base_ + width_; ++col)
        for (int p1 = 0; p1 < 2 * n1_; ++p1)
            for (int p2 = 0; p2 <= 2 * n2_; ++p2) {
                const std::complex<double>& a = amp_[cell(col, p1, p2)];
                if (a == std::complex<double>{0.0, 0.0}) continue;
                for (int dir = -1; dir <= 1; dir += 2) {
                    int to = col + dir;
                    if (prune_ && std::abs(to - base_) > 2 * n1_ - (p1 + 1))
                        continue; // cannot return to base, no diagonal weight
                    if (std::abs(to - base_) > width_)
                        throw std::length_error(
                            "MixedPowerState::apply_hop: column window overflow");
                    out.amp_[out.cell(to, p1 + 1, p2)] += a;
                }
            }
    return out;
}

MixedPowerState MixedPowerState::apply_site(const FluxParams& fp) const {
    MixedPowerState out(n1_, n2_, base_, width_ - n1_ - 1, prune_);
    for (int col = base_ - width_; col <= base_ + width_; ++col) {
        double factor = 2.0 * std::cos(fp.phi * col + fp.nu);
        for (int p1 = 0; p1 <= 2 * n1_; ++p1)
            for (int p2 = 0; p2 < 2 * n2_; ++p2)
                out.amp_[out.cell(col, p1, p2 + 1)] = factor * amp_[cell(col, p1, p2)];
    }
    return out;
}

MixedPowerState& MixedPowerState::operator+=(const MixedPowerState& other) {
    if (n1_ != other.n1_ || n2_ != other.n2_ || base_ != other.base_ ||
        width_ != other.width_)
        throw std::invalid_argument("MixedPowerState: shape mismatch in +=");
    for (size_t i = 0; i < amp_.size(); ++i) amp_[i] += other.amp_[i];
    return *this;
}

std::complex<double> mixed_power_diagonal(int n1, int n2, const FluxParams& fp,
                                          int base, int extra_width,
                                          bool prune_unreachable) {
    MixedPowerState s =
        MixedPowerState::unit(n1, n2, base, extra_width, prune_unreachable);
    for (int step = 0; step < 2 * (n1 + n2); ++step) {
        MixedPowerState next = s.apply_hop();
        next += s.apply_site(fp);
        s = std::move(next);
    }
    if (prune_unreachable && s.boundary_mass() != 0.0)
        throw std::logic_error("mixed_power_diagonal: pruned support left its cone");
    return s.amplitude(base, 2 * n1, 2 * n2);
}

std::complex<double> nu_integral(int n1, int n2, double phi, int points, int base) {
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("nu_integral: negative step count");
    if (points <= 0) points = 2 * (n1 + n2) + 2;
    if (points < 2 * n2 + 1)
        throw std::invalid_argument(
            "nu_integral: grid cannot resolve a degree 2*n2 trigonometric polynomial");
    const double two_pi = 8.0 * std::atan(1.0);
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < points; ++j) {
        FluxParams fp{phi, two_pi * j / points};
        acc += mixed_power_diagonal(n1, n2, fp, base);
    }
    return acc / static_cast<double>(points);
}

nlohmann::json FluxSample::to_json() const {
    return {{"n1", n1},           {"n2", n2},
            {"phi", phi},         {"lhs_re", lhs.real()},
            {"lhs_im", lhs.imag()}, {"rhs_re", rhs.real()},
            {"rhs_im", rhs.imag()}, {"residual", residual},
            {"pass", pass}};
}

bool FluxCheckReport::all_pass() const {
    for (const auto& s : samples)
        if (!s.pass) return false;
    return true;
}

nlohmann::json FluxCheckReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : samples) arr.push_back(s.to_json());
    return {{"n1", n1}, {"n2", n2}, {"tolerance", tolerance}, {"samples", arr}};
}

FluxCheckReport check_flux_identity(int n1, int n2, const std::vector<double>& phis,
                                    double tolerance, long long area_budget,
                                    int quad_margin) {
    if (quad_margin < 0)
        throw std::invalid_argument("check_flux_identity: negative quad_margin");
    FluxCheckReport report;
    report.n1 = n1;
    report.n2 = n2;
    report.tolerance = tolerance;
    AreaDistribution dist = area_histogram_dp({n1, n2}, area_budget);
    double scale = loop_count({n1, n2}).convert_to<double>();
    for (double phi : phis) {
        FluxSample s;
        s.n1 = n1;
        s.n2 = n2;
        s.phi = phi;
        s.lhs = nu_integral(n1, n2, phi, 2 * (n1 + n2) + 2 + quad_margin);
        s.rhs = characteristic_function(dist, phi);
        s.residual = std::abs(s.lhs - s.rhs);
        s.pass = s.residual <= tolerance * scale;
        report.samples.push_back(s);
    }
    return report;
}

} // namespace latwalk
