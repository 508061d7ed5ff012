#pragma once

#include "latwalk/walk_oracle.hpp"

#include <json.hpp>

#include <complex>
#include <vector>

namespace latwalk {

// Flux per plaquette and the transverse Bloch phase of the diagonal term.
struct FluxParams {
    double phi = 0.0;
    double nu = 0.0;
};

// Amplitude vector over (column, hop power, site power) for expanding the
// mixed term of (H1 + H2)^m, where H1 hops between neighbouring columns and
// H2 multiplies by 2 cos(phi * column + nu). The tags count how many factors
// of each kind a path has absorbed, so reading tag (2 n1, 2 n2) after
// 2 (n1 + n2) applications isolates walks with n1 up-down pairs of unit
// steps and n2 pairs of the diagonal factor.
//
// Columns live in a window of half-width n1 + 1 + extra_width around base.
// With prune_unreachable set, hops that leave |column - base| > 2 n1 - p1
// are dropped: such paths can no longer return to base, so the diagonal
// entry is unaffected and the support stays inside [base - n1, base + n1].
// Without pruning the window must be wide enough; a hop falling off the
// edge throws instead of losing mass.
class MixedPowerState {
public:
    MixedPowerState(int n1, int n2, int base = 0, int extra_width = 0,
                    bool prune_unreachable = true);

    // amplitude 1 at (base, 0, 0)
    static MixedPowerState unit(int n1, int n2, int base = 0, int extra_width = 0,
                                bool prune_unreachable = true);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int base() const { return base_; }
    int width() const { return width_; }
    bool pruning() const { return prune_; }

    std::complex<double> amplitude(int column, int p1, int p2) const;
    // sum of |amplitude| over all cells; one hop application doubles it
    // while the support is away from the window edge and the tag ceiling
    double abs_mass() const;
    // |amplitude| summed over the outermost column ring only
    double boundary_mass() const;

    // multiply by the hop operator, incrementing the hop tag
    MixedPowerState apply_hop() const;
    // multiply by the diagonal 2 cos(phi * column + nu), incrementing the
    // site tag
    MixedPowerState apply_site(const FluxParams& fp) const;

    MixedPowerState& operator+=(const MixedPowerState& other);

private:
    int n1_, n2_, base_, width_;
    bool prune_;
    std::vector<std::complex<double>> amp_;

    int cell(int column, int p1, int p2) const;
};

// Diagonal matrix element at base of the mixed power: 2 n1 hop factors and
// 2 n2 site factors in every interleaving. Equals
// sum over closed walks of prod 2 cos(phi x_j + nu) over the n2-step columns.
std::complex<double> mixed_power_diagonal(int n1, int n2, const FluxParams& fp,
                                          int base = 0, int extra_width = 0,
                                          bool prune_unreachable = true);

// Average of mixed_power_diagonal over nu on a uniform grid. The integrand
// is a trigonometric polynomial of degree 2 n2 in nu, so any grid with more
// than 2 n2 points gives the exact integral; points <= 0 selects
// 2 (n1 + n2) + 2. The result is the characteristic sum
// sum over closed walks of e^{i phi Area}.
std::complex<double> nu_integral(int n1, int n2, double phi, int points = 0,
                                 int base = 0);

struct FluxSample {
    int n1 = 0;
    int n2 = 0;
    double phi = 0.0;
    std::complex<double> lhs; // nu_integral
    std::complex<double> rhs; // characteristic function of the walk histogram
    double residual = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};

struct FluxCheckReport {
    int n1 = 0;
    int n2 = 0;
    double tolerance = 0.0;
    std::vector<FluxSample> samples;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Compare nu_integral against the characteristic function of the exact area
// histogram at each phi. A sample passes when the residual is at most
// tolerance times the number of walks. quad_margin adds grid points beyond
// the default 2 (n1 + n2) + 2; the integral is already exact without them.
FluxCheckReport check_flux_identity(int n1, int n2, const std::vector<double>& phis,
                                    double tolerance = 1e-9,
                                    long long area_budget = kDefaultAreaBudget,
                                    int quad_margin = 0);

} // namespace latwalk
