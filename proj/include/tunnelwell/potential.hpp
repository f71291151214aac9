#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tunnelwell/expr.hpp"

namespace tunnelwell {

// Unit convention throughout: hbar = m = 1 and the symmetric reference
// frequency omega = 1 sets the energy unit, so inputs are the
// dimensionless ratios V0/(hbar*omega) and eta.

enum class PotentialKind { Quartic, Parabolic, Custom };

class Potential {
public:
    /// Biased quartic double well, V0*[((x/a)^2-1)^2 - 1 - eta*(x/a)]
    /// with a = sqrt(8*V0). Requires 0 <= eta < 8/(3*sqrt(3)).
    static Potential quartic(double v0, double eta);

    /// Piecewise parabolic well with degenerate localized levels.
    /// Requires eta < min(1, 2*V0).
    static Potential parabolic(double v0, double eta);

    /// User expression V(x; params); stationary search restricted to window.
    static Potential custom(const Expr& expr,
                            std::map<std::string, double> bindings,
                            std::pair<double, double> window);

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }
    double derivative(double x) const;
    double second_derivative(double x) const;

    PotentialKind kind() const { return kind_; }
    double v0() const { return v0_; }
    double eta() const { return eta_; }
    std::pair<double, double> window() const { return window_; }

    // Closed-form family parameters (built-ins only).
    double quartic_a() const { return a_; }
    double parabolic_a() const { return a_; }
    double parabolic_a_eta() const { return a_eta_; }
    double parabolic_omega_eta() const { return omega_eta_; }
    double parabolic_v_eta() const { return v_eta_; }

private:
    Potential() = default;
    PotentialKind kind_ = PotentialKind::Custom;
    double v0_ = 0.0, eta_ = 0.0;
    double a_ = 0.0;                       // quartic / parabolic left scale
    double a_eta_ = 0.0, omega_eta_ = 0.0, v_eta_ = 0.0; // parabolic right well
    std::pair<double, double> window_ = {0.0, 0.0};
    std::optional<Expr> expr_;
    std::map<std::string, double> bindings_;
};

/// Extracted double-well skeleton.
struct WellGeometry {
    double a_L = 0, a_C = 0, a_R = 0;   // left minimum, barrier top, right minimum
    double v_top = 0;                   // V(a_C)
    double v_L_min = 0, v_R_min = 0;
    double omega_L = 0, omega_R = 0;    // sqrt(V''(a_s))
    double eps_L = 0, eps_R = 0;        // V(a_s) + omega_s/2
    double sigma_L = 0, sigma_R = 0;    // 1/sqrt(omega_s)
    bool cusp = false;                  // non-smooth barrier top
    std::vector<std::string> warnings;
};

/// Locate minima/top, frequencies and localized levels. Throws
/// NotDoubleWell when the stationary-point count is wrong and
/// ResonanceRegime when one localized level reaches the opposite well's
/// first excited level; attaches warnings within 10% of that boundary
/// and when the strong-localization condition fails.
WellGeometry characterize(const Potential& p);

/// Stationary points of the biased quartic, in units of a:
/// (left minimum, maximum, right minimum). Requires 0 <= eta < 8/(3*sqrt(3)).
std::array<double, 3> quartic_stationary(double eta);

/// (omega_L/omega, omega_R/omega) for the biased quartic.
std::pair<double, double> quartic_frequencies(double eta);

/// Right-well parameters of the parabolic family; same object as
/// Potential::parabolic, exposed for sweeps.
Potential parabolic_family(double v0, double eta);

} // namespace tunnelwell
