#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tunnelwell/potential.hpp"

namespace tunnelwell {

enum class Side { Left, Right };

/// One mirrored symmetric half-well: barrier top at x = 0, minimum at
/// x = a. Internally the well is described by its depth above the
/// minimum as a function of the distance z from the minimum; evaluating
/// the depth directly (rather than V(x) - V_min by subtraction) keeps
/// the prefactor integral well conditioned near z = 0.
struct SymmetricWell {
    std::function<double(double)> depth; // V - V_min at distance z from the minimum
    double a = 0;                        // distance minimum -> barrier top
    double omega = 0;
    double v_min = 0;
    double eps = 0;                      // v_min + omega/2
    bool well_conditioned = true;        // closed-form depth (built-in families)

    /// Half potential measured from the barrier top, x in [0, a].
    double half_potential(double x) const { return v_min + depth(a - x); }
};

struct TunnelingResult {
    double nu_L = 0, nu_R = 0;  // mirrored-half amplitudes
    double A = 1;               // asymmetry factor, >= 1
    double nu = 0;              // A * sqrt(nu_L * nu_R)
    double delta_eps = 0;       // eps_L - eps_R
    double omega_rabi = 0;      // 2*sqrt((delta_eps/2)^2 + nu^2)
    double S_L = 0, S_R = 0;    // actions
    double C_L = 0, C_R = 0;    // prefactor integrals
    std::vector<std::string> diagnostics;
};

/// Classical turning point V(x) = eps on the barrier flank of the given side.
double turning_point(const Potential& p, double eps, Side side);

/// S = 2 * int_0^a sqrt(2*[V - V_min]) dx over the half-well.
double action_integral(const SymmetricWell& w);

/// C = int_0^a [omega/sqrt(2*(V - V_min)) - 1/(a - x)] dx, evaluated via
/// the substitution x = a*(1 - u^2) which removes the endpoint
/// cancellation. Accurate to ~1e-8 for closed-form wells.
double prefactor_C(const SymmetricWell& w);

/// nu = omega * sqrt(omega*a^2/pi) * exp(C) * exp(-S)   (hbar = m = 1)
double symmetric_amplitude(const SymmetricWell& w);

/// A = [ (zeta_L/zeta_R)^(1/4) + (zeta_R/zeta_L)^(1/4) ] / 2 with
/// zeta_s = V_top - eps_s.
double asymmetry_factor(const WellGeometry& g);

/// Full split-and-mirror pipeline for an asymmetric double well.
TunnelingResult tunneling_amplitude(const Potential& p);

/// Wronskian route: nu = (k_L(0)+k_R(0))/2 * phi_L(0)*phi_R(0) with
/// phi_s(0)^2 = nu_s / k_s(0); consistency check of the factorized result.
double herring_amplitude(const Potential& p);

/// Mirrored half-wells used by the pipeline (exposed for diagnostics).
SymmetricWell mirrored_half(const Potential& p, const WellGeometry& g, Side side);

} // namespace tunnelwell
