#pragma once

#include <optional>
#include <string>

#include "tunnelwell/errors.hpp"

namespace tunnelwell {

struct TwoLevelParams {
    double eps_L = 0;
    double eps_R = 0;
    double nu = 0; // > 0
};

struct TwoLevelSpectrum {
    double e0 = 0, e1 = 0;
    double omega = 0; // Rabi frequency, e1 - e0 (hbar = 1)
};

/// Mixing angle theta in (0, pi/4]: sin(2*theta) = nu/sqrt(nu^2+(deps/2)^2).
double mixing_angle(const TwoLevelParams& p);

/// Eigenvalues of the 2x2 Hamiltonian (mean -/+ half-gap) and the gap.
TwoLevelSpectrum eigenlevels(const TwoLevelParams& p);

/// P_R(t) = sin^2(2*theta) * sin^2(Omega*t/2), starting from the left state.
double p_right(const TwoLevelParams& p, double t);

/// Piecewise-constant tunneling waveform: nu = nu0 for a stretch t0, then
/// nu1 for a stretch t1, repeated up to the horizon.
struct ZenoSchedule {
    double nu0 = 0;
    double nu1 = 0;
    double t0 = 0;
    double t1 = 0;
    double horizon = 0;
};

/// nu(t) of the schedule.
double schedule_nu(const ZenoSchedule& s, double t);

/// Exact piecewise-linear accumulation of int_0^t nu(t') dt' (units hbar).
double phase_integral(const ZenoSchedule& s, double t);

/// P_L(t) = (1 + cos(2*phase))/2 for degenerate levels.
double zeno_probability(const ZenoSchedule& s, double t);

/// Warning when the switching stretch t1 is shorter than the slowest
/// in-well oscillation period 2*pi/omega_min (risk of exciting n >= 2).
std::optional<std::string> zeno_adiabaticity_warning(const ZenoSchedule& s,
                                                     double omega_min);

} // namespace tunnelwell
