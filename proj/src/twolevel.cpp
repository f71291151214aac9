#include "tunnelwell/twolevel.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelwell {

namespace {

void check_params(const TwoLevelParams& p) {
    if (!(p.nu > 0.0) || !std::isfinite(p.eps_L) || !std::isfinite(p.eps_R)) {
        throw std::invalid_argument("two-level params: nu > 0 and finite energies required");
    }
}

void check_schedule(const ZenoSchedule& s) {
    if (!(s.nu0 > 0.0) || !(s.nu1 > 0.0) || !(s.t0 > 0.0) || !(s.t1 > 0.0) ||
        !(s.horizon > 0.0)) {
        throw std::invalid_argument("zeno schedule: all fields must be positive");
    }
    if (!(s.nu1 <= s.nu0) || !(s.t1 <= s.t0)) {
        throw std::invalid_argument("zeno schedule: requires nu1 <= nu0 and t1 <= t0");
    }
}

} // namespace

double mixing_angle(const TwoLevelParams& p) {
    check_params(p);
    const double half = 0.5 * (p.eps_L - p.eps_R);
    const double s2t = p.nu / std::sqrt(p.nu * p.nu + half * half);
    return 0.5 * std::asin(s2t);
}

TwoLevelSpectrum eigenlevels(const TwoLevelParams& p) {
    check_params(p);
    const double mean = 0.5 * (p.eps_L + p.eps_R);
    const double half = 0.5 * (p.eps_L - p.eps_R);
    const double gap_half = std::sqrt(half * half + p.nu * p.nu);
    return {mean - gap_half, mean + gap_half, 2.0 * gap_half};
}

double p_right(const TwoLevelParams& p, double t) {
    if (t < 0.0) throw NegativeTime("p_right: t must be >= 0");
    const double theta = mixing_angle(p);
    const double omega = eigenlevels(p).omega;
    const double s2t = std::sin(2.0 * theta);
    const double s = std::sin(0.5 * omega * t);
    return s2t * s2t * s * s;
}

double schedule_nu(const ZenoSchedule& s, double t) {
    check_schedule(s);
    if (t < 0.0) throw NegativeTime("schedule_nu: t must be >= 0");
    const double period = s.t0 + s.t1;
    const double rem = t - period * std::floor(t / period);
    return rem < s.t0 ? s.nu0 : s.nu1;
}

double phase_integral(const ZenoSchedule& s, double t) {
    check_schedule(s);
    if (t < 0.0) throw NegativeTime("phase_integral: t must be >= 0");
    const double period = s.t0 + s.t1;
    const double full = std::floor(t / period);
    const double rem = t - full * period;
    double phase = full * (s.nu0 * s.t0 + s.nu1 * s.t1);
    phase += s.nu0 * std::min(rem, s.t0);
    if (rem > s.t0) phase += s.nu1 * (rem - s.t0);
    return phase;
}

double zeno_probability(const ZenoSchedule& s, double t) {
    if (t < 0.0) throw NegativeTime("zeno_probability: t must be >= 0");
    return 0.5 * (1.0 + std::cos(2.0 * phase_integral(s, t)));
}

std::optional<std::string> zeno_adiabaticity_warning(const ZenoSchedule& s,
                                                     double omega_min) {
    check_schedule(s);
    if (omega_min > 0.0 && s.t1 < 2.0 * M_PI / omega_min) {
        return "schedule switch time t1 is shorter than the in-well period "
               "2*pi/omega_min; higher levels may be excited";
    }
    return std::nullopt;
}

} // namespace tunnelwell
