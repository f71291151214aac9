#include "tunnelwell/semiclassical.hpp"

#include <algorithm>
#include <cmath>

#include "tunnelwell/numerics.hpp"

namespace tunnelwell {

double turning_point(const Potential& p, double eps, Side side) {
    const WellGeometry g = characterize(p);
    const double a_s = (side == Side::Left) ? g.a_L : g.a_R;
    const double v_min = (side == Side::Left) ? g.v_L_min : g.v_R_min;
    if (!(eps > v_min) || !(eps < g.v_top)) {
        throw NoTurningPoint("energy outside (V_min, V_top) on the requested side");
    }
    const double lo = std::min(a_s, g.a_C);
    const double hi = std::max(a_s, g.a_C);
    const double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    return find_root([&](double x) { return p.eval(x) - eps; }, lo, hi, tol);
}

double action_integral(const SymmetricWell& w) {
    Quadrature q;
    q.abs_tol = 1e-10;
    q.rel_tol = 1e-10;
    const auto integrand = [&w](double z) {
        return std::sqrt(2.0 * std::max(w.depth(z), 0.0));
    };
    return 2.0 * integrate(integrand, 0.0, w.a, q);
}

double prefactor_C(const SymmetricWell& w) {
    // After x = a*(1-u^2) the integrand becomes
    //   h(u) = 2*a*omega*u / sqrt(2*depth(a*u^2)) - 2/u,
    // odd in u near 0 with h -> 0. Expression-backed depths carry
    // cancellation noise ~eps_mach/z^2, so they get a larger small-u
    // cutoff and a looser tolerance; the cutoff tail is added back with
    // the linear model h(u) ~ h(u0)*u/u0.
    const double u0 = w.well_conditioned ? 0.01 : 0.03;
    Quadrature q;
    q.abs_tol = w.well_conditioned ? 1e-10 : 1e-8;
    q.rel_tol = 0.0;
    const auto h = [&w](double u) {
        const double d = w.depth(w.a * u * u);
        if (!(d > 0.0)) return 0.0;
        return 2.0 * w.a * w.omega * u / std::sqrt(2.0 * d) - 2.0 / u;
    };
    return integrate(h, u0, 1.0, q) + 0.5 * u0 * h(u0);
}

double symmetric_amplitude(const SymmetricWell& w) {
    const double s = action_integral(w);
    const double c = prefactor_C(w);
    return w.omega * std::sqrt(w.omega * w.a * w.a / M_PI) * std::exp(c - s);
}

double asymmetry_factor(const WellGeometry& g) {
    const double zl = g.v_top - g.eps_L;
    const double zr = g.v_top - g.eps_R;
    const double scale = std::max({1.0, std::abs(g.eps_L), std::abs(g.eps_R)});
    if (std::abs(g.eps_L - g.eps_R) <= 1e-12 * scale) {
        return 1.0; // degenerate limit of the quarter-power mean, any zeta
    }
    if (!(zl > 0.0) || !(zr > 0.0)) {
        throw LevelAboveBarrier("localized level at or above the barrier top");
    }
    const double r = std::pow(zl / zr, 0.25);
    return 0.5 * (r + 1.0 / r);
}

SymmetricWell mirrored_half(const Potential& p, const WellGeometry& g, Side side) {
    SymmetricWell w;
    const bool left = (side == Side::Left);
    w.a = left ? g.a_C - g.a_L : g.a_R - g.a_C;
    w.omega = left ? g.omega_L : g.omega_R;
    w.v_min = left ? g.v_L_min : g.v_R_min;
    w.eps = w.v_min + 0.5 * w.omega;
    switch (p.kind()) {
    case PotentialKind::Quartic: {
        // V(u) - V(us) = V0*(u-us)*[(u+us)*(u^2+us^2-2) - eta], u = x/a
        const double a = p.quartic_a();
        const double us = (left ? g.a_L : g.a_R) / a;
        const double v0 = p.v0();
        const double eta = p.eta();
        const double toward = left ? 1.0 : -1.0; // barrier lies toward +x for the left well
        w.depth = [a, us, v0, eta, toward](double z) {
            const double u = us + toward * z / a;
            const double dw = u - us;
            return v0 * dw * ((u + us) * (u * u + us * us - 2.0) - eta);
        };
        break;
    }
    case PotentialKind::Parabolic: {
        const double scale = left ? p.parabolic_a() : p.parabolic_a_eta();
        const double depth0 = left ? p.v0() : p.parabolic_v_eta();
        w.depth = [scale, depth0](double z) {
            const double t = z / scale;
            return depth0 * t * t;
        };
        break;
    }
    case PotentialKind::Custom: {
        const double x_min = left ? g.a_L : g.a_R;
        const double v_min = w.v_min;
        const double toward = left ? 1.0 : -1.0;
        w.depth = [&p, x_min, v_min, toward](double z) {
            return p.eval(x_min + toward * z) - v_min;
        };
        w.well_conditioned = false;
        break;
    }
    }
    return w;
}

TunnelingResult tunneling_amplitude(const Potential& p) {
    const WellGeometry g = characterize(p);
    const SymmetricWell wl = mirrored_half(p, g, Side::Left);
    const SymmetricWell wr = mirrored_half(p, g, Side::Right);
    TunnelingResult r;
    r.S_L = action_integral(wl);
    r.S_R = action_integral(wr);
    r.C_L = prefactor_C(wl);
    r.C_R = prefactor_C(wr);
    r.nu_L = wl.omega * std::sqrt(wl.omega * wl.a * wl.a / M_PI) * std::exp(r.C_L - r.S_L);
    r.nu_R = wr.omega * std::sqrt(wr.omega * wr.a * wr.a / M_PI) * std::exp(r.C_R - r.S_R);
    r.A = asymmetry_factor(g);
    r.nu = r.A * std::sqrt(r.nu_L * r.nu_R);
    r.delta_eps = g.eps_L - g.eps_R;
    r.omega_rabi = 2.0 * std::sqrt(0.25 * r.delta_eps * r.delta_eps + r.nu * r.nu);
    r.diagnostics = g.warnings;
    if (g.cusp) {
        r.diagnostics.push_back(
            "cusp barrier top: derivative relation at x=0 applied without the smooth-top premise");
    }
    return r;
}

double herring_amplitude(const Potential& p) {
    const WellGeometry g = characterize(p);
    const SymmetricWell wl = mirrored_half(p, g, Side::Left);
    const SymmetricWell wr = mirrored_half(p, g, Side::Right);
    const double nu_l = symmetric_amplitude(wl);
    const double nu_r = symmetric_amplitude(wr);
    const double kl = std::sqrt(2.0 * (g.v_top - g.eps_L));
    const double kr = std::sqrt(2.0 * (g.v_top - g.eps_R));
    // phi_s(0)^2 = nu_s / k_s(0) from the barrier-top derivative relation
    const double phi_l = std::sqrt(nu_l / kl);
    const double phi_r = std::sqrt(nu_r / kr);
    return 0.5 * (kl + kr) * phi_l * phi_r;
}

} // namespace tunnelwell
