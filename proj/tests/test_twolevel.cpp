#include <doctest.h>

#include <cmath>
#include <complex>

#include "tunnelwell/twolevel.hpp"

using namespace tunnelwell;

namespace {

// RK4 integration of i d/dt (cL, cR) = H (cL, cR) with
// H = [[eps_L, -nu], [-nu, eps_R]], started in the left state.
double p_right_ode_oracle(const TwoLevelParams& p, double t_final, int steps = 200000) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double dt = t_final / steps;
    C cl(1.0, 0.0), cr(0.0, 0.0);
    const auto rhs = [&](C l, C r, C& dl, C& dr) {
        dl = -i * (p.eps_L * l - p.nu * r);
        dr = -i * (-p.nu * l + p.eps_R * r);
    };
    for (int s = 0; s < steps; ++s) {
        C k1l, k1r, k2l, k2r, k3l, k3r, k4l, k4r;
        rhs(cl, cr, k1l, k1r);
        rhs(cl + 0.5 * dt * k1l, cr + 0.5 * dt * k1r, k2l, k2r);
        rhs(cl + 0.5 * dt * k2l, cr + 0.5 * dt * k2r, k3l, k3r);
        rhs(cl + dt * k3l, cr + dt * k3r, k4l, k4r);
        cl += dt / 6.0 * (k1l + 2.0 * k2l + 2.0 * k3l + k4l);
        cr += dt / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    }
    return std::norm(cr);
}

double riemann_phase(const ZenoSchedule& s, double t, int steps = 1000000) {
    double acc = 0.0;
    const double dt = t / steps;
    for (int i = 0; i < steps; ++i) {
        acc += schedule_nu(s, (i + 0.5) * dt) * dt;
    }
    return acc;
}

} // namespace

TEST_CASE("mixing_angle: landmark values") {
    CHECK(mixing_angle({0.0, 0.0, 1.0}) == doctest::Approx(M_PI / 4.0).epsilon(1e-14));
    CHECK(mixing_angle({1.0, -1.0, 1.0}) == doctest::Approx(M_PI / 8.0).epsilon(1e-12));
    CHECK(mixing_angle({1.0, -1.0, 1e-9}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(mixing_angle({0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("eigenlevels") {
    const TwoLevelSpectrum s = eigenlevels({0.0, 0.0, 0.5});
    CHECK(s.e0 == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(s.e1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.omega == doctest::Approx(1.0).epsilon(1e-14));

    const TwoLevelSpectrum a = eigenlevels({1.0, -1.0, 1.0}); // delta_eps = 2*nu
    CHECK(a.omega == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(a.e0 + a.e1 == doctest::Approx(0.0)); // mean preserved

    const TwoLevelSpectrum deg = eigenlevels({-0.5, -0.5, 0.1}); // parabolic-style
    CHECK(deg.omega == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("p_right: closed form vs ODE oracle") {
    CHECK(p_right({0.3, -0.2, 0.7}, 0.0) == 0.0);

    const TwoLevelParams sym{0.0, 0.0, 0.5};
    const double t_full = M_PI / eigenlevels(sym).omega;
    CHECK(p_right(sym, t_full) == doctest::Approx(1.0).epsilon(1e-12));

    const TwoLevelParams det{1.0, -1.0, 1.0};
    const double t_half = M_PI / eigenlevels(det).omega;
    CHECK(p_right(det, t_half) == doctest::Approx(0.5).epsilon(1e-12));

    for (const TwoLevelParams& p :
         {TwoLevelParams{0.0, 0.0, 0.8}, TwoLevelParams{0.7, -0.4, 0.35},
          TwoLevelParams{-1.2, 0.5, 1.1}}) {
        for (double t : {0.3, 1.7, 5.0}) {
            CHECK(p_right(p, t) == doctest::Approx(p_right_ode_oracle(p, t)).epsilon(1e-6));
        }
    }
    CHECK_THROWS_AS(p_right({0.0, 0.0, 1.0}, -0.1), NegativeTime);
}

TEST_CASE("p_right: transfer starts quadratically") {
    const TwoLevelParams p{0.4, -0.1, 0.6};
    const double h = 1e-5;
    const double d1 = (p_right(p, h) - p_right(p, 0.0)) / h;
    CHECK(std::abs(d1) < 1e-4); // first derivative ~ 0
    const double d2 = (p_right(p, 2 * h) - 2 * p_right(p, h)) / (h * h);
    CHECK(d2 > 0.0); // second derivative positive: Zeno premise
}

TEST_CASE("schedule_nu and phase_integral") {
    const ZenoSchedule s{1.0, 0.25, 2.0, 1.0, 100.0};
    CHECK(schedule_nu(s, 0.5) == 1.0);
    CHECK(schedule_nu(s, 2.5) == 0.25);
    CHECK(schedule_nu(s, 3.5) == 1.0); // next period

    CHECK(phase_integral(s, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(phase_integral(s, 3.0) == doctest::Approx(2.25).epsilon(1e-14));

    const ZenoSchedule eq{1.0, 0.5, 1.0, 1.0, 100.0};
    CHECK(phase_integral(eq, 2.5) ==
          doctest::Approx(riemann_phase(eq, 2.5)).epsilon(1e-9));

    CHECK_THROWS_AS(phase_integral(s, -1.0), NegativeTime);
    CHECK_THROWS_AS(schedule_nu(ZenoSchedule{1.0, 2.0, 1.0, 1.0, 5.0}, 0.1),
                    std::invalid_argument); // nu1 > nu0
}

TEST_CASE("zeno_probability: constant limit and continuity") {
    // nu1 = nu0: exact constant drive, P_L = cos^2(nu0*t)
    const ZenoSchedule flat{0.7, 0.7, 1.0, 1.0, 50.0};
    for (double t : {0.0, 0.4, 1.0, 2.3, 7.7}) {
        const double c = std::cos(0.7 * t);
        CHECK(zeno_probability(flat, t) == doctest::Approx(c * c).epsilon(1e-12));
    }

    // continuity across block boundaries
    const ZenoSchedule s{1.0, 0.005, 2.0, 0.25, 50.0};
    for (double edge : {2.0, 2.25, 4.25, 4.5}) {
        const double before = zeno_probability(s, edge - 1e-9);
        const double after = zeno_probability(s, edge + 1e-9);
        CHECK(std::abs(before - after) < 1e-7);
    }
}

TEST_CASE("zeno_probability: monotone suppression in nu1") {
    // P_L = cos^2(phase) decreases with the phase only while the phase is
    // below pi/2, so the suppression ordering holds for t up to a quarter
    // of the constant-drive Rabi period (nu0*t <= pi/2) — exactly the
    // window the Zeno comparison is about.
    const double nu0 = 1.0, t0 = 0.5, t1 = 0.125;
    for (double t : {0.3, 0.9, 1.5}) {
        double prev = -1.0;
        for (double nu1 : {0.5, 0.1, 0.01}) {
            const double pl = zeno_probability({nu0, nu1, t0, t1, 10.0}, t);
            if (prev >= 0.0) CHECK(pl >= prev - 1e-12);
            prev = pl;
        }
    }
    // the phase itself slows down monotonically in nu1 at every t
    for (double t : {0.9, 1.7, 2.9, 7.3}) {
        double prev_phase = 1e9;
        for (double nu1 : {0.5, 0.1, 0.01}) {
            const double ph = phase_integral({nu0, nu1, t0, t1, 10.0}, t);
            CHECK(ph <= prev_phase + 1e-12);
            prev_phase = ph;
        }
    }
}

TEST_CASE("zeno: default-style schedule beats the constant drive") {
    const double nu0 = 1.0;
    const double big_t = M_PI / (2.0 * nu0);
    ZenoSchedule s;
    s.nu0 = nu0;
    s.nu1 = 0.005 * nu0;
    s.t0 = big_t / 16.0;
    s.t1 = s.t0 / 8.0;
    s.horizon = big_t;
    for (int i = 1; i <= 1000; ++i) {
        const double t = big_t * i / 1000.0;
        const double c = std::cos(nu0 * t);
        CHECK(zeno_probability(s, t) >= c * c - 1e-12);
    }
}

TEST_CASE("zeno_adiabaticity_warning") {
    const ZenoSchedule fast{1.0, 0.005, 0.5, 0.0625, 10.0};
    CHECK(zeno_adiabaticity_warning(fast, 1.0).has_value()); // t1 < 2*pi
    const ZenoSchedule slow{1.0, 0.005, 100.0, 50.0, 1000.0};
    CHECK_FALSE(zeno_adiabaticity_warning(slow, 1.0).has_value());
}
