#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "tunnelwell/numerics.hpp"

using namespace tunnelwell;

namespace {

// Brute-force bisection, independent of find_root's Brent logic.
double bisect_oracle(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// High-order fixed-grid Simpson at 10^6 panels.
double simpson_oracle(const std::function<double(double)>& f, double a, double b) {
    const int n = 1000000;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

} // namespace

TEST_CASE("integrate: constant and polynomial") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("integrate: gaussian vs fixed-grid oracle") {
    auto f = [](double x) { return std::exp(-x * x); };
    const double got = integrate(f, -6.0, 6.0);
    const double oracle = simpson_oracle(f, -6.0, 6.0);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(got == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));
}

TEST_CASE("integrate: linearity over random polynomials") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng), c3 = coeff(rng);
        const double alpha = coeff(rng), beta = coeff(rng);
        auto f = [&](double x) { return c0 + c1 * x; };
        auto g = [&](double x) { return c2 * x * x + c3 * x * x * x; };
        auto combo = [&](double x) { return alpha * f(x) + beta * g(x); };
        const double lhs = integrate(combo, -1.0, 2.0);
        const double rhs = alpha * integrate(f, -1.0, 2.0) + beta * integrate(g, -1.0, 2.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("integrate: interval additivity") {
    auto f = [](double x) { return std::sin(3.0 * x) + x * x; };
    const double whole = integrate(f, 0.0, 2.0);
    const double parts = integrate(f, 0.0, 0.7) + integrate(f, 0.7, 2.0);
    CHECK(whole == doctest::Approx(parts).epsilon(1e-9));
}

TEST_CASE("integrate: rejects non-finite integrands") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0),
                    NonFiniteIntegrand);
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                              0.0, 1.0),
                    NonFiniteIntegrand);
}

TEST_CASE("find_root: linear, cubic, trigonometric") {
    CHECK(find_root([](double x) { return x - 2.0; }, 0.0, 5.0, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-12));

    auto cubic = [](double x) { return x * x * x - x - 0.125; };
    const double oracle = bisect_oracle(cubic, 0.5, 1.5);
    const double got = find_root(cubic, 0.5, 1.5, 1e-10);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(got == doctest::Approx(1.0574).epsilon(1e-4));

    CHECK(find_root([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-12) ==
          doctest::Approx(M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("find_root: bracket contract") {
    auto f = [](double x) { return std::tanh(x - 0.3); };
    const double x = find_root(f, -2.0, 2.0, 1e-8);
    CHECK(std::abs(f(x)) < 1e-7);
    CHECK(x > -2.0);
    CHECK(x < 2.0);
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-8),
                    NoSignChange);
}

TEST_CASE("lowest_eigenvalues: 2x2 and 3x3 analytic") {
    SymTridiag m2{{2.0, 2.0}, {-1.0}};
    auto ev2 = lowest_eigenvalues(m2, 2);
    REQUIRE(ev2.size() == 2);
    CHECK(ev2[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev2[1] == doctest::Approx(3.0).epsilon(1e-10));

    SymTridiag m3{{2.0, 2.0, 2.0}, {-1.0, -1.0}};
    auto ev3 = lowest_eigenvalues(m3, 1);
    CHECK(ev3[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("lowest_eigenvalues: discrete Laplacian closed form") {
    const int n = 100;
    SymTridiag m{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
    const double got = lowest_eigenvalues(m, 1)[0];
    const double s = std::sin(M_PI / (2.0 * (n + 1)));
    CHECK(got == doctest::Approx(4.0 * s * s).epsilon(1e-10));
}

TEST_CASE("lowest_eigenvalues: ordering, flip symmetry, Sturm consistency") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    const int n = 25;
    SymTridiag m;
    for (int i = 0; i < n; ++i) m.diag.push_back(d(rng));
    for (int i = 0; i + 1 < n; ++i) m.offdiag.push_back(d(rng));

    auto ev = lowest_eigenvalues(m, 5);
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(ev[i] <= ev[i + 1]);

    SymTridiag flipped{{m.diag.rbegin(), m.diag.rend()},
                       {m.offdiag.rbegin(), m.offdiag.rend()}};
    auto ev_flip = lowest_eigenvalues(flipped, 5);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        CHECK(ev[i] == doctest::Approx(ev_flip[i]).epsilon(1e-9));
    }

    for (std::size_t k = 1; k <= ev.size(); ++k) {
        CHECK(sturm_count(m, ev[k - 1] + 1e-8) >= static_cast<int>(k));
    }
}

TEST_CASE("lowest_eigenvalues: dimension guards") {
    SymTridiag tiny{{1.0}, {}};
    CHECK_THROWS_AS(lowest_eigenvalues(tiny, 1), DimensionTooSmall);
    SymTridiag m{{1.0, 2.0}, {-0.5}};
    CHECK_THROWS_AS(lowest_eigenvalues(m, 3), std::invalid_argument);
}
