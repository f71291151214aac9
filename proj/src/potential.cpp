#include "tunnelwell/potential.hpp"

#include <algorithm>
#include <cmath>

#include "tunnelwell/numerics.hpp"

namespace tunnelwell {

namespace {

constexpr double kEtaMaxQuartic = 1.5396007178390020; // 8/(3*sqrt(3))

double num_deriv(const Potential& p, double x) {
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    return (p.eval(x + h) - p.eval(x - h)) / (2.0 * h);
}

double num_second_deriv(const Potential& p, double x) {
    const double h = std::max(1e-4, 1e-4 * std::abs(x));
    return (p.eval(x + h) - 2.0 * p.eval(x) + p.eval(x - h)) / (h * h);
}

void resonance_checks(WellGeometry& g) {
    // Boundary: a localized level reaching the opposite well's first
    // excited level, measured with the shallow side's own frequency
    // (this reproduces the quartic boundary eta = 0.50, 0.25, 0.12 at
    // V0 = 1, 2, 4).
    const double d = g.eps_L - g.eps_R;
    if (d >= g.omega_L) {
        throw ResonanceRegime("two-level model invalid: eps_L - eps_R = " +
                              std::to_string(d) + " >= omega_L = " +
                              std::to_string(g.omega_L));
    }
    if (-d >= g.omega_R) {
        throw ResonanceRegime("two-level model invalid: eps_R - eps_L = " +
                              std::to_string(-d) + " >= omega_R = " +
                              std::to_string(g.omega_R));
    }
    if (d >= 0.9 * g.omega_L || -d >= 0.9 * g.omega_R) {
        g.warnings.push_back("near-resonance: within 10% of the two-level validity boundary");
    }
    if (!(g.v_top - g.v_L_min > g.omega_L)) {
        g.warnings.push_back("LocalizationViolated: left barrier height below hbar*omega_L");
    }
    if (!(g.v_top - g.v_R_min > g.omega_R)) {
        g.warnings.push_back("LocalizationViolated: right barrier height below hbar*omega_R");
    }
}

} // namespace

Potential Potential::quartic(double v0, double eta) {
    if (!(v0 > 0.0)) throw std::invalid_argument("quartic: V0 must be positive");
    if (eta < 0.0 || eta >= kEtaMaxQuartic) {
        throw AsymmetryTooLarge("quartic: requires 0 <= eta < 8/(3*sqrt(3))");
    }
    Potential p;
    p.kind_ = PotentialKind::Quartic;
    p.v0_ = v0;
    p.eta_ = eta;
    p.a_ = std::sqrt(8.0 * v0);
    p.window_ = {-3.0 * p.a_ - 15.0, 3.0 * p.a_ + 15.0};
    return p;
}

Potential Potential::parabolic(double v0, double eta) {
    if (!(v0 > 0.0)) throw std::invalid_argument("parabolic: V0 must be positive");
    if (!(eta < 2.0 * v0) || !(eta < 1.0)) {
        throw AsymmetryTooLarge("parabolic: requires eta < min(1, 2*V0/(hbar*omega))");
    }
    Potential p;
    p.kind_ = PotentialKind::Parabolic;
    p.v0_ = v0;
    p.eta_ = eta;
    p.a_ = std::sqrt(2.0 * v0);
    p.omega_eta_ = 1.0 - eta;
    p.a_eta_ = p.a_ * std::sqrt(1.0 - eta / (2.0 * v0)) / (1.0 - eta);
    p.v_eta_ = 0.5 * p.omega_eta_ * p.omega_eta_ * p.a_eta_ * p.a_eta_;
    p.window_ = {-p.a_ - 15.0, p.a_eta_ + 15.0};
    return p;
}

Potential Potential::custom(const Expr& expr, std::map<std::string, double> bindings,
                            std::pair<double, double> window) {
    if (!(window.first < window.second) || !std::isfinite(window.first) ||
        !std::isfinite(window.second)) {
        throw std::invalid_argument("custom: window must be finite with x_min < x_max");
    }
    for (const auto& name : expr.params()) {
        if (bindings.find(name) == bindings.end()) {
            throw MissingBinding("custom: no binding for parameter '" + name + "'");
        }
    }
    Potential p;
    p.kind_ = PotentialKind::Custom;
    p.expr_ = expr;
    p.bindings_ = std::move(bindings);
    p.window_ = window;
    return p;
}

double Potential::eval(double x) const {
    switch (kind_) {
    case PotentialKind::Quartic: {
        const double t = x / a_;
        const double s = t * t - 1.0;
        return v0_ * (s * s - 1.0 - eta_ * t);
    }
    case PotentialKind::Parabolic: {
        if (x < 0.0) {
            const double t = x / a_ + 1.0;
            return v0_ * (t * t - 1.0);
        }
        const double t = x / a_eta_ - 1.0;
        return v_eta_ * (t * t - 1.0);
    }
    case PotentialKind::Custom:
        return expr_->eval(x, bindings_);
    }
    return 0.0;
}

double Potential::derivative(double x) const {
    switch (kind_) {
    case PotentialKind::Quartic: {
        const double t = x / a_;
        return v0_ * (4.0 * t * (t * t - 1.0) - eta_) / a_;
    }
    case PotentialKind::Parabolic:
        if (x < 0.0) return 2.0 * v0_ * (x / a_ + 1.0) / a_;
        return 2.0 * v_eta_ * (x / a_eta_ - 1.0) / a_eta_;
    case PotentialKind::Custom:
        return num_deriv(*this, x);
    }
    return 0.0;
}

double Potential::second_derivative(double x) const {
    switch (kind_) {
    case PotentialKind::Quartic: {
        const double t = x / a_;
        return v0_ * (12.0 * t * t - 4.0) / (a_ * a_);
    }
    case PotentialKind::Parabolic:
        if (x < 0.0) return 2.0 * v0_ / (a_ * a_);
        return 2.0 * v_eta_ / (a_eta_ * a_eta_);
    case PotentialKind::Custom:
        return num_second_deriv(*this, x);
    }
    return 0.0;
}

std::array<double, 3> quartic_stationary(double eta) {
    if (eta < 0.0 || eta >= kEtaMaxQuartic) {
        throw AsymmetryTooLarge("quartic_stationary: requires 0 <= eta < 8/(3*sqrt(3))");
    }
    if (eta == 0.0) {
        return {-1.0, 0.0, 1.0};
    }
    const double phase =
        std::atan(std::sqrt(std::pow(8.0 / (3.0 * std::sqrt(3.0) * eta), 2) - 1.0)) / 3.0;
    const double c = 2.0 / std::sqrt(3.0);
    const double x_right = c * std::cos(phase);                       // n = 0
    const double x_left = c * std::cos(2.0 * M_PI / 3.0 + phase);     // n = 1
    const double x_max = c * std::cos(4.0 * M_PI / 3.0 + phase);      // n = 2
    return {x_left, x_max, x_right};
}

std::pair<double, double> quartic_frequencies(double eta) {
    const auto st = quartic_stationary(eta);
    const auto freq = [](double u) { return std::sqrt(1.5 * u * u - 0.5); };
    return {freq(st[0]), freq(st[2])};
}

Potential parabolic_family(double v0, double eta) {
    return Potential::parabolic(v0, eta);
}

namespace {

WellGeometry characterize_quartic(const Potential& p) {
    const double a = p.quartic_a();
    const auto st = quartic_stationary(p.eta());
    WellGeometry g;
    g.a_L = st[0] * a;
    g.a_C = st[1] * a;
    g.a_R = st[2] * a;
    g.v_top = p.eval(g.a_C);
    g.v_L_min = p.eval(g.a_L);
    g.v_R_min = p.eval(g.a_R);
    const auto [wl, wr] = quartic_frequencies(p.eta());
    g.omega_L = wl;
    g.omega_R = wr;
    g.eps_L = g.v_L_min + 0.5 * g.omega_L;
    g.eps_R = g.v_R_min + 0.5 * g.omega_R;
    g.sigma_L = 1.0 / std::sqrt(g.omega_L);
    g.sigma_R = 1.0 / std::sqrt(g.omega_R);
    return g;
}

WellGeometry characterize_parabolic(const Potential& p) {
    WellGeometry g;
    g.cusp = true; // derivative jumps at x = 0; V_top = V(0) = 0
    g.a_L = -p.parabolic_a();
    g.a_C = 0.0;
    g.a_R = p.parabolic_a_eta();
    g.v_top = 0.0;
    g.v_L_min = -p.v0();
    g.v_R_min = -p.parabolic_v_eta();
    g.omega_L = 1.0;
    g.omega_R = p.parabolic_omega_eta();
    g.eps_L = g.v_L_min + 0.5 * g.omega_L;
    g.eps_R = g.v_R_min + 0.5 * g.omega_R;
    g.sigma_L = 1.0;
    g.sigma_R = 1.0 / std::sqrt(g.omega_R);
    return g;
}

WellGeometry characterize_custom(const Potential& p) {
    // Uniform derivative-sign scan, then Brent refinement.
    constexpr int kScan = 4096;
    const auto [lo, hi] = p.window();
    const double step = (hi - lo) / kScan;
    std::vector<double> stationary;
    double xprev = lo;
    double dprev = p.derivative(xprev);
    for (int i = 1; i <= kScan; ++i) {
        const double x = lo + i * step;
        const double d = p.derivative(x);
        if (dprev == 0.0) {
            stationary.push_back(xprev);
        } else if (dprev * d < 0.0) {
            stationary.push_back(find_root([&p](double t) { return p.derivative(t); },
                                           xprev, x, 1e-13 * std::max(1.0, std::abs(hi))));
        }
        xprev = x;
        dprev = d;
    }
    if (stationary.size() != 3) {
        throw NotDoubleWell("expected 3 stationary points in window, found " +
                            std::to_string(stationary.size()));
    }
    std::sort(stationary.begin(), stationary.end());
    WellGeometry g;
    g.a_L = stationary[0];
    g.a_C = stationary[1];
    g.a_R = stationary[2];
    const double kL = p.second_derivative(g.a_L);
    const double kR = p.second_derivative(g.a_R);
    const double kC = p.second_derivative(g.a_C);
    if (!(kL > 0.0) || !(kR > 0.0) || kC > 0.0) {
        throw NotDoubleWell("stationary points are not minimum/maximum/minimum");
    }
    g.v_top = p.eval(g.a_C);
    g.v_L_min = p.eval(g.a_L);
    g.v_R_min = p.eval(g.a_R);
    g.omega_L = std::sqrt(kL);
    g.omega_R = std::sqrt(kR);
    g.eps_L = g.v_L_min + 0.5 * g.omega_L;
    g.eps_R = g.v_R_min + 0.5 * g.omega_R;
    g.sigma_L = 1.0 / std::sqrt(g.omega_L);
    g.sigma_R = 1.0 / std::sqrt(g.omega_R);
    return g;
}

} // namespace

WellGeometry characterize(const Potential& p) {
    WellGeometry g;
    switch (p.kind()) {
    case PotentialKind::Quartic: g = characterize_quartic(p); break;
    case PotentialKind::Parabolic: g = characterize_parabolic(p); break;
    case PotentialKind::Custom: g = characterize_custom(p); break;
    }
    if (!(g.v_top > g.v_L_min) || !(g.v_top > g.v_R_min)) {
        throw NotDoubleWell("barrier top does not exceed both minima");
    }
    resonance_checks(g);
    return g;
}

} // namespace tunnelwell
