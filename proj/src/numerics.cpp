#include "tunnelwell/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tunnelwell {

namespace {

double checked_eval(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw NonFiniteIntegrand("integrand not finite at x = " + std::to_string(x));
    }
    return v;
}

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = checked_eval(f, lm);
    const double frm = checked_eval(f, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol) {
        return left + right + err;
    }
    if (depth >= max_depth) {
        throw DepthExceeded("adaptive Simpson: depth limit reached on [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Quadrature& q) {
    if (!(a < b)) {
        throw std::invalid_argument("integrate: requires a < b");
    }
    const double fa = checked_eval(f, a);
    const double fb = checked_eval(f, b);
    const double fm = checked_eval(f, 0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = std::max(q.abs_tol, q.rel_tol * std::abs(whole));
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, q.max_depth);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw NoSignChange("find_root: f(lo) and f(hi) have the same sign");
    }
    // Brent's method: inverse quadratic interpolation with bisection fallback.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            return b;
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, qq;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                const double q2 = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q2 * (q2 - r) - (b - a) * (r - 1.0));
                qq = (q2 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::abs(tol1 * qq), std::abs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

int sturm_count(const SymTridiag& m, double shift) {
    const std::size_t n = m.diag.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sq = (i > 0) ? m.offdiag[i - 1] * m.offdiag[i - 1] : 0.0;
        q = (m.diag[i] - shift) - sq / q;
        if (q < 0.0) ++count;
        if (q == 0.0) q = 1e-300;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiag& m, int k) {
    const std::size_t n = m.diag.size();
    if (n < 2 || m.offdiag.size() + 1 != n) {
        throw DimensionTooSmall("lowest_eigenvalues: dimension must be >= 2");
    }
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("lowest_eigenvalues: k out of range");
    }
    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(m.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(m.offdiag[i]);
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    const double span = hi - lo;
    const double tol = std::max(1e-12 * span,
                                4.0 * std::numeric_limits<double>::epsilon() *
                                    std::max(std::abs(lo), std::abs(hi)));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    double a = lo;
    for (int j = 1; j <= k; ++j) {
        double x0 = a, x1 = hi;
        while (x1 - x0 > tol) {
            const double mid = 0.5 * (x0 + x1);
            if (mid <= x0 || mid >= x1) break; // bottomed out in ulps
            if (sturm_count(m, mid) >= j) {
                x1 = mid;
            } else {
                x0 = mid;
            }
        }
        out.push_back(0.5 * (x0 + x1));
        a = x0; // next eigenvalue cannot be below this one
    }
    return out;
}

} // namespace tunnelwell
