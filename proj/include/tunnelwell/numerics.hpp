#pragma once

#include <functional>
#include <vector>

#include "tunnelwell/errors.hpp"

namespace tunnelwell {

/// Tolerances for adaptive quadrature. The estimate E satisfies
/// |E - I| <= max(abs_tol, rel_tol*|I|) under Simpson's error model.
struct Quadrature {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
};

/// Adaptive Simpson integration of f over [a, b] with Richardson error
/// estimate. Deterministic for identical inputs.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Quadrature& q = {});

/// Brent root bracketing: f(lo)*f(hi) < 0 required. Returns x with the
/// final bracket width <= tol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

/// Symmetric tridiagonal matrix. offdiag.size() == diag.size() - 1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

/// Number of eigenvalues of m strictly below shift (Sturm sequence count).
int sturm_count(const SymTridiag& m, double shift);

/// The k algebraically smallest eigenvalues, ascending, by Sturm bisection.
/// Absolute accuracy ~1e-12 of the Gershgorin spectral span.
std::vector<double> lowest_eigenvalues(const SymTridiag& m, int k);

} // namespace tunnelwell
