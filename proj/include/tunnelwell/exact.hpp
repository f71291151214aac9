#pragma once

#include <vector>

#include "tunnelwell/numerics.hpp"
#include "tunnelwell/potential.hpp"

namespace tunnelwell {

struct Grid {
    double x_min = 0, x_max = 0;
    int n_points = 0;
    double dx = 0;
};

struct SpectrumRow {
    int n_param = 0;   // N in dx = min(sigma_L, sigma_R)/N
    double m_param = 0;
    double e0 = 0, e1 = 0;
};

struct SpectrumResult {
    double e0 = 0, e1 = 0;
    double splitting = 0; // e1 - e0
    Grid grid;
    bool converged = false;
    std::vector<SpectrumRow> history;
};

/// x_min = a_L - M*sigma_L, x_max = a_R + M*sigma_R, dx = min(sigma)/N.
Grid build_grid(const WellGeometry& g, int n, double m);

/// Dirichlet finite-difference Hamiltonian over interior grid points:
/// diag = 1/dx^2 + V(x_i), offdiag = -1/(2*dx^2).
SymTridiag discretize(const Potential& p, const Grid& grid);

/// E0, E1 by Sturm bisection, with automatic grid-density doubling until
/// the splitting changes by < 1e-4 relative (or N reaches 1600).
SpectrumResult splitting_exact(const Potential& p, int n = 200, double m = 8.0);

/// (N, M) cross product of eigenvalue solves.
std::vector<SpectrumRow> convergence_scan(const Potential& p,
                                          const std::vector<int>& ns,
                                          const std::vector<double>& ms);

} // namespace tunnelwell
