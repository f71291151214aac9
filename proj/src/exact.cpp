#include "tunnelwell/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelwell {

Grid build_grid(const WellGeometry& g, int n, double m) {
    if (!(g.sigma_L > 0.0) || !(g.sigma_R > 0.0)) {
        throw GeometryMissing("build_grid: well geometry lacks localization lengths");
    }
    if (n < 8 || m < 3.0) {
        throw std::invalid_argument("build_grid: requires N >= 8 and M >= 3");
    }
    Grid grid;
    grid.x_min = g.a_L - m * g.sigma_L;
    grid.x_max = g.a_R + m * g.sigma_R;
    const double dx_target = std::min(g.sigma_L, g.sigma_R) / n;
    grid.n_points = static_cast<int>(std::ceil((grid.x_max - grid.x_min) / dx_target)) + 1;
    if (grid.n_points < 16) grid.n_points = 16;
    grid.dx = (grid.x_max - grid.x_min) / (grid.n_points - 1);
    return grid;
}

SymTridiag discretize(const Potential& p, const Grid& grid) {
    const int n_in = grid.n_points - 2; // Dirichlet endpoints excluded
    SymTridiag t;
    t.diag.resize(n_in);
    t.offdiag.assign(n_in - 1, -0.5 / (grid.dx * grid.dx));
    const double kinetic = 1.0 / (grid.dx * grid.dx);
    for (int i = 0; i < n_in; ++i) {
        const double x = grid.x_min + (i + 1) * grid.dx;
        t.diag[i] = kinetic + p.eval(x);
    }
    return t;
}

namespace {

SpectrumRow solve_one(const Potential& p, const WellGeometry& g, int n, double m,
                      Grid* grid_out) {
    const Grid grid = build_grid(g, n, m);
    const auto ev = lowest_eigenvalues(discretize(p, grid), 2);
    if (grid_out) *grid_out = grid;
    return SpectrumRow{n, m, ev[0], ev[1]};
}

} // namespace

SpectrumResult splitting_exact(const Potential& p, int n, double m) {
    const WellGeometry g = characterize(p);
    SpectrumResult res;
    SpectrumRow prev = solve_one(p, g, n, m, &res.grid);
    res.history.push_back(prev);
    while (true) {
        const int n2 = prev.n_param * 2;
        if (n2 > 1600) break;
        SpectrumRow next = solve_one(p, g, n2, m, &res.grid);
        res.history.push_back(next);
        const double s_prev = prev.e1 - prev.e0;
        const double s_next = next.e1 - next.e0;
        prev = next;
        if (s_next != 0.0 && std::abs(s_prev / s_next - 1.0) < 1e-4) {
            res.converged = true;
            break;
        }
    }
    res.e0 = prev.e0;
    res.e1 = prev.e1;
    res.splitting = prev.e1 - prev.e0;
    return res;
}

std::vector<SpectrumRow> convergence_scan(const Potential& p,
                                          const std::vector<int>& ns,
                                          const std::vector<double>& ms) {
    if (ns.empty() || ms.empty()) {
        throw std::invalid_argument("convergence_scan: N and M lists must be nonempty");
    }
    const WellGeometry g = characterize(p);
    std::vector<SpectrumRow> rows;
    rows.reserve(ns.size() * ms.size());
    for (int n : ns) {
        for (double m : ms) {
            rows.push_back(solve_one(p, g, n, m, nullptr));
        }
    }
    return rows;
}

} // namespace tunnelwell
