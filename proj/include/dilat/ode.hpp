#pragma once

// Brute-force reference: classical fixed-step RK4 on the truncated system
//
//   du_n/dz = -i [ omega (-1)^n u_n + alpha (u_{n+1} + u_{n-1}) ],  |n| <= N.
//
// The truncated Hamiltonian is Hermitian, so the exact flow is unitary and
// any norm drift is pure integrator error (O(step^4) globally). Fidelity to
// the infinite lattice is guarded separately by the edge-mass check
// |u_{+-N}|^2 <= edge_mass_tolerance at every requested distance.

#include <optional>
#include <vector>

#include "dilat/core.hpp"

namespace dilat {

struct OdeConfig {
    double step = 1e-3;
    std::optional<int> window;           // default: ceil(4 alpha z_max) + 20
    double edge_mass_tolerance = 1e-10;
    double norm_drift_tolerance = 1e-8;

    void validate() const;
};

// Window heuristic from the ballistic bound on the lattice group velocity
// (< 2 alpha), with margin for the evanescent tail.
int default_ode_window(double alpha, double z_max);

// One FieldState per entry of z_targets (ascending, >= 0). Each target lands
// exactly on an integration grid point. Throws WindowTooSmallError naming the
// first offending z when the edge-mass check fails, ConvergenceError when the
// norm drifts beyond norm_drift_tolerance.
std::vector<FieldState> propagate(const LatticeParams& params, int m,
                                  const std::vector<double>& z_targets,
                                  const OdeConfig& cfg = {});

} // namespace dilat
