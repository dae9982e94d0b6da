#pragma once

// Closed-form solution of the lattice by quadrature over the plane-wave basis.
//
// With Omega(phi) = sqrt(omega^2 + 4 alpha^2 cos^2 phi), single-guide input
// u_n(0) = delta_{n,m} evolves to
//
//   u_n(z) = (1/2pi) Int_{-pi}^{pi} dphi e^{-i(m-n)phi}
//            { cos(Omega z) - i [2 alpha cos phi + (-1)^n omega] sin(Omega z)/Omega }.
//
// The integrand is smooth and 2pi-periodic, so the composite trapezoid rule
// over the full period converges spectrally; node doubling provides the
// a-posteriori error estimate |result(2M) - result(M)|.
//
// This solver has no lattice-truncation error: each u_n is an independent
// integral over the infinite-lattice dispersion. Sums reported to callers
// accumulate in ascending node order, then ascending n.

#include "dilat/core.hpp"

namespace dilat {

struct QuadratureConfig {
    int nodes = 256;         // initial node count, >= 16 and even
    double tolerance = 1e-10;
    int max_doublings = 8;

    void validate() const;
};

// Omega(phi) >= omega > 0.
double omega_phi(const LatticeParams& params, double phi);

// Single amplitude u_n(z). Throws ConvergenceError when node doubling fails
// to reach cfg.tolerance within cfg.max_doublings.
cplx exact_amplitude(const LatticeParams& params, int n, int m, double z,
                     const QuadratureConfig& cfg = {});

// All amplitudes on |n| <= window, sharing one set of quadrature nodes.
FieldState exact_field(const LatticeParams& params, int m, double z, int window,
                       const QuadratureConfig& cfg = {});

} // namespace dilat
