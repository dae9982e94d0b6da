#pragma once

// Core model of the diatomic (alternating site energy) waveguide lattice.
//
// The field amplitude u_n(z) in guide n obeys
//
//     i du_n/dz = omega (-1)^n u_n + alpha (u_{n+1} + u_{n-1}),
//
// i.e. a Schroedinger-like equation i d|psi>/dz = H |psi| with
// H = omega (-1)^n_hat + alpha (V + V^dag), where V|n> = |n-1> and
// V^dag|n> = |n+1> are the shift (Susskind-Glogower) operators.
//
// All lattice vectors here live on a symmetric window n = -N..N stored in
// ascending n order (index i holds n = i - N). Truncation is hard: amplitude
// shifted past the window edge is dropped.

#include <complex>
#include <vector>

namespace dilat {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Physical constants of the lattice, both per unit propagation distance.
struct LatticeParams {
    double omega = 1.0; // alternating site-energy half-difference, > 0
    double alpha = 0.3; // nearest-neighbor coupling, >= 0

    // Throws std::invalid_argument when omega <= 0, alpha < 0, or non-finite.
    void validate() const;
};

// Complex amplitudes u_n on the window n = -window..window at distance z,
// together with the guide m that carried all the light at z = 0.
struct FieldState {
    int window = 0;
    int source = 0;
    double z = 0.0;
    cvec amplitudes; // size 2*window+1, ascending n

    int size() const { return 2 * window + 1; }
    cplx& at(int n) { return amplitudes[static_cast<size_t>(n + window)]; }
    const cplx& at(int n) const { return amplitudes[static_cast<size_t>(n + window)]; }

    // Sum of |u_n|^2, accumulated in ascending n order.
    double norm_sq() const;

    // Copy restricted to a smaller window (new_window <= window).
    FieldState truncated(int new_window) const;
};

// The plane-wave probe |phi> with entries e^{i n phi}; an eigenvector of H^2
// on the infinite lattice with eigenvalue Omega^2(phi) = omega^2 + 4 alpha^2 cos^2 phi.
struct PlaneWaveProbe {
    double phi = 0.0;
    int window = 0;
    cvec values;
};

// u_n(0) = delta_{n,source}. Throws std::domain_error when |source| > window.
FieldState make_initial_state(int window, int source);

PlaneWaveProbe make_plane_wave(int window, double phi);

// (Hv)_n = omega (-1)^n v_n + alpha (v_{n+1} + v_{n-1}), out-of-window
// neighbors treated as zero. Vector length must be odd (2N+1).
cvec apply_hamiltonian(const LatticeParams& params, const cvec& v);

enum class Shift {
    down, // V:     coefficient of |n+1> moves to |n>
    up    // V^dag: coefficient of |n> moves to |n+1>
};

// Shift all coefficients by one site; the coefficient leaving the window is dropped.
cvec apply_shift(Shift direction, const cvec& v);

// (-1)^e with e evaluated in exact integer arithmetic.
inline int parity_sign(long long e) { return (e % 2 != 0) ? -1 : 1; }

struct SignedShift {
    int target;
    int sign; // +1 or -1
};

// [(-1)^n_hat V]^j |m> = sign |m-j> with sign = (-1)^{jm - j(j+1)/2},
// valid for j of either sign.
SignedShift signed_shift_power(long long j, long long m);

} // namespace dilat
