#pragma once

// Small-rotation approximate propagator.
//
// For alpha << omega the unitary conjugation
//     R = exp[ (alpha/2 omega) (-1)^n_hat (V + V^dag) ]
// turns H into the block-integrable
//     H_R ~ omega (-1)^n_hat + (alpha^2/2 omega) (-1)^n_hat (V + V^dag)^2,
// whose propagator factorizes into a diagonal phase and a next-nearest
// shift exponential. Expanding R and the shift exponential in Bessel series
// gives the amplitudes as a double sum: with x_k = alpha^2 z / omega,
// x_j = alpha/omega and W = (omega^2 + alpha^2)/omega,
//
//   u_n(z) = (-1)^{(m(m-1)-n(n-1))/2} sum_{k,j} (-1)^{k(m-j)}
//            e^{-i (-1)^{m-j} W z} i^k J_k(x_k) J_j(x_j) J_{n-m+2k+j}(x_j).
//
// The composition is exactly unitary (R orthogonal, H_R Hermitian), so the
// only norm loss is series truncation. Sums accumulate deterministically:
// k ascending by |k| pairing +/-, then j ascending by |j| pairing +/-.

#include "dilat/core.hpp"

namespace dilat {

struct SeriesTruncation {
    double tail_tolerance = 1e-12;
    int k_max = 1; // slow index cutoff (used when auto_cutoff is false)
    int j_max = 1; // rotation index cutoff
    bool auto_cutoff = true;

    void validate() const;
};

// The cutoffs actually used for (params, z): when auto_cutoff is set they are
// derived from the Bessel decay bound at tail_tolerance plus a margin of 5.
SeriesTruncation resolve_truncation(const LatticeParams& params, double z,
                                    const SeriesTruncation& trunc);

// General source guide m.
cplx rotation_amplitude(const LatticeParams& params, int n, int m, double z,
                        const SeriesTruncation& trunc = {});

// Specialized centered-source form, phase (-1)^{n(n-1)/2}; must agree with
// rotation_amplitude(n, 0, z) to series tolerance.
cplx rotation_amplitude_centered(const LatticeParams& params, int n, double z,
                                 const SeriesTruncation& trunc = {});

FieldState rotation_field(const LatticeParams& params, int m, double z, int window,
                          const SeriesTruncation& trunc = {});

// (H_R v)_n = (-1)^n [ (omega + alpha^2/omega) v_n
//                      + (alpha^2/2 omega) (v_{n+2} + v_{n-2}) ], edges truncated.
cvec rotation_effective_hamiltonian_apply(const LatticeParams& params, const cvec& v);

// R (sign = +1) or R^dag (sign = -1) via the Bessel expansion
// sum_j J_j(alpha/omega) [(-1)^n_hat V]^j, truncated at the auto cutoff.
cvec rotation_operator_apply(const LatticeParams& params, int sign, const cvec& v);

// True when alpha/omega > 0.5, outside the regime the approximation targets.
bool rotation_regime_warning(const LatticeParams& params);

} // namespace dilat
