#pragma once

// Rayleigh-Schroedinger perturbative solution in powers of alpha.
//
// Treating omega (-1)^n_hat as the unperturbed part and V + V^dag as the
// perturbation, the order-k contribution to u_n(z) is
//
//   alpha^k (-1)^{mk} / (2^k floor(k/2)! omega^k)
//     * { e^{-i z omega s} P_k(xi) + e^{+i z omega s} Q_k(xi) } * C(k, (k-(n-m))/2)
//
// with s = (-1)^{m+k} and xi = 2 i z omega s, reaching only guides with
// |n-m| <= k and n-m == k (mod 2). P_k and Q_k carry exact integer
// coefficients generated by
//
//   R_{2j}   = (2j-1) R_{2j-1} - xi R_{2j-2}
//   R_{2j+1} = -2 R_{2j} + xi R_{2j-1}
//
// from P_0 = 1, P_1 = -1, Q_0 = 0, Q_1 = 1. Both recurrence steps are pinned
// term-by-term against dyson_series_oracle, an independent evaluation of the
// same series by exact iterated integrals (see tests).
//
// The series is secular: accuracy at fixed order degrades as z grows.

#include "dilat/core.hpp"

#include <vector>

namespace dilat {

struct PolynomialPair {
    int order = 0;
    std::vector<long long> p_coeffs; // ascending degree
    std::vector<long long> q_coeffs;
};

struct RsOrderConfig {
    int max_order = 3;

    void validate() const; // 0 <= max_order <= 12 (coefficient-growth cap)
};

// Exact integer-coefficient P_k, Q_k for 0 <= k <= 12.
PolynomialPair rs_polynomials(int k);

// The order-k term alone (alpha^k included).
cplx rs_order_term(const LatticeParams& params, int n, int m, double z, int k);

// Sum of orders 0..cfg.max_order.
cplx rs_amplitude(const LatticeParams& params, int n, int m, double z,
                  const RsOrderConfig& cfg = {});

FieldState rs_field(const LatticeParams& params, int m, double z, int window,
                    const RsOrderConfig& cfg = {});

// Independent check: the exact order-k term computed by iterated
// interaction-picture integrals. Every hop from site p multiplies by
// -i alpha e^{-2 i omega (-1)^p s}; the nested integrals are evaluated with
// exact antiderivatives of s^p e^{i mu s}, never touching the P/Q
// recurrences. Supported for order <= 8.
cplx dyson_series_oracle(const LatticeParams& params, int n, int m, double z, int order);

} // namespace dilat
