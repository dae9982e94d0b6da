#pragma once

// Integer-order Bessel functions of the first kind J_k(x).
//
// Two regimes: the ascending power series
//     J_k(x) = sum_s (-1)^s (x/2)^{k+2s} / (s! (k+s)!)
// for |x| <= 12, and Miller's backward recurrence normalized with
//     J_0(x) + 2 sum_{k even>0} J_k(x) = 1
// for larger arguments. Negative order and negative argument are resolved
// through J_{-k}(x) = J_k(-x) = (-1)^k J_k(x).
//
// Accuracy target is absolute: |error| <= cfg.abs_tolerance for |x| <= 1e4
// and |order| <= 1e3.

#include <vector>

namespace dilat {

struct BesselEvalConfig {
    double abs_tolerance = 1e-14;
    int max_terms = 16384; // safety cap on series length / recurrence start order

    void validate() const; // abs_tolerance > 0, max_terms >= 64
};

// J_order(x). Throws std::domain_error for non-finite x.
double bessel_j(int order, double x, const BesselEvalConfig& cfg = {});

// [J_0(x), ..., J_max_order(x)].
std::vector<double> bessel_j_row(int max_order, double x, const BesselEvalConfig& cfg = {});

// Smallest K with (|x|/2)^K / K! < tol/10; the bound |J_K(x)| <= (|x|/2)^K / K!
// makes this a rigorous tail cutoff for series over Bessel orders.
int bessel_tail_order(double x, double tol);

} // namespace dilat
