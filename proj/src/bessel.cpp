#include "dilat/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dilat {

namespace {

constexpr double kSeriesCutoff = 12.0;

int reflection_sign(int k) { return (k % 2 != 0) ? -1 : 1; }

// Ascending series at k >= 0, x >= 0. The leading term is formed in log
// space so large orders underflow to zero instead of overflowing partway.
double series_j(int k, double x, const BesselEvalConfig& cfg) {
    if (x == 0.0)
        return k == 0 ? 1.0 : 0.0;
    const double half = 0.5 * x;
    double term = std::exp(k * std::log(half) - std::lgamma(static_cast<double>(k) + 1.0));
    if (term == 0.0)
        return 0.0;
    double sum = term;
    const double h2 = half * half;
    for (int s = 1; s < cfg.max_terms; ++s) {
        term *= -h2 / (static_cast<double>(s) * (static_cast<double>(k) + s));
        sum += term;
        if (std::fabs(term) < 0.1 * cfg.abs_tolerance)
            break;
    }
    return sum;
}

// Miller backward recurrence for the whole row J_0..J_max_order at x > 0,
// normalized with J_0 + 2 sum_{k even} J_{2k} = 1. The downward pass is
// rescaled whenever entries grow large, so the unnormalized minimal
// solution never overflows.
std::vector<double> miller_row(int max_order, double x, const BesselEvalConfig& cfg) {
    const double big = std::max(static_cast<double>(max_order), x);
    int start = max_order + static_cast<int>(std::ceil(2.0 * std::sqrt(big))) + 40;
    if (x > max_order)
        start = static_cast<int>(std::ceil(x)) + static_cast<int>(std::ceil(2.0 * std::sqrt(x))) + 40;
    if (start % 2 != 0)
        ++start;
    if (start > cfg.max_terms)
        start = cfg.max_terms; // safety cap; accuracy degrades beyond it

    std::vector<double> row(static_cast<size_t>(max_order) + 1, 0.0);
    constexpr double rescale_at = 1e250;

    double fp1 = 0.0;           // f_{k+1}
    double fk = 1e-300;         // f_k, arbitrary small seed
    double norm = 0.0;          // accumulates f_0 + 2 sum f_{2j}
    for (int k = start; k >= 0; --k) {
        const double fm1 = (2.0 * (k + 1) / x) * fk - fp1; // f_{k-1}
        fp1 = fk;
        fk = fm1;
        if (k <= max_order)
            row[static_cast<size_t>(k)] = fk;
        if (k % 2 == 0)
            norm += (k == 0 ? 1.0 : 2.0) * fk;
        if (std::fabs(fk) > rescale_at) {
            fk /= rescale_at;
            fp1 /= rescale_at;
            norm /= rescale_at;
            for (double& r : row)
                r /= rescale_at;
        }
    }
    for (double& r : row)
        r /= norm;
    return row;
}

} // namespace

void BesselEvalConfig::validate() const {
    if (!(abs_tolerance > 0.0))
        throw std::invalid_argument("abs_tolerance must be > 0");
    if (max_terms < 64)
        throw std::invalid_argument("max_terms must be >= 64");
}

double bessel_j(int order, double x, const BesselEvalConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j: non-finite argument");
    int sign = 1;
    if (order < 0) {
        order = -order;
        sign *= reflection_sign(order);
    }
    double ax = x;
    if (ax < 0.0) {
        ax = -ax;
        sign *= reflection_sign(order);
    }
    if (ax <= kSeriesCutoff)
        return sign * series_j(order, ax, cfg);
    return sign * miller_row(order, ax, cfg)[static_cast<size_t>(order)];
}

std::vector<double> bessel_j_row(int max_order, double x, const BesselEvalConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(x))
        throw std::domain_error("bessel_j_row: non-finite argument");
    if (max_order < 0)
        throw std::domain_error("bessel_j_row: max_order must be >= 0");
    const double ax = std::fabs(x);
    std::vector<double> row;
    if (ax <= kSeriesCutoff) {
        row.resize(static_cast<size_t>(max_order) + 1);
        for (int k = 0; k <= max_order; ++k)
            row[static_cast<size_t>(k)] = series_j(k, ax, cfg);
    } else {
        row = miller_row(max_order, ax, cfg);
    }
    if (x < 0.0) {
        for (int k = 1; k <= max_order; k += 2)
            row[static_cast<size_t>(k)] = -row[static_cast<size_t>(k)];
    }
    return row;
}

int bessel_tail_order(double x, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("bessel_tail_order: tol must be > 0");
    const double half = 0.5 * std::fabs(x);
    const double target = 0.1 * tol;
    double t = 1.0; // (|x|/2)^K / K! at K = 0
    int k = 0;
    while (t >= target && k < 100000) {
        ++k;
        t *= half / k;
    }
    return k;
}

} // namespace dilat
