#include "dilat/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dilat/errors.hpp"

namespace dilat {

namespace {

constexpr double kPi = std::numbers::pi;

void check_inputs(const LatticeParams& params, double z) {
    params.validate();
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("propagation distance z must be finite and >= 0");
}

// One trapezoid pass with M uniform nodes on [-pi, pi): amplitudes for all
// n in [-window, window]. The plane-wave factor e^{i(n-m)phi} is advanced by
// one complex multiplication per guide.
cvec trapezoid_pass(const LatticeParams& params, int m, double z, int window, int nodes) {
    const size_t len = static_cast<size_t>(2 * window + 1);
    cvec acc(len, cplx(0.0, 0.0));
    const double w2 = params.omega * params.omega;
    const double a2 = params.alpha * params.alpha;
    for (int l = 0; l < nodes; ++l) {
        const double phi = -kPi + 2.0 * kPi * l / nodes;
        const double cphi = std::cos(phi);
        const double om = std::sqrt(w2 + 4.0 * a2 * cphi * cphi);
        const double c = std::cos(om * z);
        const double s = std::sin(om * z) / om; // regular: om >= omega > 0
        const double hop = 2.0 * params.alpha * cphi;
        const cplx f_even(c, -(hop + params.omega) * s);
        const cplx f_odd(c, -(hop - params.omega) * s);
        const cplx step = std::polar(1.0, phi);
        cplx wave = std::polar(1.0, (-window - m) * phi);
        for (int n = -window; n <= window; ++n) {
            acc[static_cast<size_t>(n + window)] += wave * ((n % 2 != 0) ? f_odd : f_even);
            wave *= step;
        }
    }
    for (cplx& a : acc)
        a /= static_cast<double>(nodes);
    return acc;
}

int initial_nodes(const QuadratureConfig& cfg, int window, int m) {
    // Keep the first pass above the aliasing threshold of the highest
    // plane-wave mode in the window.
    int n0 = cfg.nodes;
    const int need = 2 * (window + std::abs(m)) + 16;
    while (n0 < need)
        n0 *= 2;
    return n0;
}

} // namespace

void QuadratureConfig::validate() const {
    if (nodes < 16 || nodes % 2 != 0)
        throw std::invalid_argument("quadrature nodes must be >= 16 and even");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("quadrature tolerance must be > 0");
    if (max_doublings < 1)
        throw std::invalid_argument("max_doublings must be >= 1");
}

double omega_phi(const LatticeParams& params, double phi) {
    const double c = std::cos(phi);
    return std::sqrt(params.omega * params.omega + 4.0 * params.alpha * params.alpha * c * c);
}

FieldState exact_field(const LatticeParams& params, int m, double z, int window,
                       const QuadratureConfig& cfg) {
    cfg.validate();
    check_inputs(params, z);
    if (window < 1 || std::abs(m) > window)
        throw std::domain_error("exact_field: need window >= 1 and |m| <= window");

    int nodes = initial_nodes(cfg, window, m);
    cvec prev = trapezoid_pass(params, m, z, window, nodes);
    double err = 0.0;
    for (int d = 0; d < cfg.max_doublings; ++d) {
        nodes *= 2;
        cvec next = trapezoid_pass(params, m, z, window, nodes);
        err = 0.0;
        for (size_t i = 0; i < next.size(); ++i)
            err = std::max(err, std::abs(next[i] - prev[i]));
        if (err <= cfg.tolerance) {
            FieldState out;
            out.window = window;
            out.source = m;
            out.z = z;
            out.amplitudes = std::move(next);
            return out;
        }
        prev = std::move(next);
    }
    throw ConvergenceError("exact_field: trapezoid refinement did not reach tolerance", err);
}

cplx exact_amplitude(const LatticeParams& params, int n, int m, double z,
                     const QuadratureConfig& cfg) {
    cfg.validate();
    check_inputs(params, z);
    const int window = std::max(std::abs(n), std::max(std::abs(m), 1));
    // Shares the field machinery; the per-node cost dominates either way.
    FieldState f = exact_field(params, m, z, window, cfg);
    return f.at(n);
}

} // namespace dilat
