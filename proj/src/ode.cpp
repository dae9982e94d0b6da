#include "dilat/ode.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dilat/errors.hpp"

namespace dilat {

namespace {

// dv/dz = -i H v, written into out.
void rhs(const LatticeParams& p, const cvec& v, cvec& out) {
    const size_t len = v.size();
    const int window = static_cast<int>(len / 2);
    const cplx mi(0.0, -1.0);
    for (size_t i = 0; i < len; ++i) {
        const int n = static_cast<int>(i) - window;
        cplx h = p.omega * static_cast<double>(parity_sign(n)) * v[i];
        if (i + 1 < len)
            h += p.alpha * v[i + 1];
        if (i > 0)
            h += p.alpha * v[i - 1];
        out[i] = mi * h;
    }
}

struct Rk4Workspace {
    cvec k1, k2, k3, k4, tmp;
    explicit Rk4Workspace(size_t len) : k1(len), k2(len), k3(len), k4(len), tmp(len) {}
};

void rk4_step(const LatticeParams& p, cvec& u, double h, Rk4Workspace& w) {
    const size_t len = u.size();
    rhs(p, u, w.k1);
    for (size_t i = 0; i < len; ++i)
        w.tmp[i] = u[i] + 0.5 * h * w.k1[i];
    rhs(p, w.tmp, w.k2);
    for (size_t i = 0; i < len; ++i)
        w.tmp[i] = u[i] + 0.5 * h * w.k2[i];
    rhs(p, w.tmp, w.k3);
    for (size_t i = 0; i < len; ++i)
        w.tmp[i] = u[i] + h * w.k3[i];
    rhs(p, w.tmp, w.k4);
    for (size_t i = 0; i < len; ++i)
        u[i] += (h / 6.0) * (w.k1[i] + 2.0 * w.k2[i] + 2.0 * w.k3[i] + w.k4[i]);
}

} // namespace

void OdeConfig::validate() const {
    if (!(step > 0.0))
        throw std::invalid_argument("ode step must be > 0");
    if (window && *window < 1)
        throw std::invalid_argument("ode window must be >= 1");
    if (!(edge_mass_tolerance > 0.0) || !(norm_drift_tolerance > 0.0))
        throw std::invalid_argument("ode tolerances must be > 0");
}

int default_ode_window(double alpha, double z_max) {
    return static_cast<int>(std::ceil(4.0 * alpha * z_max)) + 20;
}

std::vector<FieldState> propagate(const LatticeParams& params, int m,
                                  const std::vector<double>& z_targets,
                                  const OdeConfig& cfg) {
    params.validate();
    cfg.validate();
    if (z_targets.empty())
        throw std::domain_error("propagate: no targets");
    double prev = 0.0;
    for (double zt : z_targets) {
        if (!std::isfinite(zt) || zt < prev)
            throw std::domain_error("propagate: targets must be finite, >= 0, ascending");
        prev = zt;
    }
    const int window = cfg.window ? *cfg.window
                                  : default_ode_window(params.alpha, z_targets.back());
    if (std::abs(m) > window)
        throw std::domain_error("propagate: source outside window");

    FieldState state = make_initial_state(window, m);
    Rk4Workspace w(state.amplitudes.size());

    std::vector<FieldState> out;
    out.reserve(z_targets.size());
    double z = 0.0;
    for (double zt : z_targets) {
        const double span = zt - z;
        if (span > 0.0) {
            const long steps = static_cast<long>(std::ceil(span / cfg.step - 1e-12));
            const double h = span / static_cast<double>(steps);
            for (long s = 0; s < steps; ++s)
                rk4_step(params, state.amplitudes, h, w);
        }
        z = zt;
        state.z = zt;

        const double edge = std::max(std::norm(state.amplitudes.front()),
                                     std::norm(state.amplitudes.back()));
        if (edge > cfg.edge_mass_tolerance)
            throw WindowTooSmallError(
                "propagate: edge mass " + std::to_string(edge) + " at z = " +
                    std::to_string(zt) + " exceeds tolerance; enlarge the window",
                zt);
        const double drift = std::fabs(state.norm_sq() - 1.0);
        if (drift > cfg.norm_drift_tolerance)
            throw ConvergenceError(
                "propagate: norm drift " + std::to_string(drift) + " at z = " +
                    std::to_string(zt) + "; reduce the step",
                drift);
        out.push_back(state);
    }
    return out;
}

} // namespace dilat
