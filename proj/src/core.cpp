#include "dilat/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dilat {

void LatticeParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(alpha))
        throw std::invalid_argument("lattice parameters must be finite");
    if (omega <= 0.0)
        throw std::invalid_argument("omega must be > 0 (got " + std::to_string(omega) + ")");
    if (alpha < 0.0)
        throw std::invalid_argument("alpha must be >= 0 (got " + std::to_string(alpha) + ")");
}

double FieldState::norm_sq() const {
    double s = 0.0;
    for (const cplx& u : amplitudes)
        s += std::norm(u);
    return s;
}

FieldState FieldState::truncated(int new_window) const {
    if (new_window > window)
        throw std::domain_error("truncated(): new window exceeds current window");
    FieldState out;
    out.window = new_window;
    out.source = source;
    out.z = z;
    out.amplitudes.assign(amplitudes.begin() + (window - new_window),
                          amplitudes.end() - (window - new_window));
    return out;
}

FieldState make_initial_state(int window, int source) {
    if (window < 1)
        throw std::domain_error("window must be >= 1");
    if (source < -window || source > window)
        throw std::domain_error("source guide " + std::to_string(source) +
                                " outside window " + std::to_string(window));
    FieldState s;
    s.window = window;
    s.source = source;
    s.z = 0.0;
    s.amplitudes.assign(static_cast<size_t>(2 * window + 1), cplx(0.0, 0.0));
    s.at(source) = cplx(1.0, 0.0);
    return s;
}

PlaneWaveProbe make_plane_wave(int window, double phi) {
    PlaneWaveProbe p;
    p.phi = phi;
    p.window = window;
    p.values.resize(static_cast<size_t>(2 * window + 1));
    for (int n = -window; n <= window; ++n)
        p.values[static_cast<size_t>(n + window)] = std::polar(1.0, n * phi);
    return p;
}

cvec apply_hamiltonian(const LatticeParams& params, const cvec& v) {
    if (v.size() % 2 == 0 || v.empty())
        throw std::invalid_argument("state vector length must be 2N+1");
    const size_t len = v.size();
    const int window = static_cast<int>(len / 2);
    cvec out(len);
    for (size_t i = 0; i < len; ++i) {
        const int n = static_cast<int>(i) - window;
        cplx acc = params.omega * static_cast<double>(parity_sign(n)) * v[i];
        if (i + 1 < len)
            acc += params.alpha * v[i + 1];
        if (i > 0)
            acc += params.alpha * v[i - 1];
        out[i] = acc;
    }
    return out;
}

cvec apply_shift(Shift direction, const cvec& v) {
    if (v.size() % 2 == 0 || v.empty())
        throw std::invalid_argument("state vector length must be 2N+1");
    cvec out(v.size(), cplx(0.0, 0.0));
    if (direction == Shift::down) {
        // coefficient of |n> comes from |n+1>
        for (size_t i = 0; i + 1 < v.size(); ++i)
            out[i] = v[i + 1];
    } else {
        for (size_t i = 0; i + 1 < v.size(); ++i)
            out[i + 1] = v[i];
    }
    return out;
}

SignedShift signed_shift_power(long long j, long long m) {
    // j(j+1)/2 is an integer for every j; keep everything integral so the
    // sign is exact.
    const long long e = j * m - j * (j + 1) / 2;
    SignedShift r;
    r.target = static_cast<int>(m - j);
    r.sign = parity_sign(e);
    return r;
}

} // namespace dilat
