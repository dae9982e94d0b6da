#include "dilat/rotation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dilat/bessel.hpp"

namespace dilat {

namespace {

const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};

cplx i_pow(int k) { return kIPow[((k % 4) + 4) % 4]; }

double j_signed(const std::vector<double>& row, int k) {
    const int a = std::abs(k);
    if (a >= static_cast<int>(row.size()))
        return 0.0;
    const double v = row[static_cast<size_t>(a)];
    return (k < 0 && a % 2 != 0) ? -v : v;
}

struct SeriesContext {
    SeriesTruncation trunc;          // resolved cutoffs
    std::vector<double> row_k;       // J_0..k_max (alpha^2 z / omega)
    std::vector<double> row_j;       // J_0..(long enough) (alpha / omega)
    cplx phase_even;                 // e^{-i W z}, W = (omega^2+alpha^2)/omega
    cplx phase_odd;                  // e^{+i W z}
};

SeriesContext make_context(const LatticeParams& p, double z,
                           const SeriesTruncation& trunc, int max_abs_offset) {
    SeriesContext ctx;
    ctx.trunc = resolve_truncation(p, z, trunc);
    const double xk = p.alpha * p.alpha * z / p.omega;
    const double xj = p.alpha / p.omega;
    ctx.row_k = bessel_j_row(ctx.trunc.k_max, xk);
    const int reach = max_abs_offset + 2 * ctx.trunc.k_max + ctx.trunc.j_max;
    ctx.row_j = bessel_j_row(std::max(ctx.trunc.j_max, reach), xj);
    const double w = (p.omega * p.omega + p.alpha * p.alpha) / p.omega;
    ctx.phase_even = std::polar(1.0, -w * z);
    ctx.phase_odd = std::polar(1.0, w * z);
    return ctx;
}

// The double sum with the global parity phase factored out by the caller.
cplx double_sum(const SeriesContext& ctx, int n, int m) {
    cplx acc(0.0, 0.0);
    for (int ka = 0; ka <= ctx.trunc.k_max; ++ka) {
        for (int ks : {+1, -1}) {
            if (ka == 0 && ks < 0)
                continue;
            const int k = ks * ka;
            const double jk = j_signed(ctx.row_k, k);
            if (jk == 0.0)
                continue;
            const cplx kfac = i_pow(k) * jk;
            for (int ja = 0; ja <= ctx.trunc.j_max; ++ja) {
                for (int js : {+1, -1}) {
                    if (ja == 0 && js < 0)
                        continue;
                    const int j = js * ja;
                    const double jj = j_signed(ctx.row_j, j);
                    if (jj == 0.0)
                        continue;
                    const double j3 = j_signed(ctx.row_j, n - m + 2 * k + j);
                    if (j3 == 0.0)
                        continue;
                    const int mj = m - j;
                    const cplx ph = (mj % 2 != 0) ? ctx.phase_odd : ctx.phase_even;
                    const double sgn = parity_sign(static_cast<long long>(k) * mj);
                    acc += sgn * kfac * ph * (jj * j3);
                }
            }
        }
    }
    return acc;
}

cplx global_phase(int n, int m) {
    const long long e = static_cast<long long>(m) * (m - 1) / 2 -
                        static_cast<long long>(n) * (n - 1) / 2;
    return cplx(parity_sign(e), 0.0);
}

void check_inputs(const LatticeParams& p, double z) {
    p.validate();
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("propagation distance z must be finite and >= 0");
}

} // namespace

void SeriesTruncation::validate() const {
    if (!(tail_tolerance > 0.0))
        throw std::invalid_argument("tail_tolerance must be > 0");
    if (!auto_cutoff && (k_max < 1 || j_max < 1))
        throw std::invalid_argument("k_max and j_max must be >= 1");
}

SeriesTruncation resolve_truncation(const LatticeParams& params, double z,
                                    const SeriesTruncation& trunc) {
    trunc.validate();
    SeriesTruncation r = trunc;
    if (r.auto_cutoff) {
        // Decay-bound cutoffs plus margin for the triple-product terms.
        r.k_max = bessel_tail_order(params.alpha * params.alpha * z / params.omega,
                                    r.tail_tolerance) + 5;
        r.j_max = bessel_tail_order(params.alpha / params.omega, r.tail_tolerance) + 5;
        r.auto_cutoff = false;
    }
    return r;
}

cplx rotation_amplitude(const LatticeParams& params, int n, int m, double z,
                        const SeriesTruncation& trunc) {
    check_inputs(params, z);
    SeriesContext ctx = make_context(params, z, trunc, std::abs(n - m));
    return global_phase(n, m) * double_sum(ctx, n, m);
}

cplx rotation_amplitude_centered(const LatticeParams& params, int n, double z,
                                 const SeriesTruncation& trunc) {
    check_inputs(params, z);
    SeriesContext ctx = make_context(params, z, trunc, std::abs(n));
    // u_n = (-1)^{n(n-1)/2} sum_{k,j} (-1)^{jk} e^{-i(-1)^j W z}
    //       i^k J_k(x_k) J_j(x_j) J_{n+2k+j}(x_j)
    cplx acc(0.0, 0.0);
    for (int ka = 0; ka <= ctx.trunc.k_max; ++ka) {
        for (int ks : {+1, -1}) {
            if (ka == 0 && ks < 0)
                continue;
            const int k = ks * ka;
            const double jk = j_signed(ctx.row_k, k);
            if (jk == 0.0)
                continue;
            const cplx kfac = i_pow(k) * jk;
            for (int ja = 0; ja <= ctx.trunc.j_max; ++ja) {
                for (int js : {+1, -1}) {
                    if (ja == 0 && js < 0)
                        continue;
                    const int j = js * ja;
                    const double jj = j_signed(ctx.row_j, j);
                    if (jj == 0.0)
                        continue;
                    const double j3 = j_signed(ctx.row_j, n + 2 * k + j);
                    if (j3 == 0.0)
                        continue;
                    const cplx ph = (j % 2 != 0) ? ctx.phase_odd : ctx.phase_even;
                    const double sgn = parity_sign(static_cast<long long>(j) * k);
                    acc += sgn * kfac * ph * (jj * j3);
                }
            }
        }
    }
    const long long e = static_cast<long long>(n) * (n - 1) / 2;
    return static_cast<double>(parity_sign(e)) * acc;
}

FieldState rotation_field(const LatticeParams& params, int m, double z, int window,
                          const SeriesTruncation& trunc) {
    check_inputs(params, z);
    if (window < 1 || std::abs(m) > window)
        throw std::domain_error("rotation_field: need window >= 1 and |m| <= window");
    SeriesContext ctx = make_context(params, z, trunc, window + std::abs(m));
    FieldState out;
    out.window = window;
    out.source = m;
    out.z = z;
    out.amplitudes.resize(static_cast<size_t>(2 * window + 1));
    for (int n = -window; n <= window; ++n)
        out.at(n) = global_phase(n, m) * double_sum(ctx, n, m);
    return out;
}

cvec rotation_effective_hamiltonian_apply(const LatticeParams& params, const cvec& v) {
    if (v.size() % 2 == 0 || v.empty())
        throw std::invalid_argument("state vector length must be 2N+1");
    const size_t len = v.size();
    const int window = static_cast<int>(len / 2);
    const double diag = params.omega + params.alpha * params.alpha / params.omega;
    const double hop2 = params.alpha * params.alpha / (2.0 * params.omega);
    cvec out(len);
    for (size_t i = 0; i < len; ++i) {
        const int n = static_cast<int>(i) - window;
        cplx acc = diag * v[i];
        if (i + 2 < len)
            acc += hop2 * v[i + 2];
        if (i >= 2)
            acc += hop2 * v[i - 2];
        out[i] = static_cast<double>(parity_sign(n)) * acc;
    }
    return out;
}

cvec rotation_operator_apply(const LatticeParams& params, int sign, const cvec& v) {
    params.validate();
    if (sign != 1 && sign != -1)
        throw std::domain_error("rotation_operator_apply: sign must be +1 or -1");
    if (v.size() % 2 == 0 || v.empty())
        throw std::invalid_argument("state vector length must be 2N+1");
    const int window = static_cast<int>(v.size() / 2);
    const double xj = params.alpha / params.omega;
    const int jmax = bessel_tail_order(xj, 1e-12) + 5;
    const std::vector<double> row = bessel_j_row(jmax, xj);

    cvec out(v.size(), cplx(0.0, 0.0));
    // R^dag carries the extra (-1)^j on the expansion coefficients.
    for (int j = -jmax; j <= jmax; ++j) {
        double coef = j_signed(row, j);
        if (sign < 0 && j % 2 != 0)
            coef = -coef;
        if (coef == 0.0)
            continue;
        for (int m = -window; m <= window; ++m) {
            const SignedShift s = signed_shift_power(j, m);
            if (s.target < -window || s.target > window)
                continue;
            out[static_cast<size_t>(s.target + window)] +=
                coef * static_cast<double>(s.sign) * v[static_cast<size_t>(m + window)];
        }
    }
    return out;
}

bool rotation_regime_warning(const LatticeParams& params) {
    return params.alpha / params.omega > 0.5;
}

} // namespace dilat
