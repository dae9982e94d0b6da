#include "dilat/rs.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace dilat {

namespace {

constexpr int kMaxPolynomialOrder = 12;
constexpr int kMaxOracleOrder = 8;

using poly = std::vector<long long>; // ascending degree

poly scale(const poly& a, long long c) {
    poly out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

// a + c * xi * b, degrees aligned.
poly add_shifted(const poly& a, const poly& b, long long c) {
    poly out(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += c * b[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

cplx horner(const poly& c, cplx xi) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * xi + cplx(double(c[i]), 0.0);
    return acc;
}

long long binomial(int k, int j) {
    if (j < 0 || j > k) return 0;
    long long acc = 1;
    for (int i = 1; i <= j; ++i) acc = acc * (k - j + i) / i;
    return acc;
}

double factorial(int k) {
    double acc = 1.0;
    for (int i = 2; i <= k; ++i) acc *= double(i);
    return acc;
}

} // namespace

void RsOrderConfig::validate() const {
    if (max_order < 0 || max_order > kMaxPolynomialOrder)
        throw std::invalid_argument("RsOrderConfig: max_order out of [0, 12]");
}

PolynomialPair rs_polynomials(int k) {
    if (k < 0 || k > kMaxPolynomialOrder)
        throw std::domain_error("rs_polynomials: order out of [0, 12]");
    poly p_prev{1}, q_prev{0}; // order 0
    poly p_cur{-1}, q_cur{1};  // order 1
    if (k == 0) return {0, p_prev, q_prev};
    for (int r = 2; r <= k; ++r) {
        poly p_next, q_next;
        if (r % 2 == 0) {
            // R_{2j} = (2j-1) R_{2j-1} - xi R_{2j-2}
            p_next = add_shifted(scale(p_cur, r - 1), p_prev, -1);
            q_next = add_shifted(scale(q_cur, r - 1), q_prev, -1);
        } else {
            // R_{2j+1} = -2 R_{2j} + xi R_{2j-1}
            p_next = add_shifted(scale(p_cur, -2), p_prev, 1);
            q_next = add_shifted(scale(q_cur, -2), q_prev, 1);
        }
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
    }
    return {k, p_cur, q_cur};
}

cplx rs_order_term(const LatticeParams& params, int n, int m, double z, int k) {
    params.validate();
    if (k < 0 || k > kMaxPolynomialOrder)
        throw std::domain_error("rs_order_term: order out of [0, 12]");
    const double omega = params.omega;
    if (k == 0) {
        if (n != m) return {0.0, 0.0};
        return std::polar(1.0, -double(parity_sign(m)) * omega * z);
    }
    const int delta = n - m;
    if (std::abs(delta) > k || ((k - delta) % 2 + 2) % 2 != 0) return {0.0, 0.0};
    const int j = (k - delta) / 2;

    const PolynomialPair pq = rs_polynomials(k);
    const int s = parity_sign(static_cast<long long>(m) + k);
    const cplx xi(0.0, 2.0 * z * omega * double(s));
    const cplx phase_p = std::polar(1.0, -z * omega * double(s));
    const cplx phase_q = std::polar(1.0, +z * omega * double(s));

    const double pref = std::pow(params.alpha, k) *
                        double(parity_sign(static_cast<long long>(m) * k)) /
                        (std::pow(2.0, k) * factorial(k / 2) * std::pow(omega, k));
    const cplx bracket = phase_p * horner(pq.p_coeffs, xi) + phase_q * horner(pq.q_coeffs, xi);
    return pref * bracket * double(binomial(k, j));
}

cplx rs_amplitude(const LatticeParams& params, int n, int m, double z,
                  const RsOrderConfig& cfg) {
    params.validate();
    cfg.validate();
    cplx acc(0.0, 0.0);
    for (int k = 0; k <= cfg.max_order; ++k) acc += rs_order_term(params, n, m, z, k);
    return acc;
}

FieldState rs_field(const LatticeParams& params, int m, double z, int window,
                    const RsOrderConfig& cfg) {
    FieldState state = make_initial_state(window, m);
    state.z = z;
    for (int n = -window; n <= window; ++n) state.at(n) = rs_amplitude(params, n, m, z, cfg);
    return state;
}

namespace {

// One summand c * s^power * e^{2 i omega freq s}; freq counts units of
// 2 omega so it stays an exact integer through every hop and integration.
struct PhaseTerm {
    cplx coeff;
    int power;
    int freq;
};

using TermList = std::vector<PhaseTerm>;

void merge_term(TermList& list, const PhaseTerm& t) {
    for (auto& u : list) {
        if (u.power == t.power && u.freq == t.freq) {
            u.coeff += t.coeff;
            return;
        }
    }
    list.push_back(t);
}

// Appends the exact antiderivative of c t^p e^{i mu t} on [0, s], where
// mu = 2 omega freq. Integration by parts until the power is exhausted.
void integrate_term(cplx c, int power, int freq, double two_omega, TermList& out) {
    if (freq == 0) {
        merge_term(out, {c / double(power + 1), power + 1, 0});
        return;
    }
    const cplx imu(0.0, two_omega * double(freq));
    const cplx d = c / imu;
    merge_term(out, {d, power, freq});
    if (power == 0)
        merge_term(out, {-d, 0, 0});
    else
        integrate_term(-d * double(power), power - 1, freq, two_omega, out);
}

} // namespace

cplx dyson_series_oracle(const LatticeParams& params, int n, int m, double z, int order) {
    params.validate();
    if (order < 0 || order > kMaxOracleOrder)
        throw std::domain_error("dyson_series_oracle: order out of [0, 8]");
    const double two_omega = 2.0 * params.omega;

    if (order == 0) {
        if (n != m) return {0.0, 0.0};
        return std::polar(1.0, -double(parity_sign(n)) * params.omega * z);
    }

    std::map<int, TermList> cur;
    cur[m] = {PhaseTerm{cplx(1.0, 0.0), 0, 0}};
    const cplx minus_i_alpha(0.0, -params.alpha);

    for (int step = 0; step < order; ++step) {
        std::map<int, TermList> next;
        for (const auto& [site, terms] : cur) {
            // Source phase: hopping out of site p carries e^{-2 i omega (-1)^p t}.
            const int shift = -parity_sign(site);
            TermList integrated;
            for (const auto& t : terms)
                integrate_term(t.coeff * minus_i_alpha, t.power, t.freq + shift, two_omega,
                               integrated);
            for (int dest : {site - 1, site + 1}) {
                TermList& bucket = next[dest];
                for (const auto& t : integrated) merge_term(bucket, t);
            }
        }
        cur = std::move(next);
    }

    const auto it = cur.find(n);
    if (it == cur.end()) return {0.0, 0.0};
    cplx chi(0.0, 0.0);
    for (const auto& t : it->second)
        chi += t.coeff * std::pow(z, t.power) * std::polar(1.0, two_omega * double(t.freq) * z);
    return std::polar(1.0, -double(parity_sign(n)) * params.omega * z) * chi;
}

} // namespace dilat
