#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dilat/core.hpp"
#include "dilat/exact.hpp"

using namespace dilat;

namespace {

cplx inner(const cvec& a, const cvec& b) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// Literal [(-1)^n_hat V]^j on the window basis: shift first, then the parity
// diagonal; the inverse applies the factors in the opposite order.
cvec literal_signed_shift(int j, const cvec& v) {
    const int window = static_cast<int>(v.size() / 2);
    cvec cur = v;
    for (int rep = 0; rep < std::abs(j); ++rep) {
        if (j > 0) {
            cur = apply_shift(Shift::down, cur);
            for (int n = -window; n <= window; ++n)
                cur[static_cast<std::size_t>(n + window)] *= double(parity_sign(n));
        } else {
            for (int n = -window; n <= window; ++n)
                cur[static_cast<std::size_t>(n + window)] *= double(parity_sign(n));
            cur = apply_shift(Shift::up, cur);
        }
    }
    return cur;
}

} // namespace

TEST_CASE("lattice parameter validation rejects non-physical values") {
    CHECK_NOTHROW(LatticeParams{1.0, 0.0}.validate());
    CHECK_NOTHROW(LatticeParams{0.5, 2.0}.validate());
    CHECK_THROWS_AS((LatticeParams{0.0, 0.3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatticeParams{-1.0, 0.3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatticeParams{1.0, -0.1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatticeParams{std::nan(""), 0.3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatticeParams{1.0, std::nan("")}.validate()), std::invalid_argument);
}

TEST_CASE("initial state puts unit amplitude at the source guide") {
    const FieldState s = make_initial_state(5, 0);
    CHECK(s.size() == 11);
    CHECK(s.z == 0.0);
    CHECK(s.at(0) == cplx(1.0, 0.0));
    for (int n = -5; n <= 5; ++n)
        if (n != 0) CHECK(s.at(n) == cplx(0.0, 0.0));

    const FieldState t = make_initial_state(5, 3);
    CHECK(t.at(3) == cplx(1.0, 0.0));
    CHECK(t.source == 3);
    CHECK(t.norm_sq() == 1.0);
}

TEST_CASE("initial state rejects a source outside the window") {
    CHECK_THROWS_AS(make_initial_state(2, 3), std::domain_error);
    CHECK_THROWS_AS(make_initial_state(2, -3), std::domain_error);
    CHECK_THROWS_AS(make_initial_state(0, 0), std::domain_error);
}

TEST_CASE("field truncation keeps the interior and rejects enlargement") {
    FieldState s = make_initial_state(5, 1);
    s.at(4) = cplx(0.25, -0.5);
    const FieldState t = s.truncated(3);
    CHECK(t.window == 3);
    CHECK(t.source == 1);
    CHECK(t.at(1) == cplx(1.0, 0.0));
    CHECK(t.size() == 7);
    CHECK_THROWS_AS(s.truncated(6), std::domain_error);
}

TEST_CASE("hamiltonian acts diagonally when the coupling vanishes") {
    const LatticeParams p{2.0, 0.0};
    const cvec even = make_initial_state(5, 2).amplitudes;
    const cvec he = apply_hamiltonian(p, even);
    for (int n = -5; n <= 5; ++n)
        CHECK(he[static_cast<std::size_t>(n + 5)] ==
              (n == 2 ? cplx(2.0, 0.0) : cplx(0.0, 0.0)));

    const cvec odd = make_initial_state(5, 3).amplitudes;
    const cvec ho = apply_hamiltonian(p, odd);
    CHECK(ho[8] == cplx(-2.0, 0.0));
}

TEST_CASE("hamiltonian scatters a delta into its two neighbours") {
    const LatticeParams p{1.0, 0.3};
    const cvec v = make_initial_state(4, 0).amplitudes;
    const cvec hv = apply_hamiltonian(p, v);
    CHECK(hv[4] == cplx(1.0, 0.0));
    CHECK(hv[3] == cplx(0.3, 0.0));
    CHECK(hv[5] == cplx(0.3, 0.0));
    for (int i : {0, 1, 2, 6, 7, 8}) CHECK(hv[static_cast<std::size_t>(i)] == cplx(0.0, 0.0));
}

TEST_CASE("hamiltonian rejects vectors without a centre site") {
    const LatticeParams p{1.0, 0.3};
    CHECK_THROWS_AS(apply_hamiltonian(p, cvec(4)), std::invalid_argument);
    CHECK_THROWS_AS(apply_hamiltonian(p, cvec{}), std::invalid_argument);
    CHECK_THROWS_AS(apply_shift(Shift::up, cvec(6)), std::invalid_argument);
}

TEST_CASE("shifts move coefficients by one site and drop at the edge") {
    const cvec d1 = make_initial_state(2, 1).amplitudes;
    CHECK(apply_shift(Shift::down, d1) == make_initial_state(2, 0).amplitudes);

    const cvec d0 = make_initial_state(2, 0).amplitudes;
    CHECK(apply_shift(Shift::up, d0) == make_initial_state(2, 1).amplitudes);

    // Interior round trip is the identity.
    CHECK(apply_shift(Shift::down, apply_shift(Shift::up, d0)) == d0);

    // Amplitude shifted past the window edge is dropped.
    const cvec low = make_initial_state(2, -2).amplitudes;
    for (const cplx& u : apply_shift(Shift::down, low)) CHECK(u == cplx(0.0, 0.0));
    const cvec high = make_initial_state(2, 2).amplitudes;
    for (const cplx& u : apply_shift(Shift::up, high)) CHECK(u == cplx(0.0, 0.0));
}

TEST_CASE("signed shift power pinpoints target and sign") {
    SignedShift r = signed_shift_power(0, 5);
    CHECK(r.target == 5);
    CHECK(r.sign == 1);

    r = signed_shift_power(1, 0);
    CHECK(r.target == -1);
    CHECK(r.sign == -1);

    r = signed_shift_power(2, 1);
    CHECK(r.target == -1);
    CHECK(r.sign == -1);
}

TEST_CASE("signed shift power matches literal repeated application") {
    const int window = 20;
    for (int j = -6; j <= 6; ++j) {
        for (int m = -6; m <= 6; ++m) {
            const cvec got = literal_signed_shift(j, make_initial_state(window, m).amplitudes);
            const SignedShift want = signed_shift_power(j, m);
            for (int n = -window; n <= window; ++n) {
                const cplx expect =
                    (n == want.target) ? cplx(double(want.sign), 0.0) : cplx(0.0, 0.0);
                CHECK(got[static_cast<std::size_t>(n + window)] == expect);
            }
        }
    }
}

TEST_CASE("plane wave is a squared-hamiltonian eigenvector in the interior") {
    const LatticeParams p{1.0, 0.3};
    const int window = 12;
    for (double phi : {0.3, 1.1, 2.7, std::numbers::pi / 2}) {
        const PlaneWaveProbe probe = make_plane_wave(window, phi);
        const double ev = omega_phi(p, phi) * omega_phi(p, phi);
        const cvec h2 = apply_hamiltonian(p, apply_hamiltonian(p, probe.values));
        for (int n = -(window - 2); n <= window - 2; ++n) {
            const std::size_t i = static_cast<std::size_t>(n + window);
            CHECK(std::abs(h2[i] - ev * probe.values[i]) <= 1e-12 * ev);
        }
    }
}

TEST_CASE("one hamiltonian application mixes the probe with its parity flip") {
    const LatticeParams p{1.0, 0.3};
    const int window = 12;
    for (double phi : {0.4, 1.9}) {
        const PlaneWaveProbe probe = make_plane_wave(window, phi);
        const PlaneWaveProbe flipped = make_plane_wave(window, phi + std::numbers::pi);
        const cvec hv = apply_hamiltonian(p, probe.values);
        const double hop = 2.0 * p.alpha * std::cos(phi);
        for (int n = -(window - 1); n <= window - 1; ++n) {
            const std::size_t i = static_cast<std::size_t>(n + window);
            const cplx want = p.omega * flipped.values[i] + hop * probe.values[i];
            CHECK(std::abs(hv[i] - want) <= 1e-12);
        }
    }
}

TEST_CASE("hamiltonian is hermitian on interior-supported vectors") {
    const LatticeParams p{1.0, 0.3};
    const int window = 12;
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    auto random_interior = [&]() {
        cvec v(static_cast<std::size_t>(2 * window + 1), cplx(0.0, 0.0));
        for (int n = -(window - 2); n <= window - 2; ++n)
            v[static_cast<std::size_t>(n + window)] = cplx(uni(rng), uni(rng));
        return v;
    };
    for (int rep = 0; rep < 8; ++rep) {
        const cvec a = random_interior();
        const cvec b = random_interior();
        const cplx lhs = inner(a, apply_hamiltonian(p, b));
        const cplx rhs = std::conj(inner(b, apply_hamiltonian(p, a)));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("norm accumulates in ascending guide order") {
    FieldState s = make_initial_state(2, 0);
    s.at(-2) = cplx(0.5, 0.0);
    s.at(2) = cplx(0.0, 0.5);
    CHECK(s.norm_sq() == doctest::Approx(1.5).epsilon(1e-15));
}
