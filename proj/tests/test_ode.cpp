#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dilat/errors.hpp"
#include "dilat/exact.hpp"
#include "dilat/ode.hpp"

using namespace dilat;

namespace {

// Worst complex deviation from the quadrature solution over |n| <= 10 at
// fixed z for a given integrator step.
double error_vs_quadrature(double step) {
    const LatticeParams p{1.0, 0.3};
    const double z = 10.0;
    OdeConfig cfg;
    cfg.step = step;
    cfg.window = 60;
    const FieldState got = propagate(p, 0, {z}, cfg)[0];
    QuadratureConfig qcfg;
    qcfg.tolerance = 1e-13;
    const FieldState want = exact_field(p, 0, z, 10, qcfg);
    double worst = 0.0;
    for (int n = -10; n <= 10; ++n) worst = std::max(worst, std::abs(got.at(n) - want.at(n)));
    return worst;
}

double norm_drift(double step) {
    const LatticeParams p{1.0, 0.3};
    OdeConfig cfg;
    cfg.step = step;
    cfg.window = 60;
    return std::fabs(propagate(p, 0, {10.0}, cfg)[0].norm_sq() - 1.0);
}

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(OdeConfig{}.validate());
    OdeConfig bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = OdeConfig{};
    bad.window = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = OdeConfig{};
    bad.edge_mass_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("default window follows the ballistic light cone") {
    CHECK(default_ode_window(0.3, 100.0) == 140);
    CHECK(default_ode_window(0.0, 50.0) == 20);
}

TEST_CASE("zero-distance target returns the delta input") {
    const LatticeParams p{1.0, 0.3};
    const FieldState f = propagate(p, 0, {0.0})[0];
    CHECK(f.z == 0.0);
    CHECK(f.at(0) == cplx(1.0, 0.0));
    CHECK(f.norm_sq() == 1.0);
}

TEST_CASE("decoupled guides keep a pure phase") {
    const LatticeParams p{1.0, 0.0};
    OdeConfig cfg;
    cfg.window = 10;
    for (int m : {0, 1}) {
        const FieldState f = propagate(p, m, {50.0}, cfg)[0];
        const cplx want = std::polar(1.0, -double(parity_sign(m)) * 50.0);
        CHECK(std::abs(f.at(m) - want) <= 1e-10);
        for (int n = -10; n <= 10; ++n)
            if (n != m) CHECK(std::abs(f.at(n)) <= 1e-12);
    }
}

TEST_CASE("targets land exactly on integration grid points") {
    const LatticeParams p{1.0, 0.3};
    OdeConfig cfg;
    cfg.window = 40;
    const auto fields = propagate(p, 0, {0.0, 0.9995, 2.5, 7.0}, cfg);
    REQUIRE(fields.size() == 4);
    CHECK(fields[0].z == 0.0);
    CHECK(fields[1].z == 0.9995);
    CHECK(fields[2].z == 2.5);
    CHECK(fields[3].z == 7.0);
    for (const auto& f : fields) CHECK(std::fabs(f.norm_sq() - 1.0) <= 1e-8);
}

TEST_CASE("norm drift shrinks at fourth order in the step") {
    const double d_coarse = norm_drift(4e-3);
    const double d_fine = norm_drift(2e-3);
    CHECK(d_fine <= d_coarse / 10.0);
}

TEST_CASE("global error shrinks at fourth order in the step") {
    const double e1 = error_vs_quadrature(1.6e-2);
    const double e2 = error_vs_quadrature(8e-3);
    const double e3 = error_vs_quadrature(4e-3);
    CHECK(e2 <= e1 / 10.0);
    CHECK(e3 <= e2 / 10.0);
}

TEST_CASE("interior amplitudes are insensitive to window enlargement") {
    const LatticeParams p{1.0, 0.3};
    OdeConfig small;
    small.window = 60;
    OdeConfig large;
    large.window = 80;
    const FieldState a = propagate(p, 0, {10.0}, small)[0];
    const FieldState b = propagate(p, 0, {10.0}, large)[0];
    for (int n = -30; n <= 30; ++n) CHECK(std::abs(a.at(n) - b.at(n)) <= 1e-10);
}

TEST_CASE("edge mass violation names the offending distance") {
    const LatticeParams p{1.0, 1.0};
    OdeConfig cfg;
    cfg.window = 6;
    CHECK_THROWS_AS(propagate(p, 0, {10.0}, cfg), WindowTooSmallError);
    try {
        propagate(p, 0, {10.0}, cfg);
    } catch (const WindowTooSmallError& e) {
        CHECK(e.z() == 10.0);
    }
}

TEST_CASE("excessive norm drift raises a convergence error") {
    const LatticeParams p{1.0, 0.3};
    OdeConfig cfg;
    cfg.step = 1e-2;
    cfg.window = 60;
    cfg.norm_drift_tolerance = 1e-16;
    CHECK_THROWS_AS(propagate(p, 0, {10.0}, cfg), ConvergenceError);
}

TEST_CASE("target list validation") {
    const LatticeParams p{1.0, 0.3};
    CHECK_THROWS_AS(propagate(p, 0, {}), std::domain_error);
    CHECK_THROWS_AS(propagate(p, 0, {2.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(propagate(p, 0, {-1.0}), std::domain_error);
    OdeConfig cfg;
    cfg.window = 4;
    CHECK_THROWS_AS(propagate(p, 9, {1.0}, cfg), std::domain_error);
}
