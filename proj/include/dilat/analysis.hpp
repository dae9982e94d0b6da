#pragma once

// Cross-method comparison on a shared z-grid. Error metrics act on guide
// intensities |u_n|^2; norm_deficit tracks max_z |sum_n |u_n|^2 - 1|.

#include "dilat/core.hpp"
#include "dilat/exact.hpp"
#include "dilat/ode.hpp"
#include "dilat/rotation.hpp"
#include "dilat/rs.hpp"

#include <map>
#include <string>
#include <vector>

namespace dilat {

enum class Method { exact, rotation, rs, ode };

std::string method_name(Method method);
Method method_from_name(const std::string& name); // throws std::invalid_argument

struct SolverOptions {
    QuadratureConfig quadrature;
    SeriesTruncation truncation;
    RsOrderConfig rs_order;
    OdeConfig ode;
};

struct ComparisonReport {
    std::string method_a;
    std::string method_b;
    LatticeParams params;
    int source = 0;
    int window = 0;
    std::vector<double> z_grid;
    // max over z of | |u_a|^2 - |u_b|^2 | per guide, keyed by guide index.
    std::map<int, double> per_guide_max_intensity_error;
    double global_max_intensity_error = 0.0;
    // max over z and n of |u_a - u_b| (complex amplitude deviation).
    double global_max_amplitude_error = 0.0;
    // sqrt of the sum over the grid and window of squared intensity errors.
    double global_l2_error = 0.0;
    // max over z of |sum_n |u_n|^2 - 1|, keyed by method name.
    std::map<std::string, double> norm_deficit_by_method;
    std::vector<std::string> regime_warnings;
};

std::vector<double> uniform_grid(double z_max, int steps); // steps+1 points, 0..z_max

// One field per grid point. The ODE path integrates once through the whole
// grid on an internally enlarged window, then truncates to `window`.
std::vector<FieldState> solve_grid(const LatticeParams& params, Method method, int m,
                                   const std::vector<double>& z_grid, int window,
                                   const SolverOptions& opts = {});

ComparisonReport compare(const LatticeParams& params, Method a, Method b, int m,
                         const std::vector<double>& z_grid, int window,
                         const SolverOptions& opts = {});

// compare(exact, rotation) across alpha values at fixed base.omega; returns
// alpha -> global_max_intensity_error. alphas must be ascending and >= 0.
std::map<double, double> regime_sweep(const LatticeParams& base,
                                      const std::vector<double>& alphas, int m,
                                      const std::vector<double>& z_grid, int window,
                                      const SolverOptions& opts = {});

std::string report_to_json(const ComparisonReport& report);

} // namespace dilat
