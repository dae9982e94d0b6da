#include "dilat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace dilat {

namespace {

void validate_grid(const std::vector<double>& z_grid) {
    if (z_grid.empty()) throw std::invalid_argument("z_grid: empty");
    double prev = -1.0;
    for (double z : z_grid) {
        if (!std::isfinite(z) || z < 0.0)
            throw std::invalid_argument("z_grid: entries must be finite and >= 0");
        if (z < prev) throw std::invalid_argument("z_grid: entries must be ascending");
        prev = z;
    }
}

double max_norm_deficit(const std::vector<FieldState>& fields) {
    double worst = 0.0;
    for (const auto& f : fields) worst = std::max(worst, std::abs(f.norm_sq() - 1.0));
    return worst;
}

} // namespace

std::string method_name(Method method) {
    switch (method) {
        case Method::exact: return "exact";
        case Method::rotation: return "rotation";
        case Method::rs: return "rs";
        case Method::ode: return "ode";
    }
    throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
    if (name == "exact") return Method::exact;
    if (name == "rotation") return Method::rotation;
    if (name == "rs") return Method::rs;
    if (name == "ode") return Method::ode;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected exact, rotation, rs, or ode)");
}

std::vector<double> uniform_grid(double z_max, int steps) {
    if (!std::isfinite(z_max) || z_max < 0.0)
        throw std::invalid_argument("uniform_grid: z_max must be finite and >= 0");
    if (steps < 1) throw std::invalid_argument("uniform_grid: steps must be >= 1");
    std::vector<double> grid(steps + 1);
    for (int i = 0; i <= steps; ++i) grid[i] = z_max * double(i) / double(steps);
    return grid;
}

std::vector<FieldState> solve_grid(const LatticeParams& params, Method method, int m,
                                   const std::vector<double>& z_grid, int window,
                                   const SolverOptions& opts) {
    params.validate();
    validate_grid(z_grid);
    if (window < 1 || std::abs(m) > window)
        throw std::invalid_argument("solve_grid: need window >= 1 and |m| <= window");

    std::vector<FieldState> fields;
    fields.reserve(z_grid.size());
    switch (method) {
        case Method::exact:
            for (double z : z_grid)
                fields.push_back(exact_field(params, m, z, window, opts.quadrature));
            break;
        case Method::rotation:
            for (double z : z_grid)
                fields.push_back(rotation_field(params, m, z, window, opts.truncation));
            break;
        case Method::rs:
            for (double z : z_grid)
                fields.push_back(rs_field(params, m, z, window, opts.rs_order));
            break;
        case Method::ode: {
            OdeConfig cfg = opts.ode;
            const int big = std::max({cfg.window.value_or(0),
                                      default_ode_window(params.alpha, z_grid.back()),
                                      window + 20, std::abs(m) + 20});
            cfg.window = big;
            auto wide = propagate(params, m, z_grid, cfg);
            for (auto& f : wide) fields.push_back(f.truncated(window));
            break;
        }
    }
    return fields;
}

ComparisonReport compare(const LatticeParams& params, Method a, Method b, int m,
                         const std::vector<double>& z_grid, int window,
                         const SolverOptions& opts) {
    const auto fields_a = solve_grid(params, a, m, z_grid, window, opts);
    const auto fields_b = solve_grid(params, b, m, z_grid, window, opts);

    ComparisonReport report;
    report.method_a = method_name(a);
    report.method_b = method_name(b);
    report.params = params;
    report.source = m;
    report.window = window;
    report.z_grid = z_grid;

    for (int n = -window; n <= window; ++n) report.per_guide_max_intensity_error[n] = 0.0;
    double l2_acc = 0.0;
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const FieldState& fa = fields_a[i];
        const FieldState& fb = fields_b[i];
        for (int n = -window; n <= window; ++n) {
            const double di = std::abs(std::norm(fa.at(n)) - std::norm(fb.at(n)));
            const double da = std::abs(fa.at(n) - fb.at(n));
            auto& slot = report.per_guide_max_intensity_error[n];
            slot = std::max(slot, di);
            report.global_max_amplitude_error = std::max(report.global_max_amplitude_error, da);
            l2_acc += di * di;
        }
    }
    for (const auto& [n, err] : report.per_guide_max_intensity_error)
        report.global_max_intensity_error = std::max(report.global_max_intensity_error, err);
    report.global_l2_error = std::sqrt(l2_acc);

    report.norm_deficit_by_method[report.method_a] = max_norm_deficit(fields_a);
    report.norm_deficit_by_method[report.method_b] = max_norm_deficit(fields_b);

    if ((a == Method::rotation || b == Method::rotation) && rotation_regime_warning(params)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "rotation: alpha/omega = %.6g exceeds 0.5; series accuracy degrades",
                      params.alpha / params.omega);
        report.regime_warnings.emplace_back(buf);
    }
    return report;
}

std::map<double, double> regime_sweep(const LatticeParams& base,
                                      const std::vector<double>& alphas, int m,
                                      const std::vector<double>& z_grid, int window,
                                      const SolverOptions& opts) {
    if (alphas.empty()) throw std::invalid_argument("regime_sweep: empty alpha list");
    double prev = -1.0;
    for (double a : alphas) {
        if (!std::isfinite(a) || a < 0.0)
            throw std::invalid_argument("regime_sweep: alphas must be finite and >= 0");
        if (a < prev) throw std::invalid_argument("regime_sweep: alphas must be ascending");
        prev = a;
    }
    std::map<double, double> out;
    for (double a : alphas) {
        LatticeParams p = base;
        p.alpha = a;
        out[a] = compare(p, Method::exact, Method::rotation, m, z_grid, window, opts)
                     .global_max_intensity_error;
    }
    return out;
}

std::string report_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["method_a"] = report.method_a;
    j["method_b"] = report.method_b;
    j["params"] = {{"omega", report.params.omega},
                   {"alpha", report.params.alpha},
                   {"m", report.source},
                   {"window", report.window}};
    j["z_grid"] = report.z_grid;
    nlohmann::ordered_json per_guide = nlohmann::ordered_json::object();
    for (const auto& [n, err] : report.per_guide_max_intensity_error)
        per_guide[std::to_string(n)] = err;
    j["per_guide_max_intensity_error"] = per_guide;
    j["global_max_intensity_error"] = report.global_max_intensity_error;
    j["global_max_amplitude_error"] = report.global_max_amplitude_error;
    j["global_l2_error"] = report.global_l2_error;
    j["norm_deficit_by_method"] = report.norm_deficit_by_method;
    j["regime_warnings"] = report.regime_warnings;
    return j.dump(2) + "\n";
}

} // namespace dilat
