// Command-line front end: simulate | compare | sweep | plot.
// Exit codes: 0 success, 2 config error, 3 solver convergence error, 4 I/O error.

#include "dilat/analysis.hpp"
#include "dilat/csvio.hpp"
#include "dilat/errors.hpp"
#include "dilat/svgplot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

using dilat::LatticeParams;
using dilat::Method;
using dilat::SolverOptions;

struct CommonFlags {
    std::string method = "exact";
    double omega = 1.0;
    double alpha = 0.3;
    int m = 0;
    double z_max = 100.0;
    int z_steps = 1000;
    int window = 40;
    int rs_order = 3;
    double ode_step = 1e-3;
};

void add_lattice_flags(CLI::App* cmd, CommonFlags& f, bool with_method) {
    if (with_method)
        cmd->add_option("--method", f.method, "Solver: exact, rotation, rs, ode")
            ->capture_default_str();
    cmd->add_option("--omega", f.omega, "Detuning (alternating +/- on even/odd guides)")
        ->capture_default_str();
    cmd->add_option("--alpha", f.alpha, "Nearest-neighbour coupling")->capture_default_str();
    cmd->add_option("--m", f.m, "Input guide index")->capture_default_str();
    cmd->add_option("--z-max", f.z_max, "Propagation distance")->capture_default_str();
    cmd->add_option("--z-steps", f.z_steps, "Grid subdivisions (z-steps+1 samples)")
        ->capture_default_str();
    cmd->add_option("--window", f.window, "Guide window: indices -window..window")
        ->capture_default_str();
    cmd->add_option("--rs-order", f.rs_order, "Perturbative order for method rs")
        ->capture_default_str();
    cmd->add_option("--step", f.ode_step, "Integrator step for method ode")
        ->capture_default_str();
}

SolverOptions make_options(const CommonFlags& f) {
    SolverOptions opts;
    opts.rs_order.max_order = f.rs_order;
    opts.ode.step = f.ode_step;
    return opts;
}

// Guide selection: comma-separated indices and lo:hi ranges, e.g. "0:10" or "-2,0,2".
std::vector<int> parse_guides(const std::string& text) {
    std::set<int> keep;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) throw std::invalid_argument("--guides: empty entry");
        const std::size_t colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                keep.insert(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, colon));
                const int hi = std::stoi(item.substr(colon + 1));
                if (hi < lo) throw std::invalid_argument("--guides: descending range");
                if (hi - lo > 1000) throw std::invalid_argument("--guides: range too wide");
                for (int n = lo; n <= hi; ++n) keep.insert(n);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--guides: cannot parse '" + item + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("--guides: value out of range in '" + item + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (keep.empty()) throw std::invalid_argument("--guides: empty selection");
    return {keep.begin(), keep.end()};
}

std::vector<dilat::PlotSeries> csv_to_series(const std::vector<dilat::CsvRow>& rows,
                                             const std::vector<int>& guides, bool dashed,
                                             const std::string& suffix) {
    std::vector<dilat::PlotSeries> series;
    for (int n : guides) {
        dilat::PlotSeries s;
        s.label = "n=" + std::to_string(n) + suffix;
        s.dashed = dashed;
        for (const auto& row : rows)
            if (row.n == n) s.points.emplace_back(row.z, row.intensity);
        if (!s.points.empty()) series.push_back(std::move(s));
    }
    if (series.empty())
        throw std::invalid_argument("plot: none of the requested guides appear in the input");
    return series;
}

int run_simulate(const CommonFlags& f, const std::string& output) {
    const LatticeParams params{f.omega, f.alpha};
    const Method method = dilat::method_from_name(f.method);
    const auto grid = dilat::uniform_grid(f.z_max, f.z_steps);
    const auto fields = dilat::solve_grid(params, method, f.m, grid, f.window, make_options(f));
    dilat::write_field_csv(output, fields);
    std::printf("wrote %s (%zu z-samples, guides %+d..%+d)\n", output.c_str(), grid.size(),
                -f.window, f.window);
    return 0;
}

int run_compare(const CommonFlags& f, const std::string& method_b, const std::string& output) {
    const LatticeParams params{f.omega, f.alpha};
    const auto grid = dilat::uniform_grid(f.z_max, f.z_steps);
    const auto report =
        dilat::compare(params, dilat::method_from_name(f.method),
                       dilat::method_from_name(method_b), f.m, grid, f.window, make_options(f));
    dilat::write_text_atomic(output, dilat::report_to_json(report));
    std::printf("wrote %s (global max intensity error %.3g)\n", output.c_str(),
                report.global_max_intensity_error);
    return 0;
}

int run_sweep(const CommonFlags& f, const std::vector<double>& alphas,
              const std::string& output) {
    const LatticeParams base{f.omega, std::max(f.alpha, 0.0)};
    const auto grid = dilat::uniform_grid(f.z_max, f.z_steps);
    const auto result = dilat::regime_sweep(base, alphas, f.m, grid, f.window, make_options(f));

    nlohmann::ordered_json j;
    j["omega"] = f.omega;
    j["m"] = f.m;
    j["window"] = f.window;
    j["z_max"] = f.z_max;
    j["z_steps"] = f.z_steps;
    nlohmann::ordered_json by_alpha = nlohmann::ordered_json::object();
    for (const auto& [alpha, err] : result) {
        char key[48];
        std::snprintf(key, sizeof(key), "%.17g", alpha);
        by_alpha[key] = err;
    }
    j["global_max_intensity_error_by_alpha"] = by_alpha;
    dilat::write_text_atomic(output, j.dump(2) + "\n");
    std::printf("wrote %s (%zu alpha values)\n", output.c_str(), result.size());
    return 0;
}

int run_plot(const std::string& input, const std::string& overlay, const std::string& guides,
             const std::string& title, const std::string& output) {
    const auto rows = dilat::read_field_csv(input);
    const auto selection = parse_guides(guides);
    auto series = csv_to_series(rows, selection, false, "");
    if (!overlay.empty()) {
        const auto rows_b = dilat::read_field_csv(overlay);
        auto dashed = csv_to_series(rows_b, selection, true, "*");
        series.insert(series.end(), dashed.begin(), dashed.end());
    }
    dilat::PlotOptions opts;
    opts.title = title;
    dilat::write_text_atomic(output, dilat::render_line_svg(series, opts));
    std::printf("wrote %s (%zu series)\n", output.c_str(), series.size());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diatomic waveguide-lattice propagation toolkit"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    std::string sim_output = "field.csv";
    CLI::App* sim = app.add_subcommand("simulate", "Propagate a single-guide input; emit CSV");
    add_lattice_flags(sim, sim_flags, true);
    sim->add_option("--output", sim_output, "CSV output path")->capture_default_str();

    CommonFlags cmp_flags;
    std::string cmp_method_b = "ode";
    std::string cmp_output = "report.json";
    CLI::App* cmp = app.add_subcommand("compare", "Compare two solvers; emit JSON report");
    add_lattice_flags(cmp, cmp_flags, true);
    cmp->get_option("--method")->description("First solver (method A)");
    cmp->add_option("--method-b", cmp_method_b, "Second solver (method B)")
        ->capture_default_str();
    cmp->add_option("--output", cmp_output, "JSON output path")->capture_default_str();

    CommonFlags swp_flags;
    std::vector<double> swp_alphas{0.05, 0.1, 0.2, 0.3};
    std::string swp_output = "sweep.json";
    CLI::App* swp =
        app.add_subcommand("sweep", "Exact-vs-rotation error across couplings; emit JSON");
    add_lattice_flags(swp, swp_flags, false);
    swp->add_option("--alphas", swp_alphas, "Ascending coupling values")
        ->delimiter(',')
        ->capture_default_str();
    swp->add_option("--output", swp_output, "JSON output path")->capture_default_str();

    std::string plot_input = "field.csv";
    std::string plot_overlay;
    std::string plot_guides = "0:10";
    std::string plot_title;
    std::string plot_output = "plot.svg";
    CLI::App* plt = app.add_subcommand("plot", "Render intensity-vs-z SVG from simulate CSV");
    plt->add_option("--input", plot_input, "CSV produced by simulate")->capture_default_str();
    plt->add_option("--overlay", plot_overlay, "Second CSV drawn dashed over the first");
    plt->add_option("--guides", plot_guides, "Guide selection, e.g. 0:10 or -2,0,2")
        ->capture_default_str();
    plt->add_option("--title", plot_title, "Plot title");
    plt->add_option("--output", plot_output, "SVG output path")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return run_simulate(sim_flags, sim_output);
        if (cmp->parsed()) return run_compare(cmp_flags, cmp_method_b, cmp_output);
        if (swp->parsed()) return run_sweep(swp_flags, swp_alphas, swp_output);
        if (plt->parsed()) return run_plot(plot_input, plot_overlay, plot_guides, plot_title,
                                           plot_output);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dilat::ConvergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const dilat::WindowTooSmallError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const dilat::CsvParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const dilat::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
