#include "irid/cli.hpp"

#include <filesystem>
#include <string>

#include "CLI11.hpp"

#include "irid/error.hpp"
#include "irid/pipeline.hpp"
#include "irid/report.hpp"

namespace irid::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_computation = 1;
constexpr int exit_validation = 2;

struct Options {
    double lambda = 1.5;
    double mu = -0.4;
    double wgc = 1.0;
    double tm = 2.0;
    double wmin = 0.01;
    double wmax = 100.0;
    std::size_t norder = 5;
    std::size_t samples = 1024;
    std::size_t points = 200;
    std::size_t iterations = 5;
    std::string out_dir = "out";
    bool no_svg = false;
};

void print_metrics(std::ostream& out, const char* name, const pipeline::ModelMetrics& m) {
    out << name << "  impulse_rel_l2=" << report::format_number(m.impulse_rel_l2)
        << "  impulse_max_abs=" << report::format_number(m.impulse_max_abs)
        << "  mag_max_err_db=" << report::format_number(m.mag_max_err_db)
        << "  phase_max_err_deg=" << report::format_number(m.phase_max_err_deg) << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Impulse response invariant discretization of a complex fractional order integrator\n"
                 "G(s) = (wgc/s)^lambda * cos(mu * ln(wgc/s))",
                 "irid_cfoi"};
    app.add_option("--lambda", o.lambda, "Real part of the order, in (0, 2)")->capture_default_str();
    app.add_option("--mu", o.mu, "Imaginary part of the order, in (-1, 0]")->capture_default_str();
    app.add_option("--wgc", o.wgc, "Gain-crossover frequency [rad/s], > 0")->capture_default_str();
    app.add_option("--tm", o.tm, "Impulse response window [s]; dt = tm / samples")->capture_default_str();
    app.add_option("--wmin", o.wmin, "Lower edge of the comparison band [rad/s]")->capture_default_str();
    app.add_option("--wmax", o.wmax, "Upper edge of the comparison band [rad/s]")->capture_default_str();
    app.add_option("--norder", o.norder, "Numerator and denominator degree of the fit")->capture_default_str();
    app.add_option("--samples", o.samples, "NILT samples m (power of two, >= 64)")->capture_default_str();
    app.add_option("--points", o.points, "Frequency grid size")->capture_default_str();
    app.add_option("--iters", o.iterations, "Steiglitz-McBride iterations")->capture_default_str();
    app.add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
    app.add_flag("--no-svg", o.no_svg, "Skip the SVG plots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_validation;
    }

    try {
        pipeline::IridRequest req{cfoi::CfoiParams(o.lambda, o.mu, o.wgc)};
        req.tm = o.tm;
        req.wmin = o.wmin;
        req.wmax = o.wmax;
        req.norder = o.norder;
        req.samples = o.samples;
        req.npoints = o.points;
        req.iterations = o.iterations;

        const auto result = pipeline::run_irid(req);
        report::WriteOptions wo;
        wo.svg = !o.no_svg;
        const auto files = report::write_outputs(result, o.out_dir, wo);

        out << "discrete den:";
        for (double c : result.gd.den().coeffs()) out << ' ' << report::format_number(c);
        out << "\nstable_discrete=" << (result.stable() ? "true" : "false")
            << "  margin=" << report::format_number(result.stability.margin) << '\n';
        print_metrics(out, "discrete  ", result.metrics.discrete);
        print_metrics(out, "continuous", result.metrics.continuous);
        for (const auto& f : files) out << "wrote " << f.string() << '\n';
        return exit_ok;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << '\n';
        return exit_computation;
    }
}

}  // namespace irid::cli
