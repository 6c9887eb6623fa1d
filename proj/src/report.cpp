#include "irid/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "irid/error.hpp"

namespace irid::report {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::vector<double> to_vector(std::span<const double> xs) { return {xs.begin(), xs.end()}; }

json metrics_json(const pipeline::ModelMetrics& m) {
    return json{{"impulse_rel_l2", m.impulse_rel_l2},
                {"impulse_max_abs", m.impulse_max_abs},
                {"mag_max_err_db", m.mag_max_err_db},
                {"phase_max_err_deg", m.phase_max_err_deg}};
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

// --- minimal SVG line charts ------------------------------------------------

struct Curve {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

struct Panel {
    std::string title;
    std::string x_label;
    std::vector<Curve> curves;
};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

constexpr double panel_width = 720.0;
constexpr double panel_height = 300.0;
constexpr double margin_left = 70.0;
constexpr double margin_right = 150.0;
constexpr double margin_top = 30.0;
constexpr double margin_bottom = 40.0;

void draw_panel(std::ostringstream& svg, const Panel& panel, double y_offset) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& c : panel.curves) {
        for (double v : c.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
        for (double v : c.y) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    const double plot_w = panel_width - margin_left - margin_right;
    const double plot_h = panel_height - margin_top - margin_bottom;
    const double left = margin_left, top = y_offset + margin_top;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    svg << "<text x=\"" << fixed(left) << "\" y=\"" << fixed(y_offset + 18) << "\" font-size=\"14\">"
        << panel.title << "</text>\n";
    svg << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(plot_w)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        svg << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(fy) + 4)
            << "\" font-size=\"10\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
        svg << "<text x=\"" << fixed(px(fx)) << "\" y=\"" << fixed(top + plot_h + 14)
            << "\" font-size=\"10\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    }
    svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(top + plot_h + 32)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << panel.x_label << "</text>\n";

    double legend_y = top + 10;
    for (const auto& c : panel.curves) {
        svg << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (i) svg << ' ';
            svg << fixed(px(c.x[i])) << ',' << fixed(py(c.y[i]));
        }
        svg << "\"/>\n";
        const double lx = left + plot_w + 12;
        svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(legend_y) << "\" x2=\"" << fixed(lx + 20)
            << "\" y2=\"" << fixed(legend_y) << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fixed(lx + 26) << "\" y=\"" << fixed(legend_y + 4) << "\" font-size=\"11\">"
            << c.label << "</text>\n";
        legend_y += 18;
    }
}

std::string render(const std::vector<Panel>& panels) {
    std::ostringstream svg;
    const double height = panel_height * static_cast<double>(panels.size());
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(panel_width) << "\" height=\""
        << fixed(height) << "\" font-family=\"sans-serif\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) draw_panel(svg, panels[i], panel_height * static_cast<double>(i));
    svg << "</svg>\n";
    return svg.str();
}

constexpr std::array<const char*, 3> colors = {"#1f77b4", "#d62728", "#2ca02c"};
constexpr std::array<const char*, 3> labels = {"CFOI", "discrete", "continuous"};

}  // namespace

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw IoError("number formatting failed");
    return std::string(buf.data(), end);
}

std::string impulse_csv(const pipeline::IridResult& res) {
    std::string out = "t,h_cfoi,h_discrete,h_continuous\n";
    for (std::size_t k = 0; k < res.h_ref.size(); ++k) {
        out += format_number(res.h_ref.time(k));
        for (const auto* h : {&res.h_ref, &res.h_d, &res.h_c}) {
            out += ',';
            out += format_number((*h)[k]);
        }
        out += '\n';
    }
    return out;
}

std::string freq_csv(const pipeline::IridResult& res) {
    std::string out =
        "omega_rad_s,mag_db_cfoi,phase_deg_cfoi,mag_db_discrete,phase_deg_discrete,"
        "mag_db_continuous,phase_deg_continuous\n";
    const std::array series = {&res.f_ref, &res.f_d, &res.f_c};
    std::array<std::vector<double>, 3> mag, phase;
    for (std::size_t i = 0; i < 3; ++i) {
        mag[i] = series[i]->magnitude_db();
        phase[i] = series[i]->phase_deg();
    }
    const auto& grid = res.f_ref.grid();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        out += format_number(grid[k]);
        for (std::size_t i = 0; i < 3; ++i) {
            out += ',';
            out += format_number(mag[i][k]);
            out += ',';
            out += format_number(phase[i][k]);
        }
        out += '\n';
    }
    return out;
}

std::string coeffs_json(const pipeline::IridResult& res) {
    json doc;
    doc["discrete"] = {{"ts", res.gd.ts()},
                       {"num", to_vector(res.gd.num().coeffs())},
                       {"den", to_vector(res.gd.den().coeffs())}};
    doc["continuous"] = {{"num", to_vector(res.gc.num().coeffs())}, {"den", to_vector(res.gc.den().coeffs())}};
    doc["stable_discrete"] = res.stability.stable;
    doc["metrics"] = {{"discrete", metrics_json(res.metrics.discrete)},
                      {"continuous", metrics_json(res.metrics.continuous)}};
    return doc.dump(2) + "\n";
}

FittedModels parse_coeffs_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        const auto& d = doc.at("discrete");
        const auto& c = doc.at("continuous");
        return FittedModels{
            lti::DiscreteTransferFunction(lti::Polynomial(d.at("num").get<std::vector<double>>()),
                                          lti::Polynomial(d.at("den").get<std::vector<double>>()),
                                          d.at("ts").get<double>()),
            lti::ContinuousTransferFunction(lti::Polynomial(c.at("num").get<std::vector<double>>()),
                                            lti::Polynomial(c.at("den").get<std::vector<double>>())),
            doc.at("stable_discrete").get<bool>()};
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed coeffs.json: ") + e.what());
    }
}

std::string summary_text(const pipeline::IridResult& res) {
    const auto& r = res.request;
    std::ostringstream out;
    out << "IRID of CFOI  G(s) = (wgc/s)^lambda * cos(mu * ln(wgc/s))\n";
    out << "  lambda = " << format_number(r.params.lambda()) << ", mu = " << format_number(r.params.mu())
        << ", wgc = " << format_number(r.params.wgc()) << " rad/s\n";
    out << "  tm = " << format_number(r.tm) << " s, samples = " << r.samples
        << ", dt = " << format_number(r.dt()) << " s, norder = " << r.norder
        << ", iterations = " << r.iterations << "\n";
    out << "  band = [" << format_number(r.wmin) << ", " << format_number(res.wmax_used) << "] rad/s, "
        << r.npoints << " points\n\n";

    auto coeffs = [&](const char* name, std::span<const double> c) {
        out << "  " << name << " =";
        for (double v : c) out << ' ' << format_number(v);
        out << '\n';
    };
    out << "Discrete model (descending powers of z, ts = " << format_number(res.gd.ts()) << " s)\n";
    coeffs("num", res.gd.num().coeffs());
    coeffs("den", res.gd.den().coeffs());
    out << "  stable = " << (res.stability.stable ? "yes" : "no")
        << ", margin = " << format_number(res.stability.margin) << "\n\n";
    out << "Continuous model (descending powers of s, bilinear transform)\n";
    coeffs("num", res.gc.num().coeffs());
    coeffs("den", res.gc.den().coeffs());
    out << '\n';

    auto metrics = [&](const char* name, const pipeline::ModelMetrics& m) {
        out << "  " << name << ": impulse rel L2 = " << format_number(m.impulse_rel_l2)
            << ", impulse max abs = " << format_number(m.impulse_max_abs)
            << ", max |dB| = " << format_number(m.mag_max_err_db)
            << ", max |phase| = " << format_number(m.phase_max_err_deg) << " deg\n";
    };
    out << "Comparison against the CFOI (t in [dt, 0.8 tm], omega in band)\n";
    metrics("discrete  ", res.metrics.discrete);
    metrics("continuous", res.metrics.continuous);
    return out.str();
}

std::string impulse_svg(const pipeline::IridResult& res) {
    Panel panel{"Impulse responses", "t [s]", {}};
    const std::array series = {&res.h_ref, &res.h_d, &res.h_c};
    for (std::size_t i = 0; i < 3; ++i) {
        Curve c{labels[i], colors[i], {}, {}};
        for (std::size_t k = 0; k < series[i]->size(); ++k) {
            c.x.push_back(series[i]->time(k));
            c.y.push_back((*series[i])[k]);
        }
        panel.curves.push_back(std::move(c));
    }
    return render({panel});
}

std::string freq_svg(const pipeline::IridResult& res) {
    Panel mag{"Magnitude [dB]", "log10 omega [rad/s]", {}};
    Panel phase{"Phase [deg]", "log10 omega [rad/s]", {}};
    std::vector<double> logw;
    for (double w : res.f_ref.grid().omegas()) logw.push_back(std::log10(w));
    const std::array series = {&res.f_ref, &res.f_d, &res.f_c};
    for (std::size_t i = 0; i < 3; ++i) {
        mag.curves.push_back({labels[i], colors[i], logw, series[i]->magnitude_db()});
        phase.curves.push_back({labels[i], colors[i], logw, series[i]->phase_deg()});
    }
    return render({mag, phase});
}

std::vector<fs::path> write_outputs(const pipeline::IridResult& res, const fs::path& dir,
                                    const WriteOptions& opts) {
    if (dir.empty()) throw IoError("output directory path is empty");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());

    std::vector<std::pair<std::string, std::string>> files = {
        {"impulse.csv", impulse_csv(res)},
        {"freq.csv", freq_csv(res)},
        {"coeffs.json", coeffs_json(res)},
        {"summary.txt", summary_text(res)},
    };
    if (opts.svg) {
        files.emplace_back("impulse.svg", impulse_svg(res));
        files.emplace_back("freq.svg", freq_svg(res));
    }
    std::vector<fs::path> written;
    for (const auto& [name, text] : files) {
        const fs::path path = dir / name;
        write_file(path, text);
        written.push_back(path);
    }
    return written;
}

}  // namespace irid::report
