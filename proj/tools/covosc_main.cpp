// covosc — covariant oscillator toolkit CLI.
//
// Subcommands emit figure data as CSV (with '#' metadata headers) or JSON;
// `validate` runs the full oracle suite.
//
// Exit codes: 0 success, 1 validation failure, 2 domain error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "covosc/coupled.hpp"
#include "covosc/covariant.hpp"
#include "covosc/entanglement.hpp"
#include "covosc/momentum.hpp"
#include "covosc/quadrature.hpp"
#include "covosc/validation.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_eta_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size())
            throw std::domain_error("bad --eta entry: " + item);
        out.push_back(v);
    }
    if (out.empty())
        throw std::domain_error("--eta list is empty");
    return out;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::ios_base::failure("cannot open output file: " + path);
    return out;
}

std::string derived_path(const std::string& path, const std::string& suffix)
{
    const auto dot = path.rfind('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

struct CommonOpts {
    std::string eta_list = "0,1,2,4";
    int grid_n = 201;
    double extent = 6.0;
    int kmax = 50;
    int quad_order = 96;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_output)
{
    opts.output = default_output;
    cmd->add_option("--eta", opts.eta_list, "comma-separated rapidity list");
    cmd->add_option("--grid-n", opts.grid_n, "points per grid axis");
    cmd->add_option("--extent", opts.extent, "half-width of the grid");
    cmd->add_option("--kmax", opts.kmax, "Fock-space truncation");
    cmd->add_option("--quad-order", opts.quad_order, "Gauss-Hermite order");
    cmd->add_option("--format", opts.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", opts.output, "output file path");
}

int run_modes(double m, double a, double c)
{
    const covosc::OscillatorParams params{m, a, c};
    const covosc::NormalModeData nm = covosc::normal_modes(params);
    const auto [f1, f2] = covosc::eigenfrequency_oracle(params);

    // compare {slow, fast} with the oracle pair as a set
    const double lo = std::min(f1, f2), hi = std::max(f1, f2);
    const double slo = std::min(nm.omega_slow, nm.omega_fast);
    const double shi = std::max(nm.omega_slow, nm.omega_fast);
    const double delta = std::max(std::abs(slo - lo), std::abs(shi - hi));

    std::cout << "K = " << fmt(nm.K) << "\n"
              << "eta = " << fmt(nm.eta) << "\n"
              << "omega = " << fmt(nm.omega) << "\n"
              << "omega_slow = " << fmt(nm.omega_slow) << "\n"
              << "omega_fast = " << fmt(nm.omega_fast) << "\n"
              << "oracle_delta = " << fmt(delta) << "\n";
    return 0;
}

int run_squeeze(const CommonOpts& opts)
{
    const auto etas = parse_eta_list(opts.eta_list);
    const covosc::GridSpec grid = covosc::GridSpec::centered(opts.extent, opts.grid_n);

    const std::string ellipse_path = derived_path(opts.output, "_ellipse");
    if (opts.format == "csv") {
        auto out = open_output(opts.output);
        out << "# covosc squeeze eta=" << opts.eta_list << " grid-n=" << opts.grid_n
            << " extent=" << fmt(opts.extent) << "\n";
        out << "eta,z,t,density\n";
        for (double eta : etas)
            for (int i = 0; i < grid.n_z; ++i)
                for (int j = 0; j < grid.n_t; ++j) {
                    const double psi = covosc::boosted_wavefunction(eta, {grid.z_at(i), grid.t_at(j)});
                    out << fmt(eta) << ',' << fmt(grid.z_at(i)) << ','
                        << fmt(grid.t_at(j)) << ',' << fmt(psi * psi) << "\n";
                }

        auto ell = open_output(ellipse_path);
        ell << "# covosc squeeze-ellipse eta=" << opts.eta_list << "\n";
        ell << "eta,semi_axis_u,semi_axis_v,area\n";
        for (double eta : etas) {
            const covosc::SqueezeEllipse e = covosc::squeeze_ellipse(eta);
            ell << fmt(eta) << ',' << fmt(e.semi_axis_u) << ','
                << fmt(e.semi_axis_v) << ',' << fmt(e.area) << "\n";
        }
    } else {
        json doc;
        doc["command"] = "squeeze";
        doc["eta"] = etas;
        doc["grid_n"] = opts.grid_n;
        doc["extent"] = opts.extent;
        json rows = json::array();
        for (double eta : etas)
            for (int i = 0; i < grid.n_z; ++i)
                for (int j = 0; j < grid.n_t; ++j) {
                    const double psi = covosc::boosted_wavefunction(eta, {grid.z_at(i), grid.t_at(j)});
                    rows.push_back({{"eta", eta}, {"z", grid.z_at(i)},
                                    {"t", grid.t_at(j)}, {"density", psi * psi}});
                }
        doc["density"] = std::move(rows);
        json ellipses = json::array();
        for (double eta : etas) {
            const covosc::SqueezeEllipse e = covosc::squeeze_ellipse(eta);
            ellipses.push_back({{"eta", eta}, {"semi_axis_u", e.semi_axis_u},
                                {"semi_axis_v", e.semi_axis_v}, {"area", e.area}});
        }
        doc["ellipse"] = std::move(ellipses);
        open_output(opts.output) << doc.dump(2) << "\n";
    }
    return 0;
}

int run_entangle(const CommonOpts& opts)
{
    const auto etas = parse_eta_list(opts.eta_list);
    if (opts.format == "csv") {
        auto out = open_output(opts.output);
        out << "# covosc entangle eta=" << opts.eta_list << " kmax=" << opts.kmax << "\n";
        out << "type,eta,k,c_k,p_k,entropy\n";
        for (double eta : etas) {
            const covosc::SchmidtSeries series = covosc::expansion_coefficients(eta, opts.kmax);
            for (int k = 0; k <= opts.kmax; ++k) {
                const double c = series.coefficients[k];
                out << "coefficient," << fmt(eta) << ',' << k << ','
                    << fmt(c) << ',' << fmt(c * c) << ",\n";
            }
            out << "entropy," << fmt(eta) << ",,,," << fmt(covosc::entanglement_entropy(eta)) << "\n";
        }
    } else {
        json doc;
        doc["command"] = "entangle";
        doc["eta"] = etas;
        doc["kmax"] = opts.kmax;
        json rows = json::array();
        for (double eta : etas) {
            const covosc::SchmidtSeries series = covosc::expansion_coefficients(eta, opts.kmax);
            json coeffs = json::array();
            for (int k = 0; k <= opts.kmax; ++k) {
                const double c = series.coefficients[k];
                coeffs.push_back({{"k", k}, {"c_k", c}, {"p_k", c * c}});
            }
            rows.push_back({{"eta", eta}, {"lambda", series.lambda},
                            {"coefficients", std::move(coeffs)},
                            {"entropy", covosc::entanglement_entropy(eta)}});
        }
        doc["series"] = std::move(rows);
        open_output(opts.output) << doc.dump(2) << "\n";
    }
    return 0;
}

int run_parton(const CommonOpts& opts)
{
    const auto etas = parse_eta_list(opts.eta_list);
    const covosc::Grid1D grid{-opts.extent, opts.extent, opts.grid_n};
    grid.validate();

    if (opts.format == "csv") {
        auto out = open_output(opts.output);
        out << "# covosc parton eta=" << opts.eta_list << " grid-n=" << opts.grid_n
            << " extent=" << fmt(opts.extent) << "\n";
        out << "eta,x,position_density,momentum_density\n";
        for (double eta : etas) {
            const covosc::PartonProfile profile = covosc::parton_profile(eta, grid);
            for (int i = 0; i < grid.n; ++i)
                out << fmt(eta) << ',' << fmt(profile.coordinates[i]) << ','
                    << fmt(profile.position_density[i]) << ','
                    << fmt(profile.momentum_density[i]) << "\n";
        }
        for (double eta : etas)
            out << "# sigma eta=" << fmt(eta) << " "
                << fmt(std::sqrt(covosc::spatial_marginal_variance(eta))) << "\n";
    } else {
        json doc;
        doc["command"] = "parton";
        doc["eta"] = etas;
        json rows = json::array();
        for (double eta : etas) {
            const covosc::PartonProfile profile = covosc::parton_profile(eta, grid);
            rows.push_back({{"eta", eta},
                            {"x", profile.coordinates},
                            {"position_density", profile.position_density},
                            {"momentum_density", profile.momentum_density},
                            {"sigma", profile.sigma}});
        }
        doc["profiles"] = std::move(rows);
        open_output(opts.output) << doc.dump(2) << "\n";
    }
    return 0;
}

int run_fourier_check(const CommonOpts& opts)
{
    const auto etas = parse_eta_list(opts.eta_list);
    const covosc::GridSpec grid = covosc::GridSpec::centered(opts.extent, opts.grid_n);
    bool ok = true;
    for (double eta : etas) {
        const double dev = covosc::fourier_duality_check(eta, grid);
        const bool pass = dev < 1e-6;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " fourier-duality eta=" << fmt(eta)
                  << " deviation=" << fmt(dev) << " tolerance=1e-06\n";
    }
    return ok ? 0 : 1;
}

int run_validate()
{
    const auto results = covosc::run_validation_suite();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name
                  << " measured=" << fmt(r.deviation)
                  << " tolerance=" << fmt(r.tolerance) << "\n";
    }
    std::cout << (ok ? "all checks passed" : "validation FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"covariant oscillator toolkit"};
    app.require_subcommand(1);

    double m = 1.0, a = 1.0, c = 0.0;
    auto* modes = app.add_subcommand("modes", "normal-mode data of the coupled system");
    modes->add_option("--m", m, "mass");
    modes->add_option("--a", a, "diagonal spring coefficient");
    modes->add_option("--c", c, "coupling coefficient");

    CommonOpts squeeze_opts, entangle_opts, parton_opts, fourier_opts;
    auto* squeeze = app.add_subcommand("squeeze", "Lorentz-squeezed density grid and 1/e contour");
    add_common(squeeze, squeeze_opts, "squeeze.csv");
    auto* entangle = app.add_subcommand("entangle", "Schmidt coefficients and entanglement entropy");
    add_common(entangle, entangle_opts, "entangle.csv");
    auto* parton = app.add_subcommand("parton", "dual-space longitudinal marginal profiles");
    add_common(parton, parton_opts, "parton.csv");
    parton_opts.extent = 12.0;
    parton_opts.grid_n = 401;
    auto* fourier = app.add_subcommand("fourier-check", "numerical position<->momentum duality check");
    add_common(fourier, fourier_opts, "");
    fourier_opts.extent = 10.0;
    fourier_opts.grid_n = 256;
    fourier_opts.eta_list = "0,1,2";
    auto* validate = app.add_subcommand("validate", "run the full oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (modes->parsed())
            return run_modes(m, a, c);
        if (squeeze->parsed())
            return run_squeeze(squeeze_opts);
        if (entangle->parsed())
            return run_entangle(entangle_opts);
        if (parton->parsed())
            return run_parton(parton_opts);
        if (fourier->parsed())
            return run_fourier_check(fourier_opts);
        if (validate->parsed())
            return run_validate();
    } catch (const std::ios_base::failure& e) {
        std::cerr << "covosc: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "covosc: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "covosc: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "covosc: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "covosc: argument out of range: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "covosc: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
