#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trispin/errors.hpp"
#include "trispin/hamiltonian.hpp"
#include "trispin/io.hpp"
#include "trispin/krawtchouk.hpp"
#include "trispin/lattice.hpp"
#include "trispin/rotation.hpp"
#include "trispin/spectral.hpp"
#include "trispin/transfer.hpp"

using nlohmann::json;

namespace {

// Per-subcommand options; each subcommand registers only what it uses.
struct Options {
    std::string rotation_path;
    std::vector<double> euler;
    bool improper = false;
    bool paper_example = false;
    int n = 0;
    double tol = 1e-10;
    std::string from_site, to_site;
    double time = 0.0;
    double t_min = 0.0, t_max = 1.0;
    int steps = 2;
    std::string out_path;
    std::string format = "json";
    bool do_assert = false;
    bool oracle = false;
};

trispin::RotationMatrix resolve_rotation(const Options& o) {
    int sources = (!o.rotation_path.empty() ? 1 : 0) + (!o.euler.empty() ? 1 : 0)
                  + (o.paper_example ? 1 : 0);
    if (sources != 1)
        throw trispin::BadConfig(
            "exactly one rotation source required: --rotation, --euler or --paper-example");
    if (o.paper_example) return trispin::RotationMatrix::paper_example();
    if (!o.euler.empty()) {
        if (o.euler.size() != 3) throw trispin::BadConfig("--euler needs 3 angles");
        return trispin::RotationMatrix::from_euler(o.euler[0], o.euler[1], o.euler[2], o.improper);
    }
    std::ifstream in(o.rotation_path);
    if (!in) throw trispin::BadConfig("cannot open rotation file: " + o.rotation_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw trispin::BadConfig(std::string("rotation file is not valid JSON: ") + e.what());
    }
    return trispin::rotation_from_json(j);
}

trispin::Site parse_site(const std::string& text, const char* flag) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream ss(text);
    if (!(ss >> i >> comma >> j) || comma != ',')
        throw trispin::BadConfig(std::string(flag) + " expects \"i,j\"");
    return trispin::Site{i, j};
}

void write_output(const Options& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw trispin::BadConfig("cannot open output file: " + o.out_path);
    out << text << "\n";
}

std::string dump(const json& j) { return j.dump(2); }

void add_rotation_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--rotation", o.rotation_path, "JSON file with the rotation matrix");
    cmd->add_option("--euler", o.euler, "z-y-z Euler angles a,b,c (radians)")->delimiter(',');
    cmd->add_flag("--improper", o.improper, "compose the Euler rotation with diag(1,1,-1)");
    cmd->add_flag("--paper-example", o.paper_example, "use the built-in worked example matrix");
}

int run(int argc, char** argv) {
    CLI::App app{"trispin: exactly solvable 1-excitation dynamics on a triangular XY lattice"};
    app.require_subcommand(1);

    Options o;
    if (const char* env_tol = std::getenv("TRISPIN_TOL")) o.tol = std::atof(env_tol);

    auto* c_coup = app.add_subcommand("couplings", "emit the solvable coupling set as JSON");
    auto* c_spec = app.add_subcommand("spectrum", "analytic spectrum, optionally checked by Jacobi");
    auto* c_orth = app.add_subcommand("ortho-check", "orthogonality and recurrence residuals");
    auto* c_tran = app.add_subcommand("transfer", "transition amplitude at one time");
    auto* c_fser = app.add_subcommand("fidelity-series", "amplitude series as CSV");
    auto* c_pst = app.add_subcommand("pst-check", "perfect-transfer-to-hypotenuse diagnostics");

    for (auto* cmd : {c_coup, c_spec, c_orth, c_tran, c_fser, c_pst}) {
        add_rotation_flags(cmd, o);
        cmd->add_option("--N", o.n, "lattice order")->required();
        cmd->add_option("--tol", o.tol, "tolerance for checks");
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    }
    for (auto* cmd : {c_spec, c_orth}) cmd->add_flag("--assert", o.do_assert, "exit 2 if above tolerance");
    c_spec->add_flag("--oracle", o.oracle, "also run the Jacobi oracle and compare");
    c_tran->add_option("--from", o.from_site, "source site i,j")->required();
    c_tran->add_option("--to", o.to_site, "target site i,j")->required();
    c_tran->add_option("--time", o.time, "evolution time")->required();
    c_fser->add_option("--from", o.from_site, "source site i,j")->required();
    c_fser->add_option("--to", o.to_site, "target site i,j")->required();
    c_fser->add_option("--t-min", o.t_min, "window start")->required();
    c_fser->add_option("--t-max", o.t_max, "window end")->required();
    c_fser->add_option("--steps", o.steps, "number of samples")->required();
    c_fser->add_option("--format", o.format, "json|csv (default csv)")->default_val("csv");

    CLI11_PARSE(app, argc, argv);

    const trispin::RotationMatrix rot = resolve_rotation(o);
    if (o.n < 0) throw trispin::BadConfig("--N must be non-negative");
    if (!(o.tol > 0)) throw trispin::BadConfig("--tol must be positive");

    if (c_coup->parsed()) {
        write_output(o, dump(trispin::couplings_to_json(trispin::couplings_from_rotation(rot, o.n))));
        return 0;
    }

    if (c_spec->parsed()) {
        const std::vector<double> x = trispin::analytic_spectrum(rot, o.n);
        trispin::TriangularLattice lat(o.n);
        json analytic = json::array();
        for (int k = 0; k < lat.dim(); ++k) {
            const trispin::Site q = lat.index_to_site(k);
            analytic.push_back({{"s", q.i}, {"t", q.j}, {"x", x[static_cast<size_t>(k)]}});
        }
        json out{{"analytic", analytic}};
        double max_dev = 0.0;
        if (o.oracle) {
            const auto h = trispin::assemble(trispin::couplings_from_rotation(rot, o.n));
            const auto d = trispin::diagonalize(h);
            out["numeric"] = d.eigenvalues;
            std::vector<double> sorted = x;
            std::sort(sorted.begin(), sorted.end());
            for (size_t k = 0; k < sorted.size(); ++k)
                max_dev = std::max(max_dev, std::fabs(sorted[k] - d.eigenvalues[k]));
            out["max_dev"] = max_dev;
        }
        write_output(o, dump(out));
        if (o.do_assert && o.oracle && max_dev > o.tol) return 2;
        return 0;
    }

    if (c_orth->parsed()) {
        const auto table = trispin::polynomial_table(rot, o.n);
        const double ortho = trispin::verify_orthogonality(table);
        const auto [res1, res2] = trispin::verify_recurrences(table);
        write_output(o, dump(json{{"ortho_defect", ortho},
                                  {"recu1_residual", res1},
                                  {"recu2_residual", res2}}));
        if (o.do_assert && (ortho > o.tol || res1 > o.tol || res2 > o.tol)) return 2;
        return 0;
    }

    if (c_tran->parsed()) {
        const auto table = trispin::polynomial_table(rot, o.n);
        const auto x = trispin::analytic_spectrum(rot, o.n);
        const auto f = trispin::amplitude_spectral(table, x, parse_site(o.from_site, "--from"),
                                                   parse_site(o.to_site, "--to"), o.time);
        write_output(o, dump(json{{"re", f.real()}, {"im", f.imag()}, {"fidelity", std::norm(f)}}));
        return 0;
    }

    if (c_fser->parsed()) {
        const auto table = trispin::polynomial_table(rot, o.n);
        const auto x = trispin::analytic_spectrum(rot, o.n);
        const auto series = trispin::fidelity_series(table, x, parse_site(o.from_site, "--from"),
                                                     parse_site(o.to_site, "--to"),
                                                     o.t_min, o.t_max, o.steps);
        if (o.format == "json") {
            json rows = json::array();
            for (size_t k = 0; k < series.times.size(); ++k)
                rows.push_back({{"time", series.times[k]},
                                {"re", series.amplitudes[k].real()},
                                {"im", series.amplitudes[k].imag()},
                                {"fidelity", series.fidelities[k]}});
            write_output(o, dump(rows));
        } else if (o.format == "csv") {
            std::ostringstream csv;
            csv << std::setprecision(17);
            csv << "time,re,im,fidelity";
            for (size_t k = 0; k < series.times.size(); ++k)
                csv << "\n" << series.times[k] << "," << series.amplitudes[k].real() << ","
                    << series.amplitudes[k].imag() << "," << series.fidelities[k];
            write_output(o, csv.str());
        } else {
            throw trispin::BadConfig("--format must be json or csv");
        }
        return 0;
    }

    // pst-check
    const auto rep = trispin::pst_check(rot, o.n, o.tol);
    json out{{"cond_a_defect", rep.cond_a_defect},
             {"cond_b_defect", rep.cond_b_defect},
             {"pst_family", rep.pst_family}};
    if (rep.pst_family) {
        out["transfer_time"] = rep.transfer_time;
        out["period"] = rep.period;
        out["max_leakage"] = rep.max_leakage;
        json hyp = json::array();
        for (size_t k = 0; k < rep.hypotenuse.size(); ++k)
            hyp.push_back({{"site", std::to_string(rep.hypotenuse[k].i) + ","
                                        + std::to_string(rep.hypotenuse[k].j)},
                           {"predicted_re", rep.predicted[k].real()},
                           {"predicted_im", rep.predicted[k].imag()},
                           {"probability", rep.probabilities[k]}});
        out["hypotenuse"] = hyp;
    }
    write_output(o, dump(out));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const trispin::Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
