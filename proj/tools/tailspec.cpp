// tailspec: spectra of "finite graph + infinite ray" couplings.
//
// Subcommands: charpoly, spectrum, family, verify, green, schur-demo.
// Reports are JSON on stdout (CSV via --format csv); exit code 0 on
// success, 2 on input validation errors, 1 on numeric failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tailspec/char_poly.hpp"
#include "tailspec/families.hpp"
#include "tailspec/graph.hpp"
#include "tailspec/json_io.hpp"
#include "tailspec/oracle.hpp"
#include "tailspec/tail_solver.hpp"

namespace {

struct Options {
    std::string graph_path;
    std::vector<int> kappa;
    bool star = false;
    bool flower = false;
    std::vector<int> lengths{50, 100, 200, 400};
    double tol = 1e-12;
    double margin = 0.02;
    std::string format = "json";
    std::string output;
    double z = 0.5;
    int i = 1;
    int j = 1;
    int L = 60;
    int dim1 = 2;
    int dim2 = 2;
    std::uint64_t seed = 1;
};

tailspec::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return tailspec::graph_from_json(buf.str());
}

void emit(const Options& opt, const std::string& json_text,
          const std::string& csv_text = "") {
    std::string body;
    if (opt.format == "json")
        body = json_text + "\n";
    else
        body = csv_text.empty() ? tailspec::flatten_csv(json_text) : csv_text;
    if (opt.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
        out << body;
    }
}

std::vector<int> family_kappa(const Options& opt) {
    if (opt.star == opt.flower)
        throw std::invalid_argument("family: pass exactly one of --star / --flower");
    if (opt.kappa.empty())
        throw std::invalid_argument("family: --k is required");
    return opt.kappa;
}

int run(int argc, char** argv) {
    CLI::App app{"spectra of infinite graphs formed by attaching a ray to a finite graph"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", opt.output, "write the report to a file");
    };

    CLI::App* charpoly_cmd =
        app.add_subcommand("charpoly", "characteristic polynomial of a graph");
    charpoly_cmd->add_option("input", opt.graph_path, "graph JSON file")->required();
    add_format(charpoly_cmd);

    CLI::App* spectrum_cmd = app.add_subcommand(
        "spectrum", "essential band and discrete eigenvalues of graph + ray");
    spectrum_cmd->add_option("input", opt.graph_path, "graph JSON file")->required();
    spectrum_cmd->add_option("--tol", opt.tol, "root refinement tolerance");
    add_format(spectrum_cmd);

    CLI::App* family_cmd = app.add_subcommand(
        "family", "closed-form star/flower solver for kappa = (k_1,...,k_n)");
    family_cmd->add_flag("--star", opt.star, "multiple star family");
    family_cmd->add_flag("--flower", opt.flower, "flower family");
    family_cmd->add_option("--k", opt.kappa, "comma-separated k_j tuple")
        ->delimiter(',')
        ->required();
    family_cmd->add_option("--tol", opt.tol, "root refinement tolerance");
    add_format(family_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "truncation convergence study against the predicted spectrum");
    verify_cmd->add_option("input", opt.graph_path, "graph JSON file")->required();
    verify_cmd->add_option("--lengths", opt.lengths, "tail lengths")->delimiter(',');
    verify_cmd->add_option("--margin", opt.margin, "band-outlier margin");
    add_format(verify_cmd);

    CLI::App* green_cmd = app.add_subcommand(
        "green", "free-path Green's function entry and its truncation residual");
    green_cmd->add_option("--z", opt.z, "spectral parameter, 0 < |z| < 1");
    green_cmd->add_option("--i", opt.i, "row index (1-based)");
    green_cmd->add_option("--j", opt.j, "column index (1-based)");
    green_cmd->add_option("--L", opt.L, "truncation length");
    add_format(green_cmd);

    CLI::App* schur_cmd = app.add_subcommand(
        "schur-demo", "block factorization / inverse / determinant residuals");
    schur_cmd->add_option("--dim1", opt.dim1, "first block size");
    schur_cmd->add_option("--dim2", opt.dim2, "second block size");
    schur_cmd->add_option("--seed", opt.seed, "RNG seed");
    add_format(schur_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (charpoly_cmd->parsed()) {
            tailspec::Graph g = load_graph(opt.graph_path);
            tailspec::IntPoly p = tailspec::charpoly(g);
            std::string j = "{\"n\":" + std::to_string(g.n) + ",\"coefficients\":[";
            bool first = true;
            for (const auto& c : tailspec::coeff_strings(p)) {
                if (!first) j += ",";
                j += "\"" + c + "\"";
                first = false;
            }
            j += "]}";
            emit(opt, j);
        } else if (spectrum_cmd->parsed()) {
            tailspec::Graph g = load_graph(opt.graph_path);
            tailspec::SolveOptions solve;
            solve.refine_tol = opt.tol;
            emit(opt, tailspec::to_json(tailspec::full_spectrum_report(g, solve)));
        } else if (family_cmd->parsed()) {
            std::vector<int> kappa = family_kappa(opt);
            tailspec::SolveOptions solve;
            solve.refine_tol = opt.tol;
            solve.monotone_tol = opt.tol;
            tailspec::FamilyReport rep =
                opt.star ? tailspec::star_spectrum(kappa, solve)
                         : tailspec::flower_spectrum(kappa, solve);
            emit(opt, tailspec::to_json(rep));
        } else if (verify_cmd->parsed()) {
            tailspec::Graph g = load_graph(opt.graph_path);
            auto reports = tailspec::convergence_study(g, opt.lengths, opt.margin);
            emit(opt, tailspec::to_json(reports), opt.format == "csv"
                                                      ? tailspec::convergence_csv(reports)
                                                      : "");
        } else if (green_cmd->parsed()) {
            tailspec::GreenEntry entry = tailspec::green_entry(opt.z, opt.i, opt.j);
            double residual = tailspec::resolvent_check(opt.z, opt.i, opt.j, opt.L);
            std::ostringstream j;
            j.precision(17);
            j << "{\"z\":" << entry.z << ",\"i\":" << entry.i << ",\"j\":" << entry.j
              << ",\"L\":" << opt.L << ",\"value\":" << entry.value
              << ",\"residual\":" << residual << "}";
            emit(opt, j.str());
        } else if (schur_cmd->parsed()) {
            emit(opt, tailspec::to_json(
                          tailspec::schur_identity_check(opt.dim1, opt.dim2, opt.seed)));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
