#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "geodex/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv) {
    using geodex::cli::Format;
    CLI::App app{"Geometry of oriented geodesics in hyperbolic 3-space"};
    std::string command, input, output = "-", format = "json", suite;
    std::uint64_t seed = 0;
    double tol_closed = 0.0, tol_fd = 0.0;
    app.add_option("command", command, "convert | endpoints | metric | curvature | killing | flow | act | geodesic | "
                                       "surface | verify")
        ->required()
        ->check(CLI::IsMember(geodex::cli::commands()));
    app.add_option("--input", input, "JSON payload file, or - for stdin (default when stdin is not a terminal)");
    app.add_option("--output", output, "output file, or - for stdout");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
    auto* tc = app.add_option("--tol-closed", tol_closed, "override closed-form tolerances")->check(CLI::PositiveNumber);
    auto* tf = app.add_option("--tol-fd", tol_fd, "override finite-difference tolerances")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "json | csv | obj")->check(CLI::IsMember({"json", "csv", "obj"}));
    auto* suite_opt = app.add_option("--suite", suite, "verify suite: all, hyp3, kahler, killing, flows, geoflow, ruled");
    CLI11_PARSE(app, argc, argv);

    geodex::cli::JobSpec job;
    job.command = command;
    job.format = format == "csv" ? Format::Csv : format == "obj" ? Format::Obj : Format::Json;
    if (*seed_opt) job.seed = seed;
    if (*tc) job.tolerances.closed = tol_closed;
    if (*tf) job.tolerances.fd = tol_fd;

    std::string text;
    if (input == "-" || (input.empty() && !isatty(STDIN_FILENO))) {
        text = read_all(std::cin);
    } else if (!input.empty()) {
        std::ifstream f(input, std::ios::binary);
        if (!f) {
            std::cerr << "cannot read " << input << "\n";
            return 1;
        }
        text = read_all(f);
    }
    if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
        try {
            job.payload = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "invalid JSON input: " << e.what() << "\n";
            return 1;
        }
    }
    if (*suite_opt) {
        if (!job.payload.is_object()) job.payload = nlohmann::json::object();
        job.payload["suite"] = suite;
    }

    const geodex::cli::JobResult res = geodex::cli::run(job);
    if (output == "-") {
        std::cout << res.output;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << output << "\n";
            return 1;
        }
        f << res.output;
    }
    return res.exit_code;
}
