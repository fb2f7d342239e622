// heptainv: command-line front end for the heptadiagonal inversion library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hepta/cli/commands.hpp"

namespace {

std::optional<std::string> opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heptadiagonal matrix inverse, determinant and solve (exact, float, symbolic)"};
    app.require_subcommand(1);

    std::string input, output, mode = "auto", rhs, family;
    std::vector<long long> ns;
    long long gen_n = 0;
    std::uint64_t seed = 0;
    int reps = 3;
    const auto modes = CLI::IsMember({"exact", "float", "symbolic", "auto"});

    auto* invert = app.add_subcommand("invert", "Write the inverse, determinant and mode as JSON");
    invert->add_option("--input", input, "Band file")->required();
    invert->add_option("--output", output, "Output path (default stdout)");
    invert->add_option("--mode", mode, "exact|float|symbolic|auto")->check(modes);

    auto* det = app.add_subcommand("det", "Print the determinant");
    det->add_option("--input", input, "Band file")->required();
    det->add_option("--output", output, "Output path (default stdout)");
    det->add_option("--mode", mode, "exact|float|symbolic|auto")->check(modes);

    auto* solve = app.add_subcommand("solve", "Solve H x = rhs");
    solve->add_option("--input", input, "Band file")->required();
    solve->add_option("--rhs", rhs, "JSON array of rationals")->required();
    solve->add_option("--output", output, "Output path (default stdout)");
    solve->add_option("--mode", mode, "exact|float|symbolic|auto")->check(modes);

    auto* gen = app.add_subcommand("gen", "Generate a band file");
    gen->add_option("family", family, "toeplitz|random")->required()->check(CLI::IsMember({"toeplitz", "random"}));
    gen->add_option("--n", gen_n, "Matrix order (>= 5)")->required();
    gen->add_option("--seed", seed, "Seed for the random family");
    gen->add_option("--output", output, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Cross-check the banded inverse against the dense oracle");
    verify->add_option("--input", input, "Band file")->required();

    auto* bench = app.add_subcommand("bench", "Time inversion of the Toeplitz family");
    bench->add_option("--n", ns, "Orders, e.g. --n 100,200")->required()->delimiter(',');
    bench->add_option("--mode", mode, "exact|float|symbolic|auto")->check(modes);
    bench->add_option("--reps", reps, "Repetitions; the median is reported")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hepta::cli::invalid_input;
    }

    using namespace hepta::cli;
    if (*invert) return cmd_invert(input, mode, opt(output), std::cout, std::cerr);
    if (*det) return cmd_det(input, mode, opt(output), std::cout, std::cerr);
    if (*solve) return cmd_solve(input, rhs, mode, opt(output), std::cout, std::cerr);
    if (*gen) return cmd_gen(family, gen_n, seed, opt(output), std::cout, std::cerr);
    if (*verify) return cmd_verify(input, std::cout, std::cerr);
    if (*bench) return cmd_bench(ns, mode, reps, std::cout, std::cerr);
    return invalid_input;
}
