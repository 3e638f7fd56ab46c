#include "cotanhom/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cmd = cotanhom::commands;

int main(int argc, char** argv) {
    CLI::App app{"Exact cellular homology, quiver-representation Floer cohomology and theorem sweeps"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string source;
    auto* homology = app.add_subcommand("homology", "Homology dimensions and Euler characteristic");
    homology->add_option("input", source, "builtin:<circle|sphere|torus|genus_g:N> or a JSON file")->required();
    homology->add_flag("--json", json, "Machine-readable output");

    auto* classify = app.add_subcommand("classify", "Genus of a closed orientable surface");
    classify->add_option("input", source, "builtin:<name> or a cell-complex JSON file")->required();
    classify->add_flag("--json", json, "Machine-readable output");

    std::string first;
    std::string second;
    auto* floer = app.add_subcommand("floer", "Floer cohomology of two quiver representations");
    floer->add_option("first", first, "builtin:<zero_section|torus_zero_section> or a representation file")
        ->required();
    floer->add_option("second", second, "second representation")->required();
    floer->add_flag("--json", json, "Machine-readable output");

    cmd::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Check a classification theorem over sampled representations");
    verify->add_option("theorem", verify_options.theorem, "sphere | torus | concentrated")->required();
    verify->add_option("--seed", verify_options.seed, "Sampling seed");
    verify->add_option("--count", verify_options.count, "Number of samples");
    verify->add_option("--max-dim", verify_options.max_dim, "Maximum total dimension of sampled spaces");
    verify->add_option("--threads", verify_options.threads, "Worker threads; output does not depend on it");
    verify->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cmd::kInputError;
    }

    cmd::CommandOutcome outcome;
    if (*homology) {
        outcome = cmd::homology(source, json);
    } else if (*classify) {
        outcome = cmd::classify(source, json);
    } else if (*floer) {
        outcome = cmd::floer(first, second, json);
    } else {
        verify_options.json = json;
        outcome = cmd::verify(verify_options);
    }
    std::cout << outcome.output;
    std::cerr << outcome.error;
    return outcome.exit_code;
}
