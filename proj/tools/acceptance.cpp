// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "CLI11.hpp"
#include "kz1/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"kz1 acceptance suite"};
    kz1::AcceptanceOptions options;
    bool verbose = false;
    app.add_option("--only", options.only, "run only these criteria (1-8)");
    app.add_option("--seed", options.seed, "random seed");
    app.add_option("--chains", options.identity_chains, "random chains per dimension for the identities");
    app.add_flag("-v,--verbose", verbose, "print informative measurements as they happen");
    CLI11_PARSE(app, argc, argv);
    if (verbose) {
        options.progress = &std::cerr;
    }
    const auto results = kz1::run_acceptance(options);
    bool all = true;
    for (const auto& r : results) {
        std::cout << kz1::format_result(r) << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
