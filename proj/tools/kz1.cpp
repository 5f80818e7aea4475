// Command-line front end. Exit codes: 0 ok, 1 parse error, 2 precondition
// violation, 3 cycle or iteration cap, 4 node budget exceeded, 5 failed check.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "kz1/acceptance.hpp"
#include "kz1/errors.hpp"
#include "kz1/fields.hpp"
#include "kz1/homology.hpp"
#include "kz1/io.hpp"
#include "kz1/verify.hpp"

namespace {

using namespace kz1;

// A chain argument is inline JSON, "-" for stdin, or a file path.
std::string read_chain_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        return arg;
    }
    if (arg == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(arg);
    if (!in) {
        throw ParseError("cannot read chain file " + arg);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BasisFn critical_basis_for(const std::string& field) {
    if (field == "bs") {
        return nullptr;  // every positive simplex is critical
    }
    return composed_critical_basis;
}

struct Options {
    std::string simplex;
    std::string field = "composed";
    std::string chain;
    std::string map = "f";
    std::size_t max_steps = 200;
    std::size_t budget = 10'000'000;
    std::size_t kmax = 5;
    bool infinity = false;
    bool json = false;
    std::string seeds;
    std::string out;
    std::size_t dim_max = 3;
    long entry_bound = 8;
    std::vector<int> only;
    std::size_t chains = 500;
};

int run(const std::string& command, const Options& o) {
    auto space = std::make_shared<KZ1>();
    if (command == "classify") {
        const BarSimplex s = parse_simplex(o.simplex);
        std::cout << classification_to_json(s, make_field(o.field)->classify(s)) << '\n';
    } else if (command == "pair") {
        const BarSimplex s = parse_simplex(o.simplex);
        const Classification c = make_field(o.field)->classify(s);
        std::cout << (c.is_critical() ? "critical" : format_bar(c.partner)) << '\n';
    } else if (command == "trace") {
        const BarSimplex s = parse_simplex(o.simplex);
        std::cout << trace_to_json(trace(*space, *make_field(o.field), s, o.max_steps)) << '\n';
    } else if (command == "reach") {
        const BarSimplex s = parse_simplex(o.simplex);
        ReachOptions ro;
        ro.node_budget = o.budget;
        ro.collect_simplices = false;
        std::cout << reach_to_json(s, reach(*space, *make_field(o.field), s, ro)) << '\n';
    } else if (command == "phi") {
        const Chain c = chain_from_json(read_chain_text(o.chain));
        const auto field = make_field(o.field);
        EvaluationOptions eo = options_from_env();
        eo.max_nodes = o.budget;
        const Chain out = o.infinity ? phi_infinity(*space, *field, c, eo) : phi(*space, *field, c);
        std::cout << chain_to_json(out) << '\n';
    } else if (command == "reduce") {
        const Chain c = chain_from_json(read_chain_text(o.chain));
        EvaluationOptions eo = options_from_env();
        eo.max_nodes = o.budget;
        const FieldReduction fr = reduction_from_field(space, make_field(o.field), critical_basis_for(o.field), eo);
        const ChainMap& m = o.map == "f" ? fr.reduction.f : o.map == "g" ? fr.reduction.g : fr.reduction.h;
        std::cout << chain_to_json(m(c)) << '\n';
    } else if (command == "homology") {
        const FieldReduction fr = reduction_from_field(space, make_field(o.field), critical_basis_for(o.field));
        const HomologyResult h = homology_of_critical(fr.critical, o.kmax);
        if (o.json) {
            std::cout << homology_to_json(h) << '\n';
        } else {
            for (std::size_t k = 0; k < h.groups.size(); ++k) {
                std::cout << "H" << k << " = " << format_group(h.groups[k]) << '\n';
            }
        }
    } else if (command == "bench") {
        const auto records = scaling_bench(*space, *make_field(o.field), seeds_from_pattern(o.seeds), o.budget);
        if (o.out.empty() || o.out == "-") {
            write_bench_csv(std::cout, records);
        } else {
            std::ofstream out(o.out);
            if (!out) {
                throw PreconditionError("cannot write " + o.out);
            }
            write_bench_csv(out, records);
        }
    } else if (command == "check") {
        AcceptanceOptions ao;
        ao.only = o.only;
        ao.identity_chains = o.chains;
        ao.admissibility_dim = o.dim_max;
        ao.admissibility_bound = o.entry_bound;
        bool all = true;
        for (const auto& r : run_acceptance(ao)) {
            std::cout << format_result(r) << '\n';
            all = all && r.passed;
        }
        return all ? 0 : 5;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete vector fields on K(Z,1): classification, reach, reductions, homology"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> fields = {"eml", "bs", "bc", "composed"};

    auto field_option = [&](CLI::App* cmd) {
        cmd->add_option("--field", o.field, "vector field")->check(CLI::IsMember(fields));
    };
    auto simplex_arg = [&](CLI::App* cmd) {
        cmd->add_option("simplex", o.simplex, "simplex in bar ([3|-2|5]) or b-tuple ([0,3,1]) notation")
            ->required();
    };

    auto* classify = app.add_subcommand("classify", "classify a simplex as source, target, or critical");
    simplex_arg(classify);
    field_option(classify);

    auto* pair = app.add_subcommand("pair", "print the partner of a simplex, or \"critical\"");
    simplex_arg(pair);
    field_option(pair);

    auto* trace_cmd = app.add_subcommand("trace", "list moves along V-boundary paths in depth-first order");
    simplex_arg(trace_cmd);
    field_option(trace_cmd);
    trace_cmd->add_option("--max-steps", o.max_steps, "number of moves to print");

    auto* reach_cmd = app.add_subcommand("reach", "size of the set reachable in the V-boundary graph");
    simplex_arg(reach_cmd);
    field_option(reach_cmd);
    reach_cmd->add_option("--budget", o.budget, "node budget");

    auto* phi_cmd = app.add_subcommand("phi", "apply Phi (or Phi^infinity with --inf) to a chain");
    phi_cmd->add_option("chain", o.chain, "chain JSON: inline, a file, or - for stdin")->required();
    phi_cmd->add_flag("--inf", o.infinity, "stabilize");
    phi_cmd->add_option("--budget", o.budget, "node budget for the stabilization");
    field_option(phi_cmd);

    auto* reduce = app.add_subcommand("reduce", "apply f, g, or h of the reduction given by a field");
    reduce->add_option("map", o.map, "f, g, or h")->required()->check(CLI::IsMember({"f", "g", "h"}));
    reduce->add_option("chain", o.chain, "chain JSON: inline, a file, or - for stdin")->required();
    reduce->add_option("--budget", o.budget, "node budget for the stabilization");
    field_option(reduce);

    auto* homology = app.add_subcommand("homology", "homology of the critical complex");
    homology->add_option("--kmax", o.kmax, "top dimension");
    homology->add_flag("--json", o.json, "print JSON instead of a table");
    field_option(homology);

    auto* bench = app.add_subcommand("bench", "reach sizes and timings as CSV");
    field_option(bench);
    bench->add_option("--seeds", o.seeds, "seed file, pow2:A..B, or lower-bound:A..B")->required();
    bench->add_option("--out", o.out, "CSV path (stdout when omitted)");
    bench->add_option("--budget", o.budget, "node budget per seed");

    auto* check = app.add_subcommand("check", "run the acceptance checks; nonzero exit on a violation");
    check->add_option("--dim-max", o.dim_max, "dimension bound for the admissibility sweep");
    check->add_option("--entry-bound", o.entry_bound, "entry bound for the admissibility sweep");
    check->add_option("--only", o.only, "criteria to run (1-8)");
    check->add_option("--chains", o.chains, "random chains per dimension for the identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const AdmissibilityViolation& e) {
        std::cerr << "admissibility: " << e.what() << '\n';
        return 3;
    } catch (const IterationCapExceeded& e) {
        std::cerr << "iteration cap: " << e.what() << '\n';
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 4;
    }
}
