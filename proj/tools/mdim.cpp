#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mdim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"metric dimension, edge metric dimension and their fractional relaxations"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand(
        "compute", "compute dim/edim/dimf/edimf of an edge-list file");
    std::string what, input, dump_path;
    compute->add_option("--what", what, "dim|edim|dimf|edimf")->required();
    compute->add_option("input", input, "edge-list file (p <n> <m> header)")->required();
    compute->add_option("--dump-lp", dump_path,
                        "also write the reduced LP rows to this path (dimf/edimf)");

    auto* gen = app.add_subcommand("gen", "write a generated family instance");
    mdim::cli::GenOptions opts;
    gen->add_option("--family", opts.family,
                    "path|cycle|complete|wheel|grid|petersen|multipartite|random-tree|"
                    "nonplanar-edim2|clique-subsets|same-codes-pair|subgraph-pair|"
                    "broadcast-pair|twin-ladder")
        ->required();
    gen->add_option("--n", opts.n, "order (path, cycle, complete, wheel, random-tree)");
    gen->add_option("--k", opts.k, "parameter k (clique-subsets, twin-ladder)");
    gen->add_option("--s", opts.s, "grid rows");
    gen->add_option("--t", opts.t, "grid columns");
    gen->add_option("--m", opts.m, "parameter m (broadcast-pair)");
    gen->add_option("--parts", opts.parts, "multipartite part sizes")->delimiter(',');
    gen->add_option("--seed", opts.seed, "seed (random-tree)");
    gen->add_option("--out", opts.out_prefix, "output path prefix")->required();

    auto* verify = app.add_subcommand("verify", "run the reproduction checks");
    std::string filter;
    verify->add_option("--filter", filter, "only run checks whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : mdim::cli::exit_usage;
    }

    if (compute->parsed())
        return mdim::cli::cmd_compute(input, what, dump_path, std::cout, std::cerr);
    if (gen->parsed()) return mdim::cli::cmd_gen(opts, std::cout, std::cerr);
    return mdim::cli::cmd_verify(filter, std::cout);
}
