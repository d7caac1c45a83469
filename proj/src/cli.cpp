#include "mdim/cli.hpp"

#include <fstream>
#include <ostream>

#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "mdim/lp.hpp"
#include "mdim/search.hpp"
#include "mdim/verify.hpp"

namespace mdim::cli {

namespace {

void print_witness_set(std::ostream& out, const VertexSet& s) {
    out << "witness {";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out << ", ";
        out << v;
        first = false;
    });
    out << "}\n";
}

void print_weighting(std::ostream& out, const Weighting& w) {
    for (int v = 0; v < w.size(); ++v)
        if (w.at(v).sign() != 0) out << v << "=" << w.at(v).str() << "\n";
}

}  // namespace

int cmd_compute(const std::string& input_path, const std::string& what,
                const std::string& dump_lp_path, std::ostream& out,
                std::ostream& err) {
    Graph g;
    try {
        g = read_edge_list_file(input_path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (what == "dim" || what == "edim") {
            DimResult r = what == "dim" ? dim(g) : edim(g);
            out << r.value << "\n";
            print_witness_set(out, r.witness);
            if (!r.proven_optimal) out << "note: node budget exhausted, value is an upper bound\n";
        } else if (what == "dimf" || what == "edimf") {
            PairMode mode = what == "dimf" ? PairMode::vertex : PairMode::edge;
            if (!dump_lp_path.empty()) {
                DistMatrix d = all_pairs_distances(g);
                std::ofstream dump(dump_lp_path);
                if (!dump) {
                    err << "error: cannot write " << dump_lp_path << "\n";
                    return exit_usage;
                }
                dump_lp(dump, build_covering_lp(g, d, mode));
            }
            FracResult r = mode == PairMode::vertex ? dim_f(g) : edim_f(g);
            out << r.value.str() << "\n";
            print_weighting(out, r.weights);
        } else {
            err << "error: --what must be one of dim|edim|dimf|edimf\n";
            return exit_usage;
        }
    } catch (const DisconnectedError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const TooSmallError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}

namespace {

void write_member(const std::string& prefix, const LabeledGraph& lg,
                  std::ostream& out) {
    std::ofstream edges(prefix + ".edges");
    if (!edges) throw BadParameterError("cannot write " + prefix + ".edges");
    write_edge_list(edges, lg.graph);
    std::ofstream names(prefix + ".names");
    if (!names) throw BadParameterError("cannot write " + prefix + ".names");
    write_name_map(names, lg);
    out << prefix << ".edges\n" << prefix << ".names\n";
}

int require(int value, const std::string& flag) {
    if (value < 0) throw BadParameterError("missing required flag --" + flag);
    return value;
}

}  // namespace

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const std::string& f = o.family;
        if (f == "path") {
            write_member(o.out_prefix, generate(FamilySpec::path(require(o.n, "n"))), out);
        } else if (f == "cycle") {
            write_member(o.out_prefix, generate(FamilySpec::cycle(require(o.n, "n"))), out);
        } else if (f == "complete") {
            write_member(o.out_prefix, generate(FamilySpec::complete(require(o.n, "n"))), out);
        } else if (f == "wheel") {
            write_member(o.out_prefix, generate(FamilySpec::wheel(require(o.n, "n"))), out);
        } else if (f == "grid") {
            write_member(o.out_prefix,
                         generate(FamilySpec::grid(require(o.s, "s"), require(o.t, "t"))), out);
        } else if (f == "petersen") {
            write_member(o.out_prefix, generate(FamilySpec::petersen()), out);
        } else if (f == "multipartite") {
            if (o.parts.empty()) throw BadParameterError("missing required flag --parts");
            write_member(o.out_prefix, generate(FamilySpec::multipartite(o.parts)), out);
        } else if (f == "random-tree") {
            write_member(o.out_prefix, random_tree(require(o.n, "n"), o.seed), out);
        } else if (f == "nonplanar-edim2") {
            write_member(o.out_prefix, nonplanar_edim2(), out);
        } else if (f == "clique-subsets") {
            write_member(o.out_prefix, clique_subsets_graph(require(o.k, "k")), out);
        } else if (f == "same-codes-pair") {
            auto [h1, h2] = same_codes_pair();
            write_member(o.out_prefix + "-H1", h1, out);
            write_member(o.out_prefix + "-H2", h2, out);
        } else if (f == "subgraph-pair") {
            auto pair = subgraph_edim_pair();
            write_member(o.out_prefix + "-G", pair.g, out);
            write_member(o.out_prefix + "-H", induced_subgraph(pair.g, pair.span), out);
        } else if (f == "broadcast-pair") {
            auto pair = broadcast_pair(require(o.m, "m"));
            write_member(o.out_prefix + "-G", pair.g, out);
            write_member(o.out_prefix + "-H", induced_subgraph(pair.g, pair.span), out);
        } else if (f == "twin-ladder") {
            auto pair = twin_ladder_pair(require(o.k, "k"));
            write_member(o.out_prefix + "-G", pair.g, out);
            write_member(o.out_prefix + "-H", induced_subgraph(pair.g, pair.span), out);
        } else {
            throw BadParameterError("unknown family: " + f);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

int cmd_verify(const std::string& filter, std::ostream& out) {
    VerifyReport report = run_verify(filter);
    print_report(out, report);
    return report.all_pass() ? exit_ok : 1;
}

}  // namespace mdim::cli
