#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classify.hpp"
#include "completion.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "reductions.hpp"
#include "separators.hpp"
#include "split_enum.hpp"
#include "stream.hpp"
#include "trans_enum.hpp"

// The `domenum` command line. run() is the whole program minus argv
// handling, so tests drive it in-process with string streams.

namespace domenum::cli {

enum exit_code : int { ok = 0, usage = 1, precondition = 2, check_mismatch = 3, internal = 4 };

namespace detail {

struct Options {
    std::string command;
    std::string target;
    std::string input;
    std::string sigma_file;
    std::string route;
    std::string via = "berge";
    std::uint64_t limit = VertexSetStream::unlimited;
    std::size_t cap = 16;
    bool sorted = false;
    bool stats = false;
    bool check = false;
    bool allow_empty_edge = false;
    bool show_pairs = false;
};

class usage_error : public error {
public:
    using error::error;
};

inline std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw usage_error("cannot open '" + path + "'");
    }
    buffer << file.rdbuf();
    return buffer.str();
}

inline std::string format_ids(const std::vector<vertex_t>& ids) {
    std::string out;
    for (vertex_t v : ids) {
        out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    }
    return out;
}

inline bool graph_target(const std::string& target) { return target != "mts"; }

struct Inputs {
    std::optional<Graph> graph;
    std::optional<Hypergraph> hypergraph;

    // n + m for graphs; |V| + total edge size for hypergraphs.
    std::uint64_t size() const {
        if (graph) {
            return graph->vertex_count() + graph->edge_count();
        }
        std::uint64_t total = hypergraph->ground_size();
        for (const auto& e : hypergraph->edges()) {
            total += e.size();
        }
        return total;
    }
};

inline Inputs load(const Options& o, bool wants_graph, std::istream& in) {
    std::string text = read_all(o.input, in);
    Inputs inputs;
    if (wants_graph) {
        inputs.graph = io::parse_graph(text);
    } else {
        inputs.hypergraph = io::parse_hypergraph(text, o.allow_empty_edge);
    }
    return inputs;
}

inline void print_family(std::ostream& out, Family family, bool sorted) {
    if (sorted) {
        std::sort(family.begin(), family.end());
    }
    for (const auto& s : family) {
        out << io::format_set(s) << '\n';
    }
}

inline int run_classify(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = *load(o, true, in).graph;
    if (auto p = split_partition(g)) {
        out << "split yes clique: " << io::format_set(p->clique) << " independent: " << io::format_set(p->independent)
            << '\n';
    } else {
        out << "split no witness: " << format_ids(split_obstruction(g)) << '\n';
    }
    auto chordal = is_chordal(g);
    if (chordal) {
        out << "chordal yes peo: " << format_ids(chordal.elimination_order) << '\n';
    } else {
        out << "chordal no cycle: " << format_ids(chordal.chordless_cycle) << '\n';
    }
    if (auto path = contains_induced_p6(g); path.empty()) {
        out << "p6-free yes\n";
    } else {
        out << "p6-free no path: " << format_ids(path) << '\n';
    }
    out << "co-bipartite " << (is_cobipartite(g) ? "yes" : "no") << '\n';
    return ok;
}

inline int run_complete(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = *load(o, true, in).graph;
    auto labels = classify_redundancy(g);
    auto added = completion_edges(g, labels);
    out << "irredundant: " << io::format_set(labels.irredundant) << '\n';
    out << "redundant: " << io::format_set(labels.redundant) << '\n';
    out << "# " << added.size() << " added edges\n";
    for (auto [u, v] : added) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return ok;
}

inline int run_reduce(const Options& o, std::istream& in, std::ostream& out) {
    const bool from_graph = o.target == "closed-nbhd" || o.target == "open-nbhd";
    Inputs inputs = load(o, from_graph, in);
    if (from_graph) {
        const Graph& g = *inputs.graph;
        io::write_hypergraph(out, o.target == "closed-nbhd" ? closed_neighbourhood_hypergraph(g)
                                                            : open_neighbourhood_hypergraph(g));
        return ok;
    }
    const Hypergraph& h = *inputs.hypergraph;
    IncidenceGraph built = o.target == "bip"         ? bipartite_incidence(h)
                           : o.target == "split-inc" ? split_incidence(h)
                                                     : cobipartite_incidence(h);
    io::write_labels(out, built.labels);
    io::write_graph(out, built.graph);
    return ok;
}

inline Family oracle_family(const std::string& target, const Inputs& inputs, const OracleOptions& options) {
    if (target == "mds") {
        return oracle_minimal_dominating_sets(*inputs.graph, options);
    }
    if (target == "mtds") {
        return oracle_minimal_total_dominating_sets(*inputs.graph, options);
    }
    if (target == "mcds") {
        return oracle_minimal_connected_dominating_sets(*inputs.graph, options);
    }
    if (target == "minsep") {
        return oracle_minimal_separators(*inputs.graph, options);
    }
    return oracle_minimal_transversals(*inputs.hypergraph, options);
}

inline int run_oracle(const Options& o, std::istream& in, std::ostream& out) {
    Inputs inputs = load(o, graph_target(o.target), in);
    Family family = oracle_family(o.target, inputs, OracleOptions{o.cap});
    if (family.size() > o.limit) {
        family.resize(o.limit);
    }
    print_family(out, std::move(family), o.sorted);
    return ok;
}

inline std::optional<DomEnumRoute> parse_route(const std::string& name) {
    for (auto r : {DomEnumRoute::split, DomEnumRoute::p6_free_chordal, DomEnumRoute::completion_split,
                   DomEnumRoute::generic}) {
        if (name == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

inline int run_enum(const Options& o, std::istream& in, std::ostream& out) {
    if (o.check && o.limit != VertexSetStream::unlimited) {
        throw usage_error("--check compares whole families and cannot be combined with --limit");
    }
    if (!o.route.empty() && o.target != "mds") {
        throw usage_error("--route applies to 'enum mds' only");
    }
    if (!o.sigma_file.empty() && o.target != "mds") {
        throw usage_error("--sigma applies to 'enum mds' only");
    }
    if ((o.via != "berge" || o.show_pairs) && o.target != "mts") {
        throw usage_error("--via and --show-pairs apply to 'enum mts' only");
    }
    Inputs inputs = load(o, graph_target(o.target), in);

    Family emitted;
    const bool buffer = o.sorted || o.check;
    VertexSetStream stream(
        [&](const VertexSet& s) {
            if (buffer) {
                emitted.push_back(s);
            } else {
                out << io::format_set(s) << '\n';
            }
        },
        o.limit);

    std::string route_name;
    if (o.target == "mds") {
        DomEnumOptions options;
        if (!o.route.empty()) {
            options.route = parse_route(o.route);
            if (!options.route) {
                throw usage_error("unknown route '" + o.route + "'");
            }
        }
        if (!o.sigma_file.empty()) {
            std::istringstream text(read_all(o.sigma_file, in));
            options.sigma = EnumerationOrder::from_sequence(io::parse_permutation(text, inputs.graph->vertex_count()));
        }
        route_name = to_string(dom_enum(*inputs.graph, stream, options));
    } else if (o.target == "mtds") {
        tdom_enum(*inputs.graph, stream);
    } else if (o.target == "mcds") {
        cdom_enum(*inputs.graph, stream);
    } else if (o.target == "minsep") {
        auto family = minimal_separators(*inputs.graph);
        stream.tick(family.separators.size());
        for (const auto& s : family.separators) {
            if (!stream.emit(s)) {
                break;
            }
        }
        stream.finish();
    } else if (o.via == "cobip") {
        const Hypergraph& h = *inputs.hypergraph;
        IncidenceGraph built = cobipartite_incidence(h);
        TransversalFilter filter(h);
        VertexSetStream inner([&](const VertexSet& d) {
            if (auto t = filter(d)) {
                stream.tick();
                stream.emit(*t);
            }
        });
        dom_enum(built.graph, inner);
        stream.finish();
        if (o.show_pairs) {
            for (const auto& pair : filter.dropped()) {
                out << "# pair " << io::format_set(pair) << '\n';
            }
        }
    } else {
        trans_enum(*inputs.hypergraph, stream);
    }
    stream.finish();

    if (buffer) {
        print_family(out, emitted, o.sorted);
    }
    if (!route_name.empty()) {
        out << "# route " << route_name << '\n';
    }
    if (o.stats) {
        const auto& st = stream.stats();
        out << "# stats count=" << st.count << " max_delay=" << st.max_delay << " mean_delay=" << std::fixed
            << std::setprecision(2) << st.mean_delay() << " preprocessing=" << st.preprocessing
            << " n_plus_m=" << inputs.size() << '\n';
    }
    if (o.check) {
        Family expected = canonical(oracle_family(o.target, inputs, OracleOptions{o.cap}));
        Family got = canonical(emitted);
        if (got == expected) {
            out << "# check ok " << got.size() << " sets\n";
            return ok;
        }
        Family missing;
        Family extra;
        std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
        std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
        for (const auto& s : missing) {
            out << "# missing " << io::format_set(s) << '\n';
        }
        for (const auto& s : extra) {
            out << "# extra " << io::format_set(s) << '\n';
        }
        if (missing.empty() && extra.empty()) {
            out << "# repeated sets in output\n";
        }
        return check_mismatch;
    }
    return ok;
}

} // namespace detail

/// Runs one command. `args` excludes the program name; input "-" reads `in`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Enumerate minimal dominating sets, their total and connected variants, and minimal transversals.",
                 "domenum"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "split / chordal / P6-free / co-bipartite verdicts with witnesses");
    classify->add_option("input", o.input, "graph file, - for stdin")->required();

    auto* complete = app.add_subcommand("complete", "irredundant/redundant labelling and the completion's new edges");
    complete->add_option("input", o.input, "graph file, - for stdin")->required();

    auto* reduce = app.add_subcommand("reduce", "build a neighbourhood hypergraph or an incidence graph");
    reduce->add_option("kind", o.target, "closed-nbhd | open-nbhd | bip | split-inc | cobip-inc")
        ->required()
        ->check(CLI::IsMember({"closed-nbhd", "open-nbhd", "bip", "split-inc", "cobip-inc"}));
    reduce->add_option("input", o.input, "graph or hypergraph file, - for stdin")->required();
    reduce->add_flag("--allow-empty-edge", o.allow_empty_edge, "accept 'h' lines without vertices");

    const std::vector<std::string> targets{"mds", "mtds", "mcds", "mts", "minsep"};
    auto* enumerate = app.add_subcommand("enum", "stream a family, one set per line");
    enumerate->add_option("target", o.target, "mds | mtds | mcds | mts | minsep")->required()->check(CLI::IsMember(targets));
    enumerate->add_option("input", o.input, "graph (hypergraph for mts) file, - for stdin")->required();
    enumerate->add_flag("--sorted", o.sorted, "buffer and sort the output (gives up the delay bound)");
    enumerate->add_option("--limit", o.limit, "stop after K sets");
    enumerate->add_flag("--stats", o.stats, "finish with a '# stats' line of counted-operation delays");
    enumerate->add_flag("--check", o.check, "compare against the exhaustive oracle; exit 3 on mismatch");
    enumerate->add_option("--sigma", o.sigma_file, "permutation file ordering clique extensions (mds)");
    enumerate->add_option("--route", o.route, "force split | p6-free-chordal | completion-split | generic (mds)");
    enumerate->add_option("--via", o.via, "berge | cobip (mts)")->check(CLI::IsMember({"berge", "cobip"}));
    enumerate->add_flag("--show-pairs", o.show_pairs, "with --via cobip, list the dropped {x, y_e} pairs");
    enumerate->add_option("--cap", o.cap, "oracle size cap for --check");
    enumerate->add_flag("--allow-empty-edge", o.allow_empty_edge, "accept 'h' lines without vertices");

    auto* oracle = app.add_subcommand("oracle", "exhaustive subset-lattice families");
    oracle->add_option("target", o.target, "mds | mtds | mcds | mts | minsep")->required()->check(CLI::IsMember(targets));
    oracle->add_option("input", o.input, "graph (hypergraph for mts) file, - for stdin")->required();
    oracle->add_flag("--sorted", o.sorted, "lexicographic instead of size-then-lexicographic order");
    oracle->add_option("--limit", o.limit, "print at most K sets");
    oracle->add_option("--cap", o.cap, "largest universe accepted");
    oracle->add_flag("--allow-empty-edge", o.allow_empty_edge, "accept 'h' lines without vertices");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    for (auto* sub : app.get_subcommands()) {
        o.command = sub->get_name();
    }

    try {
        if (o.command == "classify") {
            return detail::run_classify(o, in, out);
        }
        if (o.command == "complete") {
            return detail::run_complete(o, in, out);
        }
        if (o.command == "reduce") {
            return detail::run_reduce(o, in, out);
        }
        if (o.command == "enum") {
            return detail::run_enum(o, in, out);
        }
        return detail::run_oracle(o, in, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const detail::usage_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const precondition_error& e) {
        err << "precondition: " << e.what();
        if (!e.witness().empty()) {
            err << " (witness: " << detail::format_ids(e.witness()) << ')';
        }
        err << '\n';
        return precondition;
    } catch (const contract_violation& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace domenum::cli
