#include "planar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "planar/bench.hpp"
#include "planar/generator.hpp"
#include "planar/graph_json.hpp"
#include "planar/render.hpp"

namespace planar {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError(GraphErrorCode::parse_error, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Coordinates for a whole near-triangulation: Schnyder on the graph itself
/// when it is a triangulation, otherwise on its apex augmentation.
GridEmbedding embed_whole(const PlaneGraph& g) {
    if (g.outer_face.size() == 3) return schnyder_embed(g);
    PlaneGraph augmented = apex_augment(g);
    GridEmbedding e = schnyder_embed(augmented);
    e.coords.resize(g.n);
    return e;
}

void log_timings(const StageTimings& t, std::ostream& err) {
    const char* env = std::getenv("PLANAR_PERFECT_LOG");
    if (!env || !*env) return;
    err << "stage timings (ms): validate=" << t.validate_ms << " decompose=" << t.decompose_ms
        << " embed=" << t.embed_ms << " vertex=" << t.vertex_ms << " edge=" << t.edge_ms
        << " triangle=" << t.triangle_ms << " total=" << t.total_ms << "\n";
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw GraphError(GraphErrorCode::validation_error,
                             "--sizes entry \"" + item + "\" is not a number");
        }
    }
    if (sizes.empty())
        throw GraphError(GraphErrorCode::validation_error, "--sizes is empty");
    return sizes;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"perfectness of plane near-triangulations, with odd-hole witnesses"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "json";
    bool want_witness = false;
    int jobs = 1;
    int oracle_limit = 16;
    std::string fixture;
    int gen_n = 0;
    std::uint64_t seed = 7;
    bool near = false;
    std::string sizes_csv = "2000,4000,8000";

    auto* check = app.add_subcommand("check", "decide perfectness; exit 0 perfect, 1 not");
    check->add_option("file", file, "graph document")->required();
    check->add_flag("--witness", want_witness, "print the full verdict document");
    check->add_option("--format", format, "json, dot or svg")
        ->check(CLI::IsMember({"json", "dot", "svg"}));
    check->add_option("--jobs", jobs, "worker threads for the edge/triangle stages");

    auto* decompose = app.add_subcommand("decompose", "emit the W-components");
    decompose->add_option("file", file, "graph document")->required();

    auto* embed = app.add_subcommand("embed", "emit Schnyder grid coordinates");
    embed->add_option("file", file, "graph document")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force odd-hole search");
    oracle->add_option("file", file, "graph document")->required();
    oracle->add_option("--oracle-limit", oracle_limit, "max n for the exhaustive search");

    auto* gen = app.add_subcommand("gen", "emit a fixture or a seeded random graph");
    gen->add_option("--fixture", fixture, "one of the named fixtures");
    gen->add_option("--n", gen_n, "vertex count for random generation");
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--near", near, "near-triangulation instead of triangulation");

    auto* bench = app.add_subcommand("bench", "time the checker on random triangulations");
    bench->add_option("--sizes", sizes_csv, "comma-separated vertex counts");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--jobs", jobs, "worker threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            GraphDocument doc = parse_graph(slurp(file));
            CheckOptions options;
            options.jobs = jobs;
            Verdict v = is_perfect(doc.graph, options);
            log_timings(v.timings, err);
            if (format == "dot") {
                out << to_dot(doc.graph, v.witness ? &*v.witness : nullptr);
            } else if (format == "svg") {
                GridEmbedding e = doc.coords ? *doc.coords : embed_whole(doc.graph);
                out << to_svg(doc.graph, e, v.witness ? &*v.witness : nullptr);
            } else if (want_witness) {
                out << emit_verdict(v);
            } else {
                out << (v.status == Status::perfect ? "perfect" : "not_perfect") << "\n";
            }
            return v.status == Status::perfect ? 0 : 1;
        }
        if (decompose->parsed()) {
            GraphDocument doc = parse_graph(slurp(file));
            out << emit_components(w_components(doc.graph));
            return 0;
        }
        if (embed->parsed()) {
            GraphDocument doc = parse_graph(slurp(file));
            GridEmbedding e = embed_whole(doc.graph);
            out << emit_graph(doc.graph, &e);
            return 0;
        }
        if (oracle->parsed()) {
            GraphDocument doc = parse_graph(slurp(file));
            out << emit_oracle(find_odd_hole_bruteforce(doc.graph, oracle_limit));
            return 0;
        }
        if (gen->parsed()) {
            if (fixture.empty() == (gen_n == 0))
                throw GraphError(GraphErrorCode::validation_error,
                                 "gen needs exactly one of --fixture or --n");
            PlaneGraph g = fixture.empty()
                               ? (near ? random_near_triangulation(gen_n, seed)
                                       : random_triangulation(gen_n, seed))
                               : named_fixture(fixture);
            out << emit_graph(g);
            return 0;
        }
        if (bench->parsed()) {
            auto rows = run_bench(parse_sizes(sizes_csv), seed, jobs);
            out << format_bench_table(rows);
            return 0;
        }
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace planar
