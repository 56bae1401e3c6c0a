// Command-line front end: generate benchmark graphs, compute initial layouts,
// run the random-sampling crossing-angle optimizer, and evaluate result files.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 validation
// error. All randomness is derived from the mandatory --seed, so reruns with
// identical flags reproduce identical artifacts.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossangle/evaluate.hpp"
#include "crossangle/generate.hpp"
#include "crossangle/graph.hpp"
#include "crossangle/layout.hpp"
#include "crossangle/min_angle.hpp"
#include "crossangle/records.hpp"
#include "crossangle/sampling.hpp"

namespace {

using namespace crossangle;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    auto out = open_output(path);
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

Graph read_graph(const std::string& path) {
    auto in = open_input(path);
    return load_graph(in);
}

Drawing read_drawing(const Graph& g, const std::string& path) {
    auto in = open_input(path);
    return load_drawing(g, in);
}

std::vector<ResultRecord> read_results(const std::string& path) {
    auto in = open_input(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_array()) throw ParseError(path + ": expected a JSON array of result records");
    try {
        return results_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    save_graph(g, out);
    return out.str();
}

std::string drawing_to_text(const Drawing& d) {
    std::ostringstream out;
    save_drawing(d, out);
    return out.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    return dt.count();
}

struct GenerateArgs {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string drawing;
    std::string cert;
    std::string count_mode = "attempts";
    double box = 1000.0;
};

int run_generate(const GenerateArgs& args) {
    Rng rng(args.seed);
    const std::string cert_path = args.cert.empty() ? args.out + ".cert.json" : args.cert;

    nlohmann::json cert;
    if (args.family == "tri_plus_x") {
        if (!args.drawing.empty()) {
            std::cerr << "error: --drawing is only available for oneplanar_geo\n";
            return 1;
        }
        const auto gen = gen_triangulation_plus_x(args.n, rng);
        write_text(args.out, graph_to_text(gen.graph));
        cert = certificate_to_json(gen);
    } else if (args.family == "oneplanar_geo") {
        const auto gen = gen_1planar_geometric(args.n, rng, args.box);
        write_text(args.out, graph_to_text(gen.graph));
        if (!args.drawing.empty()) write_text(args.drawing, drawing_to_text(gen.drawing));
        cert = certificate_to_json(gen);
    } else if (args.family == "oneplanar_topo") {
        if (!args.drawing.empty()) {
            std::cerr << "error: --drawing is only available for oneplanar_geo\n";
            return 1;
        }
        const auto mode = args.count_mode == "successes" ? InsertionCount::successes
                                                         : InsertionCount::attempts;
        const auto gen = gen_1planar_topological(args.n, rng, mode);
        write_text(args.out, graph_to_text(gen.graph));
        cert = certificate_to_json(gen);
    }
    cert["seed"] = args.seed;
    write_text(cert_path, cert.dump(2) + "\n");
    return 0;
}

struct LayoutArgs {
    std::string graph_path;
    std::string algo;
    std::uint64_t seed = 0;
    std::string out;
    std::optional<int> iterations;
    double box = 1e4;
    std::string result_path;
    std::string class_label;
};

int run_layout(const LayoutArgs& args) {
    const Graph g = read_graph(args.graph_path);
    Rng rng(args.seed);
    const auto start = std::chrono::steady_clock::now();

    Drawing d = random_layout(g, args.box, rng);
    long long iterations = 0;
    if (args.algo == "random") {
        // the random placement is the layout
    } else if (args.algo == "fr" || args.algo == "frcos" || args.algo == "frcage") {
        ForceConfig cfg;
        cfg.frame_side = args.box;
        cfg.iterations = args.iterations.value_or(500);
        cfg.forces = args.algo == "fr"      ? CrossingForces::none
                     : args.algo == "frcos" ? CrossingForces::cosine
                                            : CrossingForces::cage_angular;
        d = fr_layout(g, d, cfg, rng);
        iterations = cfg.iterations;
    } else if (args.algo == "stress") {
        StressConfig cfg;
        cfg.max_iterations = args.iterations.value_or(200);
        d = stress_layout(g, d, cfg);
        iterations = cfg.max_iterations;
    }

    write_text(args.out, drawing_to_text(d));

    ResultRecord record;
    record.graph = args.graph_path;
    record.algorithm = args.algo;
    record.class_label = args.class_label;
    record.seed = args.seed;
    record.crossing_angle_deg = degrees(crossing_angle_of(d));
    record.iterations = iterations;
    record.wall_ms = elapsed_ms(start);
    record.crossings = crossing_count(d);
    const std::string json = to_json(record).dump(2) + "\n";
    std::cout << json;
    if (!args.result_path.empty()) write_text(args.result_path, json);
    return 0;
}

struct OptimizeArgs {
    std::string graph_path;
    std::string in;
    std::string preset = "medium";
    std::optional<long long> iterations;
    std::optional<double> seconds;
    std::uint64_t seed = 0;
    bool snap_integer = false;
    std::string engine = "bucket";
    std::string out;
    std::string trace_path;
    std::string result_path;
    std::string class_label;
};

int run_optimize(const OptimizeArgs& args) {
    const Graph g = read_graph(args.graph_path);
    Drawing d = read_drawing(g, args.in);

    SamplerConfig cfg = preset_config(preset_from_name(args.preset));
    cfg.max_iterations = args.iterations;
    cfg.max_seconds = args.seconds;
    cfg.seed = args.seed;
    cfg.snap_integer = args.snap_integer;
    cfg.engine = args.engine == "bruteforce" ? MinPairEngine::bruteforce : MinPairEngine::bucketed;

    const auto start = std::chrono::steady_clock::now();
    const OptimizeResult result = optimize(d, cfg);
    const double wall = elapsed_ms(start);

    write_text(args.out, drawing_to_text(d));
    if (!args.trace_path.empty()) write_text(args.trace_path, trace_to_json(result).dump(2) + "\n");

    ResultRecord record;
    record.graph = args.graph_path;
    record.algorithm = "sampling:" + args.preset;
    record.class_label = args.class_label;
    record.seed = args.seed;
    record.crossing_angle_deg = degrees(result.final_angle);
    record.iterations = result.iterations;
    record.wall_ms = wall;
    record.crossings = crossing_count(d);
    record.tested_pairs = result.stats.tested_pairs;
    auto json = to_json(record);
    json["converged"] = result.converged;
    const std::string text = json.dump(2) + "\n";
    std::cout << text;
    if (!args.result_path.empty()) write_text(args.result_path, text);
    return 0;
}

struct EvaluateArgs {
    std::string results_a;
    std::string results_b;
    std::string curve_path;
    std::string summary_path;
    std::vector<double> p_grid;
};

std::string csv_real(double v) { return detail::format_real(v); }

int run_evaluate(const EvaluateArgs& args) {
    const auto records_a = read_results(args.results_a);
    const auto records_b = read_results(args.results_b);
    const auto families_a = families_by_class(records_a, "a");
    const auto families_b = families_by_class(records_b, "b");
    const auto grid = args.p_grid.empty() ? default_p_grid() : args.p_grid;

    if (!args.curve_path.empty()) {
        std::string csv = "class,p,delta\n";
        for (const auto& [cls, fam_a] : families_a) {
            const auto it = families_b.find(cls);
            if (it == families_b.end())
                throw ValidationError("class '" + cls + "' missing from " + args.results_b);
            for (const auto& point : advantage_curve(fam_a, it->second, grid))
                csv += cls + "," + csv_real(point.p) + "," + csv_real(point.delta) + "\n";
        }
        write_text(args.curve_path, csv);
    }

    if (!args.summary_path.empty()) {
        std::string csv = "class,family,min,mean,median,max\n";
        const auto emit = [&](const std::string& name,
                              const std::map<std::string, DrawingFamily>& families) {
            for (const auto& [cls, fam] : families) {
                std::vector<double> angles;
                for (const auto& [id, angle] : fam.entries) angles.push_back(angle);
                const Summary s = summarize(angles);
                csv += cls + "," + name + "," + csv_real(s.min) + "," + csv_real(s.mean) + "," +
                       csv_real(s.median) + "," + csv_real(s.max) + "\n";
            }
        };
        emit("a", families_a);
        emit("b", families_b);
        write_text(args.summary_path, csv);
    }
    return 0;
}

struct StatsArgs {
    std::string results;
    std::string results_b;
    std::string out;
};

nlohmann::json summary_json(const std::vector<ResultRecord>& records) {
    std::vector<double> angles;
    for (const auto& r : records) angles.push_back(r.crossing_angle_deg);
    const Summary s = summarize(angles);
    return {{"count", records.size()}, {"min", s.min}, {"mean", s.mean},
            {"median", s.median},      {"max", s.max}};
}

int run_stats(const StatsArgs& args) {
    const auto records_a = read_results(args.results);
    nlohmann::json report{{"a", summary_json(records_a)}};
    if (!args.results_b.empty()) {
        const auto records_b = read_results(args.results_b);
        report["b"] = summary_json(records_b);
        std::vector<double> sample_a, sample_b;
        for (const auto& r : records_a) sample_a.push_back(r.crossing_angle_deg);
        for (const auto& r : records_b) sample_b.push_back(r.crossing_angle_deg);
        try {
            const WelchResult w = welch_t_test(sample_a, sample_b);
            report["welch"] = {{"t", w.t},
                               {"p_value", w.p_value},
                               {"degrees_of_freedom", w.degrees_of_freedom}};
        } catch (const std::domain_error& e) {
            report["welch"] = {{"error", e.what()}};
        }
    }
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!args.out.empty()) write_text(args.out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crossing-angle toolkit: benchmark generators, initial layouts, the "
                 "random-sampling optimizer, and result evaluation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a benchmark graph");
    generate->add_option("--family", gen.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"tri_plus_x", "oneplanar_geo", "oneplanar_topo"}));
    generate->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.seed, "RNG seed")->required();
    generate->add_option("--out", gen.out, "Output graph file")->required();
    generate->add_option("--drawing", gen.drawing, "Witness drawing output (oneplanar_geo)");
    generate->add_option("--cert", gen.cert, "Certificate JSON path (default: <out>.cert.json)");
    generate->add_option("--count", gen.count_mode, "How x is counted for oneplanar_topo")
        ->check(CLI::IsMember({"attempts", "successes"}));
    generate->add_option("--box", gen.box, "Point box side for oneplanar_geo");

    LayoutArgs lay;
    auto* layout = app.add_subcommand("layout", "Compute an initial drawing");
    layout->add_option("--graph", lay.graph_path, "Input graph file")->required();
    layout->add_option("--algo", lay.algo, "Layout algorithm")
        ->required()
        ->check(CLI::IsMember({"random", "fr", "frcos", "frcage", "stress"}));
    layout->add_option("--seed", lay.seed, "RNG seed")->required();
    layout->add_option("--out", lay.out, "Output drawing file")->required();
    layout->add_option("--iterations", lay.iterations, "Iteration count");
    layout->add_option("--box", lay.box, "Frame side length");
    layout->add_option("--result", lay.result_path, "Also write the result record here");
    layout->add_option("--class", lay.class_label, "Class label for the result record");

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Maximize the crossing angle of a drawing");
    optimize->add_option("--graph", opt.graph_path, "Input graph file")->required();
    optimize->add_option("--in", opt.in, "Input drawing file")->required();
    optimize->add_option("--preset", opt.preset, "Sampling configuration")
        ->check(CLI::IsMember({"sloppy", "medium", "precise"}));
    optimize->add_option("--iterations", opt.iterations, "Iteration budget (default 2n)");
    optimize->add_option("--seconds", opt.seconds, "Wall-clock budget in seconds");
    optimize->add_option("--seed", opt.seed, "RNG seed")->required();
    optimize->add_flag("--snap-integer", opt.snap_integer, "Round sampled positions to the grid");
    optimize->add_option("--engine", opt.engine, "Minimum-pair query engine")
        ->check(CLI::IsMember({"bucket", "bruteforce"}));
    optimize->add_option("--out", opt.out, "Output drawing file")->required();
    optimize->add_option("--trace", opt.trace_path, "Iteration trace JSON path");
    optimize->add_option("--result", opt.result_path, "Also write the result record here");
    optimize->add_option("--class", opt.class_label, "Class label for the result record");

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "Compare two result files");
    evaluate->add_option("--results-a", ev.results_a, "Result records A (JSON array)")->required();
    evaluate->add_option("--results-b", ev.results_b, "Result records B (JSON array)")->required();
    evaluate->add_option("--curve", ev.curve_path, "Advantage curve CSV output");
    evaluate->add_option("--summary", ev.summary_path, "Summary statistics CSV output");
    evaluate->add_option("--p-grid", ev.p_grid, "Relative sizes p to evaluate");

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "Summarize result files, optionally Welch t-test");
    stats->add_option("--results", st.results, "Result records (JSON array)")->required();
    stats->add_option("--results-b", st.results_b, "Second result file for the t-test");
    stats->add_option("--out", st.out, "Report JSON path (default: stdout only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (layout->parsed()) return run_layout(lay);
        if (optimize->parsed()) return run_optimize(opt);
        if (evaluate->parsed()) return run_evaluate(ev);
        if (stats->parsed()) return run_stats(st);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
