// vnge - von Neumann graph entropy toolkit.
//
// Subcommands: entropy, jsdist, stream, bench, anomaly. Outputs CSV on
// stdout (or --output). Exit codes: 0 ok, 2 parse error, 3 domain error,
// 4 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vnge/baselines.hpp"
#include "vnge/entropy.hpp"
#include "vnge/evalkit.hpp"
#include "vnge/generators.hpp"
#include "vnge/graph.hpp"
#include "vnge/incremental.hpp"
#include "vnge/io.hpp"
#include "vnge/jsdist.hpp"
#include "vnge/spectral.hpp"

namespace {

using namespace vnge;
using Clock = std::chrono::steady_clock;

int exit_code_for(const Error& e) {
    switch (e.category()) {
    case ErrorCategory::parse:
        return 2;
    case ErrorCategory::domain:
        return 3;
    case ErrorCategory::resource:
        return 4;
    }
    return 3;
}

struct OutputTarget {
    std::string path; // empty -> stdout
    std::ofstream file;

    std::ostream& open() {
        if (path.empty())
            return std::cout;
        file.open(path);
        if (!file)
            throw ParseError("cannot open output file '" + path + "'");
        return file;
    }
};

std::int64_t ns_count(Clock::duration d) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
}

void write_mapping(const LabeledGraph& lg, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open mapping file '" + path + "'");
    CsvWriter csv(out, {"id", "label"});
    for (std::size_t i = 0; i < lg.labels.size(); ++i)
        csv.row().cell(std::uint64_t{i}).cell(lg.labels[i]);
}

// ---------------------------------------------------------------------------
// entropy

struct EntropyArgs {
    std::string graph_file;
    std::string kind = "all";
    std::size_t oracle_cap = kDefaultOracleCap;
    double tol = 1e-12;
    int max_iter = 10000;
    bool no_timing = false;
    OutputTarget output;
    std::string mapping_file;
};

void run_entropy(EntropyArgs& args) {
    const LabeledGraph lg = load_edge_list(args.graph_file);
    if (!args.mapping_file.empty())
        write_mapping(lg, args.mapping_file);
    const Graph& g = lg.graph;
    const PowerIterOptions opts{args.tol, args.max_iter};

    std::vector<std::string> columns{"kind", "value", "q", "spectral_scalar",
                                     "bound_lower", "bound_upper", "degenerate"};
    if (!args.no_timing)
        columns.push_back("wall_time_ns");
    std::ostream& out = args.output.open();
    CsvWriter csv(out, columns);

    auto emit = [&](const char* kind, const EntropyReport& r,
                    const std::optional<EntropyBounds>& bounds) {
        auto row = csv.row();
        row.cell(std::string(kind)).cell(r.value).cell(r.q).cell(r.spectral_scalar);
        if (bounds)
            row.cell(bounds->lower).cell(bounds->upper);
        else
            row.cell(std::string("")).cell(std::string(""));
        row.cell(r.degenerate);
        if (!args.no_timing)
            row.cell(std::int64_t{r.wall_time.count()});
    };

    const bool want_all = args.kind == "all";
    if (want_all || args.kind == "exact") {
        std::optional<EntropyBounds> bounds;
        if (want_all && g.node_count() <= args.oracle_cap)
            bounds = entropy_bounds(g, args.oracle_cap);
        emit("exact", entropy_exact(g, args.oracle_cap), bounds);
    }
    if (want_all || args.kind == "hat")
        emit("hat", entropy_hat(g, opts), std::nullopt);
    if (want_all || args.kind == "tilde")
        emit("tilde", entropy_tilde(g), std::nullopt);
}

// ---------------------------------------------------------------------------
// jsdist

struct JsArgs {
    std::string file1, file2;
    std::string kind = "fast";
    std::size_t oracle_cap = kDefaultOracleCap;
    double tol = 1e-12;
    int max_iter = 10000;
    bool no_timing = false;
    OutputTarget output;
};

void run_jsdist(JsArgs& args) {
    const LabeledGraph lg1 = load_edge_list(args.file1);
    LabeledGraph lg2 = load_edge_list(args.file2);

    // Distances need a common node universe: align file2's dense ids to
    // file1's labels (union of label sets).
    LabeledGraph merged = lg1;
    Graph g2;
    for (const auto& label : lg2.labels)
        g2.add_node(merged.intern(label));
    for (const auto& [key, w] : lg2.graph.edges()) {
        auto [u, v] = edge_endpoints(key);
        g2.add_edge(merged.ids.at(lg2.labels[u]), merged.ids.at(lg2.labels[v]), w);
    }
    for (NodeId v = 0; v < merged.labels.size(); ++v)
        g2.add_node(v);
    Graph g1 = lg1.graph;
    for (NodeId v = 0; v < merged.labels.size(); ++v)
        g1.add_node(v);

    const auto t0 = Clock::now();
    JsResult r;
    if (args.kind == "exact")
        r = jsdist_exact(g1, g2, args.oracle_cap);
    else
        r = jsdist_fast(g1, g2, {args.tol, args.max_iter});
    const auto elapsed = Clock::now() - t0;

    std::vector<std::string> columns{"kind", "distance", "divergence", "clamped"};
    if (!args.no_timing)
        columns.push_back("wall_time_ns");
    CsvWriter csv(args.output.open(), columns);
    auto row = csv.row();
    row.cell(args.kind).cell(r.distance).cell(r.divergence).cell(r.clamped);
    if (!args.no_timing)
        row.cell(ns_count(elapsed));
}

// ---------------------------------------------------------------------------
// stream

struct StreamArgs {
    std::string graph_file, stream_file;
    std::string metric = "tilde";
    std::string mode = "exact-smax";
    bool no_timing = false;
    OutputTarget output;
};

void run_stream(StreamArgs& args) {
    LabeledGraph base = load_edge_list(args.graph_file);
    const Graph initial = base.graph;
    const std::vector<StreamStep> steps = load_change_stream(base, args.stream_file);
    const SmaxMode mode =
        args.mode == "paper-faithful" ? SmaxMode::paper_faithful : SmaxMode::exact;

    const bool with_js = args.metric == "jsdist";
    std::vector<std::string> columns{"step", "h_tilde", "q", "degenerate"};
    if (with_js) {
        columns.push_back("jsdist");
        columns.push_back("divergence");
        columns.push_back("clamped");
    }
    if (!args.no_timing)
        columns.push_back("wall_time_ns");
    CsvWriter csv(args.output.open(), columns);

    IncrementalState state = IncrementalState::init(initial, mode);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            const auto t0 = Clock::now();
            JsResult js;
            EntropyReport r;
            if (with_js) {
                js = jsdist_incremental(state, steps[i].delta);
                r = state.current_entropy_tilde();
            } else {
                r = state.update_entropy_tilde(steps[i].delta);
            }
            const auto elapsed = Clock::now() - t0;

            auto row = csv.row();
            row.cell(std::uint64_t{steps[i].step_id}).cell(r.value).cell(r.q).cell(r.degenerate);
            if (with_js)
                row.cell(js.distance).cell(js.divergence).cell(js.clamped);
            if (!args.no_timing)
                row.cell(ns_count(elapsed));
        } catch (const Error& e) {
            throw StreamError(steps[i].step_id, e);
        }
    }
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
    std::vector<std::string> models{"er"};
    std::vector<std::uint32_t> n_values{1000};
    std::vector<double> degrees{50.0};
    std::vector<double> pws_values{0.5};
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::size_t oracle_cap = kDefaultOracleCap;
    double tol = 1e-12;
    int max_iter = 10000;
    OutputTarget output;
};

Model parse_model(const std::string& name) {
    if (name == "er")
        return Model::er;
    if (name == "ba")
        return Model::ba;
    if (name == "ws")
        return Model::ws;
    throw InvalidSpec("unknown model '" + name + "'");
}

void run_bench(BenchArgs& args) {
    CsvWriter csv(args.output.open(),
                  {"model", "n", "d_avg", "p_ws", "seed", "kind", "h_exact", "h_approx", "sae",
                   "time_exact_ns", "time_approx_ns", "ctrr"});

    for (const std::string& model_name : args.models) {
        const Model model = parse_model(model_name);
        for (std::uint32_t n : args.n_values) {
            for (double d : args.degrees) {
                const std::vector<double> pws_list =
                    model == Model::ws ? args.pws_values : std::vector<double>{0.0};
                for (double pws : pws_list) {
                    for (std::size_t t = 0; t < args.trials; ++t) {
                        const std::uint64_t seed = args.seed + t;
                        const Graph g = generate({model, n, d, pws, seed});

                        const EntropyReport exact = entropy_exact(g, args.oracle_cap);
                        const EntropyReport hat = entropy_hat(g, {args.tol, args.max_iter});
                        const EntropyReport tilde = entropy_tilde(g);

                        auto emit = [&](const char* kind, const EntropyReport& r) {
                            const double t_exact = double(exact.wall_time.count());
                            const double t_approx = double(r.wall_time.count());
                            csv.row()
                                .cell(model_name)
                                .cell(std::uint64_t{n})
                                .cell(d)
                                .cell(pws)
                                .cell(std::uint64_t{seed})
                                .cell(std::string(kind))
                                .cell(exact.value)
                                .cell(r.value)
                                .cell(sae(exact.value, r.value, n))
                                .cell(std::int64_t{exact.wall_time.count()})
                                .cell(std::int64_t{r.wall_time.count()})
                                .cell(ctrr(t_exact, t_approx));
                        };
                        emit("hat", hat);
                        emit("tilde", tilde);
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// anomaly

struct AnomalyArgs {
    std::vector<std::string> files;
    std::vector<std::string> methods{"js_fast"};
    std::string reference_file;
    std::size_t lambda_k = 6;
    std::size_t top_k = 2;
    std::size_t oracle_cap = kDefaultOracleCap;
    double tol = 1e-12;
    int max_iter = 10000;
    // Synthesized detection mode:
    double inject_dos_x = 0.0; // > 0 enables it
    std::size_t trials = 50;
    std::uint32_t synth_n = 1000;
    double synth_degree = 10.0;
    std::size_t snapshots = 9;
    double churn = 0.01;
    std::uint64_t seed = 1;
    OutputTarget output;
};

double score_pair(const std::string& method, const Graph& g1, const Graph& g2,
                  const AnomalyArgs& args) {
    const PowerIterOptions opts{args.tol, args.max_iter};
    if (method == "js_fast")
        return anomaly_score(jsdist_fast(g1, g2, opts));
    if (method == "js_exact")
        return jsdist_exact(g1, g2, args.oracle_cap).distance;
    if (method == "ged")
        return ged(g1, g2);
    if (method == "veo")
        return veo(g1, g2);
    if (method == "lambda_adj")
        return lambda_distance(g1, g2, args.lambda_k, LambdaMatrix::adjacency,
                               AdjacencyOrder::magnitude, args.oracle_cap);
    if (method == "lambda_lap")
        return lambda_distance(g1, g2, args.lambda_k, LambdaMatrix::laplacian,
                               AdjacencyOrder::magnitude, args.oracle_cap);
    if (method == "cos_deg")
        return degree_distribution_distance(g1, g2, DegreeDistance::cosine);
    if (method == "bhattacharyya_deg")
        return degree_distribution_distance(g1, g2, DegreeDistance::bhattacharyya);
    if (method == "hellinger_deg")
        return degree_distribution_distance(g1, g2, DegreeDistance::hellinger);
    throw InvalidSpec("unknown method '" + method + "'");
}

std::vector<double> score_series(const std::string& method, const std::vector<Graph>& seq,
                                 const AnomalyArgs& args) {
    std::vector<double> scores;
    scores.reserve(seq.size() - 1);
    if (method == "js_inc") {
        IncrementalState state = IncrementalState::init(seq.front(), SmaxMode::exact);
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            scores.push_back(
                anomaly_score(jsdist_incremental(state, delta_between(seq[t], seq[t + 1]))));
        return scores;
    }
    for (std::size_t t = 0; t + 1 < seq.size(); ++t)
        scores.push_back(score_pair(method, seq[t], seq[t + 1], args));
    return scores;
}

std::vector<double> load_reference_series(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open reference series '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        double v;
        if (!(ss >> v))
            throw ParseError("invalid reference value", line_no);
        values.push_back(v);
    }
    return values;
}

void run_anomaly_sequence(AnomalyArgs& args) {
    if (args.files.size() < 2)
        throw InvalidSpec("anomaly needs at least 2 graphs");

    // Align every file onto one shared label universe.
    LabeledGraph universe;
    std::vector<Graph> seq;
    for (const std::string& path : args.files) {
        const LabeledGraph lg = load_edge_list(path);
        Graph g;
        for (const auto& label : lg.labels)
            g.add_node(universe.intern(label));
        for (const auto& [key, w] : lg.graph.edges()) {
            auto [u, v] = edge_endpoints(key);
            g.add_edge(universe.ids.at(lg.labels[u]), universe.ids.at(lg.labels[v]), w);
        }
        seq.push_back(std::move(g));
    }
    for (Graph& g : seq)
        for (NodeId v = 0; v < universe.labels.size(); ++v)
            g.add_node(v);

    std::optional<std::vector<double>> reference;
    if (!args.reference_file.empty())
        reference = load_reference_series(args.reference_file);

    CsvWriter csv(args.output.open(), {"record", "method", "index", "value", "aux"});
    for (const std::string& method : args.methods) {
        const std::vector<double> scores = score_series(method, seq, args);
        for (std::size_t t = 0; t < scores.size(); ++t)
            csv.row()
                .cell(std::string("score"))
                .cell(method)
                .cell(std::uint64_t{t + 1})
                .cell(scores[t])
                .cell(std::string(""));
        const std::vector<double> curve = tds(scores);
        for (std::size_t t = 0; t < curve.size(); ++t)
            csv.row()
                .cell(std::string("tds"))
                .cell(method)
                .cell(std::uint64_t{t + 1})
                .cell(curve[t])
                .cell(std::string(""));
        for (std::size_t b : bifurcation_points(curve))
            csv.row()
                .cell(std::string("bifurcation"))
                .cell(method)
                .cell(std::uint64_t{b + 1})
                .cell(curve[b])
                .cell(std::string(""));
        const std::vector<std::size_t> order = rank_descending(scores);
        for (std::size_t r = 0; r < order.size(); ++r)
            csv.row()
                .cell(std::string("rank"))
                .cell(method)
                .cell(std::uint64_t{r + 1})
                .cell(scores[order[r]])
                .cell(std::uint64_t{order[r] + 1});
        if (reference) {
            const Correlation corr = correlate(scores, *reference);
            csv.row()
                .cell(std::string("pcc"))
                .cell(method)
                .cell(std::uint64_t{0})
                .cell(corr.pcc)
                .cell(std::string(""));
            csv.row()
                .cell(std::string("srcc"))
                .cell(method)
                .cell(std::uint64_t{0})
                .cell(corr.srcc)
                .cell(std::string(""));
        }
    }
}

void run_anomaly_synth(AnomalyArgs& args) {
    CsvWriter csv(args.output.open(), {"record", "method", "index", "value", "aux"});
    std::map<std::string, std::vector<DetectionTrial>> trials_by_method;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        DosStreamSpec spec;
        spec.n = args.synth_n;
        spec.avg_degree = args.synth_degree;
        spec.snapshots = args.snapshots;
        spec.churn_fraction = args.churn;
        spec.x_percent = args.inject_dos_x;
        spec.seed = args.seed + trial;
        const DosStream stream = synthesize_dos_stream(spec);

        for (const std::string& method : args.methods) {
            DetectionTrial t;
            t.scores = score_series(method, stream.snapshots, args);
            t.true_index = stream.injected_snapshot; // transition out of the flooded snapshot
            trials_by_method[method].push_back(std::move(t));
        }
    }
    for (const std::string& method : args.methods) {
        const double rate = detection_rate(trials_by_method.at(method), args.top_k);
        csv.row()
            .cell(std::string("detection_rate"))
            .cell(method)
            .cell(std::uint64_t{args.trials})
            .cell(rate)
            .cell(args.inject_dos_x);
    }
}

void run_anomaly(AnomalyArgs& args) {
    if (args.inject_dos_x > 0.0)
        run_anomaly_synth(args);
    else
        run_anomaly_sequence(args);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"von Neumann graph entropy toolkit"};
    app.require_subcommand(1);

    EntropyArgs entropy_args;
    auto* entropy_cmd = app.add_subcommand("entropy", "entropy of one graph");
    entropy_cmd->add_option("graph", entropy_args.graph_file, "edge list file")->required();
    entropy_cmd->add_option("--kind", entropy_args.kind, "exact|hat|tilde|all")
        ->check(CLI::IsMember({"exact", "hat", "tilde", "all"}));
    entropy_cmd->add_option("--oracle-cap", entropy_args.oracle_cap);
    entropy_cmd->add_option("--tol", entropy_args.tol);
    entropy_cmd->add_option("--max-iter", entropy_args.max_iter);
    entropy_cmd->add_flag("--no-timing", entropy_args.no_timing);
    entropy_cmd->add_option("--output", entropy_args.output.path);
    entropy_cmd->add_option("--mapping", entropy_args.mapping_file,
                            "write the label/id mapping CSV here");

    JsArgs js_args;
    auto* js_cmd = app.add_subcommand("jsdist", "distance between two graphs");
    js_cmd->add_option("graph1", js_args.file1)->required();
    js_cmd->add_option("graph2", js_args.file2)->required();
    js_cmd->add_option("--kind", js_args.kind)->check(CLI::IsMember({"exact", "fast"}));
    js_cmd->add_option("--oracle-cap", js_args.oracle_cap);
    js_cmd->add_option("--tol", js_args.tol);
    js_cmd->add_option("--max-iter", js_args.max_iter);
    js_cmd->add_flag("--no-timing", js_args.no_timing);
    js_cmd->add_option("--output", js_args.output.path);

    StreamArgs stream_args;
    auto* stream_cmd = app.add_subcommand("stream", "incremental entropy over a change stream");
    stream_cmd->add_option("graph", stream_args.graph_file)->required();
    stream_cmd->add_option("changes", stream_args.stream_file)->required();
    stream_cmd->add_option("--metric", stream_args.metric)
        ->check(CLI::IsMember({"tilde", "jsdist"}));
    stream_cmd->add_option("--mode", stream_args.mode)
        ->check(CLI::IsMember({"exact-smax", "paper-faithful"}));
    stream_cmd->add_flag("--no-timing", stream_args.no_timing);
    stream_cmd->add_option("--output", stream_args.output.path);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "approximation error / timing sweeps");
    bench_cmd->add_option("--models", bench_args.models, "er ba ws")->delimiter(',');
    bench_cmd->add_option("--n", bench_args.n_values)->delimiter(',');
    bench_cmd->add_option("--davg", bench_args.degrees)->delimiter(',');
    bench_cmd->add_option("--pws", bench_args.pws_values)->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials, "seeds per cell");
    bench_cmd->add_option("--seed", bench_args.seed, "base seed");
    bench_cmd->add_option("--oracle-cap", bench_args.oracle_cap);
    bench_cmd->add_option("--tol", bench_args.tol);
    bench_cmd->add_option("--max-iter", bench_args.max_iter);
    bench_cmd->add_option("--output", bench_args.output.path);

    AnomalyArgs anomaly_args;
    auto* anomaly_cmd = app.add_subcommand("anomaly", "score a graph sequence");
    anomaly_cmd->add_option("--files", anomaly_args.files, "edge lists, in time order");
    anomaly_cmd->add_option("--methods", anomaly_args.methods)->delimiter(',');
    anomaly_cmd->add_option("--reference", anomaly_args.reference_file,
                            "series to correlate against (one value per line)");
    anomaly_cmd->add_option("--k", anomaly_args.lambda_k, "eigenvalues for lambda distances");
    anomaly_cmd->add_option("--top-k", anomaly_args.top_k);
    anomaly_cmd->add_option("--oracle-cap", anomaly_args.oracle_cap);
    anomaly_cmd->add_option("--tol", anomaly_args.tol);
    anomaly_cmd->add_option("--max-iter", anomaly_args.max_iter);
    anomaly_cmd->add_option("--inject-dos", anomaly_args.inject_dos_x,
                            "synthesize flood events at this X percent");
    anomaly_cmd->add_option("--trials", anomaly_args.trials);
    anomaly_cmd->add_option("--n", anomaly_args.synth_n);
    anomaly_cmd->add_option("--davg", anomaly_args.synth_degree);
    anomaly_cmd->add_option("--snapshots", anomaly_args.snapshots);
    anomaly_cmd->add_option("--churn", anomaly_args.churn);
    anomaly_cmd->add_option("--seed", anomaly_args.seed);
    anomaly_cmd->add_option("--output", anomaly_args.output.path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*entropy_cmd)
            run_entropy(entropy_args);
        else if (*js_cmd)
            run_jsdist(js_args);
        else if (*stream_cmd)
            run_stream(stream_args);
        else if (*bench_cmd)
            run_bench(bench_args);
        else if (*anomaly_cmd)
            run_anomaly(anomaly_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
