// Command-line front end: dataset generation, clustering, decision-graph
// export, evaluation, and the noise-robustness sweep.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dadc/baseline.hpp"
#include "dadc/csv.hpp"
#include "dadc/dataset.hpp"
#include "dadc/errors.hpp"
#include "dadc/pipeline.hpp"
#include "dadc/svg.hpp"
#include "dadc/synthgen.hpp"

namespace {

struct Options {
    std::string input;
    std::string generate;
    std::string matrix;
    std::size_t k = 5;
    double threshold = 1.0;
    std::string cutoff = "auto";
    std::uint64_t seed = 0;
    std::string out = ".";
    std::vector<std::string> emit;
    std::string noise_levels;
    std::size_t seed_count = 10;
    std::string baseline;
};

void add_input_options(CLI::App* cmd, Options& opt, bool allow_matrix) {
    auto* in = cmd->add_option("--input", opt.input, "dataset CSV path");
    auto* gen = cmd->add_option("--generate", opt.generate,
                                "generator spec: heart|lattice|gaussians|uniform "
                                "with key=value parameters");
    in->excludes(gen);
    gen->excludes(in);
    if (allow_matrix) {
        auto* mat = cmd->add_option("--matrix", opt.matrix,
                                    "square distance-matrix CSV path");
        mat->excludes(in);
        mat->excludes(gen);
        in->excludes(mat);
        gen->excludes(mat);
    }
    cmd->add_option("--seed", opt.seed, "generator / noise seed");
}

void add_run_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--k", opt.k, "neighborhood size (default 5)");
    cmd->add_option("--fusion-threshold", opt.threshold,
                    "self-ensemble merge threshold (default 1.0)");
    cmd->add_option("--dc", opt.cutoff, "baseline cutoff: a positive real or 'auto'");
    cmd->add_option("--baseline", opt.baseline,
                    "use the density-peaks baseline (value: cfsfdp)");
}

void add_out_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "output directory (default .)");
    cmd->add_option("--emit", opt.emit,
                    "artifacts: labels,graph-csv,graph-svg,plot,trace")
        ->delimiter(',');
}

std::size_t count_sources(const Options& opt) {
    return static_cast<std::size_t>(!opt.input.empty()) +
           static_cast<std::size_t>(!opt.generate.empty()) +
           static_cast<std::size_t>(!opt.matrix.empty());
}

std::set<std::string> parse_emit(const Options& opt, const char* defaults) {
    std::set<std::string> tokens;
    if (opt.emit.empty()) {
        std::string d = defaults;
        std::size_t start = 0;
        while (start < d.size()) {
            std::size_t pos = d.find(',', start);
            if (pos == std::string::npos)
                pos = d.size();
            if (pos > start)
                tokens.insert(d.substr(start, pos - start));
            start = pos + 1;
        }
        return tokens;
    }
    for (const auto& t : opt.emit) {
        if (t != "labels" && t != "graph-csv" && t != "graph-svg" && t != "plot" &&
            t != "trace")
            throw dadc::parameter_error("unknown --emit token: " + t);
        tokens.insert(t);
    }
    return tokens;
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<double> levels;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(',', start);
        if (pos == std::string::npos)
            pos = text.size();
        const std::string tok = text.substr(start, pos - start);
        if (!tok.empty()) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                levels.push_back(v);
            } catch (const std::exception&) {
                throw dadc::parameter_error("bad --noise-level value: " + tok);
            }
        }
        start = pos + 1;
    }
    return levels;
}

double parse_cutoff(const std::string& text) {
    if (text == "auto")
        return 0.0;
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        if (v <= 0.0)
            throw dadc::parameter_error("--dc must be positive or 'auto'");
        return v;
    } catch (const dadc::parameter_error&) {
        throw;
    } catch (const std::exception&) {
        throw dadc::parameter_error("bad --dc value: " + text);
    }
}

std::string output_dir(const Options& opt) {
    std::string out = opt.out;
    if (const char* env = std::getenv("DADC_OUT"))
        if (*env)
            out = env; // environment wins over the flag
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec)
        throw dadc::io_error("cannot create output directory: " + out);
    return out;
}

std::string join(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

struct LoadedInput {
    dadc::Dataset data; // empty in matrix mode
    dadc::DistanceSource src = dadc::DistanceSource::from_matrix({0.0}, 1);
    bool metric = true;
    bool generated = false;
    dadc::VddMeta meta;
    std::vector<std::size_t> scored; // empty = all points
};

LoadedInput load_input(const Options& opt, bool allow_matrix) {
    if (count_sources(opt) != 1)
        throw dadc::parameter_error("exactly one input source is required "
                                    "(--input, --generate" +
                                    std::string(allow_matrix ? ", --matrix" : "") + ")");
    LoadedInput in;
    if (!opt.matrix.empty()) {
        if (!opt.noise_levels.empty())
            throw dadc::parameter_error("--noise-level requires coordinate input");
        std::size_t n = 0;
        auto m = dadc::load_distance_matrix_file(opt.matrix, n);
        in.src = dadc::DistanceSource::from_matrix(std::move(m), n);
        in.metric = false;
        return in;
    }
    if (!opt.input.empty()) {
        in.data = dadc::load_dataset_file(opt.input);
    } else {
        in.data = dadc::generate_from_spec(opt.generate, opt.seed, &in.meta);
        in.generated = true;
        for (const auto& w : in.meta.warnings)
            std::cerr << "warning: " << w << '\n';
    }
    if (!opt.noise_levels.empty()) {
        auto levels = parse_levels(opt.noise_levels);
        if (levels.size() != 1)
            throw dadc::parameter_error("this command takes a single --noise-level");
        const std::size_t original = in.data.size();
        dadc::Rng rng(opt.seed);
        dadc::inject_noise(in.data, levels[0], rng);
        in.scored.resize(original);
        for (std::size_t i = 0; i < original; ++i)
            in.scored[i] = i;
    }
    in.src = dadc::DistanceSource::from_dataset(in.data);
    return in;
}

void check_baseline_flag(const Options& opt) {
    if (!opt.baseline.empty() && opt.baseline != "cfsfdp")
        throw dadc::parameter_error("unknown --baseline value: " + opt.baseline +
                                    " (supported: cfsfdp)");
}

int run_generate(const Options& opt) {
    if (opt.generate.empty())
        throw dadc::parameter_error("generate requires --generate SPEC");
    dadc::VddMeta meta;
    dadc::Dataset ds = dadc::generate_from_spec(opt.generate, opt.seed, &meta);
    for (const auto& w : meta.warnings)
        std::cerr << "warning: " << w << '\n';
    const std::string dir = output_dir(opt);
    const std::string path = join(dir, "dataset.csv");
    dadc::save_dataset_file(path, ds);
    std::set<int> classes(ds.labels.begin(), ds.labels.end());
    std::cout << "n=" << ds.size() << " dim=" << ds.dim << " classes=" << classes.size()
              << " wrote=" << path << '\n';
    return 0;
}

int run_cluster(const Options& opt, bool graph_only) {
    check_baseline_flag(opt);
    LoadedInput in = load_input(opt, true);
    const std::set<std::string> emit =
        parse_emit(opt, graph_only ? "graph-csv,graph-svg" : "labels");
    const bool use_baseline = !opt.baseline.empty();
    if (use_baseline && (emit.count("graph-csv") || emit.count("graph-svg") ||
                         emit.count("trace")))
        throw dadc::parameter_error("decision-graph and trace artifacts require the "
                                    "default algorithm");
    if (!in.metric && emit.count("plot"))
        throw dadc::parameter_error("plot output requires coordinate input");

    const std::string dir = output_dir(opt);
    if (in.generated)
        dadc::save_dataset_file(join(dir, "dataset.csv"), in.data);

    std::vector<int> labels;
    std::string summary;
    if (use_baseline) {
        const double cutoff =
            parse_cutoff(opt.cutoff) > 0.0 ? parse_cutoff(opt.cutoff)
                                           : dadc::auto_cutoff(in.src);
        const dadc::BaselineProfile bp = dadc::baseline_profile(in.src, cutoff);
        const dadc::BaselineClustering bc = dadc::baseline_cluster(in.src, bp);
        labels = bc.labels;
        std::set<int> final_ids;
        for (int lab : labels)
            if (lab >= 0)
                final_ids.insert(lab);
        summary = "n=" + std::to_string(labels.size()) +
                  " centers=" + std::to_string(bc.centers.size()) +
                  " final=" + std::to_string(final_ids.size());
    } else {
        const dadc::PipelineResult r = dadc::run_dadc(in.src, opt.k, opt.threshold);
        labels = r.ensemble.labels;
        if (r.profile.clamp_events > 0)
            std::cerr << "warning: " << r.profile.clamp_events
                      << " zero-distance clamps applied\n";
        if (r.initial.fallback_assignments > 0)
            std::cerr << "warning: " << r.initial.fallback_assignments
                      << " fallback assignments\n";
        if (emit.count("graph-csv"))
            dadc::write_file(join(dir, "decision_graph.csv"), [&](std::ostream& os) {
                dadc::export_decision_graph_csv(os, r.profile, r.roles);
            });
        if (emit.count("graph-svg"))
            dadc::write_file(join(dir, "decision_graph.svg"), [&](std::ostream& os) {
                dadc::export_decision_graph_svg(os, r.profile, r.roles, r.cp);
            });
        if (emit.count("trace"))
            dadc::write_file(join(dir, "fusion_trace.csv"), [&](std::ostream& os) {
                dadc::export_trace(os, r.ensemble.trace);
            });
        summary = "n=" + std::to_string(labels.size()) +
                  " centers=" + std::to_string(r.center_count()) +
                  " outliers=" + std::to_string(r.outlier_count()) +
                  " initial=" + std::to_string(r.initial_cluster_count()) +
                  " final=" + std::to_string(r.final_cluster_count());
    }
    if (emit.count("labels"))
        dadc::write_file(join(dir, "labels.csv"),
                         [&](std::ostream& os) { dadc::export_labels(os, labels); });
    if (emit.count("plot"))
        dadc::write_file(join(dir, "clusters.svg"), [&](std::ostream& os) {
            dadc::export_cluster_plot(os, in.data, labels);
        });
    if (in.metric && in.data.has_labels()) {
        const auto report = dadc::clustering_accuracy(labels, in.data.labels, in.scored);
        summary += " ca=" + dadc::format_double(report.accuracy);
    }
    std::cout << summary << '\n';
    return 0;
}

int run_decision_graph(const Options& opt) {
    LoadedInput in = load_input(opt, true);
    const std::set<std::string> emit = parse_emit(opt, "graph-csv,graph-svg");
    if (emit.count("labels") || emit.count("plot") || emit.count("trace"))
        throw dadc::parameter_error("decision-graph emits only graph-csv,graph-svg");
    const dadc::PipelineResult r = dadc::run_dadc(in.src, opt.k, opt.threshold);
    const std::string dir = output_dir(opt);
    if (in.generated)
        dadc::save_dataset_file(join(dir, "dataset.csv"), in.data);
    if (emit.count("graph-csv"))
        dadc::write_file(join(dir, "decision_graph.csv"), [&](std::ostream& os) {
            dadc::export_decision_graph_csv(os, r.profile, r.roles);
        });
    if (emit.count("graph-svg"))
        dadc::write_file(join(dir, "decision_graph.svg"), [&](std::ostream& os) {
            dadc::export_decision_graph_svg(os, r.profile, r.roles, r.cp);
        });
    std::cout << "n=" << r.profile.size() << " cp_x=" << dadc::format_double(r.cp.x)
              << " cp_y=" << dadc::format_double(r.cp.y) << '\n';
    return 0;
}

int run_evaluate(const Options& opt) {
    check_baseline_flag(opt);
    LoadedInput in = load_input(opt, false);
    if (!in.data.has_labels())
        throw dadc::validation_error("evaluation requires ground-truth labels");
    const std::string dir = output_dir(opt);
    if (in.generated)
        dadc::save_dataset_file(join(dir, "dataset.csv"), in.data);

    std::vector<int> labels;
    std::string summary;
    if (!opt.baseline.empty()) {
        const double flag_cutoff = parse_cutoff(opt.cutoff);
        const double cutoff =
            flag_cutoff > 0.0 ? flag_cutoff : dadc::auto_cutoff(in.src);
        labels = dadc::baseline_cluster(in.src, dadc::baseline_profile(in.src, cutoff))
                     .labels;
        std::set<int> final_ids;
        for (int lab : labels)
            if (lab >= 0)
                final_ids.insert(lab);
        summary = "n=" + std::to_string(labels.size()) +
                  " final=" + std::to_string(final_ids.size());
    } else {
        const dadc::PipelineResult r = dadc::run_dadc(in.src, opt.k, opt.threshold);
        labels = r.ensemble.labels;
        summary = "n=" + std::to_string(labels.size()) +
                  " centers=" + std::to_string(r.center_count()) +
                  " outliers=" + std::to_string(r.outlier_count()) +
                  " initial=" + std::to_string(r.initial_cluster_count()) +
                  " final=" + std::to_string(r.final_cluster_count());
    }
    const auto report = dadc::clustering_accuracy(labels, in.data.labels, in.scored);
    dadc::write_file(join(dir, "evaluation.csv"),
                     [&](std::ostream& os) { dadc::export_evaluation(os, report); });
    std::cout << summary << " ca=" << dadc::format_double(report.accuracy) << '\n';
    return 0;
}

int run_sweep(const Options& opt) {
    check_baseline_flag(opt);
    Options base_opt = opt;
    base_opt.noise_levels.clear(); // levels drive the sweep, not the load
    LoadedInput in = load_input(base_opt, false);
    if (!in.data.has_labels())
        throw dadc::validation_error("the robustness sweep requires ground-truth labels");
    std::vector<double> levels = opt.noise_levels.empty()
                                     ? std::vector<double>{0.01, 0.05, 0.10, 0.15}
                                     : parse_levels(opt.noise_levels);
    for (double level : levels)
        if (!(level >= 0.0 && level <= 0.15))
            throw dadc::parameter_error("--noise-level values must lie in [0, 0.15]");
    if (opt.seed_count < 1)
        throw dadc::parameter_error("--seeds must be at least 1");
    std::vector<std::uint64_t> seeds;
    for (std::size_t s = 0; s < opt.seed_count; ++s)
        seeds.push_back(opt.seed + s);

    const auto rows = dadc::robustness_sweep(in.data, levels, opt.k, opt.threshold,
                                             seeds, parse_cutoff(opt.cutoff));
    const std::string dir = output_dir(opt);
    if (in.generated)
        dadc::save_dataset_file(join(dir, "dataset.csv"), in.data);
    dadc::write_file(join(dir, "sweep.csv"),
                     [&](std::ostream& os) { dadc::export_sweep(os, rows); });
    for (const auto& row : rows)
        std::cout << "level=" << dadc::format_double(row.level)
                  << " algorithm=" << row.algorithm
                  << " mean_ca=" << dadc::format_double(row.mean_ca)
                  << " std_ca=" << dadc::format_double(row.std_ca)
                  << " seeds=" << row.seeds << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"domain-adaptive density clustering"};
    app.set_config("--config", "", "read options from an INI file");
    app.require_subcommand(1);

    Options opt;
    CLI::App* generate = app.add_subcommand("generate", "write a synthetic dataset");
    generate->add_option("--generate", opt.generate, "generator spec")->required();
    generate->add_option("--seed", opt.seed, "generator seed");
    generate->add_option("--out", opt.out, "output directory");

    CLI::App* cluster = app.add_subcommand("cluster", "run the full pipeline");
    add_input_options(cluster, opt, true);
    add_run_options(cluster, opt);
    add_out_options(cluster, opt);
    cluster->add_option("--noise-level", opt.noise_levels,
                        "inject this noise fraction before clustering");

    CLI::App* graph = app.add_subcommand("decision-graph", "export the decision graph");
    add_input_options(graph, opt, true);
    graph->add_option("--k", opt.k, "neighborhood size (default 5)");
    graph->add_option("--fusion-threshold", opt.threshold, "self-ensemble threshold");
    add_out_options(graph, opt);

    CLI::App* evaluate = app.add_subcommand("evaluate", "cluster and score accuracy");
    add_input_options(evaluate, opt, false);
    add_run_options(evaluate, opt);
    add_out_options(evaluate, opt);
    evaluate->add_option("--noise-level", opt.noise_levels,
                         "inject this noise fraction before clustering");

    CLI::App* sweep = app.add_subcommand("sweep", "noise-robustness sweep");
    add_input_options(sweep, opt, false);
    add_run_options(sweep, opt);
    sweep->add_option("--out", opt.out, "output directory");
    sweep->add_option("--noise-level", opt.noise_levels,
                      "comma-separated noise fractions (default 0.01,0.05,0.10,0.15)");
    sweep->add_option("--seeds", opt.seed_count, "number of seeds (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(generate))
            return run_generate(opt);
        if (app.got_subcommand(cluster))
            return run_cluster(opt, false);
        if (app.got_subcommand(graph))
            return run_decision_graph(opt);
        if (app.got_subcommand(evaluate))
            return run_evaluate(opt);
        if (app.got_subcommand(sweep))
            return run_sweep(opt);
        return 2;
    } catch (const dadc::parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dadc::no_center_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const dadc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}
