#include <doctest.h>

#include <sys/wait.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_root() {
    static const fs::path root = [] {
        fs::path p = fs::temp_directory_path() / "dadc_cli_tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return root;
}

fs::path fresh_dir(const std::string& name) {
    static int counter = 0;
    fs::path p = scratch_root() / (name + "_" + std::to_string(counter++));
    fs::create_directories(p);
    return p;
}

RunResult run_tool(const std::string& args, const std::string& env_prefix = "") {
    const fs::path dir = fresh_dir("io");
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    std::string cmd = env_prefix + " \"" + DADC_TOOL_PATH + "\" " + args + " > \"" +
                      out.string() + "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

std::string field_after(const std::string& text, const std::string& key) {
    const std::size_t pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    std::size_t end = pos + key.size();
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
        ++end;
    return text.substr(pos + key.size(), end - pos - key.size());
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero") {
    CHECK(run_tool("--help").exit_code == 0);
    CHECK(run_tool("cluster --help").exit_code == 0);
}

TEST_CASE("missing subcommand or unknown flag exits 2") {
    CHECK(run_tool("").exit_code == 2);
    CHECK(run_tool("cluster --bogus 1").exit_code == 2);
}

TEST_CASE("a missing input file exits 3 and names the path") {
    RunResult r = run_tool("cluster --input /nonexistent/points.csv");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("/nonexistent/points.csv") != std::string::npos);
}

TEST_CASE("invalid parameter values exit 2") {
    const fs::path dir = fresh_dir("param");
    CHECK(run_tool("cluster --generate \"heart count=20\" --k 0 --out \"" +
                   dir.string() + "\"")
              .exit_code == 2);
    CHECK(run_tool("cluster --generate \"heart count=20\" --fusion-threshold 0 "
                   "--out \"" +
                   dir.string() + "\"")
              .exit_code == 2);
    CHECK(run_tool("cluster --generate \"heart count=20\" --emit bogus --out \"" +
                   dir.string() + "\"")
              .exit_code == 2);
    CHECK(run_tool("cluster --generate \"heart count=20\" --baseline dbscan "
                   "--out \"" +
                   dir.string() + "\"")
              .exit_code == 2);
    CHECK(run_tool("cluster --generate \"nonsense\" --out \"" + dir.string() + "\"")
              .exit_code == 2);
    // Exactly one input source is required.
    CHECK(run_tool("cluster --out \"" + dir.string() + "\"").exit_code == 2);
}

TEST_CASE("malformed input data exits 3") {
    const fs::path dir = fresh_dir("bad");
    std::ofstream(dir / "ragged.csv") << "1,2\n3,4,5\n";
    CHECK(run_tool("cluster --input \"" + (dir / "ragged.csv").string() + "\"")
              .exit_code == 3);
    std::ofstream(dir / "empty.csv") << "";
    CHECK(run_tool("cluster --input \"" + (dir / "empty.csv").string() + "\"")
              .exit_code == 3);
}

TEST_CASE("generate writes the dataset and a summary") {
    const fs::path dir = fresh_dir("gen");
    RunResult r = run_tool("generate --generate \"lattice side=6\" --seed 3 --out \"" +
                           dir.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "dataset.csv"));
    CHECK(r.out.find("n=72") != std::string::npos);
    CHECK(r.out.find("dim=2") != std::string::npos);
    CHECK(r.out.find("classes=2") != std::string::npos);
    const std::string csv = slurp(dir / "dataset.csv");
    CHECK(csv.substr(0, 10) == "x,y,label\n");
}

TEST_CASE("cluster emits the requested artifacts") {
    const fs::path dir = fresh_dir("emit");
    RunResult r = run_tool(
        "cluster --generate \"heart count=24\" --seed 2 "
        "--emit labels,graph-csv,graph-svg,plot,trace --out \"" +
        dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "dataset.csv")); // generated input is preserved
    CHECK(fs::exists(dir / "labels.csv"));
    CHECK(fs::exists(dir / "decision_graph.csv"));
    CHECK(fs::exists(dir / "decision_graph.svg"));
    CHECK(fs::exists(dir / "clusters.svg"));
    CHECK(fs::exists(dir / "fusion_trace.csv"));

    const std::string labels = slurp(dir / "labels.csv");
    CHECK(labels.substr(0, 11) == "id,cluster\n");
    CHECK(count_occurrences(labels, "\n") == 73); // header + 72 points

    const std::string graph = slurp(dir / "decision_graph.csv");
    CHECK(graph.substr(0, 30) == "id,adaptive_density,delta,role");

    // One marker per point, two threshold guides, one critical-point box.
    const std::string svg = slurp(dir / "decision_graph.svg");
    CHECK(count_occurrences(svg, "<circle") == 72);
    CHECK(count_occurrences(svg, "class=\"guide\"") == 2);
    CHECK(count_occurrences(svg, "class=\"critical\"") == 1);
    const std::string plot = slurp(dir / "clusters.svg");
    CHECK(count_occurrences(plot, "<circle") == 72);
}

TEST_CASE("the final-cluster summary matches the labels file") {
    const fs::path dir = fresh_dir("summary");
    RunResult r = run_tool("cluster --generate lattice --seed 5 --emit labels --out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const std::string final_count = field_after(r.out, "final=");

    std::istringstream labels(slurp(dir / "labels.csv"));
    std::string line;
    std::getline(labels, line); // header
    std::set<std::string> distinct;
    while (std::getline(labels, line)) {
        const auto comma = line.find(',');
        if (comma != std::string::npos && line.substr(comma + 1) != "-1")
            distinct.insert(line.substr(comma + 1));
    }
    CHECK(std::to_string(distinct.size()) == final_count);
}

TEST_CASE("reruns with the same seed are byte-identical") {
    const fs::path d1 = fresh_dir("rerun_a");
    const fs::path d2 = fresh_dir("rerun_b");
    const std::string args = "cluster --generate \"heart count=24\" --seed 9 "
                             "--emit labels,graph-csv,graph-svg,trace --out \"";
    REQUIRE(run_tool(args + d1.string() + "\"").exit_code == 0);
    REQUIRE(run_tool(args + d2.string() + "\"").exit_code == 0);
    for (const char* name : {"dataset.csv", "labels.csv", "decision_graph.csv",
                             "decision_graph.svg", "fusion_trace.csv"}) {
        CHECK(slurp(d1 / name) == slurp(d2 / name));
        CHECK_FALSE(slurp(d1 / name).empty());
    }
}

TEST_CASE("decision-graph subcommand reports the critical point") {
    const fs::path dir = fresh_dir("graph");
    RunResult r = run_tool("decision-graph --generate \"heart count=24\" --seed 2 "
                           "--out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "decision_graph.csv"));
    CHECK(fs::exists(dir / "decision_graph.svg"));
    CHECK_FALSE(fs::exists(dir / "labels.csv"));
    CHECK(r.out.find("cp_x=") != std::string::npos);
    CHECK(r.out.find("cp_y=") != std::string::npos);
}

TEST_CASE("evaluate scores generated data and emits the report") {
    const fs::path dir = fresh_dir("eval");
    RunResult r = run_tool("evaluate --generate \"heart count=24\" --seed 2 --out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "evaluation.csv"));
    const std::string report = slurp(dir / "evaluation.csv");
    CHECK(report.substr(0, 46) == "cluster,size,majority_label,majority_count,ca\n");
    CHECK(r.out.find("ca=") != std::string::npos);
}

TEST_CASE("evaluate rejects unlabeled input") {
    const fs::path dir = fresh_dir("eval_unlabeled");
    RunResult r = run_tool("evaluate --generate \"uniform n=30 s=0.01\" --out \"" +
                           dir.string() + "\"");
    CHECK(r.exit_code == 3);
}

TEST_CASE("matrix input drives the pipeline without coordinates") {
    const fs::path dir = fresh_dir("matrix");
    std::ofstream(dir / "m.csv") << "0,1,4\n1,0,4.1\n4,4.1,0\n";
    RunResult r = run_tool("cluster --matrix \"" + (dir / "m.csv").string() +
                           "\" --k 1 --out \"" + dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "labels.csv"));
    // Coordinate-only artifacts are refused in matrix mode.
    CHECK(run_tool("cluster --matrix \"" + (dir / "m.csv").string() +
                   "\" --k 1 --emit plot --out \"" + dir.string() + "\"")
              .exit_code == 2);
    CHECK(run_tool("cluster --matrix \"" + (dir / "m.csv").string() +
                   "\" --k 1 --noise-level 0.05 --out \"" + dir.string() + "\"")
              .exit_code == 2);
}

TEST_CASE("baseline mode clusters but refuses decision-graph artifacts") {
    const fs::path dir = fresh_dir("baseline");
    RunResult r = run_tool("cluster --generate \"heart count=24\" --seed 2 "
                           "--baseline cfsfdp --out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "labels.csv"));
    CHECK(r.out.find("outliers=") == std::string::npos);
    CHECK(run_tool("cluster --generate \"heart count=24\" --seed 2 "
                   "--baseline cfsfdp --emit trace --out \"" +
                   dir.string() + "\"")
              .exit_code == 2);
}

TEST_CASE("sweep writes sorted aggregate rows") {
    const fs::path dir = fresh_dir("sweep");
    RunResult r = run_tool("sweep --generate \"heart count=24\" --seed 2 "
                           "--noise-level 0.01,0.05 --seeds 2 --out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(dir / "sweep.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "level,algorithm,mean_ca,std_ca,seeds");
    std::vector<std::string> rows;
    while (std::getline(in, line))
        if (!line.empty())
            rows.push_back(line);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].substr(0, 12) == "0.01,cfsfdp,");
    CHECK(rows[1].substr(0, 10) == "0.01,dadc,");
    CHECK(rows[2].substr(0, 12) == "0.05,cfsfdp,");
    CHECK(rows[3].substr(0, 10) == "0.05,dadc,");
    for (const auto& row : rows)
        CHECK(row.substr(row.size() - 2) == ",2");
}

TEST_CASE("the DADC_OUT environment variable overrides --out") {
    const fs::path flag_dir = fresh_dir("out_flag");
    const fs::path env_dir = fresh_dir("out_env");
    RunResult r = run_tool("generate --generate \"lattice side=4\" --out \"" +
                               flag_dir.string() + "\"",
                           "DADC_OUT=\"" + env_dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(env_dir / "dataset.csv"));
    CHECK_FALSE(fs::exists(flag_dir / "dataset.csv"));
}

TEST_CASE("config files supply defaults that flags override") {
    const fs::path dir = fresh_dir("config");
    std::ofstream(dir / "cfg.ini") << "[sweep]\nseeds=3\n";
    const std::string base = "--config \"" + (dir / "cfg.ini").string() +
                             "\" sweep --generate \"heart count=24\" --seed 2 "
                             "--noise-level 0.01 --out \"" +
                             dir.string() + "\"";
    RunResult from_config = run_tool(base);
    REQUIRE(from_config.exit_code == 0);
    CHECK(slurp(dir / "sweep.csv").find(",3\n") != std::string::npos);

    RunResult from_flag = run_tool(base + " --seeds 2");
    REQUIRE(from_flag.exit_code == 0);
    CHECK(slurp(dir / "sweep.csv").find(",2\n") != std::string::npos);
}

TEST_CASE("noise-level on cluster scores only the original points") {
    const fs::path dir = fresh_dir("noise");
    RunResult r = run_tool("cluster --generate heart --seed 3 --noise-level 0.05 "
                           "--emit labels --out \"" +
                           dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    // 213 original + ceil(0.05*213) = 11 injected noise points.
    const std::string labels = slurp(dir / "labels.csv");
    CHECK(count_occurrences(labels, "\n") == 225);
    CHECK(r.out.find("ca=1") != std::string::npos);
}

} // TEST_SUITE
