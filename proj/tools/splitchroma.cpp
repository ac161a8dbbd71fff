#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitchroma/check.hpp"
#include "splitchroma/io.hpp"
#include "splitchroma/oracle.hpp"
#include "splitchroma/pipeline.hpp"

namespace {

using namespace splitchroma;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInternal = 3;

// Runs job(i) for every input index, at most `jobs` at a time, and returns
// outputs in input order. Each job handles one file.
std::vector<std::string> run_batch(size_t count, int jobs,
                                   const std::function<std::string(size_t)>& job) {
    std::vector<std::string> results(count);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) results[i] = job(i);
        return results;
    }
    std::mutex mu;
    size_t next = 0;
    auto worker = [&]() {
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next == count) return;
                i = next++;
            }
            results[i] = job(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::string classify_text(const ClassifyReport& r) {
    std::string out = "sigma=" + std::to_string(r.sigma) +
                      " delta=" + std::to_string(r.delta) + " class=" + r.klass +
                      " reason=" + r.reason;
    if (r.hypothesis_mismatch) out += " hypothesis-mismatch";
    return out;
}

void emit_swap_log(const SwapLog& log, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write " + path);
    int step = 0;
    for (const SwapRecord& rec : log) {
        nlohmann::json line{{"step", ++step},
                            {"w", rec.w},
                            {"slot", rec.slot},
                            {"edge", {rec.outside_edge.first, rec.outside_edge.second}},
                            {"donor", {rec.donor_edge.first, rec.donor_edge.second}},
                            {"taken", rec.color_taken},
                            {"released", rec.color_released}};
        out << line.dump() << "\n";
    }
}

int cmd_classify(const std::vector<std::string>& files, int jobs,
                 const std::string& format) {
    auto results = run_batch(files.size(), jobs, [&](size_t i) {
        Graph g = parse_graph_file(files[i]);
        ClassifyReport r = classify_graph(g);
        if (format == "text") return classify_text(r) + "\n";
        if (files.size() == 1) return r.to_json();
        nlohmann::json line = nlohmann::json::parse(r.to_json());
        line["file"] = files[i];
        return line.dump() + "\n";
    });
    for (auto& r : results) std::cout << r;
    return kExitOk;
}

int cmd_color(const std::vector<std::string>& files, const std::string& out_path,
              const std::string& swap_log_path, bool cross_check, int jobs) {
    require(files.size() == 1 || out_path.empty(),
            "-o is only valid with a single input file");

    auto results = run_batch(files.size(), jobs, [&](size_t i) {
        Graph g = parse_graph_file(files[i]);
        ColorOutcome outcome = color_graph(g, !swap_log_path.empty());

        if (cross_check) {
            ChromaticIndexResult oracle = chromatic_index_bruteforce(g);
            if (outcome.route != "fallback")
                ensure(outcome.coloring.palette_size == oracle.chi,
                       "constructive palette disagrees with the exact oracle");
        }
        if (!swap_log_path.empty()) {
            std::string path =
                files.size() == 1 ? swap_log_path : files[i] + ".swaps.jsonl";
            emit_swap_log(outcome.swap_log, path);
        }

        std::string rendered = render_coloring(outcome.coloring);
        if (files.size() > 1) {
            std::ofstream out(files[i] + ".coloring.json");
            require(out.good(), "cannot write " + files[i] + ".coloring.json");
            out << rendered;
            rendered.clear();
        } else if (!out_path.empty()) {
            std::ofstream out(out_path);
            require(out.good(), "cannot write " + out_path);
            out << rendered;
            rendered.clear();
        }
        std::cerr << outcome.report_json();
        return rendered;
    });
    for (auto& r : results) std::cout << r;
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = parse_graph_file(graph_path);
    EdgeColoring c = parse_coloring_file(coloring_path);
    auto violations = verify_proper(g, c);
    for (const auto& v : violations) std::cerr << v.describe() << "\n";
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    std::cerr << violations.size() << " violation(s)\n";
    return kExitVerification;
}

int cmd_gen(const GenParams& params, const std::string& out_path) {
    GeneratedSplitGraph gen = random_split_graph(params);
    if (out_path.empty())
        std::cout << render_graph(gen.graph);
    else
        write_graph_file(gen.graph, out_path);
    return kExitOk;
}

int cmd_oracle(const std::string& path, int limit) {
    Graph g = parse_graph_file(path);
    ChromaticIndexResult res = chromatic_index_bruteforce(g, limit);
    nlohmann::json doc{{"chi", res.chi},
                       {"delta", g.max_degree()},
                       {"class", res.chi == g.max_degree() ? "1" : "2"}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge coloring of split graphs along their stretch partition"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_path, swap_log_path, format = "json";
    bool cross_check = false;
    int jobs = 1;

    auto* classify = app.add_subcommand("classify", "Classify split graphs");
    classify->add_option("files", files, "graph files")->required()->expected(-1);
    classify->add_option("--jobs", jobs, "parallel file jobs");
    classify->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* color = app.add_subcommand("color", "Emit a proper edge coloring");
    color->add_option("files", files, "graph files")->required()->expected(-1);
    color->add_option("-o,--out", out_path, "coloring output file");
    color->add_option("--swap-log", swap_log_path, "swap log (JSON lines)");
    color->add_flag("--oracle", cross_check, "cross-check small inputs exactly");
    color->add_option("--jobs", jobs, "parallel file jobs");

    std::string graph_path, coloring_path;
    auto* verify = app.add_subcommand("verify", "Verify a coloring file");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("coloring", coloring_path, "coloring file")->required();

    GenParams params;
    std::string filter = "any";
    auto* gen = app.add_subcommand("gen", "Generate a random split graph");
    gen->add_option("--seed", params.seed, "64-bit seed");
    gen->add_option("--filter", filter, "any|even-delta|sigma3|theorem9")
        ->check(CLI::IsMember({"any", "even-delta", "sigma3", "theorem9"}));
    gen->add_option("--clique-min", params.clique_min);
    gen->add_option("--clique-max", params.clique_max);
    gen->add_option("--ind-min", params.independent_min);
    gen->add_option("--ind-max", params.independent_max);
    gen->add_option("--sdeg-min", params.sdeg_min);
    gen->add_option("--sdeg-max", params.sdeg_max);
    gen->add_option("-o,--out", out_path, "graph output file");

    int oracle_limit = 24;
    auto* oracle = app.add_subcommand("oracle", "Exact chromatic index (small graphs)");
    oracle->add_option("file", graph_path, "graph file")->required();
    oracle->add_option("--limit", oracle_limit, "edge limit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(files, jobs, format);
        if (color->parsed())
            return cmd_color(files, out_path, swap_log_path, cross_check, jobs);
        if (verify->parsed()) return cmd_verify(graph_path, coloring_path);
        if (gen->parsed()) {
            if (filter == "even-delta") params.filter = FamilyFilter::EvenDelta;
            else if (filter == "sigma3") params.filter = FamilyFilter::Sigma3;
            else if (filter == "theorem9") params.filter = FamilyFilter::Theorem9;
            return cmd_gen(params, out_path);
        }
        if (oracle->parsed()) return cmd_oracle(graph_path, oracle_limit);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
