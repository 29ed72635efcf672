#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgap/bounds.hpp"
#include "kgap/colorizer.hpp"
#include "kgap/errors.hpp"
#include "kgap/graph.hpp"
#include "kgap/oracle.hpp"
#include "kgap/survey.hpp"

namespace {

using namespace kgap;

int cmd_generate(const std::string& kind, const std::vector<long long>& params,
                 std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw PreconditionError("generate " + kind + ": expected " + std::to_string(count) +
                                    " parameter(s)");
    };
    Graph g;
    if (kind == "path") {
        need(1);
        g = generate_path(static_cast<int>(params[0]));
    } else if (kind == "cycle") {
        need(1);
        g = generate_cycle(static_cast<int>(params[0]));
    } else if (kind == "complete") {
        need(1);
        g = generate_complete(static_cast<int>(params[0]));
    } else if (kind == "prism") {
        need(1);
        g = generate_prism(static_cast<int>(params[0]));
    } else if (kind == "petersen") {
        need(0);
        g = generate_petersen();
    } else if (kind == "dary_tree") {
        need(2);
        g = generate_dary_tree(static_cast<int>(params[0]), static_cast<int>(params[1]));
    } else if (kind == "random_regular") {
        need(2);
        g = generate_random_regular(static_cast<int>(params[0]), static_cast<int>(params[1]),
                                    seed);
    } else {
        throw PreconditionError("generate: unknown kind '" + kind + "'");
    }
    std::cout << to_graph6(g) << "\n";
    return 0;
}

int cmd_power(int k) {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::cout << to_graph6(power(from_graph6(line), k)) << "\n";
    }
    return 0;
}

int cmd_chroma(bool exact, const OracleLimits& limits) {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        Graph g = from_graph6(line);
        if (exact) {
            std::cout << exact_chromatic(g, limits) << "\n";
        } else {
            std::vector<int> order(g.n);
            for (int v = 0; v < g.n; ++v) order[v] = v;
            std::cout << greedy_upper(g, order) << "\n";
        }
    }
    return 0;
}

int cmd_color(int k, int s, const std::string& report_format, bool check_nice) {
    std::string line;
    while (std::getline(std::cin, line) && line.empty()) {
    }
    if (line.empty()) throw ParseError("color: no graph6 line on standard input");
    Graph g = from_graph6(line);

    ProcedureResult run =
        s > 0 ? run_improved_procedure(g, k, s) : run_main_procedure(g, k);

    if (check_nice) {
        long long floor_bound =
            s > 0 ? to_machine_int(power_degree_bound(s, g.max_degree()) + 1,
                                   10'000'000, "nice floor")
                  : k - 2;
        for (const auto& step : run.report.steps) {
            if (step.phase == StepPhase::precolor) continue;
            if (step.nice < step.analytic_bound || step.nice < floor_bound)
                throw InternalError("color: per-step saving-walk bound violated at vertex " +
                                    std::to_string(step.vertex));
        }
    }

    if (!verify_coloring(g, k, run.coloring).empty())
        throw InternalError("color: coloring failed verification");

    for (int v = 0; v < g.n; ++v) std::cout << v << ":" << run.coloring.color[v] << "\n";
    if (report_format == "json")
        std::cout << report_to_json(run.report) << "\n";
    else
        std::cout << report_to_text(run.report);
    return 0;
}

int cmd_survey(const SurveyOptions& options) {
    run_survey(std::cin, std::cout, std::cerr, options);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring k-th powers of bounded-degree graphs and measuring chromatic gaps"};
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "emit a named graph as a graph6 line");
    std::string gen_kind;
    std::vector<long long> gen_params;
    std::uint64_t gen_seed = 0;
    generate->add_option("kind", gen_kind,
                         "path|cycle|complete|prism|petersen|dary_tree|random_regular")
        ->required();
    generate->add_option("params", gen_params, "kind-specific integer parameters");
    generate->add_option("--seed", gen_seed, "seed for random_regular");

    auto* power_cmd = app.add_subcommand("power", "replace each stdin graph by its k-th power");
    int power_k = 1;
    power_cmd->add_option("-k", power_k, "power exponent")->required();

    auto* chroma = app.add_subcommand("chroma", "chromatic number (or greedy bound) per stdin graph");
    bool chroma_exact = false;
    OracleLimits chroma_limits;
    long long chroma_budget_ms = chroma_limits.time_budget.count();
    chroma->add_flag("--exact", chroma_exact, "exact branch-and-bound instead of a greedy bound");
    chroma->add_option("--max-vertices", chroma_limits.max_vertices, "oracle size limit");
    chroma->add_option("--time-budget-ms", chroma_budget_ms, "oracle time budget");

    auto* color = app.add_subcommand("color", "run a greedy power-coloring procedure on one graph");
    int color_k = 3, color_s = 0;
    std::string color_report = "text";
    bool color_check_nice = false;
    color->add_option("-k", color_k, "power exponent")->required();
    color->add_option("-s", color_s, "ball radius for the improved procedure");
    color->add_option("--report", color_report, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    color->add_flag("--check-nice", color_check_nice,
                    "fail when a step saves fewer walks than the analytic bound");

    auto* survey = app.add_subcommand("survey", "CSV census over a stream of graph6 lines");
    SurveyOptions survey_options;
    long long survey_budget_ms = survey_options.limits.time_budget.count();
    survey->add_option("-k", survey_options.k, "power exponent")->required();
    survey->add_option("--max-oracle", survey_options.max_oracle,
                       "largest vertex count handed to the exact oracle");
    survey->add_option("--jobs", survey_options.jobs, "worker threads");
    survey->add_option("--time-budget-ms", survey_budget_ms, "oracle time budget per graph");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen_kind, gen_params, gen_seed);
        if (power_cmd->parsed()) return cmd_power(power_k);
        if (chroma->parsed()) {
            chroma_limits.time_budget = std::chrono::milliseconds(chroma_budget_ms);
            return cmd_chroma(chroma_exact, chroma_limits);
        }
        if (color->parsed()) return cmd_color(color_k, color_s, color_report, color_check_nice);
        if (survey->parsed()) {
            survey_options.limits.time_budget = std::chrono::milliseconds(survey_budget_ms);
            return cmd_survey(survey_options);
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
