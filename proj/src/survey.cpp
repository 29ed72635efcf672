#include "kgap/survey.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "kgap/colorizer.hpp"
#include "kgap/errors.hpp"

namespace kgap {

namespace {

struct LineResult {
    std::string row;  // CSV row, empty when the line was skipped
    std::string diag; // diagnostic text, empty when clean
};

LineResult process_line(const std::string& line, long long line_no,
                        const SurveyOptions& options) {
    LineResult result;
    Graph g;
    try {
        g = from_graph6(line);
    } catch (const ParseError& e) {
        std::ostringstream d;
        d << "line " << line_no << " skipped: " << e.what() << "\n";
        result.diag = d.str();
        return result;
    }

    const int k = options.k;
    int delta = g.max_degree();
    bool connected = is_connected(g);
    int diam = -1;
    if (connected && g.n > 0) diam = diameter(g).value;

    std::string chi_text, gap_text;
    if (g.n <= options.max_oracle && delta >= 2) {
        try {
            GapRecord record = exact_gap(g, k, options.limits);
            chi_text = std::to_string(record.chi);
            std::ostringstream gs;
            gs << record.gap;
            gap_text = gs.str();
        } catch (const LimitError& e) {
            std::ostringstream d;
            d << "line " << line_no << ": oracle skipped: " << e.what() << "\n";
            result.diag += d.str();
        }
    }

    std::string procedure = "none", palette_text, ok_text;
    ProcedureOptions popts;
    popts.max_walks = options.max_walks;
    popts.max_aux_vertices = options.max_aux_vertices;
    try {
        if (connected && delta >= 3 && k >= 3 && diam >= 2 * k - 2) {
            procedure = "main";
            auto run = run_main_procedure(g, k, popts);
            palette_text = std::to_string(run.report.palette);
            ok_text = verify_coloring(g, k, run.coloring).empty() ? "1" : "0";
        } else if (connected && delta >= 3 && k >= 17 && diam >= k + 3) {
            procedure = "improved";
            auto run = run_improved_procedure(g, k, 1, popts);
            palette_text = std::to_string(run.report.palette);
            ok_text = verify_coloring(g, k, run.coloring).empty() ? "1" : "0";
        }
    } catch (const LimitError& e) {
        std::ostringstream d;
        d << "line " << line_no << ": procedure skipped: " << e.what() << "\n";
        result.diag += d.str();
        procedure = "none";
        palette_text.clear();
        ok_text.clear();
    } catch (const InternalError& e) {
        std::ostringstream d;
        d << "line " << line_no << ": procedure failed: " << e.what() << "\n";
        result.diag += d.str();
        ok_text = "0";
    }

    std::ostringstream row;
    row << line << ',' << g.n << ',' << delta << ',' << diam << ',' << k << ',' << chi_text
        << ',' << gap_text << ',' << procedure << ',' << palette_text << ',' << ok_text << "\n";
    result.row = row.str();
    return result;
}

} // namespace

SurveyStats run_survey(std::istream& in, std::ostream& out, std::ostream& diag,
                       const SurveyOptions& options) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        lines.push_back(line);
    }

    std::vector<LineResult> results(lines.size());
    int jobs = std::max(1, options.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) break;
            if (lines[i].empty()) {
                results[i].diag = "line " + std::to_string(i + 1) + " skipped: empty\n";
                continue;
            }
            results[i] = process_line(lines[i], static_cast<long long>(i + 1), options);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    out << "graph6,n,delta,diameter,k,chi,gap,procedure_used,palette,ok\n";
    SurveyStats stats;
    for (const auto& r : results) {
        if (!r.diag.empty()) diag << r.diag;
        if (r.row.empty()) {
            ++stats.skipped;
        } else {
            out << r.row;
            ++stats.rows;
        }
    }
    return stats;
}

} // namespace kgap
