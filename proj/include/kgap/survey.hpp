#ifndef KGAP_SURVEY_HPP
#define KGAP_SURVEY_HPP

#include <iosfwd>
#include <string>

#include "kgap/oracle.hpp"

namespace kgap {

struct SurveyOptions {
    int k = 2;
    int max_oracle = 40; // oracle runs only when the graph has at most this many vertices
    int jobs = 1;
    OracleLimits limits;
    long long max_walks = 10'000'000;
    long long max_aux_vertices = 10'000'000;
};

struct SurveyStats {
    long long rows = 0;
    long long skipped = 0;
};

/// Reads graph6 lines from `in` and writes one CSV row per graph to `out`
/// (columns: graph6,n,delta,diameter,k,chi,gap,procedure_used,palette,ok).
/// The oracle fields stay empty when limits forbid the computation; the
/// greedy procedure is attempted whenever its preconditions hold (the main
/// sweep first, the improved one with s=1 when only its weaker diameter
/// bound is met). Malformed lines are reported on `diag` and skipped.
/// Rows may be computed by a worker pool but are emitted in input order,
/// so the output is a pure function of the input.
SurveyStats run_survey(std::istream& in, std::ostream& out, std::ostream& diag,
                       const SurveyOptions& options);

} // namespace kgap

#endif
