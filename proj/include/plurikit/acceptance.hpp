#pragma once

#include <functional>
#include <string>
#include <vector>

namespace plurikit {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    bool quick = false;  // included in the --quick subset
    std::function<CriterionResult()> run;
};

// The full verification suite, in report order.
const std::vector<Criterion>& acceptance_criteria();

// Runs criteria (optionally the quick subset) on up to `threads` workers
// and prints one pass/fail line each; returns the number of failures.
int run_acceptance(std::ostream& out, bool quick, int threads,
                   const std::string& data_dir);

// Reads the worker cap from PLURIKIT_THREADS (defaults to the hardware
// concurrency, at least 1).
int default_thread_count();

// Appendix table verification shared by the CLI and the suite: returns
// {matched, total} pairs for the basis table and the sigma table.
struct AppendixReport {
    int matched = 0;
    int total = 0;
    int sigma_matched = 0;
    int sigma_total = 0;
    std::vector<std::string> mismatches;
};
AppendixReport verify_appendix(const std::string& golden_path, int max_nu);

void set_acceptance_data_dir(const std::string& dir);
std::string acceptance_data_dir();

}  // namespace plurikit
