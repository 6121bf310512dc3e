#pragma once

// Experiment drivers behind the command-line tool: single runs, well-balance
// checks, convergence studies and explicit-vs-implicit timing.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "swlme/io.hpp"
#include "swlme/time_loop.hpp"

namespace swlme {

/// Invalid combination of command and configuration (exit status 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Plain text table, printed with aligned columns and mirrored to CSV.
struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string format() const;
    void write_csv(const std::filesystem::path& path) const;
};

std::string format_sci(double v, int digits = 3);

struct Simulation {
    Grid grid;
    Topography topo;
    CellField ic;
    RunRecord record;
};

/// Builds grid, bottom and initial condition from the config and runs to t_end.
Simulation simulate(const RunConfig& cfg);

struct ErrorSet {
    double h = 0.0;
    double q0 = 0.0;
    double qj = 0.0;  // max over j >= 1 of the hu_j errors
};

ErrorSet l1_errors(const CellField& a, const CellField& b, double dx);

struct RunOutcome {
    Simulation sim;
    ErrorSet vs_initial;  // only meaningful for steady tests
    bool steady_test = false;
    std::vector<std::filesystem::path> files;
    std::string summary;
};

/// Runs one simulation and writes the final snapshot, any intermediate
/// snapshots and velocity profiles under out_dir.
RunOutcome cmd_run(const RunConfig& cfg, const std::filesystem::path& out_dir);

struct WellBalanceRow {
    std::string variant;  // EXP-o1, IMP-o1, EXP-o2, IMP-o2
    double cfl = 0.0;
    long steps = 0;
    double wall_seconds = 0.0;
    ErrorSet errors;
};

struct WellBalanceResult {
    std::vector<WellBalanceRow> rows;
    double tolerance = 1e-11;
    bool pass = false;
    Table table;
};

/// Runs EXP/IMP x o1/o2 on a steady test and compares the final state with the IC.
WellBalanceResult cmd_wellbalance(const RunConfig& cfg);

struct ConvergenceRow {
    int n_cells = 0;
    double err_h = 0.0;
    double err_u0 = 0.0;
    double err_uj = 0.0;  // max over j >= 1
    // log2(e_coarse / e_fine) against the previous row; NaN on the first row.
    double order_h = 0.0;
    double order_u0 = 0.0;
    double order_uj = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergenceRow> rows;
    bool exact = false;  // all errors at round-off level
    double min_finest_order = 0.0;
    bool pass = false;
    Table table;
};

/// Errors against a self-computed reference, restricted by conservative averaging.
ConvergenceResult cmd_convergence(const RunConfig& cfg);

struct BenchmarkRow {
    int order = 1;
    double explicit_seconds = 0.0;
    double implicit_seconds = 0.0;
    long explicit_steps = 0;
    long implicit_steps = 0;
    double speedup = 0.0;
    double required = 0.0;
};

struct BenchmarkResult {
    std::vector<BenchmarkRow> rows;
    bool pass = false;
    Table table;
};

/// Times explicit (cfl_explicit) against implicit (cfl_implicit) runs for
/// orders 1 and 2 after one discarded warm-up run each.
BenchmarkResult cmd_benchmark(const RunConfig& cfg, std::vector<int> orders = {1, 2});

}  // namespace swlme
