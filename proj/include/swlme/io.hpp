#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "swlme/field.hpp"
#include "swlme/grid.hpp"
#include "swlme/problems.hpp"
#include "swlme/time_loop.hpp"

namespace swlme {

// ---------------------------------------------------------------------------
// Error norms

struct Variable {
    enum class Kind { height, momentum, velocity };
    Kind kind;
    int moment = 0;

    static Variable h() { return {Kind::height, 0}; }
    static Variable q(int j) { return {Kind::momentum, j}; }
    static Variable u(int j) { return {Kind::velocity, j}; }

    double of(const State& s) const;
};

/// sum_i |a_i - b_i| dx over interior cells.
double l1_error(const CellField& a, const CellField& b, double dx, Variable v);

/// Conservative average of a fine field onto a coarser grid over the same
/// domain; the fine cell count must be an integer multiple of the coarse one.
CellField restrict_average(const CellField& fine, const Grid& fine_grid, const Grid& coarse_grid);

/// sum_i |eta_{i+1} - eta_i| with eta = h + z at cell centers.
double total_variation_eta(const CellField& cells, const Grid& grid, const Topography& topo);

double total_mass(const CellField& cells, double dx);

// ---------------------------------------------------------------------------
// Run configuration (flat key=value text)

struct RunConfig {
    std::string test = "1";
    int n_cells = 400;
    int n_moments = 8;
    int order = 1;
    PressureMode mode = PressureMode::explicit_euler;
    double cfl = 0.9;
    double t_end = 0.5;
    double domain_left = -1.0;
    double domain_right = 1.0;
    double g = 9.812;
    std::string output_path = "out";
    std::vector<double> snapshot_times;
    LimiterPairing limiter_pairing = LimiterPairing::as_printed;
    WaveSpeedMode wave_speed_mode = WaveSpeedMode::transport;
    double dt_max = 0.0;

    // harness extensions
    double perturbation_amplitude = 0.0;
    double cfl_explicit = 0.9;
    double cfl_implicit = 10.0;
    int reference_cells = 800;
    std::vector<int> convergence_cells{25, 50, 100, 200};
    std::vector<double> profile_x;

    SchemeConfig scheme() const;
    ProblemSetup setup() const;
    Grid grid() const;

    bool operator==(const RunConfig&) const = default;
};

/// Defaults for a test id (domain, N, cells, t_end, amplitude, implicit cfl).
RunConfig default_config(const std::string& test);

std::vector<std::string> config_keys();

/// Applies key=value pairs; a "test" key resets the other keys to that test's defaults first.
RunConfig apply_config(RunConfig base, const std::vector<std::pair<std::string, std::string>>& kv);

RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig read_config(const std::filesystem::path& path, RunConfig base = {});
std::string format_config(const RunConfig& cfg);
void write_config(const RunConfig& cfg, const std::filesystem::path& path);

std::string to_string(PressureMode m);
std::string to_string(LimiterPairing p);
std::string to_string(WaveSpeedMode m);

// ---------------------------------------------------------------------------
// CSV output

/// Columns: x, z, h, eta, u0..uN, q0..qN, pi. One row per interior cell.
void write_snapshot(const CellField& cells, const Grid& grid, const Topography& topo,
                    const std::filesystem::path& path);

/// Columns: zeta, then u(zeta) for each requested x; 101 rows zeta = 0, 0.01, ..., 1.
void write_velocity_profiles(const CellField& cells, const Grid& grid, const std::vector<double>& xs,
                             const std::filesystem::path& path);

std::string format_double(double v);

}  // namespace swlme
