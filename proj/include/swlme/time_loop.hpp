#pragma once

#include <limits>
#include <vector>

#include "swlme/field.hpp"
#include "swlme/pressure_step.hpp"
#include "swlme/transport_step.hpp"

namespace swlme {

struct SchemeConfig {
    int order = 1;
    PressureMode mode = PressureMode::explicit_euler;
    double cfl = 0.9;
    double g = 9.812;
    int n_moments = 8;
    LimiterPairing pairing = LimiterPairing::as_printed;
    WaveSpeedMode wave_speeds = WaveSpeedMode::transport;
    /// Cap on dt in implicit mode; <= 0 means t_end / 10.
    double dt_max = 0.0;

    ModelParams model(double a) const { return {g, n_moments, a}; }
};

struct StepPlan {
    double dt = 0.0;
    double dt_pressure_limit = 0.0;
    double dt_transport_limit = std::numeric_limits<double>::infinity();
    double relaxation_speed = 0.0;
    PressureMode mode = PressureMode::explicit_euler;
    int order = 1;
};

/// Pressure limit dx min_i h_i / a, transport limit dx / (2 max |lambda^T|).
/// Explicit: dt = cfl min(limits). Implicit: dt = min(cfl * pressure limit, transport limit, dt_max).
StepPlan compute_dt(const CellField& cells, const Grid& grid, const SchemeConfig& cfg, double dt_max);

/// Advances one step from t to t + dt. The relaxation speed a is taken from `plan`.
class Stepper {
public:
    Stepper(Grid grid, Topography topo, SchemeConfig cfg);

    const Grid& grid() const { return grid_; }
    const Topography& topography() const { return topo_; }
    const SchemeConfig& config() const { return cfg_; }

    /// Pressure then transport, both over dt.
    void advance_o1(CellField& cells, double dt, double a);
    /// Transport dt/2, pressure dt, transport dt/2.
    void advance_o2(CellField& cells, double dt, double a);
    void advance(CellField& cells, double dt, double a);

    /// Net mass that entered through the boundaries since construction.
    double mass_inflow() const { return mass_inflow_; }
    int max_newton_iterations() const { return max_newton_; }
    long fallback_count() const { return fallbacks_; }

private:
    std::vector<ProfileSamples> refresh(const CellField& cells, const ModelParams& p);
    void pressure(CellField& cells, double dt, const ModelParams& p);
    void transport(CellField& cells, double dt, const ModelParams& p);

    Grid grid_;
    Topography topo_;
    SchemeConfig cfg_;
    double mass_inflow_ = 0.0;
    int max_newton_ = 0;
    long fallbacks_ = 0;
};

struct Snapshot {
    double time;
    CellField cells;
};

struct RunRecord {
    SchemeConfig config;
    double t_end = 0.0;
    double final_time = 0.0;
    std::vector<double> dt_history;
    double wall_seconds = 0.0;
    long steps = 0;
    CellField initial;
    CellField final_state;
    std::vector<Snapshot> snapshots;
    double mass_inflow = 0.0;
    int max_newton_iterations = 0;
    long fallback_count = 0;
};

/// Runs to t_end. Snapshot times inside (0, t_end] are hit exactly.
RunRecord run(const SchemeConfig& cfg, const Grid& grid, const Topography& topo, const CellField& ic, double t_end,
              std::vector<double> snapshot_times = {});

}  // namespace swlme
