#include "swlme/time_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace swlme {

StepPlan compute_dt(const CellField& cells, const Grid& grid, const SchemeConfig& cfg, double dt_max) {
    const ModelParams probe{cfg.g, cfg.n_moments, 1.0};
    StepPlan plan;
    plan.mode = cfg.mode;
    plan.order = cfg.order;

    const auto states = cells.states();
    plan.relaxation_speed = relaxation_speed(states, probe);
    double h_min = std::numeric_limits<double>::infinity();
    double speed = 0.0;
    for (const auto& s : states) {
        h_min = std::min(h_min, s.h());
        const auto ev = eigenvalues_transport(s);
        speed = std::max({speed, std::abs(ev.min), std::abs(ev.max)});
    }
    const double dx = grid.dx();
    plan.dt_pressure_limit = dx * h_min / plan.relaxation_speed;
    plan.dt_transport_limit = speed > 0.0 ? dx / (2.0 * speed) : std::numeric_limits<double>::infinity();

    if (cfg.mode == PressureMode::explicit_euler) {
        plan.dt = cfg.cfl * std::min(plan.dt_pressure_limit, plan.dt_transport_limit);
    } else {
        plan.dt = std::min({cfg.cfl * plan.dt_pressure_limit, plan.dt_transport_limit, dt_max});
    }
    return plan;
}

Stepper::Stepper(Grid grid, Topography topo, SchemeConfig cfg)
    : grid_(std::move(grid)), topo_(std::move(topo)), cfg_(cfg) {
    if (cfg_.order != 1 && cfg_.order != 2) throw DomainError("order must be 1 or 2");
    if (!(cfg_.cfl > 0.0)) throw DomainError("cfl must be positive");
}

std::vector<ProfileSamples> Stepper::refresh(const CellField& cells, const ModelParams& p) {
    auto samples = sample_profiles(cells, grid_, topo_, p);
    for (const auto& s : samples) {
        max_newton_ = std::max(max_newton_, s.newton_iterations);
        if (s.fell_back) ++fallbacks_;
    }
    return samples;
}

void Stepper::pressure(CellField& cells, double dt, const ModelParams& p) {
    cells.reset_pressure(p.g);
    const auto samples = refresh(cells, p);
    pressure_step(cfg_.mode, cells, samples, grid_, dt, cfg_.order, p, cfg_.pairing);
}

void Stepper::transport(CellField& cells, double dt, const ModelParams& p) {
    const auto samples = refresh(cells, p);
    const auto res = transport_explicit(cells, samples, grid_, dt, p, {cfg_.order, cfg_.pairing, cfg_.wave_speeds});
    mass_inflow_ += res.mass_inflow;
}

void Stepper::advance_o1(CellField& cells, double dt, double a) {
    if (dt == 0.0) return;
    const ModelParams p = cfg_.model(a);
    pressure(cells, dt, p);
    transport(cells, dt, p);
}

void Stepper::advance_o2(CellField& cells, double dt, double a) {
    if (dt == 0.0) return;
    const ModelParams p = cfg_.model(a);
    transport(cells, 0.5 * dt, p);
    pressure(cells, dt, p);
    transport(cells, 0.5 * dt, p);
}

void Stepper::advance(CellField& cells, double dt, double a) {
    if (cfg_.order == 1) advance_o1(cells, dt, a);
    else advance_o2(cells, dt, a);
}

RunRecord run(const SchemeConfig& cfg, const Grid& grid, const Topography& topo, const CellField& ic, double t_end,
              std::vector<double> snapshot_times) {
    if (grid.n_cells() < 5) throw DomainError("at least 5 cells are required");
    if (t_end < 0.0) throw DomainError("t_end must be non-negative");
    if (ic.n_cells() != grid.n_cells()) throw DomainError("initial condition does not match the grid");

    RunRecord rec;
    rec.config = cfg;
    rec.t_end = t_end;
    rec.initial = ic;

    std::sort(snapshot_times.begin(), snapshot_times.end());
    std::erase_if(snapshot_times, [&](double ts) { return !(ts > 0.0 && ts <= t_end); });
    snapshot_times.erase(std::unique(snapshot_times.begin(), snapshot_times.end()), snapshot_times.end());

    const double dt_max = cfg.dt_max > 0.0 ? cfg.dt_max : (t_end > 0.0 ? t_end / 10.0 : 1.0);
    Stepper stepper(grid, topo, cfg);
    CellField cells = ic;
    cells.reset_pressure(cfg.g);
    double t = 0.0;
    std::size_t next_snap = 0;

    const auto start = std::chrono::steady_clock::now();
    while (t < t_end) {
        const StepPlan plan = compute_dt(cells, grid, cfg, dt_max);
        double target = t_end;
        if (next_snap < snapshot_times.size()) target = snapshot_times[next_snap];
        double dt = plan.dt;
        bool lands = false;
        if (t + dt >= target) {
            dt = target - t;
            lands = true;
        }
        try {
            stepper.advance(cells, dt, plan.relaxation_speed);
        } catch (const PositivityError& e) {
            std::ostringstream msg;
            msg << "step failed at t=" << t << " (dt=" << dt << "), cell " << e.cell() << ", variable h: "
                << e.what();
            throw std::runtime_error(msg.str());
        }
        t = lands ? target : t + dt;
        rec.dt_history.push_back(dt);
        ++rec.steps;
        if (lands && next_snap < snapshot_times.size() && target == snapshot_times[next_snap]) {
            rec.snapshots.push_back({t, cells});
            ++next_snap;
        }
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.final_time = t;
    rec.final_state = cells;
    rec.mass_inflow = stepper.mass_inflow();
    rec.max_newton_iterations = stepper.max_newton_iterations();
    rec.fallback_count = stepper.fallback_count();
    return rec;
}

}  // namespace swlme
