#include "swlme/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace swlme {

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw std::logic_error("table row width does not match header");
    rows.push_back(std::move(row));
}

std::string Table::format() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream out;
    if (!title.empty()) out << title << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << cells[c] << std::string(width[c] - cells[c].size(), ' ');
        }
        out << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
    for (const auto& r : rows) line(r);
    return out.str();
}

void Table::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table " + path.string());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::string format_sci(double v, int digits) {
    if (std::isnan(v)) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return buf;
}

namespace {

std::string format_fixed(double v, int decimals) {
    if (std::isnan(v)) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double observed_order(double coarse, double fine) {
    if (!(coarse > 0.0) || !(fine > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log2(coarse / fine);
}

RunConfig variant(RunConfig cfg, int order, PressureMode mode) {
    cfg.order = order;
    cfg.mode = mode;
    cfg.cfl = mode == PressureMode::explicit_euler ? cfg.cfl_explicit : cfg.cfl_implicit;
    return cfg;
}

std::string variant_name(int order, PressureMode mode) {
    return std::string(mode == PressureMode::explicit_euler ? "EXP" : "IMP") + "-o" + std::to_string(order);
}

bool is_steady_test(const RunConfig& cfg) {
    const auto s = cfg.setup();
    return s.steady.has_value() || s.test == TestCase::lake_at_rest;
}

}  // namespace

Simulation simulate(const RunConfig& cfg) {
    const ProblemSetup setup = cfg.setup();
    const Grid grid = cfg.grid();
    const ModelParams p{cfg.g, cfg.n_moments, 1.0};
    CellField ic = build_ic(setup, grid, p);
    RunRecord rec = run(cfg.scheme(), grid, setup.topo, ic, cfg.t_end, cfg.snapshot_times);
    return {grid, setup.topo, std::move(ic), std::move(rec)};
}

ErrorSet l1_errors(const CellField& a, const CellField& b, double dx) {
    ErrorSet e;
    e.h = l1_error(a, b, dx, Variable::h());
    e.q0 = l1_error(a, b, dx, Variable::q(0));
    for (int j = 1; j <= a.n_moments(); ++j) e.qj = std::max(e.qj, l1_error(a, b, dx, Variable::q(j)));
    return e;
}

RunOutcome cmd_run(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    RunOutcome out{simulate(cfg), {}, is_steady_test(cfg), {}, {}};
    const auto& sim = out.sim;
    const std::string stem = "test" + cfg.test;

    auto emit = [&](const CellField& cells, const std::string& suffix) {
        const auto path = out_dir / (stem + "_" + suffix + ".csv");
        write_snapshot(cells, sim.grid, sim.topo, path);
        out.files.push_back(path);
        if (!cfg.profile_x.empty()) {
            const auto prof = out_dir / (stem + "_" + suffix + "_profiles.csv");
            write_velocity_profiles(cells, sim.grid, cfg.profile_x, prof);
            out.files.push_back(prof);
        }
    };
    for (const auto& snap : sim.record.snapshots) {
        if (snap.time == sim.record.final_time) continue;
        emit(snap.cells, "t" + format_double(snap.time));
    }
    emit(sim.record.final_state, "final");
    const auto cfg_path = out_dir / (stem + "_config.txt");
    write_config(cfg, cfg_path);
    out.files.push_back(cfg_path);

    std::ostringstream s;
    s << "test=" << cfg.test << " order=" << cfg.order << " mode=" << to_string(cfg.mode) << " cfl=" << cfg.cfl
      << " cells=" << cfg.n_cells << " steps=" << sim.record.steps << " t=" << sim.record.final_time
      << " wall=" << format_fixed(sim.record.wall_seconds, 3) << "s";
    if (out.steady_test) {
        out.vs_initial = l1_errors(sim.record.final_state, sim.ic, sim.grid.dx());
        s << " L1(h)=" << format_sci(out.vs_initial.h) << " L1(hu0)=" << format_sci(out.vs_initial.q0)
          << " L1(hu_j)=" << format_sci(out.vs_initial.qj);
    }
    out.summary = s.str();
    return out;
}

WellBalanceResult cmd_wellbalance(const RunConfig& cfg) {
    if (!is_steady_test(cfg) || cfg.perturbation_amplitude != 0.0)
        throw UsageError("wellbalance needs an unperturbed steady test (1, 2, 2_lowfroude or 3)");
    WellBalanceResult res;
    res.table.title = "Well-balance check, test " + cfg.test + ", " + std::to_string(cfg.n_cells) +
                      " cells, t=" + format_double(cfg.t_end) + " (L1 norm weighted by dx)";
    res.table.header = {"scheme", "cfl", "steps", "wall_s", "L1_h", "L1_hu0", "L1_hu_j(max)", "status"};
    res.pass = true;
    for (int order : {1, 2}) {
        for (auto mode : {PressureMode::explicit_euler, PressureMode::implicit_euler}) {
            const RunConfig v = variant(cfg, order, mode);
            const Simulation sim = simulate(v);
            WellBalanceRow row{variant_name(order, mode), v.cfl, sim.record.steps, sim.record.wall_seconds,
                               l1_errors(sim.record.final_state, sim.ic, sim.grid.dx())};
            const bool ok = row.errors.h <= res.tolerance && row.errors.q0 <= res.tolerance &&
                            row.errors.qj <= res.tolerance;
            res.pass = res.pass && ok;
            res.table.add_row({row.variant, format_short(row.cfl), std::to_string(row.steps),
                               format_fixed(row.wall_seconds, 3), format_sci(row.errors.h), format_sci(row.errors.q0),
                               format_sci(row.errors.qj), ok ? "PASS" : "FAIL"});
            res.rows.push_back(row);
        }
    }
    return res;
}

ConvergenceResult cmd_convergence(const RunConfig& cfg) {
    if (cfg.order != 2) throw UsageError("convergence needs order=2");
    if (cfg.convergence_cells.size() < 2) throw UsageError("convergence needs at least two grids");
    ConvergenceResult res;

    RunConfig ref_cfg = cfg;
    ref_cfg.n_cells = cfg.reference_cells;
    const Simulation ref = simulate(ref_cfg);

    for (int n : cfg.convergence_cells) {
        RunConfig c = cfg;
        c.n_cells = n;
        const Simulation sim = simulate(c);
        const CellField avg = restrict_average(ref.record.final_state, ref.grid, sim.grid);
        const double dx = sim.grid.dx();
        ConvergenceRow row;
        row.n_cells = n;
        row.err_h = l1_error(sim.record.final_state, avg, dx, Variable::h());
        row.err_u0 = l1_error(sim.record.final_state, avg, dx, Variable::u(0));
        for (int j = 1; j <= cfg.n_moments; ++j)
            row.err_uj = std::max(row.err_uj, l1_error(sim.record.final_state, avg, dx, Variable::u(j)));
        if (!res.rows.empty()) {
            const auto& prev = res.rows.back();
            row.order_h = observed_order(prev.err_h, row.err_h);
            row.order_u0 = observed_order(prev.err_u0, row.err_u0);
            row.order_uj = observed_order(prev.err_uj, row.err_uj);
        } else {
            row.order_h = row.order_u0 = row.order_uj = std::numeric_limits<double>::quiet_NaN();
        }
        res.rows.push_back(row);
    }

    constexpr double kRoundOff = 1e-11;
    res.exact = std::all_of(res.rows.begin(), res.rows.end(), [](const ConvergenceRow& r) {
        return r.err_h <= kRoundOff && r.err_u0 <= kRoundOff && r.err_uj <= kRoundOff;
    });
    const auto& last = res.rows.back();
    if (res.exact) {
        res.min_finest_order = std::numeric_limits<double>::infinity();
        res.pass = true;
    } else {
        // Variables already at round-off carry no order information.
        double m = std::numeric_limits<double>::infinity();
        const std::pair<double, double> finest[] = {
            {last.err_h, last.order_h}, {last.err_u0, last.order_u0}, {last.err_uj, last.order_uj}};
        for (const auto& [err, ord] : finest)
            if (err > kRoundOff) m = std::min(m, std::isnan(ord) ? -std::numeric_limits<double>::infinity() : ord);
        res.min_finest_order = m;
        res.pass = m >= 1.5;
    }

    res.table.title = "Convergence, test " + cfg.test + ", " + variant_name(cfg.order, cfg.mode) +
                      " cfl=" + format_short(cfg.cfl) + ", t=" + format_short(cfg.t_end) + ", reference " +
                      std::to_string(cfg.reference_cells) + " cells (L1 norm weighted by dx)";
    res.table.header = {"cells", "L1_h", "order_h", "L1_u0", "order_u0", "L1_u_j(max)", "order_u_j"};
    for (const auto& r : res.rows) {
        auto ord = [&](double o) { return res.exact ? std::string("exact") : format_fixed(o, 2); };
        res.table.add_row({std::to_string(r.n_cells), format_sci(r.err_h), ord(r.order_h), format_sci(r.err_u0),
                           ord(r.order_u0), format_sci(r.err_uj), ord(r.order_uj)});
    }
    return res;
}

BenchmarkResult cmd_benchmark(const RunConfig& cfg, std::vector<int> orders) {
    const TestCase t = parse_test_case(cfg.test);
    if (t != TestCase::subcritical_low_froude && t != TestCase::moments)
        throw UsageError("benchmark needs test 2_lowfroude or 3");
    BenchmarkResult res;
    res.pass = true;
    const double cfl_ratio = cfg.cfl_implicit / cfg.cfl_explicit;
    res.table.title = "Explicit vs implicit wall time, test " + cfg.test + ", " + std::to_string(cfg.n_cells) +
                      " cells, t=" + format_double(cfg.t_end) + ", single thread";
    res.table.header = {"order", "cfl_exp", "cfl_imp", "steps_exp", "steps_imp", "time_exp_s", "time_imp_s",
                        "speedup", "required", "status"};
    for (int order : orders) {
        const RunConfig e = variant(cfg, order, PressureMode::explicit_euler);
        const RunConfig i = variant(cfg, order, PressureMode::implicit_euler);
        simulate(e);  // warm-up, discarded
        const Simulation se = simulate(e);
        simulate(i);  // warm-up, discarded
        const Simulation si = simulate(i);
        BenchmarkRow row;
        row.order = order;
        row.explicit_seconds = se.record.wall_seconds;
        row.implicit_seconds = si.record.wall_seconds;
        row.explicit_steps = se.record.steps;
        row.implicit_steps = si.record.steps;
        row.speedup = row.explicit_seconds / row.implicit_seconds;
        row.required = 0.5 * cfl_ratio;
        const bool ok = row.speedup >= row.required;
        res.pass = res.pass && ok;
        res.table.add_row({std::to_string(order), format_short(cfg.cfl_explicit), format_short(cfg.cfl_implicit),
                           std::to_string(row.explicit_steps), std::to_string(row.implicit_steps),
                           format_fixed(row.explicit_seconds, 3), format_fixed(row.implicit_seconds, 3),
                           format_fixed(row.speedup, 2), format_fixed(row.required, 2), ok ? "PASS" : "FAIL"});
        res.rows.push_back(row);
    }
    return res;
}

}  // namespace swlme
