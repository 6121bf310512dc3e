#include "swlme/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swlme/steady_state.hpp"

namespace swlme {

TestCase parse_test_case(const std::string& id) {
    if (id == "1") return TestCase::lake_at_rest;
    if (id == "2") return TestCase::subcritical;
    if (id == "2_lowfroude" || id == "2lf") return TestCase::subcritical_low_froude;
    if (id == "3") return TestCase::moments;
    if (id == "4") return TestCase::convergence;
    if (id == "5") return TestCase::parabolic_perturbation;
    if (id == "6") return TestCase::dam_break;
    throw std::invalid_argument("unknown test '" + id + "' (expected 1, 2, 2_lowfroude, 3, 4, 5 or 6)");
}

std::string test_case_id(TestCase t) {
    switch (t) {
        case TestCase::lake_at_rest: return "1";
        case TestCase::subcritical: return "2";
        case TestCase::subcritical_low_froude: return "2_lowfroude";
        case TestCase::moments: return "3";
        case TestCase::convergence: return "4";
        case TestCase::parabolic_perturbation: return "5";
        case TestCase::dam_break: return "6";
    }
    return "?";
}

ProblemSetup problem_setup(TestCase t) {
    constexpr double kEnergy = 21.15525;
    switch (t) {
        case TestCase::lake_at_rest:
            return {t, Topography::parabolic_bump(), -1.0, 1.0, 8, 400, 0.5, std::nullopt, 0.0};
        case TestCase::subcritical:
            return {t, Topography::cosine_bump(), 0.0, 3.0, 8, 400, 0.5, SteadyConstants{3.5, kEnergy, {0.0}}, 0.0};
        case TestCase::subcritical_low_froude:
            return {t, Topography::cosine_bump(), 0.0, 3.0, 8, 400, 0.5, SteadyConstants{0.5, kEnergy, {0.0}}, 0.0};
        case TestCase::moments:
            return {t, Topography::cosine_bump(), 0.0, 3.0, 8, 400, 0.5, SteadyConstants{0.5, kEnergy, {0.005}},
                    0.0};
        case TestCase::convergence:
            return {t, Topography::cosine_bump(), 0.0, 3.0, 8, 200, 0.1, SteadyConstants{0.5, kEnergy, {0.005}},
                    1e-4};
        case TestCase::parabolic_perturbation:
            return {t,   Topography::cosine_bump(), 0.0, 3.0, 2, 400, 0.1, SteadyConstants{0.5, kEnergy, {-0.005, -0.001}},
                    1e-4};
        case TestCase::dam_break:
            return {t, Topography::flat(), -0.4, 0.4, 8, 400, 0.1, std::nullopt, 0.0};
    }
    throw std::logic_error("unknown test case");
}

double perturbation(double amplitude, double x) {
    return amplitude * std::exp(-200.0 * (x - 2.0) * (x - 2.0));
}

State steady_state_from_constants(const SteadyConstants& c, int n_moments, double z, const ModelParams& p) {
    SteadyProfile prof;
    prof.c1 = c.c1;
    prof.c2 = c.c2;
    for (int i = 1; i <= n_moments; ++i) {
        if (c.ck.empty()) break;
        const auto k = std::min(static_cast<std::size_t>(i - 1), c.ck.size() - 1);
        prof.ck[static_cast<std::size_t>(i)] = c.ck[k];
    }
    prof.branch = Branch::subcritical;
    prof.anchor = State(n_moments);
    // Starting above the subcritical root keeps Newton monotone on the convex residual.
    const double guess = std::max(c.c2 / p.g - z, 1e-3);
    prof.h_ref = guess;
    const double h = steady_height(prof, z, p, guess);
    return steady_state_at_height(prof, h, p);
}

CellField build_ic(const ProblemSetup& setup, const Grid& grid, const ModelParams& p) {
    const int n_mom = setup.n_moments;
    CellField cells(grid.n_cells(), n_mom);
    for (int i = 0; i < grid.n_cells(); ++i) {
        const double x = grid.center(i);
        const double z = setup.topo.z(x);
        State s(n_mom);
        switch (setup.test) {
            case TestCase::lake_at_rest:
                s.set_h(3.0 - z);
                break;
            case TestCase::dam_break: {
                const double h = x <= 0.0 ? 2.0 : 1.0;
                s.set_h(h);
                s.set_q(0, 0.25 * h);
                if (n_mom >= 1) s.set_q(1, -0.005 * h);
                if (n_mom >= 8) s.set_q(8, 0.005 * h);
                break;
            }
            default:
                if (!setup.steady) throw std::logic_error("steady test without constants");
                try {
                    s = steady_state_from_constants(*setup.steady, n_mom, z, p);
                } catch (const NoSteadyRoot& e) {
                    throw std::runtime_error("no subcritical steady root at x=" + std::to_string(x) + ": " +
                                             e.what());
                }
                break;
        }
        if (setup.perturbation_amplitude != 0.0) s.set_h(s.h() + perturbation(setup.perturbation_amplitude, x));
        s.set_hpi(0.5 * p.g * s.h() * s.h() * s.h());
        cells.set(i, s);
    }
    return cells;
}

}  // namespace swlme
