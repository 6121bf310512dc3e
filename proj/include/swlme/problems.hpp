#pragma once

// Catalog of the benchmark problems: bottoms, domains, steady constants and
// initial conditions.

#include <optional>
#include <string>
#include <vector>

#include "swlme/field.hpp"
#include "swlme/grid.hpp"

namespace swlme {

enum class TestCase {
    lake_at_rest,            // "1"
    subcritical,             // "2"
    subcritical_low_froude,  // "2_lowfroude"
    moments,                 // "3"
    convergence,             // "4"
    parabolic_perturbation,  // "5"
    dam_break,               // "6"
};

TestCase parse_test_case(const std::string& id);
std::string test_case_id(TestCase t);

struct SteadyConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> ck;  // C_{i+2} for i = 1..ck.size(); missing entries repeat the last value
};

struct ProblemSetup {
    TestCase test;
    Topography topo;
    double x_left;
    double x_right;
    int n_moments;
    int n_cells;
    double t_end;
    std::optional<SteadyConstants> steady;
    double perturbation_amplitude = 0.0;
};

ProblemSetup problem_setup(TestCase t);

/// Gaussian bump added to h: amplitude * exp(-200 (x - 2)^2).
double perturbation(double amplitude, double x);

/// Subcritical steady state with the given constants at bottom elevation z.
State steady_state_from_constants(const SteadyConstants& c, int n_moments, double z, const ModelParams& p);

/// Cell-center sampled initial condition; pi = g h^2 / 2.
CellField build_ic(const ProblemSetup& setup, const Grid& grid, const ModelParams& p);

}  // namespace swlme
