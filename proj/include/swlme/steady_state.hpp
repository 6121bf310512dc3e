#pragma once

// Local stationary solutions of the SWLME through a given cell state.
//
// A steady state satisfies
//   h u0 = C1
//   u0^2/2 + g (h + z) + 3/2 sum_i u_i^2 / (2i+1) = C2
//   u_i / h = C_{i+2},  i = 1..N
// Eliminating the velocities leaves a scalar equation R(h; z) = 0 that is
// solved pointwise by Newton's method on the branch of the anchoring state.

#include <array>
#include <stdexcept>

#include "swlme/grid.hpp"
#include "swlme/model.hpp"

namespace swlme {

enum class Branch { subcritical, supercritical, trivial };

const char* to_string(Branch b);

class NoSteadyRoot : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SteadyProfile {
    double c1 = 0.0;
    double c2 = 0.0;
    std::array<double, kMaxMoments + 1> ck{};  // ck[i] = C_{i+2} = u_i / h for i >= 1; ck[0] unused
    Branch branch = Branch::trivial;
    double h_ref = 0.0;
    double x_ref = 0.0;
    State anchor;

    int n_moments() const { return anchor.n_moments(); }
};

inline constexpr double kCriticalBand = 1e-8;
inline constexpr int kSteadyMaxIterations = 50;

Branch classify_branch(const State& s, const ModelParams& p);

SteadyProfile steady_constants(const State& s, double x_center, double z_center, const ModelParams& p);

/// Profile whose every evaluation returns the anchoring state.
SteadyProfile trivial_profile(const State& s, double x_center);

double steady_residual(const SteadyProfile& prof, double h, double z, const ModelParams& p);
double steady_residual_derivative(const SteadyProfile& prof, double h, const ModelParams& p);

struct SteadyRoot {
    double h;
    int iterations;
};

/// Newton solve of R(h; z) = 0 on the profile's branch, safeguarded by bisection.
/// Throws NoSteadyRoot when the branch has no root at this bottom elevation.
SteadyRoot solve_steady_height(const SteadyProfile& prof, double z, const ModelParams& p, double h_guess);

inline double steady_height(const SteadyProfile& prof, double z, const ModelParams& p, double h_guess) {
    return solve_steady_height(prof, z, p, h_guess).h;
}

/// Conserved state of the steady solution at x, with pi = g h^2 / 2.
State steady_state_at_height(const SteadyProfile& prof, double h, const ModelParams& p);
State steady_eval(const SteadyProfile& prof, double x, const Topography& topo, const ModelParams& p);

}  // namespace swlme
