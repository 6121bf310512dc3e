#pragma once

// Well-balanced reconstruction of a scalar cell field X (h, h u_j, or a
// Riemann invariant): the local steady profile through the cell plus a
// limited reconstruction of the fluctuation around it.

#include <array>
#include <span>
#include <vector>

namespace swlme {

enum class LimiterPairing {
    as_printed,  // phi_{i+} weights the backward difference (harmonic mean slope)
    own_side,    // phi_{i-} weights the backward difference
};

struct LimiterWeights {
    double minus = 0.0;
    double plus = 0.0;
};

LimiterWeights limiter_weights(double d_minus, double d_plus);

/// Effective multipliers of the backward and forward differences in the slope.
struct SlopeCoefficients {
    double backward = 0.0;
    double forward = 0.0;
};

SlopeCoefficients slope_coefficients(LimiterWeights w, LimiterPairing pairing);

/// Limited slope of the fluctuations (f_{i-1}, f_i, f_{i+1}); weights from the same data.
double slope_fluctuation(std::array<double, 3> fluct, double dx, LimiterPairing pairing = LimiterPairing::as_printed);
/// Slope with externally supplied (frozen) weights.
double slope_fluctuation(std::array<double, 3> fluct, LimiterWeights w, double dx,
                         LimiterPairing pairing = LimiterPairing::as_printed);

inline double reconstruct_o1(double steady_at_x, double steady_at_center, double cell_value) {
    return steady_at_x + cell_value - steady_at_center;
}

template <class SteadyAt>
double reconstruct_o1(SteadyAt&& steady_at, double x_center, double cell_value, double x) {
    return reconstruct_o1(steady_at(x), steady_at(x_center), cell_value);
}

/// Steady values of cell i's profile at the points the reconstruction touches.
struct ScalarStencil {
    std::array<double, 3> value;         // X_{i-1}, X_i, X_{i+1} at t0
    std::array<double, 3> steady_nbr;    // X_i^e at x_{i-1}, x_i, x_{i+1}
    std::array<double, 2> steady_face;   // X_i^e at x_{i-1/2}, x_{i+1/2}
};

/// One cell's reconstruction, frozen at t0. The time-fluctuation slope is zero
/// unless set; implicit solves treat it symbolically through `coeffs`.
struct CellReconstruction {
    double steady_left = 0.0;    // X^e(x_{i-1/2})
    double steady_center = 0.0;  // X^e(x_i)
    double steady_right = 0.0;   // X^e(x_{i+1/2})
    double center_value = 0.0;   // X_i(t0)
    double slope_t0 = 0.0;
    double slope_t = 0.0;
    LimiterWeights weights;
    SlopeCoefficients coeffs;

    /// Value at x = x_i + offset where the steady value there is supplied.
    double at(double steady_at_x, double offset, double current_value) const;
    double left_face(double dx) const;
    double right_face(double dx) const;
};

CellReconstruction build_cell_reconstruction(const ScalarStencil& st, double dx, int order, LimiterPairing pairing);

/// P_i^{o2}(x, t) with the current cell value X_i(t) and time slope supplied.
double reconstruct_o2(const CellReconstruction& r, double steady_at_x, double offset, double current_value);

template <class SteadyAt>
double reconstruct_o2(const CellReconstruction& r, SteadyAt&& steady_at, double x_center, double x,
                      double current_value) {
    return reconstruct_o2(r, steady_at(x), x - x_center, current_value);
}

/// Time-fluctuation slope from frozen coefficients and the fluctuations X_j(t) - X_j(t0).
double time_slope(const CellReconstruction& r, std::array<double, 3> time_fluct, double dx);

}  // namespace swlme
