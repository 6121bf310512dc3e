#include "swlme/reconstruction.hpp"

#include <cmath>

namespace swlme {

LimiterWeights limiter_weights(double d_minus, double d_plus) {
    const double am = std::abs(d_minus);
    const double ap = std::abs(d_plus);
    const double den = am + ap;
    if (!(den > 0.0)) return {};
    return {am / den, ap / den};
}

SlopeCoefficients slope_coefficients(LimiterWeights w, LimiterPairing pairing) {
    if (pairing == LimiterPairing::as_printed) return {w.plus, w.minus};
    return {w.minus, w.plus};
}

double slope_fluctuation(std::array<double, 3> f, LimiterWeights w, double dx, LimiterPairing pairing) {
    const auto c = slope_coefficients(w, pairing);
    return (c.backward * (f[1] - f[0]) + c.forward * (f[2] - f[1])) / dx;
}

double slope_fluctuation(std::array<double, 3> f, double dx, LimiterPairing pairing) {
    return slope_fluctuation(f, limiter_weights(f[1] - f[0], f[2] - f[1]), dx, pairing);
}

double CellReconstruction::at(double steady_at_x, double offset, double current_value) const {
    return steady_at_x - steady_center + slope_t0 * offset + current_value + slope_t * offset;
}

double CellReconstruction::left_face(double dx) const { return at(steady_left, -0.5 * dx, center_value); }

double CellReconstruction::right_face(double dx) const { return at(steady_right, 0.5 * dx, center_value); }

CellReconstruction build_cell_reconstruction(const ScalarStencil& st, double dx, int order, LimiterPairing pairing) {
    CellReconstruction r;
    r.steady_left = st.steady_face[0];
    r.steady_center = st.steady_nbr[1];
    r.steady_right = st.steady_face[1];
    r.center_value = st.value[1];
    if (order >= 2) {
        const std::array<double, 3> f{st.value[0] - st.steady_nbr[0], st.value[1] - st.steady_nbr[1],
                                      st.value[2] - st.steady_nbr[2]};
        r.weights = limiter_weights(f[1] - f[0], f[2] - f[1]);
        r.coeffs = slope_coefficients(r.weights, pairing);
        r.slope_t0 = slope_fluctuation(f, r.weights, dx, pairing);
    }
    return r;
}

double reconstruct_o2(const CellReconstruction& r, double steady_at_x, double offset, double current_value) {
    return r.at(steady_at_x, offset, current_value);
}

double time_slope(const CellReconstruction& r, std::array<double, 3> d, double dx) {
    return (r.coeffs.backward * (d[1] - d[0]) + r.coeffs.forward * (d[2] - d[1])) / dx;
}

}  // namespace swlme
