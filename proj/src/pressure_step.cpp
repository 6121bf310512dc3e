#include "swlme/pressure_step.hpp"

#include <algorithm>
#include <array>

#include "swlme/field_reconstruction.hpp"

namespace swlme {

InvariantField invariants_of(const CellField& cells, double a) {
    InvariantField w;
    w.w_fwd.resize(static_cast<std::size_t>(cells.n_cells()));
    w.w_bwd.resize(static_cast<std::size_t>(cells.n_cells()));
    for (int i = 0; i < cells.n_cells(); ++i) {
        const State s = cells.get(i);
        const auto r = to_riemann_invariants(s.pi(), s.u(0), a);
        w.w_fwd[static_cast<std::size_t>(i)] = r.forward;
        w.w_bwd[static_cast<std::size_t>(i)] = r.backward;
    }
    return w;
}

namespace {

// Dependence of a reconstructed face value on the time fluctuations delta_{j-1},
// delta_j, delta_{j+1} of its cell, through the frozen limiter coefficients.
struct FaceStencil {
    int cell;
    std::array<double, 3> coef;
};

FaceStencil right_face_stencil(const FieldReconstruction& rec, int j) {
    if (j < 0) return {0, {0.0, 1.0, 0.0}};  // left ghost follows cell 0
    const auto& c = rec.cells[static_cast<std::size_t>(j)].coeffs;
    return {j, {-0.5 * c.backward, 1.0 + 0.5 * (c.backward - c.forward), 0.5 * c.forward}};
}

FaceStencil left_face_stencil(const FieldReconstruction& rec, int j, int n) {
    if (j >= n) return {n - 1, {0.0, 1.0, 0.0}};  // right ghost follows cell n-1
    const auto& c = rec.cells[static_cast<std::size_t>(j)].coeffs;
    return {j, {0.5 * c.backward, 1.0 - 0.5 * (c.backward - c.forward), -0.5 * c.forward}};
}

void add_face(BandedSystem& sys, int row, const FaceStencil& f, double scale) {
    const int n = sys.size();
    for (int k = 0; k < 3; ++k) {
        if (f.coef[static_cast<std::size_t>(k)] == 0.0) continue;
        const int col = std::clamp(f.cell - 1 + k, 0, n - 1);
        sys.add(row, col, scale * f.coef[static_cast<std::size_t>(k)]);
    }
}

void apply_update(CellField& cells, const InvariantField& w0, const std::vector<double>& d_fwd,
                  const std::vector<double>& d_bwd, double a) {
    const int n_mom = cells.n_moments();
    for (int i = 0; i < cells.n_cells(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto [pi, u0] = from_riemann_invariants({w0.w_fwd[k] + d_fwd[k], w0.w_bwd[k] + d_bwd[k]}, a);
        const double h = cells.h(i);
        cells.at(i, 1) = h * u0;
        cells.at(i, n_mom + 2) = h * pi;
    }
}

}  // namespace

PressureSystem assemble_pressure_system(const CellField& cells, std::span<const ProfileSamples> samples,
                                        const Grid& grid, double dt, int order, const ModelParams& p,
                                        LimiterPairing pairing) {
    const int n = cells.n_cells();
    const double a = p.relaxation_speed;
    const double dx = grid.dx();
    const bool second = order >= 2;

    const auto fwd = reconstruct_field(cells, samples, dx, order, pairing,
                                       [a](const State& s) { return s.pi() + a * s.u(0); });
    const auto bwd = reconstruct_field(cells, samples, dx, order, pairing,
                                       [a](const State& s) { return s.pi() - a * s.u(0); });

    PressureSystem sys{invariants_of(cells, a), BandedSystem(n, second ? 2 : 1, second ? 1 : 0),
                       BandedSystem(n, second ? 1 : 0, second ? 2 : 1)};

    for (int i = 0; i < n; ++i) {
        const double mu = a * dt / (cells.h(i) * dx);
        const auto& rf = fwd.cells[static_cast<std::size_t>(i)];
        const auto& rb = bwd.cells[static_cast<std::size_t>(i)];

        // forward invariant: upwind values come from the left of each interface
        const double f_right = fwd.face_minus(i + 1, dx);
        const double f_left = fwd.face_minus(i, dx);
        sys.fwd.rhs()[static_cast<std::size_t>(i)] = -mu * (f_right - f_left - rf.steady_right + rf.steady_left);
        sys.fwd.add(i, i, 1.0);
        add_face(sys.fwd, i, right_face_stencil(fwd, i), mu);
        add_face(sys.fwd, i, right_face_stencil(fwd, i - 1), -mu);

        // backward invariant: upwind values come from the right of each interface
        const double b_right = bwd.face_plus(i + 1, dx);
        const double b_left = bwd.face_plus(i, dx);
        sys.bwd.rhs()[static_cast<std::size_t>(i)] = mu * (b_right - b_left - rb.steady_right + rb.steady_left);
        sys.bwd.add(i, i, 1.0);
        add_face(sys.bwd, i, left_face_stencil(bwd, i + 1, n), -mu);
        add_face(sys.bwd, i, left_face_stencil(bwd, i, n), mu);
    }
    return sys;
}

void pressure_explicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid, double dt,
                       int order, const ModelParams& p, LimiterPairing pairing) {
    const auto sys = assemble_pressure_system(cells, samples, grid, dt, order, p, pairing);
    apply_update(cells, sys.w0, sys.fwd.rhs(), sys.bwd.rhs(), p.relaxation_speed);
}

void pressure_implicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid, double dt,
                       int order, const ModelParams& p, LimiterPairing pairing) {
    const auto sys = assemble_pressure_system(cells, samples, grid, dt, order, p, pairing);
    apply_update(cells, sys.w0, sys.fwd.solve(), sys.bwd.solve(), p.relaxation_speed);
}

}  // namespace swlme
