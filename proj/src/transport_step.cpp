#include "swlme/transport_step.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "swlme/field_reconstruction.hpp"

namespace swlme {

HllCoefficients hll_coefficients(double sl, double sr) {
    if (sl == sr) {
        if (sl == 0.0) return {0.0, 0.0};
        const double eps = 1e-12 * std::max(1.0, std::abs(sl));
        // widen towards zero so the upwind limit is kept
        if (sl > 0.0) sl -= eps;
        else sr += eps;
    }
    if (sl >= 0.0) return {0.0, 1.0};
    if (sr <= 0.0) return {0.0, -1.0};
    const double den = sr - sl;
    return {(sr * std::abs(sl) - sl * std::abs(sr)) / den, (std::abs(sr) - std::abs(sl)) / den};
}

WaveSpeeds wave_speeds(const State& left, const State& right, const ModelParams& p, WaveSpeedMode mode) {
    const auto l = mode == WaveSpeedMode::full ? eigenvalues_full(left, p) : eigenvalues_transport(left);
    const auto r = mode == WaveSpeedMode::full ? eigenvalues_full(right, p) : eigenvalues_transport(right);
    return {std::min(l.min, r.min), std::max(l.max, r.max)};
}

InterfaceData make_interface(const State& left, const State& right, const ModelParams& p, WaveSpeedMode mode) {
    InterfaceData d{left, right};
    const auto s = wave_speeds(left, right, p, mode);
    d.s_left = s.min;
    d.s_right = s.max;
    const auto c = hll_coefficients(s.min, s.max);
    d.alpha0 = c.alpha0;
    d.alpha1 = c.alpha1;
    return d;
}

FluxVector hll_flux(const InterfaceData& iface) {
    const FluxVector fl = flux_transport(iface.left);
    const FluxVector fr = flux_transport(iface.right);
    const FluxVector du = iface.right - iface.left;
    FluxVector f(fl.n_moments());
    for (int k = 0; k < f.size(); ++k)
        f[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * (iface.alpha0 * du[k] + iface.alpha1 * (fr[k] - fl[k]));
    return f;
}

Fluctuations nonconservative_fluctuations(const InterfaceData& iface) {
    const int n = iface.left.n_moments();
    State mid(n);
    for (int k = 0; k < mid.size(); ++k) mid[k] = 0.5 * (iface.left[k] + iface.right[k]);
    const FluxVector bdu = apply_B(mid, iface.right - iface.left);
    Fluctuations out{FluxVector(n), FluxVector(n)};
    for (int k = 0; k < bdu.size(); ++k) {
        out.minus[k] = 0.5 * bdu[k] - 0.5 * iface.alpha1 * bdu[k];
        out.plus[k] = 0.5 * bdu[k] + 0.5 * iface.alpha1 * bdu[k];
    }
    return out;
}

TransportResult transport_explicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid,
                                   double dt, const ModelParams& p, const TransportOptions& opt) {
    const int n = cells.n_cells();
    const int n_mom = cells.n_moments();
    const int n_phys = n_mom + 2;
    const double dx = grid.dx();

    std::vector<FieldReconstruction> rec;
    rec.reserve(static_cast<std::size_t>(n_phys));
    for (int c = 0; c < n_phys; ++c)
        rec.push_back(
            reconstruct_field(cells, samples, dx, opt.order, opt.pairing, [c](const State& s) { return s[c]; }));

    auto face_state = [&](int k, bool minus) {
        State s(n_mom);
        for (int c = 0; c < n_phys; ++c)
            s[c] = minus ? rec[static_cast<std::size_t>(c)].face_minus(k, dx)
                         : rec[static_cast<std::size_t>(c)].face_plus(k, dx);
        if (!(s.h() > 0.0)) {
            const int cell = minus ? std::max(k - 1, 0) : std::min(k, n - 1);
            throw PositivityError(cell, "non-positive reconstructed height in cell " + std::to_string(cell));
        }
        s.set_hpi(0.5 * p.g * s.h() * s.h() * s.h());
        return s;
    };

    std::vector<FluxVector> flux;
    std::vector<Fluctuations> fluct;
    flux.reserve(static_cast<std::size_t>(n) + 1);
    fluct.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const auto iface = make_interface(face_state(k, true), face_state(k, false), p, opt.wave_speeds);
        flux.push_back(hll_flux(iface));
        fluct.push_back(nonconservative_fluctuations(iface));
    }

    const double lambda = dt / dx;
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto& smp = samples[k];
        State u = cells.get(i);
        const State right = face_state(i + 1, true);
        const State left = face_state(i, false);
        // midpoint rule for the in-cell non-conservative product minus its steady counterpart
        const FluxVector inner = apply_B(u, (right - smp.right_face) - (left - smp.left_face));
        FluxVector total = flux[k + 1] - flux_transport(smp.right_face) - flux[k] + flux_transport(smp.left_face);
        total += fluct[k + 1].minus;
        total += fluct[k].plus;
        total += inner;
        for (int c = 0; c < n_phys; ++c) u[c] -= lambda * total[c];
        if (!(u.h() > 0.0)) throw PositivityError(i, "non-positive height after transport in cell " + std::to_string(i));
        cells.set(i, u);
    }
    return {dt * (flux.front()[0] - flux.back()[0])};
}

}  // namespace swlme
