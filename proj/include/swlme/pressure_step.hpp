#pragma once

// Acoustic (pressure) subsystem
//   d_t U + d_x F_P(U) + S(U) d_x z = 0
// advanced with h frozen, written as two transport equations for the
// Riemann invariants w_fwd = pi + a u0 and w_bwd = pi - a u0 moving with
// speeds +a/h and -a/h. Only h u0 and h pi change.

#include <span>
#include <vector>

#include "swlme/banded.hpp"
#include "swlme/field.hpp"
#include "swlme/reconstruction.hpp"

namespace swlme {

enum class PressureMode { explicit_euler, implicit_euler };

struct InvariantField {
    std::vector<double> w_fwd;
    std::vector<double> w_bwd;
};

InvariantField invariants_of(const CellField& cells, double a);

/// Linear systems for the time fluctuations delta = w(t0 + dt) - w(t0) of both
/// invariants. An explicit step is delta = rhs; an implicit one solves A delta = rhs.
struct PressureSystem {
    InvariantField w0;
    BandedSystem fwd;
    BandedSystem bwd;
};

PressureSystem assemble_pressure_system(const CellField& cells, std::span<const ProfileSamples> samples,
                                        const Grid& grid, double dt, int order, const ModelParams& p,
                                        LimiterPairing pairing = LimiterPairing::as_printed);

void pressure_explicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid, double dt,
                       int order, const ModelParams& p, LimiterPairing pairing = LimiterPairing::as_printed);

void pressure_implicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid, double dt,
                       int order, const ModelParams& p, LimiterPairing pairing = LimiterPairing::as_printed);

inline void pressure_step(PressureMode mode, CellField& cells, std::span<const ProfileSamples> samples,
                          const Grid& grid, double dt, int order, const ModelParams& p,
                          LimiterPairing pairing = LimiterPairing::as_printed) {
    if (mode == PressureMode::explicit_euler) pressure_explicit(cells, samples, grid, dt, order, p, pairing);
    else pressure_implicit(cells, samples, grid, dt, order, p, pairing);
}

}  // namespace swlme
