#pragma once

// Material (transport) subsystem
//   d_t U + d_x F(U) + B(U) d_x U = 0
// advanced explicitly with an HLL flux and well-balanced flux differences.

#include <span>
#include <stdexcept>
#include <string>

#include "swlme/field.hpp"
#include "swlme/reconstruction.hpp"

namespace swlme {

enum class WaveSpeedMode { full, transport };

class PositivityError : public std::runtime_error {
public:
    PositivityError(int cell, const std::string& what) : std::runtime_error(what), cell_(cell) {}
    int cell() const { return cell_; }

private:
    int cell_;
};

struct InterfaceData {
    State left;
    State right;
    double s_left = 0.0;
    double s_right = 0.0;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
};

struct HllCoefficients {
    double alpha0;
    double alpha1;
};

/// alpha0 = (S^R|S^L| - S^L|S^R|)/(S^R - S^L), alpha1 = (|S^R| - |S^L|)/(S^R - S^L).
/// Equal speeds: both zero -> central (0, 0); otherwise the limit, i.e. upwind.
HllCoefficients hll_coefficients(double s_left, double s_right);

WaveSpeeds wave_speeds(const State& left, const State& right, const ModelParams& p,
                       WaveSpeedMode mode = WaveSpeedMode::full);

InterfaceData make_interface(const State& left, const State& right, const ModelParams& p,
                             WaveSpeedMode mode = WaveSpeedMode::full);

FluxVector hll_flux(const InterfaceData& iface);

struct Fluctuations {
    FluxVector minus;  // B_{i+1/2-}, charged to the left cell
    FluxVector plus;   // B_{i+1/2+}, charged to the right cell
};

Fluctuations nonconservative_fluctuations(const InterfaceData& iface);

struct TransportOptions {
    int order = 1;
    LimiterPairing pairing = LimiterPairing::as_printed;
    WaveSpeedMode wave_speeds = WaveSpeedMode::transport;
};

struct TransportResult {
    double mass_inflow = 0.0;  // dt * (F_h at left boundary - F_h at right boundary)
};

TransportResult transport_explicit(CellField& cells, std::span<const ProfileSamples> samples, const Grid& grid,
                                   double dt, const ModelParams& p, const TransportOptions& opt = {});

}  // namespace swlme
