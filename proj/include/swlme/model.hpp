#pragma once

// Shallow Water Linearized Moment Equations in relaxed form.
//
// Per-cell conserved layout (N+3 components):
//   [0]        h
//   [1 + j]    h u_j,  j = 0..N
//   [N + 2]    h pi    (relaxed pressure momentum)

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace swlme {

inline constexpr int kMaxMoments = 16;
inline constexpr int kMaxComponents = kMaxMoments + 3;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ModelParams {
    double g = 9.812;
    int n_moments = 8;
    double relaxation_speed = 1.0;  // a

    void validate() const;
};

/// Fixed-capacity component vector shared by State and FluxVector.
class Components {
public:
    Components() = default;
    explicit Components(int n_moments);

    int n_moments() const { return n_moments_; }
    int size() const { return n_moments_ + 3; }

    double& operator[](int k) { return v_[static_cast<std::size_t>(k)]; }
    double operator[](int k) const { return v_[static_cast<std::size_t>(k)]; }

    std::span<double> values() { return {v_.data(), static_cast<std::size_t>(size())}; }
    std::span<const double> values() const { return {v_.data(), static_cast<std::size_t>(size())}; }

    static int moment_slot(int j) { return 1 + j; }
    int pressure_slot() const { return n_moments_ + 2; }

protected:
    int n_moments_ = 0;
    std::array<double, kMaxComponents> v_{};
};

class FluxVector : public Components {
public:
    using Components::Components;

    FluxVector& operator+=(const FluxVector& o);
    FluxVector& operator-=(const FluxVector& o);
    FluxVector& operator*=(double s);
    friend FluxVector operator+(FluxVector a, const FluxVector& b) { return a += b; }
    friend FluxVector operator-(FluxVector a, const FluxVector& b) { return a -= b; }
    friend FluxVector operator*(double s, FluxVector a) { return a *= s; }
};

class State : public Components {
public:
    using Components::Components;

    double h() const { return v_[0]; }
    double q(int j) const { return v_[static_cast<std::size_t>(1 + j)]; }
    double hpi() const { return v_[static_cast<std::size_t>(n_moments_ + 2)]; }

    void set_h(double h) { v_[0] = h; }
    void set_q(int j, double q) { v_[static_cast<std::size_t>(1 + j)] = q; }
    void set_hpi(double hpi) { v_[static_cast<std::size_t>(n_moments_ + 2)] = hpi; }

    double u(int j) const { return q(j) / h(); }
    double pi() const { return hpi() / h(); }

    /// Build from primitive variables; u.size() must be N+1.
    static State from_primitive(double h, std::span<const double> u, double pi);

    FluxVector operator-(const State& o) const;
    State& operator+=(const FluxVector& d);
};

// Scaled Legendre basis phi_i(zeta) = (1/i!) d^i/dzeta^i (zeta - zeta^2)^i.
double basis_phi(int i, double zeta);
/// Monomial coefficients c_0..c_i of phi_i.
std::span<const double> basis_coefficients(int i);

double velocity_profile(const State& s, double zeta);

FluxVector flux_transport(const State& s);
FluxVector flux_pressure(const State& s, const ModelParams& p);
/// B(U) * jump with B = -diag(0, 0, u0, ..., u0, 0).
FluxVector apply_B(const State& s, const FluxVector& jump);
FluxVector source_S(const State& s, const ModelParams& p);

struct WaveSpeeds {
    double min;
    double max;
};

/// Radicands of the extreme eigenvalues: full = gh + sum 3u_i^2/(2i+1), transport drops gh.
double radicand_full(const State& s, const ModelParams& p);
double radicand_transport(const State& s);

WaveSpeeds eigenvalues_full(const State& s, const ModelParams& p);
WaveSpeeds eigenvalues_transport(const State& s);

double froude(const State& s, const ModelParams& p);
/// Diagnostic only; |u0| / sqrt(gh + sum 3u_i^2/(2i+1)).
double froude_extended(const State& s, const ModelParams& p);

/// a = max_i h_i sqrt(g h_i).
double relaxation_speed(std::span<const State> states, const ModelParams& p);

struct RiemannInvariants {
    double forward;   // pi + a u0
    double backward;  // pi - a u0
};

RiemannInvariants to_riemann_invariants(double pi, double u0, double a);
std::pair<double, double> from_riemann_invariants(const RiemannInvariants& w, double a);

}  // namespace swlme
