#include "swlme/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace swlme {

void ModelParams::validate() const {
    if (!(g > 0.0)) throw DomainError("gravity must be positive");
    if (n_moments < 0 || n_moments > kMaxMoments)
        throw DomainError("moment count out of range [0, " + std::to_string(kMaxMoments) + "]");
    if (!(relaxation_speed > 0.0)) throw DomainError("relaxation speed must be positive");
}

Components::Components(int n_moments) : n_moments_(n_moments) {
    if (n_moments < 0 || n_moments > kMaxMoments) throw DomainError("moment count out of range");
}

FluxVector& FluxVector::operator+=(const FluxVector& o) {
    for (int k = 0; k < size(); ++k) v_[k] += o.v_[k];
    return *this;
}

FluxVector& FluxVector::operator-=(const FluxVector& o) {
    for (int k = 0; k < size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

FluxVector& FluxVector::operator*=(double s) {
    for (int k = 0; k < size(); ++k) v_[k] *= s;
    return *this;
}

State State::from_primitive(double h, std::span<const double> u, double pi) {
    if (u.empty()) throw DomainError("at least u0 is required");
    State s(static_cast<int>(u.size()) - 1);
    s.set_h(h);
    for (std::size_t j = 0; j < u.size(); ++j) s.set_q(static_cast<int>(j), h * u[j]);
    s.set_hpi(h * pi);
    return s;
}

FluxVector State::operator-(const State& o) const {
    FluxVector d(n_moments_);
    for (int k = 0; k < size(); ++k) d[k] = v_[k] - o.v_[k];
    return d;
}

State& State::operator+=(const FluxVector& d) {
    for (int k = 0; k < size(); ++k) v_[k] += d[k];
    return *this;
}

namespace {

// c_k = (-1)^k C(i,k) C(i+k,k), all integers.
std::vector<std::vector<double>> build_basis_table() {
    auto binom = [](std::int64_t n, std::int64_t k) {
        std::int64_t r = 1;
        for (std::int64_t m = 1; m <= k; ++m) r = r * (n - k + m) / m;
        return r;
    };
    std::vector<std::vector<double>> table(kMaxMoments + 1);
    for (int i = 1; i <= kMaxMoments; ++i) {
        auto& c = table[static_cast<std::size_t>(i)];
        c.resize(static_cast<std::size_t>(i) + 1);
        for (int k = 0; k <= i; ++k) {
            const std::int64_t mag = binom(i, k) * binom(i + k, k);
            c[static_cast<std::size_t>(k)] = static_cast<double>(k % 2 == 0 ? mag : -mag);
        }
    }
    return table;
}

const std::vector<std::vector<double>>& basis_table() {
    static const auto table = build_basis_table();
    return table;
}

void require_positive_height(const State& s) {
    if (!(s.h() > 0.0)) throw DomainError("non-positive water height");
}

}  // namespace

std::span<const double> basis_coefficients(int i) {
    if (i < 1 || i > kMaxMoments) throw DomainError("basis index out of range");
    return basis_table()[static_cast<std::size_t>(i)];
}

double basis_phi(int i, double zeta) {
    if (i < 1) throw DomainError("basis index must be >= 1");
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw DomainError("zeta outside [0,1]");
    const auto c = basis_coefficients(i);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * zeta + *it;
    return acc;
}

double velocity_profile(const State& s, double zeta) {
    require_positive_height(s);
    double u = s.u(0);
    for (int i = 1; i <= s.n_moments(); ++i) u += s.u(i) * basis_phi(i, zeta);
    return u;
}

FluxVector flux_transport(const State& s) {
    require_positive_height(s);
    const int n = s.n_moments();
    FluxVector f(n);
    const double u0 = s.u(0);
    f[0] = s.q(0);
    double mom = s.q(0) * u0;
    for (int i = 1; i <= n; ++i) {
        mom += s.q(i) * s.u(i) / (2.0 * i + 1.0);
        f[Components::moment_slot(i)] = 2.0 * s.q(i) * u0;
    }
    f[1] = mom;
    return f;
}

FluxVector flux_pressure(const State& s, const ModelParams& p) {
    require_positive_height(s);
    FluxVector f(s.n_moments());
    f[1] = s.pi();
    f[f.pressure_slot()] = p.relaxation_speed * p.relaxation_speed * s.u(0);
    return f;
}

FluxVector apply_B(const State& s, const FluxVector& jump) {
    require_positive_height(s);
    FluxVector r(s.n_moments());
    const double u0 = s.u(0);
    for (int i = 1; i <= s.n_moments(); ++i) {
        const int k = Components::moment_slot(i);
        r[k] = -u0 * jump[k];
    }
    return r;
}

FluxVector source_S(const State& s, const ModelParams& p) {
    FluxVector r(s.n_moments());
    r[1] = p.g * s.h();
    return r;
}

double radicand_transport(const State& s) {
    require_positive_height(s);
    double acc = 0.0;
    for (int i = 1; i <= s.n_moments(); ++i) {
        const double ui = s.u(i);
        acc += 3.0 * ui * ui / (2.0 * i + 1.0);
    }
    return acc;
}

double radicand_full(const State& s, const ModelParams& p) {
    return p.g * s.h() + radicand_transport(s);
}

WaveSpeeds eigenvalues_full(const State& s, const ModelParams& p) {
    const double c = std::sqrt(radicand_full(s, p));
    const double u0 = s.u(0);
    return {u0 - c, u0 + c};
}

WaveSpeeds eigenvalues_transport(const State& s) {
    const double c = std::sqrt(radicand_transport(s));
    const double u0 = s.u(0);
    return {u0 - c, u0 + c};
}

double froude(const State& s, const ModelParams& p) {
    require_positive_height(s);
    return std::abs(s.u(0)) / std::sqrt(p.g * s.h());
}

double froude_extended(const State& s, const ModelParams& p) {
    return std::abs(s.u(0)) / std::sqrt(radicand_full(s, p));
}

double relaxation_speed(std::span<const State> states, const ModelParams& p) {
    if (states.empty()) throw DomainError("relaxation speed of an empty state set");
    double a = 0.0;
    for (const auto& s : states) {
        require_positive_height(s);
        a = std::max(a, s.h() * std::sqrt(p.g * s.h()));
    }
    return a;
}

RiemannInvariants to_riemann_invariants(double pi, double u0, double a) {
    if (!(a > 0.0)) throw DomainError("relaxation speed must be positive");
    return {pi + a * u0, pi - a * u0};
}

std::pair<double, double> from_riemann_invariants(const RiemannInvariants& w, double a) {
    if (!(a > 0.0)) throw DomainError("relaxation speed must be positive");
    return {0.5 * (w.forward + w.backward), (w.forward - w.backward) / (2.0 * a)};
}

}  // namespace swlme
