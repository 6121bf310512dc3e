#include <doctest.h>

#include <cmath>
#include <random>

#include "swlme/reconstruction.hpp"

using namespace swlme;

namespace {

// Stencil sampled from a scalar profile X^e plus a fluctuation field f.
template <class Steady, class Fluct>
ScalarStencil sample(Steady&& xe, Fluct&& f, double xi, double dx) {
    ScalarStencil st;
    for (int k = 0; k < 3; ++k) {
        const double x = xi + (k - 1) * dx;
        st.value[static_cast<std::size_t>(k)] = xe(x) + f(x);
        st.steady_nbr[static_cast<std::size_t>(k)] = xe(x);
    }
    st.steady_face = {xe(xi - 0.5 * dx), xe(xi + 0.5 * dx)};
    return st;
}

}  // namespace

TEST_CASE("first-order reconstruction") {
    auto xe = [](double x) { return x * x; };
    CHECK(reconstruct_o1(xe, 1.0, 1.5, 1.25) == doctest::Approx(2.0625).epsilon(1e-15));
    // steady data reproduces the profile
    CHECK(reconstruct_o1(xe, 1.0, xe(1.0), 1.3) == doctest::Approx(xe(1.3)).epsilon(1e-15));
    // constant profile gives piecewise constant values
    CHECK(reconstruct_o1([](double) { return 4.0; }, 0.0, 2.5, 0.4) == 2.5);
}

TEST_CASE("limiter weights") {
    auto w = limiter_weights(1.0, 1.0);
    CHECK(w.minus == 0.5);
    CHECK(w.plus == 0.5);
    w = limiter_weights(0.0, 0.0);
    CHECK(w.minus == 0.0);
    CHECK(w.plus == 0.0);
    w = limiter_weights(3.0, 1.0);
    CHECK(w.minus == 0.75);
    CHECK(w.plus == 0.25);
    w = limiter_weights(-3.0, 1.0);
    CHECK(w.minus == 0.75);
    CHECK(w.plus == 0.25);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int n = 0; n < 200; ++n) {
        const auto v = limiter_weights(d(rng), d(rng));
        CHECK(v.minus >= 0.0);
        CHECK(v.plus >= 0.0);
        CHECK(v.minus + v.plus == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("slope of the fluctuations, weights paired as printed") {
    CHECK(slope_fluctuation({0.0, 0.0, 0.0}, 1.0) == 0.0);
    CHECK(slope_fluctuation({0.0, 1.0, 2.0}, 1.0) == 1.0);
    CHECK(slope_fluctuation({0.0, 1.0, 1.0}, 1.0) == 0.0);
    CHECK(slope_fluctuation({0.0, 1.0, 2.0}, 0.5) == 2.0);
    // The printed pairing is the harmonic mean 2 d- d+ / (d- + d+) for same-sign differences
    // and vanishes for opposite signs.
    CHECK(slope_fluctuation({0.0, 3.0, 4.0}, 1.0) == doctest::Approx(2.0 * 3.0 * 1.0 / 4.0).epsilon(1e-15));
    CHECK(slope_fluctuation({0.0, 3.0, 1.0}, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("slope of the fluctuations, own-side pairing") {
    constexpr auto own = LimiterPairing::own_side;
    CHECK(slope_fluctuation({0.0, 1.0, 2.0}, 1.0, own) == 1.0);
    // weights (1, 0) on d- = 1, d+ = 0: the backward difference survives
    CHECK(slope_fluctuation({0.0, 1.0, 1.0}, 1.0, own) == 1.0);
    CHECK(slope_fluctuation({0.0, 3.0, 4.0}, 1.0, own) == doctest::Approx((9.0 + 1.0) / 4.0).epsilon(1e-15));
}

TEST_CASE("frozen weights are reused for the time slope") {
    ScalarStencil st{{0.0, 3.0, 4.0}, {0.0, 0.0, 0.0}, {0.0, 0.0}};
    const auto r = build_cell_reconstruction(st, 1.0, 2, LimiterPairing::as_printed);
    CHECK(r.weights.minus == 0.75);
    CHECK(r.weights.plus == 0.25);
    // new fluctuations of opposite shape would flip the weights if recomputed
    const double frozen = time_slope(r, {0.0, 1.0, 4.0}, 1.0);
    CHECK(frozen == doctest::Approx(0.25 * 1.0 + 0.75 * 3.0).epsilon(1e-15));
    CHECK(frozen == slope_fluctuation({0.0, 1.0, 4.0}, r.weights, 1.0));
}

TEST_CASE("steady data is reproduced exactly by both orders") {
    auto xe = [](double x) { return std::exp(std::sin(3.0 * x)) + 2.0; };
    auto zero = [](double) { return 0.0; };
    const double dx = 0.05;
    for (double xi : {0.1, 0.77, 1.3}) {
        for (int order : {1, 2}) {
            const auto st = sample(xe, zero, xi, dx);
            const auto r = build_cell_reconstruction(st, dx, order, LimiterPairing::as_printed);
            CHECK(r.slope_t0 == 0.0);
            CHECK(r.left_face(dx) == doctest::Approx(xe(xi - 0.5 * dx)).epsilon(1e-14));
            CHECK(r.right_face(dx) == doctest::Approx(xe(xi + 0.5 * dx)).epsilon(1e-14));
            CHECK(reconstruct_o2(r, xe, xi, xi + 0.2 * dx, st.value[1]) ==
                  doctest::Approx(xe(xi + 0.2 * dx)).epsilon(1e-14));
        }
    }
}

TEST_CASE("second-order reconstruction of linear data over a constant profile") {
    auto xe = [](double) { return 1.0; };
    auto lin = [](double x) { return x; };
    const double dx = 0.1, xi = 0.45;
    const auto st = sample(xe, lin, xi, dx);
    const auto r = build_cell_reconstruction(st, dx, 2, LimiterPairing::as_printed);
    CHECK(r.slope_t0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.right_face(dx) == doctest::Approx(1.0 + xi + 0.5 * dx).epsilon(1e-14));
    // the reconstruction at the center returns the cell value
    CHECK(reconstruct_o2(r, 1.0, 0.0, st.value[1]) == st.value[1]);
}

TEST_CASE("second-order interface error decays at second order on smooth data") {
    auto xe = [](double) { return 0.0; };
    auto f = [](double x) { return std::sin(2.0 * x) + 0.3 * x; };
    auto err = [&](double dx) {
        const double xi = 0.4;
        const auto st = sample(xe, f, xi, dx);
        const auto r = build_cell_reconstruction(st, dx, 2, LimiterPairing::as_printed);
        // cell values are point values here, so the face value approximates f at the face
        return std::abs(r.right_face(dx) - f(xi + 0.5 * dx));
    };
    const double e1 = err(0.04), e2 = err(0.02), e3 = err(0.01);
    CHECK(std::log2(e1 / e2) > 1.8);
    CHECK(std::log2(e2 / e3) > 1.8);
}
