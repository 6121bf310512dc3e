#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "swlme/banded.hpp"

using namespace swlme;

namespace {

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

void check_against_dense(int n, int kl, int ku, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    BandedSystem sys(n, kl, ku);
    std::vector<std::vector<double>> dense(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) {
            const double v = d(rng) + (i == j ? 4.0 : 0.0);
            sys.add(i, j, v);
            dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
        sys.rhs()[static_cast<std::size_t>(i)] = d(rng);
    }
    const auto x = sys.solve();
    const auto ref = dense_solve(dense, sys.rhs());
    for (int i = 0; i < n; ++i) CHECK(x[static_cast<std::size_t>(i)] == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

}  // namespace

TEST_CASE("banded solves agree with dense elimination") {
    SUBCASE("lower bidiagonal sweep") { check_against_dense(17, 1, 0, 1); }
    SUBCASE("upper bidiagonal sweep") { check_against_dense(17, 0, 1, 2); }
    SUBCASE("diagonal") { check_against_dense(9, 0, 0, 3); }
    SUBCASE("band (2, 1)") { check_against_dense(23, 2, 1, 4); }
    SUBCASE("band (1, 2)") { check_against_dense(23, 1, 2, 5); }
    SUBCASE("tridiagonal") { check_against_dense(30, 1, 1, 6); }
}

TEST_CASE("coefficient access and accumulation") {
    BandedSystem sys(4, 1, 1);
    sys.add(1, 0, 2.0);
    sys.add(1, 0, 0.5);
    sys.add(2, 3, -1.0);
    CHECK(sys.coeff(1, 0) == 2.5);
    CHECK(sys.coeff(2, 3) == -1.0);
    CHECK(sys.coeff(0, 3) == 0.0);
    CHECK_THROWS(sys.add(0, 3, 1.0));
}

TEST_CASE("diagonal margin") {
    BandedSystem sys(3, 1, 0);
    const double mu = 0.7;
    for (int i = 0; i < 3; ++i) {
        sys.add(i, i, 1.0 + mu);
        if (i > 0) sys.add(i, i - 1, -mu);
    }
    CHECK(sys.diagonal_margin() == doctest::Approx(1.0).epsilon(1e-15));
}
