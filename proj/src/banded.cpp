#include "swlme/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

namespace swlme {

BandedSystem::BandedSystem(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku),
      band_(static_cast<std::size_t>(n) * static_cast<std::size_t>(kl + ku + 1), 0.0),
      rhs_(static_cast<std::size_t>(n), 0.0) {
    if (n <= 0 || kl < 0 || ku < 0) throw std::invalid_argument("invalid banded system shape");
}

double& BandedSystem::slot(int row, int col) {
    return band_[static_cast<std::size_t>(row * (kl_ + ku_ + 1) + (col - row + kl_))];
}

double BandedSystem::slot(int row, int col) const {
    return band_[static_cast<std::size_t>(row * (kl_ + ku_ + 1) + (col - row + kl_))];
}

void BandedSystem::add(int row, int col, double value) {
    if (row < 0 || row >= n_ || col < 0 || col >= n_ || col - row > ku_ || row - col > kl_)
        throw std::out_of_range("banded entry (" + std::to_string(row) + "," + std::to_string(col) +
                                ") outside the band");
    slot(row, col) += value;
}

double BandedSystem::coeff(int row, int col) const {
    if (col - row > ku_ || row - col > kl_ || col < 0 || col >= n_) return 0.0;
    return slot(row, col);
}

double BandedSystem::diagonal_margin() const {
    double margin = INFINITY;
    for (int i = 0; i < n_; ++i) {
        double off = 0.0;
        for (int j = std::max(0, i - kl_); j <= std::min(n_ - 1, i + ku_); ++j)
            if (j != i) off += std::abs(slot(i, j));
        margin = std::min(margin, std::abs(slot(i, i)) - off);
    }
    return margin;
}

std::vector<double> BandedSystem::solve() const {
    std::vector<double> x = rhs_;
    if (kl_ <= 1 && ku_ == 0) {
        for (int i = 0; i < n_; ++i) {
            const double d = slot(i, i);
            if (d == 0.0) throw std::runtime_error("singular banded system");
            if (kl_ == 1 && i > 0) x[i] -= slot(i, i - 1) * x[i - 1];
            x[i] /= d;
        }
        return x;
    }
    if (kl_ == 0 && ku_ == 1) {
        for (int i = n_ - 1; i >= 0; --i) {
            const double d = slot(i, i);
            if (d == 0.0) throw std::runtime_error("singular banded system");
            if (i + 1 < n_) x[i] -= slot(i, i + 1) * x[i + 1];
            x[i] /= d;
        }
        return x;
    }

    // LAPACK band storage (column-major) with kl extra rows for pivoting fill-in.
    const int ldab = 2 * kl_ + ku_ + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i)
        for (int j = std::max(0, i - kl_); j <= std::min(n_ - 1, i + ku_); ++j)
            ab[static_cast<std::size_t>(j * ldab + (kl_ + ku_ + i - j))] = slot(i, j);
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(n_));
    const lapack_int info =
        LAPACKE_dgbsv(LAPACK_COL_MAJOR, n_, kl_, ku_, 1, ab.data(), ldab, ipiv.data(), x.data(), n_);
    if (info != 0) throw std::runtime_error("banded solve failed (info=" + std::to_string(info) + ")");
    return x;
}

}  // namespace swlme
