#pragma once

#include <vector>

namespace swlme {

/// Square banded linear system with kl sub- and ku super-diagonals.
class BandedSystem {
public:
    BandedSystem(int n, int kl, int ku);

    int size() const { return n_; }
    int lower() const { return kl_; }
    int upper() const { return ku_; }

    /// Accumulates into A(row, col); col must lie inside the band.
    void add(int row, int col, double value);
    double coeff(int row, int col) const;
    std::vector<double>& rhs() { return rhs_; }
    const std::vector<double>& rhs() const { return rhs_; }

    /// min_i (|a_ii| - sum_{j != i} |a_ij|).
    double diagonal_margin() const;

    /// Direct solve. Bidiagonal systems use a substitution sweep; wider bands
    /// go through LAPACK's banded LU with partial pivoting.
    std::vector<double> solve() const;

private:
    double& slot(int row, int col);
    double slot(int row, int col) const;

    int n_, kl_, ku_;
    std::vector<double> band_;  // row-major, width kl + ku + 1
    std::vector<double> rhs_;
};

}  // namespace swlme
