#pragma once

#include <vector>

namespace swlme {

/// Uniform 1D mesh over [x_left, x_right].
class Grid {
public:
    static constexpr int n_ghost = 2;

    Grid(double x_left, double x_right, int n_cells);

    double x_left() const { return x_left_; }
    double x_right() const { return x_right_; }
    int n_cells() const { return n_cells_; }
    double dx() const { return dx_; }

    /// Center of cell i; i may index ghost cells (i < 0 or i >= n_cells).
    double center(int i) const { return x_left_ + (i + 0.5) * dx_; }
    /// Interface x_{i-1/2}; interface(n_cells) is the right boundary.
    double interface(int i) const { return x_left_ + i * dx_; }

    std::vector<double> centers() const;
    std::vector<double> interfaces() const;

    bool same_as(const Grid& o) const;

private:
    double x_left_;
    double x_right_;
    int n_cells_;
    double dx_;
};

struct TopographySample {
    double z;
    double dzdx;
};

class Topography {
public:
    enum class Kind { flat, parabolic_bump, cosine_bump, tabulated };

    static Topography flat(double level = 0.0);
    /// 2 - x^2 on [-0.5, 0.5], 1.75 elsewhere.
    static Topography parabolic_bump();
    /// (cos((x + 1/2) 5 pi) + 1) / 4 on [1.3, 1.7], 0 elsewhere.
    static Topography cosine_bump();
    /// Piecewise linear through (x, z) nodes; x must be strictly increasing.
    static Topography tabulated(std::vector<double> x, std::vector<double> z);

    Kind kind() const { return kind_; }
    TopographySample eval(double x) const;
    double z(double x) const { return eval(x).z; }

private:
    explicit Topography(Kind k) : kind_(k) {}

    Kind kind_;
    double level_ = 0.0;
    std::vector<double> xs_;
    std::vector<double> zs_;
};

inline TopographySample topo_eval(const Topography& t, double x) { return t.eval(x); }

}  // namespace swlme
