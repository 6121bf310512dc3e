#include "swlme/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swlme/model.hpp"

namespace swlme {

Grid::Grid(double x_left, double x_right, int n_cells)
    : x_left_(x_left), x_right_(x_right), n_cells_(n_cells), dx_(0.0) {
    if (n_cells <= 0) throw DomainError("grid needs at least one cell");
    if (!(x_right > x_left)) throw DomainError("grid bounds must satisfy x_left < x_right");
    dx_ = (x_right - x_left) / n_cells;
}

std::vector<double> Grid::centers() const {
    std::vector<double> c(static_cast<std::size_t>(n_cells_));
    for (int i = 0; i < n_cells_; ++i) c[static_cast<std::size_t>(i)] = center(i);
    return c;
}

std::vector<double> Grid::interfaces() const {
    std::vector<double> f(static_cast<std::size_t>(n_cells_) + 1);
    for (int i = 0; i <= n_cells_; ++i) f[static_cast<std::size_t>(i)] = interface(i);
    return f;
}

bool Grid::same_as(const Grid& o) const {
    return n_cells_ == o.n_cells_ && x_left_ == o.x_left_ && x_right_ == o.x_right_;
}

Topography Topography::flat(double level) {
    Topography t(Kind::flat);
    t.level_ = level;
    return t;
}

Topography Topography::parabolic_bump() { return Topography(Kind::parabolic_bump); }

Topography Topography::cosine_bump() { return Topography(Kind::cosine_bump); }

Topography Topography::tabulated(std::vector<double> x, std::vector<double> z) {
    if (x.size() != z.size() || x.size() < 2)
        throw DomainError("tabulated topography needs >= 2 matching nodes");
    if (!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end())
        throw DomainError("tabulated topography abscissae must be strictly increasing");
    Topography t(Kind::tabulated);
    t.xs_ = std::move(x);
    t.zs_ = std::move(z);
    return t;
}

TopographySample Topography::eval(double x) const {
    switch (kind_) {
        case Kind::flat:
            return {level_, 0.0};
        case Kind::parabolic_bump:
            if (x >= -0.5 && x <= 0.5) return {2.0 - x * x, -2.0 * x};
            return {1.75, 0.0};
        case Kind::cosine_bump:
            if (x >= 1.3 && x <= 1.7) {
                const double k = 5.0 * std::numbers::pi;
                const double arg = (x + 0.5) * k;
                return {0.25 * (std::cos(arg) + 1.0), -0.25 * k * std::sin(arg)};
            }
            return {0.0, 0.0};
        case Kind::tabulated: {
            if (x <= xs_.front()) return {zs_.front(), 0.0};
            if (x >= xs_.back()) return {zs_.back(), 0.0};
            const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
            const auto k = static_cast<std::size_t>(it - xs_.begin());
            const double slope = (zs_[k] - zs_[k - 1]) / (xs_[k] - xs_[k - 1]);
            return {zs_[k - 1] + slope * (x - xs_[k - 1]), slope};
        }
    }
    throw std::logic_error("unknown topography kind");
}

}  // namespace swlme
