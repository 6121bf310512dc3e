#include "swlme/field.hpp"

#include <algorithm>

namespace swlme {

CellField::CellField(int n_cells, int n_moments)
    : n_cells_(n_cells), n_moments_(n_moments),
      data_(static_cast<std::size_t>(n_cells) * static_cast<std::size_t>(n_moments + 3), 0.0) {
    if (n_cells < 0) throw DomainError("negative cell count");
    if (n_moments < 0 || n_moments > kMaxMoments) throw DomainError("moment count out of range");
}

State CellField::get(int i) const {
    State s(n_moments_);
    const auto base = data_.begin() + static_cast<std::ptrdiff_t>(i) * stride();
    std::copy(base, base + stride(), s.values().begin());
    return s;
}

void CellField::set(int i, const State& s) {
    if (s.n_moments() != n_moments_) throw DomainError("state moment count does not match field");
    std::copy(s.values().begin(), s.values().end(), data_.begin() + static_cast<std::ptrdiff_t>(i) * stride());
}

std::vector<State> CellField::states() const {
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(n_cells_));
    for (int i = 0; i < n_cells_; ++i) out.push_back(get(i));
    return out;
}

void CellField::reset_pressure(double g) {
    for (int i = 0; i < n_cells_; ++i) {
        const double h = at(i, 0);
        at(i, n_moments_ + 2) = 0.5 * g * h * h * h;
    }
}

namespace {

ProfileSamples sample_with(const SteadyProfile& prof, const Grid& grid, int i, const Topography& topo,
                           const ModelParams& p) {
    ProfileSamples s;
    s.profile = prof;
    auto eval = [&](double x) {
        if (prof.branch == Branch::trivial || x == prof.x_ref) return steady_eval(prof, x, topo, p);
        const auto root = solve_steady_height(prof, topo.z(x), p, prof.h_ref);
        s.newton_iterations = std::max(s.newton_iterations, root.iterations);
        return steady_state_at_height(prof, root.h, p);
    };
    s.center = eval(grid.center(i));
    s.left_face = eval(grid.interface(i));
    s.right_face = eval(grid.interface(i + 1));
    s.left_nbr = eval(grid.center(i - 1));
    s.right_nbr = eval(grid.center(i + 1));
    return s;
}

}  // namespace

std::vector<ProfileSamples> sample_profiles(const CellField& cells, const Grid& grid, const Topography& topo,
                                            const ModelParams& p) {
    std::vector<ProfileSamples> out;
    out.reserve(static_cast<std::size_t>(cells.n_cells()));
    for (int i = 0; i < cells.n_cells(); ++i) {
        const State s = cells.get(i);
        const double xc = grid.center(i);
        try {
            out.push_back(sample_with(steady_constants(s, xc, topo.z(xc), p), grid, i, topo, p));
        } catch (const NoSteadyRoot&) {
            out.push_back(sample_with(trivial_profile(s, xc), grid, i, topo, p));
            out.back().fell_back = true;
        }
    }
    return out;
}

}  // namespace swlme
