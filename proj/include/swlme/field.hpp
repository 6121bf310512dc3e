#pragma once

#include <span>
#include <vector>

#include "swlme/grid.hpp"
#include "swlme/model.hpp"
#include "swlme/steady_state.hpp"

namespace swlme {

/// Interior cell states stored contiguously, N+3 reals per cell.
class CellField {
public:
    CellField() = default;
    CellField(int n_cells, int n_moments);

    int n_cells() const { return n_cells_; }
    int n_moments() const { return n_moments_; }
    int stride() const { return n_moments_ + 3; }

    State get(int i) const;
    void set(int i, const State& s);

    double& at(int i, int k) { return data_[static_cast<std::size_t>(i * stride() + k)]; }
    double at(int i, int k) const { return data_[static_cast<std::size_t>(i * stride() + k)]; }
    double h(int i) const { return at(i, 0); }

    std::vector<State> states() const;
    std::span<const double> raw() const { return data_; }

    /// Sets h pi = h * g h^2 / 2 in every cell.
    void reset_pressure(double g);

    bool operator==(const CellField& o) const = default;

private:
    int n_cells_ = 0;
    int n_moments_ = 0;
    std::vector<double> data_;
};

/// Steady profile of cell i sampled at the points its reconstruction needs.
struct ProfileSamples {
    SteadyProfile profile;
    State left_nbr;     // x_{i-1}
    State left_face;    // x_{i-1/2}
    State center;       // x_i
    State right_face;   // x_{i+1/2}
    State right_nbr;    // x_{i+1}
    int newton_iterations = 0;
    bool fell_back = false;
};

/// Anchors a profile in every cell and samples it. Cells whose branch has no
/// root at a sample point fall back to the trivial (constant) profile.
std::vector<ProfileSamples> sample_profiles(const CellField& cells, const Grid& grid, const Topography& topo,
                                            const ModelParams& p);

}  // namespace swlme
