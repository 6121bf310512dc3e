#pragma once

#include <span>
#include <vector>

#include "swlme/field.hpp"
#include "swlme/reconstruction.hpp"

namespace swlme {

/// Reconstructions of one scalar variable over all interior cells, plus the
/// face values seen from the ghost cells. Ghosts carry the steady profile of
/// the adjacent interior cell with the same fluctuation, so their value is that
/// profile evaluated at the ghost center and their slope vanishes.
struct FieldReconstruction {
    std::vector<CellReconstruction> cells;
    double ghost_left = 0.0;   // at x_{-1/2}, from the left ghost
    double ghost_right = 0.0;  // at x_{n-1/2}, from the right ghost

    double face_minus(int k, double dx) const;  // value left of interface x_{k-1/2}
    double face_plus(int k, double dx) const;   // value right of interface x_{k-1/2}
};

template <class Extract>
FieldReconstruction reconstruct_field(const CellField& cells, std::span<const ProfileSamples> samples, double dx,
                                      int order, LimiterPairing pairing, Extract&& extract) {
    const int n = cells.n_cells();
    FieldReconstruction out;
    out.cells.reserve(static_cast<std::size_t>(n));
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = extract(cells.get(i));
    for (int i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        ScalarStencil st;
        st.value[0] = i > 0 ? v[static_cast<std::size_t>(i - 1)] : extract(s.left_nbr);
        st.value[1] = v[static_cast<std::size_t>(i)];
        st.value[2] = i + 1 < n ? v[static_cast<std::size_t>(i + 1)] : extract(s.right_nbr);
        st.steady_nbr = {extract(s.left_nbr), extract(s.center), extract(s.right_nbr)};
        st.steady_face = {extract(s.left_face), extract(s.right_face)};
        out.cells.push_back(build_cell_reconstruction(st, dx, order, pairing));
    }
    out.ghost_left = extract(samples.front().left_face);
    out.ghost_right = extract(samples.back().right_face);
    return out;
}

inline double FieldReconstruction::face_minus(int k, double dx) const {
    return k == 0 ? ghost_left : cells[static_cast<std::size_t>(k - 1)].right_face(dx);
}

inline double FieldReconstruction::face_plus(int k, double dx) const {
    return k == static_cast<int>(cells.size()) ? ghost_right : cells[static_cast<std::size_t>(k)].left_face(dx);
}

}  // namespace swlme
