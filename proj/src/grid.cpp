#include "hvq/grid.hpp"

#include <string>

namespace hvq {

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw UsageError("grid needs at least one axis");
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        const Axis& a = axes_[k];
        if (a.n < 8)
            throw UsageError("axis " + std::to_string(k) + ": need n >= 8, got " +
                             std::to_string(a.n));
        if (!(a.upper > a.lower))
            throw UsageError("axis " + std::to_string(k) + ": upper must exceed lower");
    }
    strides_.assign(axes_.size(), 1);
    size_ = 1;
    for (int k = rank() - 1; k >= 0; --k) {
        strides_[k] = size_;
        size_ *= static_cast<std::size_t>(axes_[k].n);
    }
}

std::size_t Grid::flatten(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int k = 0; k < rank(); ++k) f += strides_[k] * static_cast<std::size_t>(idx[k]);
    return f;
}

std::vector<int> Grid::unflatten(std::size_t flat) const {
    std::vector<int> idx(rank());
    for (int k = 0; k < rank(); ++k) {
        idx[k] = static_cast<int>(flat / strides_[k]);
        flat %= strides_[k];
    }
    return idx;
}

std::vector<double> Grid::point(const std::vector<int>& idx) const {
    std::vector<double> p(rank());
    for (int k = 0; k < rank(); ++k) p[k] = axes_[k].coord(idx[k]);
    return p;
}

bool Grid::same_layout(const Grid& other) const {
    if (rank() != other.rank()) return false;
    for (int k = 0; k < rank(); ++k) {
        const Axis &a = axes_[k], &b = other.axes_[k];
        if (a.n != b.n || a.lower != b.lower || a.upper != b.upper ||
            a.boundary != b.boundary)
            return false;
    }
    return true;
}

} // namespace hvq
