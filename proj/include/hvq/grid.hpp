#ifndef HVQ_GRID_HPP
#define HVQ_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "hvq/errors.hpp"

namespace hvq {

enum class Boundary : unsigned char { periodic = 0, dirichlet = 1 };

// One spatial axis. Periodic axes exclude the upper endpoint
// (points lower + i*h, h = (upper-lower)/n); dirichlet axes include both
// endpoints (h = (upper-lower)/(n-1)).
struct Axis {
    int n = 0;
    double lower = 0.0;
    double upper = 0.0;
    Boundary boundary = Boundary::periodic;

    double spacing() const {
        return boundary == Boundary::periodic ? (upper - lower) / n
                                              : (upper - lower) / (n - 1);
    }
    double length() const { return upper - lower; }
    double coord(int i) const { return lower + spacing() * i; }
};

// Immutable row-major structured grid.
class Grid {
public:
    explicit Grid(std::vector<Axis> axes);

    int rank() const { return static_cast<int>(axes_.size()); }
    const Axis& axis(int k) const { return axes_[k]; }
    std::size_t size() const { return size_; }
    // Row-major: last axis contiguous.
    std::size_t stride(int k) const { return strides_[k]; }

    std::size_t flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::size_t flat) const;
    std::vector<double> point(const std::vector<int>& idx) const;

    bool same_layout(const Grid& other) const;

    static std::shared_ptr<const Grid> make(std::vector<Axis> axes) {
        return std::make_shared<const Grid>(std::move(axes));
    }

private:
    std::vector<Axis> axes_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

using GridPtr = std::shared_ptr<const Grid>;

} // namespace hvq

#endif
