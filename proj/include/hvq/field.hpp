#ifndef HVQ_FIELD_HPP
#define HVQ_FIELD_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hvq/grid.hpp"

namespace hvq {

namespace detail {
template <class T>
class FieldBase {
public:
    FieldBase() = default;
    explicit FieldBase(GridPtr grid, T fill = T{})
        : grid_(std::move(grid)), v_(grid_->size(), fill) {}
    FieldBase(GridPtr grid, std::vector<T> values);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t size() const { return v_.size(); }

    T& operator[](std::size_t i) { return v_[i]; }
    const T& operator[](std::size_t i) const { return v_[i]; }
    std::vector<T>& values() { return v_; }
    const std::vector<T>& values() const { return v_; }

    bool compatible(const FieldBase& other) const {
        return grid_ && other.grid_ && grid_->same_layout(*other.grid_);
    }

protected:
    GridPtr grid_;
    std::vector<T> v_;
};
} // namespace detail

class RealField : public detail::FieldBase<double> {
public:
    using FieldBase::FieldBase;
    // Sample a function of the grid point.
    static RealField sample(GridPtr grid,
                            const std::function<double(std::span<const double>)>& f);
};

class ComplexField : public detail::FieldBase<std::complex<double>> {
public:
    using FieldBase::FieldBase;
    static ComplexField sample(
        GridPtr grid,
        const std::function<std::complex<double>(std::span<const double>)>& f);
    static ComplexField from_real(const RealField& re);
};

// ---- differential operators (4th-order finite differences) -----------------
// Interior points use centered stencils; dirichlet edges use one-sided
// stencils of the same order; periodic axes wrap.

RealField gradient(const RealField& f, int axis);
ComplexField gradient(const ComplexField& f, int axis);
RealField second_derivative(const RealField& f, int axis);
ComplexField second_derivative(const ComplexField& f, int axis);
RealField laplacian(const RealField& f);
ComplexField laplacian(const ComplexField& f);

// ---- quadrature -------------------------------------------------------------
// Rectangle rule on periodic axes, trapezoid on dirichlet axes (product rule).

double integrate(const RealField& f);
std::complex<double> integrate(const ComplexField& f);
double grid_cell_volume(const Grid& g); // product of spacings

// L2 inner product <a, b> = integrate(conj(a) * b).
std::complex<double> inner(const ComplexField& a, const ComplexField& b);
double norm(const ComplexField& f); // sqrt(<f, f>)
double l2_distance(const RealField& a, const RealField& b);
double l2_distance(const ComplexField& a, const ComplexField& b);
double sup_distance(const RealField& a, const RealField& b);
double sup_norm(const RealField& f);

// ---- interpolation ----------------------------------------------------------
// Multilinear; exact at nodes. Periodic axes wrap; leaving a dirichlet
// domain throws OutOfDomainError.

double interpolate(const RealField& f, std::span<const double> point);
std::complex<double> interpolate(const ComplexField& f, std::span<const double> point);

// ---- arithmetic helpers ------------------------------------------------------

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator*(const RealField& a, const RealField& b);
RealField operator*(double s, const RealField& a);
ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(std::complex<double> s, const ComplexField& a);
ComplexField operator*(const RealField& a, const ComplexField& b);

void axpy(double alpha, const RealField& x, RealField& y);                 // y += alpha x
void axpy(std::complex<double> alpha, const ComplexField& x, ComplexField& y);

RealField rho_of(const ComplexField& psi); // |psi|^2
RealField real_part(const ComplexField& f);
RealField imag_part(const ComplexField& f);

// Finite-difference weights for the m-th derivative at x0 given stencil
// nodes xs (Fornberg's algorithm). Exposed for tests.
std::vector<double> fd_weights(double x0, std::span<const double> xs, int m);

void require_all_finite(const RealField& f, const char* what);
void require_all_finite(const ComplexField& f, const char* what);

} // namespace hvq

#endif
