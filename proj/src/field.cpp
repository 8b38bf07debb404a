#include "hvq/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace hvq {

namespace detail {

template <class T>
FieldBase<T>::FieldBase(GridPtr grid, std::vector<T> values)
    : grid_(std::move(grid)), v_(std::move(values)) {
    if (v_.size() != grid_->size())
        throw UsageError("field sample count does not match grid size");
}

template class FieldBase<double>;
template class FieldBase<std::complex<double>>;

} // namespace detail

RealField RealField::sample(GridPtr grid,
                            const std::function<double(std::span<const double>)>& f) {
    RealField out(grid);
    std::vector<int> idx(grid->rank(), 0);
    std::vector<double> p(grid->rank());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int k = 0; k < grid->rank(); ++k) p[k] = grid->axis(k).coord(idx[k]);
        out[i] = f(p);
        for (int k = grid->rank() - 1; k >= 0; --k) {
            if (++idx[k] < grid->axis(k).n) break;
            idx[k] = 0;
        }
    }
    return out;
}

ComplexField ComplexField::sample(
    GridPtr grid,
    const std::function<std::complex<double>(std::span<const double>)>& f) {
    ComplexField out(grid);
    std::vector<int> idx(grid->rank(), 0);
    std::vector<double> p(grid->rank());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int k = 0; k < grid->rank(); ++k) p[k] = grid->axis(k).coord(idx[k]);
        out[i] = f(p);
        for (int k = grid->rank() - 1; k >= 0; --k) {
            if (++idx[k] < grid->axis(k).n) break;
            idx[k] = 0;
        }
    }
    return out;
}

ComplexField ComplexField::from_real(const RealField& re) {
    ComplexField out(re.grid_ptr());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = re[i];
    return out;
}

// ---- Fornberg finite-difference weights -------------------------------------

std::vector<double> fd_weights(double x0, std::span<const double> xs, int m) {
    const int n = static_cast<int>(xs.size()) - 1;
    std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = c[i][m];
    return w;
}

namespace {

// One row of a derivative stencil: weights applied at node offsets
// (relative to the evaluated point).
struct StencilRow {
    std::vector<int> offsets;
    std::vector<double> weights;
};

StencilRow uniform_row(int m, int first_offset, int count, double h, int eval_offset) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = (first_offset + i) * h;
    StencilRow row;
    row.offsets.resize(count);
    for (int i = 0; i < count; ++i) row.offsets[i] = first_offset + i;
    row.weights = fd_weights(eval_offset * h, xs, m);
    return row;
}

// 4th-order plans. Interior: centered 5-point. Dirichlet edges: one-sided
// 5-point for d/dx, 6-point for d2/dx2 (keeps the order up at offset 0 and 1).
struct AxisPlan {
    StencilRow interior;                  // offsets -2..2
    std::vector<StencilRow> left, right;  // rows 0,1 and n-2,n-1
    int halo = 2;
};

AxisPlan make_plan(int m, double h, Boundary b) {
    AxisPlan plan;
    plan.interior = uniform_row(m, -2, 5, h, 0);
    if (b == Boundary::dirichlet) {
        const int pts = (m == 2) ? 6 : 5;
        for (int row = 0; row < 2; ++row)
            plan.left.push_back(uniform_row(m, -row, pts, h, 0));
        for (int row = 0; row < 2; ++row) {
            // right[0] serves point n-2, right[1] serves n-1
            plan.right.push_back(uniform_row(m, -(pts - 2) - row, pts, h, 0));
        }
    }
    return plan;
}

template <class T>
void derivative_axis(const Grid& g, int axis, int m, const std::vector<T>& in,
                     std::vector<T>& out) {
    const Axis& a = g.axis(axis);
    const int n = a.n;
    const std::size_t stride = g.stride(axis);
    const AxisPlan plan = make_plan(m, a.spacing(), a.boundary);

    // Iterate over all lines along `axis`: outer block times inner block.
    std::size_t outer = 1, inner = 1;
    for (int k = 0; k < axis; ++k) outer *= static_cast<std::size_t>(g.axis(k).n);
    for (int k = axis + 1; k < g.rank(); ++k) inner *= static_cast<std::size_t>(g.axis(k).n);

    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t s = 0; s < inner; ++s) {
            const std::size_t base = o * stride * static_cast<std::size_t>(n) + s;
            auto at = [&](int i) -> const T& { return in[base + stride * static_cast<std::size_t>(i)]; };
            auto put = [&](int i, T v) { out[base + stride * static_cast<std::size_t>(i)] = v; };
            if (a.boundary == Boundary::periodic) {
                for (int i = 0; i < n; ++i) {
                    T acc{};
                    for (std::size_t t = 0; t < plan.interior.offsets.size(); ++t) {
                        int j = i + plan.interior.offsets[t];
                        j = (j % n + n) % n;
                        acc += plan.interior.weights[t] * at(j);
                    }
                    put(i, acc);
                }
            } else {
                for (int i = 0; i < n; ++i) {
                    const StencilRow* row = &plan.interior;
                    if (i < 2) row = &plan.left[i];
                    else if (i >= n - 2) row = &plan.right[i - (n - 2)];
                    T acc{};
                    for (std::size_t t = 0; t < row->offsets.size(); ++t)
                        acc += row->weights[t] * at(i + row->offsets[t]);
                    put(i, acc);
                }
            }
        }
    }
}

template <class F>
F gradient_impl(const F& f, int axis) {
    if (axis < 0 || axis >= f.grid().rank())
        throw UsageError("gradient: axis out of range");
    F out(f.grid_ptr());
    derivative_axis(f.grid(), axis, 1, f.values(), out.values());
    return out;
}

template <class F>
F second_derivative_impl(const F& f, int axis) {
    if (axis < 0 || axis >= f.grid().rank())
        throw UsageError("second_derivative: axis out of range");
    F out(f.grid_ptr());
    derivative_axis(f.grid(), axis, 2, f.values(), out.values());
    return out;
}

template <class F>
F laplacian_impl(const F& f) {
    F out(f.grid_ptr());
    F tmp(f.grid_ptr());
    for (int k = 0; k < f.grid().rank(); ++k) {
        derivative_axis(f.grid(), k, 2, f.values(), tmp.values());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += tmp[i];
    }
    return out;
}

} // namespace

RealField gradient(const RealField& f, int axis) { return gradient_impl(f, axis); }
ComplexField gradient(const ComplexField& f, int axis) { return gradient_impl(f, axis); }
RealField second_derivative(const RealField& f, int axis) { return second_derivative_impl(f, axis); }
ComplexField second_derivative(const ComplexField& f, int axis) { return second_derivative_impl(f, axis); }
RealField laplacian(const RealField& f) { return laplacian_impl(f); }
ComplexField laplacian(const ComplexField& f) { return laplacian_impl(f); }

// ---- quadrature --------------------------------------------------------------

namespace {
double axis_weight(const Axis& a, int i) {
    if (a.boundary == Boundary::periodic) return a.spacing();
    return (i == 0 || i == a.n - 1) ? 0.5 * a.spacing() : a.spacing();
}

template <class T, class F>
T integrate_impl(const F& f) {
    const Grid& g = f.grid();
    // Per-axis weight tables, combined per point.
    std::vector<std::vector<double>> w(g.rank());
    for (int k = 0; k < g.rank(); ++k) {
        w[k].resize(g.axis(k).n);
        for (int i = 0; i < g.axis(k).n; ++i) w[k][i] = axis_weight(g.axis(k), i);
    }
    T acc{};
    std::vector<int> idx(g.rank(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        double wp = 1.0;
        for (int k = 0; k < g.rank(); ++k) wp *= w[k][idx[k]];
        acc += wp * f[i];
        for (int k = g.rank() - 1; k >= 0; --k) {
            if (++idx[k] < g.axis(k).n) break;
            idx[k] = 0;
        }
    }
    return acc;
}
} // namespace

double integrate(const RealField& f) { return integrate_impl<double>(f); }
std::complex<double> integrate(const ComplexField& f) {
    return integrate_impl<std::complex<double>>(f);
}

double grid_cell_volume(const Grid& g) {
    double v = 1.0;
    for (int k = 0; k < g.rank(); ++k) v *= g.axis(k).spacing();
    return v;
}

std::complex<double> inner(const ComplexField& a, const ComplexField& b) {
    if (!a.compatible(b)) throw UsageError("inner: mismatched grids");
    ComplexField prod(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = std::conj(a[i]) * b[i];
    return integrate(prod);
}

double norm(const ComplexField& f) { return std::sqrt(std::abs(inner(f, f))); }

double l2_distance(const RealField& a, const RealField& b) {
    if (!a.compatible(b)) throw UsageError("l2_distance: mismatched grids");
    RealField d(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(integrate(d));
}

double l2_distance(const ComplexField& a, const ComplexField& b) {
    if (!a.compatible(b)) throw UsageError("l2_distance: mismatched grids");
    RealField d(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::norm(a[i] - b[i]);
    return std::sqrt(integrate(d));
}

double sup_distance(const RealField& a, const RealField& b) {
    if (!a.compatible(b)) throw UsageError("sup_distance: mismatched grids");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double sup_norm(const RealField& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

// ---- interpolation -----------------------------------------------------------

namespace {
struct CellPos {
    int i0, i1;
    double frac;
};

CellPos locate(const Axis& a, double x) {
    const double h = a.spacing();
    if (a.boundary == Boundary::periodic) {
        double u = (x - a.lower) / h;
        const double nn = static_cast<double>(a.n);
        u -= std::floor(u / nn) * nn; // wrap into [0, n)
        int i0 = static_cast<int>(std::floor(u));
        if (i0 >= a.n) i0 = 0;
        return {i0, (i0 + 1) % a.n, u - i0};
    }
    if (x < a.lower - 1e-12 * (1 + std::abs(a.lower)) ||
        x > a.upper + 1e-12 * (1 + std::abs(a.upper)))
        throw OutOfDomainError("interpolate: point outside dirichlet domain");
    double u = (x - a.lower) / h;
    int i0 = static_cast<int>(std::floor(u));
    i0 = std::clamp(i0, 0, a.n - 2);
    return {i0, i0 + 1, std::clamp(u - i0, 0.0, 1.0)};
}

template <class F, class T>
T interpolate_impl(const F& f, std::span<const double> point) {
    const Grid& g = f.grid();
    if (static_cast<int>(point.size()) != g.rank())
        throw UsageError("interpolate: point rank mismatch");
    std::vector<CellPos> cp(g.rank());
    for (int k = 0; k < g.rank(); ++k) cp[k] = locate(g.axis(k), point[k]);
    const int corners = 1 << g.rank();
    T acc{};
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        std::size_t flat = 0;
        for (int k = 0; k < g.rank(); ++k) {
            const bool hi = (c >> k) & 1;
            w *= hi ? cp[k].frac : 1.0 - cp[k].frac;
            flat += g.stride(k) * static_cast<std::size_t>(hi ? cp[k].i1 : cp[k].i0);
        }
        if (w != 0.0) acc += w * f[flat];
    }
    return acc;
}
} // namespace

double interpolate(const RealField& f, std::span<const double> point) {
    return interpolate_impl<RealField, double>(f, point);
}
std::complex<double> interpolate(const ComplexField& f, std::span<const double> point) {
    return interpolate_impl<ComplexField, std::complex<double>>(f, point);
}

// ---- arithmetic ----------------------------------------------------------------

namespace {
template <class F, class Op>
F zip(const F& a, const F& b, Op op) {
    if (!a.compatible(b)) throw UsageError("field arithmetic: mismatched grids");
    F out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}
} // namespace

RealField operator+(const RealField& a, const RealField& b) {
    return zip(a, b, [](double x, double y) { return x + y; });
}
RealField operator-(const RealField& a, const RealField& b) {
    return zip(a, b, [](double x, double y) { return x - y; });
}
RealField operator*(const RealField& a, const RealField& b) {
    return zip(a, b, [](double x, double y) { return x * y; });
}
RealField operator*(double s, const RealField& a) {
    RealField out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}
ComplexField operator+(const ComplexField& a, const ComplexField& b) {
    return zip(a, b, [](auto x, auto y) { return x + y; });
}
ComplexField operator-(const ComplexField& a, const ComplexField& b) {
    return zip(a, b, [](auto x, auto y) { return x - y; });
}
ComplexField operator*(std::complex<double> s, const ComplexField& a) {
    ComplexField out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}
ComplexField operator*(const RealField& a, const ComplexField& b) {
    if (!a.grid().same_layout(b.grid())) throw UsageError("field arithmetic: mismatched grids");
    ComplexField out(b.grid_ptr());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

void axpy(double alpha, const RealField& x, RealField& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}
void axpy(std::complex<double> alpha, const ComplexField& x, ComplexField& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

RealField rho_of(const ComplexField& psi) {
    RealField out(psi.grid_ptr());
    for (std::size_t i = 0; i < psi.size(); ++i) out[i] = std::norm(psi[i]);
    return out;
}
RealField real_part(const ComplexField& f) {
    RealField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
    return out;
}
RealField imag_part(const ComplexField& f) {
    RealField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].imag();
    return out;
}

void require_all_finite(const RealField& f, const char* what) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i])) throw UsageError(std::string(what) + ": non-finite sample");
}
void require_all_finite(const ComplexField& f, const char* what) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i].real()) || !std::isfinite(f[i].imag()))
            throw UsageError(std::string(what) + ": non-finite sample");
}

} // namespace hvq
