#include "hvq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace hvq {

namespace {

// FFTW plan creation is not thread safe; executions on distinct buffers are.
std::mutex plan_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;
};

PlanPair& plan_for(int n) {
    static std::map<int, PlanPair> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    p.n = n;
    p.buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    p.fwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    return cache.emplace(n, p).first->second;
}

} // namespace

void fft_axis(ComplexField& f, int axis, int direction) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.rank()) throw UsageError("fft_axis: axis out of range");
    const int n = g.axis(axis).n;
    const std::size_t stride = g.stride(axis);

    std::size_t outer = 1, inner = 1;
    for (int k = 0; k < axis; ++k) outer *= static_cast<std::size_t>(g.axis(k).n);
    for (int k = axis + 1; k < g.rank(); ++k) inner *= static_cast<std::size_t>(g.axis(k).n);

    std::lock_guard<std::mutex> lock(plan_mutex);
    PlanPair& plan = plan_for(n);
    const double scale = direction > 0 ? 1.0 / n : 1.0;

    auto* data = f.values().data();
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t s = 0; s < inner; ++s) {
            const std::size_t base = o * stride * static_cast<std::size_t>(n) + s;
            for (int i = 0; i < n; ++i) {
                const auto z = data[base + stride * static_cast<std::size_t>(i)];
                plan.buf[i][0] = z.real();
                plan.buf[i][1] = z.imag();
            }
            fftw_execute(direction > 0 ? plan.bwd : plan.fwd);
            for (int i = 0; i < n; ++i)
                data[base + stride * static_cast<std::size_t>(i)] =
                    std::complex<double>(plan.buf[i][0] * scale, plan.buf[i][1] * scale);
        }
    }
}

std::vector<double> wavenumbers(const Axis& a) {
    const double period = a.spacing() * a.n;
    std::vector<double> k(static_cast<std::size_t>(a.n));
    const double dk = 2.0 * 3.14159265358979323846 / period;
    for (int j = 0; j < a.n; ++j) {
        const int f = j <= a.n / 2 ? j : j - a.n;
        k[static_cast<std::size_t>(j)] = dk * f;
    }
    return k;
}

} // namespace hvq
