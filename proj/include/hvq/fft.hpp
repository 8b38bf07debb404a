#ifndef HVQ_FFT_HPP
#define HVQ_FFT_HPP

#include <vector>

#include "hvq/field.hpp"

namespace hvq {

// In-place DFT along one axis. Forward is unnormalized; inverse carries 1/N,
// so fft_axis(f, k, +1) after fft_axis(f, k, -1) is the identity.
void fft_axis(ComplexField& f, int axis, int direction);

// Wavenumbers k_j = 2*pi*f_j/(n*h) in FFT index order (f_j = j for
// j <= n/2, j - n above). Uses the implied period n*h, which equals the
// domain length on periodic axes.
std::vector<double> wavenumbers(const Axis& a);

} // namespace hvq

#endif
