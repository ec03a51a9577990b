#ifndef QBAKER_SRC_FFT_HPP
#define QBAKER_SRC_FFT_HPP

#include <complex>
#include <cstddef>

namespace qbaker::detail {

// Unnormalized DFT with kernel exp(sign * 2 pi i j k / n), sign = +1 or -1.
// Power-of-two n goes through an iterative radix-2 pass, anything else
// through the quadratic sum. Callers own the normalization.
void dft(std::complex<double>* data, std::size_t n, int sign);

bool is_pow2(std::size_t n);

}  // namespace qbaker::detail

#endif
