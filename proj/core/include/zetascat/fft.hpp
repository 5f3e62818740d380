#ifndef ZETASCAT_FFT_HPP
#define ZETASCAT_FFT_HPP

#include <complex>
#include <vector>

namespace zetascat::fft {

/// In-place radix-2 transform; size must be a power of two. Forward uses the
/// e^{-i theta} kernel; the inverse is unnormalized (divide by N yourself).
void transform(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(size_t n);

} // namespace zetascat::fft

#endif
