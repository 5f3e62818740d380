#include "zetascat/fft.hpp"

#include <numbers>

#include "zetascat/errors.hpp"

namespace zetascat::fft {

bool is_power_of_two(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void transform(std::vector<std::complex<double>>& data, bool inverse) {
    const size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw InvalidInputError("fft: size must be a power of two");
    }
    // Bit-reversal permutation.
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double angle =
            2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

} // namespace zetascat::fft
