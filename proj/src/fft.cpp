#include "smartpde/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smartpde::fft {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void transform(std::vector<cplx>& a, bool invert) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fft size must be a power of two, got " +
                                std::to_string(n));
  }

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                       (invert ? 1.0 : -1.0);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (invert) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (cplx& x : a) x *= inv_n;
  }
}

}  // namespace

void forward(std::vector<cplx>& a) { transform(a, false); }
void inverse(std::vector<cplx>& a) { transform(a, true); }

std::vector<cplx> forward_real(const std::vector<double>& x) {
  std::vector<cplx> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = cplx(x[i], 0.0);
  forward(a);
  return a;
}

std::vector<double> inverse_to_real(std::vector<cplx> spectrum) {
  inverse(spectrum);
  std::vector<double> out(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = spectrum[i].real();
  return out;
}

double wavenumber(std::size_t i, std::size_t n, double length) {
  const auto half = n / 2;
  const double m = i <= half ? static_cast<double>(i)
                             : static_cast<double>(i) - static_cast<double>(n);
  return 2.0 * std::numbers::pi * m / length;
}

}  // namespace smartpde::fft
