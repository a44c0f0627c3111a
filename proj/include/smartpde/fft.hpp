#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace smartpde::fft {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);

// In-place iterative radix-2 transforms. Size must be a power of two; the
// pseudo-spectral solvers enforce that on their grids. inverse() includes
// the 1/n factor.
void forward(std::vector<cplx>& a);
void inverse(std::vector<cplx>& a);

std::vector<cplx> forward_real(const std::vector<double>& x);
std::vector<double> inverse_to_real(std::vector<cplx> spectrum);

// Wavenumber for bin i of an n-point transform over a domain of length
// `length`: 2*pi*m/length with m the signed mode index.
double wavenumber(std::size_t i, std::size_t n, double length);

}  // namespace smartpde::fft
