#include "smartpde/residuals.hpp"

#include <cmath>

namespace smartpde::pde {

namespace {

inline std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

}  // namespace

double kdv_residual_rms(const Trajectory1D& traj) {
  const std::size_t nx = traj.nx();
  const std::size_t nt = traj.nt();
  const double dx = traj.grid.dx();
  const double dt = traj.times.dt();

  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 1; j + 1 < nt; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double u = traj.at(j, i);
      const double ut = (traj.at(j + 1, i) - traj.at(j - 1, i)) / (2.0 * dt);
      const double up1 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) + 1, nx));
      const double um1 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) - 1, nx));
      const double up2 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) + 2, nx));
      const double um2 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) - 2, nx));
      const double ux = (up1 - um1) / (2.0 * dx);
      const double uxxx = (up2 - 2.0 * up1 + 2.0 * um1 - um2) / (2.0 * dx * dx * dx);
      const double r = ut + u * ux + uxxx;
      acc += r * r;
      ++count;
    }
  }
  return count ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

double burgers_residual_rms(const Trajectory1D& traj, double nu) {
  const std::size_t nx = traj.nx();
  const std::size_t nt = traj.nt();
  const double dx = traj.grid.dx();
  const double dt = traj.times.dt();

  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 1; j + 1 < nt; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double u = traj.at(j, i);
      const double ut = (traj.at(j + 1, i) - traj.at(j - 1, i)) / (2.0 * dt);
      const double up1 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) + 1, nx));
      const double um1 = traj.at(j, wrap(static_cast<std::ptrdiff_t>(i) - 1, nx));
      const double ux = (up1 - um1) / (2.0 * dx);
      const double uxx = (up1 - 2.0 * u + um1) / (dx * dx);
      const double r = ut + u * ux - nu * uxx;
      acc += r * r;
      ++count;
    }
  }
  return count ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

double elliptic_residual_rms(const std::vector<double>& a,
                             const std::vector<double>& f,
                             const std::vector<double>& u, const Grid1D& grid) {
  const std::size_t nx = grid.nx;
  const double dx = grid.dx();
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    const double am = 0.5 * (a[i - 1] + a[i]);
    const double ap = 0.5 * (a[i] + a[i + 1]);
    const double r =
        (ap * (u[i + 1] - u[i]) - am * (u[i] - u[i - 1])) / (dx * dx) - f[i];
    acc += r * r;
    ++count;
  }
  return count ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

}  // namespace smartpde::pde
