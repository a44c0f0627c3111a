#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smartpde/errors.hpp"

namespace smartpde::pde {

enum class Bc { kPeriodic, kDirichlet };

// 1D spatial discretization of [x_min, x_max]. On periodic grids the last
// point x_max is implicit (dx = L/nx); on bounded grids both endpoints are
// stored (dx = L/(nx-1)).
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t nx = 0;
  bool periodic = true;

  Grid1D() = default;
  Grid1D(double xmin, double xmax, std::size_t n, bool per)
      : x_min(xmin), x_max(xmax), nx(n), periodic(per) {
    if (nx < 8) throw UnstableConfig("Grid1D requires nx >= 8");
    if (!(x_min < x_max)) throw UnstableConfig("Grid1D requires x_min < x_max");
  }

  double length() const { return x_max - x_min; }
  double dx() const {
    return periodic ? length() / static_cast<double>(nx)
                    : length() / static_cast<double>(nx - 1);
  }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
};

// Uniform time sampling of [0, t_end] with nt stored slices, dt apart.
// Solvers integrate at exactly this dt and validate their stability bound
// against it at entry.
struct TimeAxis {
  double t_end = 1.0;
  std::size_t nt = 0;

  TimeAxis() = default;
  TimeAxis(double tend, std::size_t n) : t_end(tend), nt(n) {
    if (nt < 2) throw UnstableConfig("TimeAxis requires nt >= 2");
    if (!(t_end > 0.0)) throw UnstableConfig("TimeAxis requires t_end > 0");
  }

  double dt() const { return t_end / static_cast<double>(nt - 1); }
  double t(std::size_t j) const { return static_cast<double>(j) * dt(); }
};

// Periodic square 2D grid: same axis in x and y.
struct Grid2D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n = 0;  // points per axis

  Grid2D() = default;
  Grid2D(double xmin, double xmax, std::size_t points) : x_min(xmin), x_max(xmax), n(points) {
    if (n < 8) throw UnstableConfig("Grid2D requires n >= 8");
    if (!(x_min < x_max)) throw UnstableConfig("Grid2D requires x_min < x_max");
  }

  double length() const { return x_max - x_min; }
  double dx() const { return length() / static_cast<double>(n); }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
};

}  // namespace smartpde::pde
