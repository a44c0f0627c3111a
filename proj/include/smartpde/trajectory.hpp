#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smartpde/grid.hpp"

namespace smartpde::pde {

// Equation tag plus the scalar parameters a solver run was configured with.
struct PdeTag {
  std::string equation;  // "burgers1d", "advection1d", "kdv1d", "elliptic1d", "ns2d"
  double nu = 0.0;       // viscosity, where applicable
  double speed = 0.0;    // advection speed
};

// Reference solution u(x, t) sampled on the full space-time grid,
// row-major [time][space].
struct Trajectory1D {
  Grid1D grid;
  TimeAxis times;
  std::vector<double> u;
  PdeTag tag;

  double at(std::size_t j, std::size_t i) const { return u[j * grid.nx + i]; }
  double& at(std::size_t j, std::size_t i) { return u[j * grid.nx + i]; }
  std::size_t nt() const { return times.nt; }
  std::size_t nx() const { return grid.nx; }
};

// 2D incompressible flow sampled on the full grid: velocity components and
// pressure, each row-major [time][y][x].
struct Trajectory2D {
  Grid2D grid;
  TimeAxis times;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> p;
  PdeTag tag;

  std::size_t slice_len() const { return grid.n * grid.n; }
  double u_at(std::size_t j, std::size_t iy, std::size_t ix) const {
    return u[(j * grid.n + iy) * grid.n + ix];
  }
  double v_at(std::size_t j, std::size_t iy, std::size_t ix) const {
    return v[(j * grid.n + iy) * grid.n + ix];
  }
  double p_at(std::size_t j, std::size_t iy, std::size_t ix) const {
    return p[(j * grid.n + iy) * grid.n + ix];
  }
};

}  // namespace smartpde::pde
