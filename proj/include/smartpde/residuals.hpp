#pragma once

#include <vector>

#include "smartpde/trajectory.hpp"

namespace smartpde::pde {

// Finite-difference residual checks on stored trajectories. Central stencils
// in x and t; deliberately a different discretization route than the solvers
// so the two can audit each other.

// RMS of u_t + u u_x + u_xxx over interior points.
double kdv_residual_rms(const Trajectory1D& traj);

// RMS of u_t + u u_x - nu u_xx over interior points.
double burgers_residual_rms(const Trajectory1D& traj, double nu);

// RMS of d/dx(a u_x) - f over interior nodes of a bounded grid.
double elliptic_residual_rms(const std::vector<double>& a,
                             const std::vector<double>& f,
                             const std::vector<double>& u, const Grid1D& grid);

}  // namespace smartpde::pde
