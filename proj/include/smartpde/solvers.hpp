#pragma once

#include <functional>
#include <vector>

#include "smartpde/grid.hpp"
#include "smartpde/trajectory.hpp"

namespace smartpde::pde {

// Classical reference solvers. Each is deterministic for fixed inputs and
// throws UnstableConfig when the requested dt violates its stability bound
// (query the matching *_stable_dt helper to pick nt).

// Conservative flux form u_t + (u^2/2)_x = nu*u_xx, Godunov upwind flux and
// central diffusion, explicit Euler in time.
Trajectory1D solve_burgers_1d(const std::vector<double>& h, double nu,
                              const Grid1D& grid, const TimeAxis& times, Bc bc);
double burgers_stable_dt(const std::vector<double>& h, double nu, const Grid1D& grid);

// Exact spectral translation u(x,t) = h(x - c t) on a periodic grid.
Trajectory1D solve_advection_1d(const std::vector<double>& h, double c,
                                const Grid1D& grid, const TimeAxis& times);

// u_t + u*u_x + u_xxx = 0, pseudo-spectral with integrating factor for the
// dispersive term, RK4 in time, 2/3-rule dealiasing.
Trajectory1D solve_kdv_1d(const std::vector<double>& h, const Grid1D& grid,
                          const TimeAxis& times);
double kdv_stable_dt(const std::vector<double>& h, const Grid1D& grid);

// d/dx(a(x) u_x) = f(x) on [0,1], u=0 at both ends. Finite differences with
// harmonic interface coefficients, direct tridiagonal solve. a and f are
// node samples on a non-periodic grid.
std::vector<double> solve_elliptic_1d(const std::vector<double>& a,
                                      const std::vector<double>& f,
                                      const Grid1D& grid);

// 2D incompressible Navier-Stokes on a periodic square, vorticity-
// streamfunction pseudo-spectral formulation, integrating-factor RK4.
// Pressure is recovered per stored slice from the pressure Poisson equation.
Trajectory2D solve_ns_2d(const std::vector<double>& omega0, double nu,
                         const Grid2D& grid, const TimeAxis& times);
double ns_stable_dt(const std::vector<double>& omega0, double nu, const Grid2D& grid);

// Spectral divergence of a velocity slice; the incompressibility audit.
double max_divergence(const Trajectory2D& traj);

// Sum(u)*dx of one time slice: the conserved 1D quantity.
double spatial_mass(const Trajectory1D& traj, std::size_t slice);

// Initial-condition families used by the experiment harness.
std::vector<double> truncated_fourier_ic(const Grid1D& grid, std::size_t modes,
                                         double amplitude, std::uint64_t seed);
std::vector<double> kdv_soliton_ic(const Grid1D& grid, double speed, double center);
std::vector<double> taylor_green_vorticity(const Grid2D& grid);
std::vector<double> random_vorticity_ic(const Grid2D& grid, std::size_t modes,
                                        double amplitude, std::uint64_t seed);

}  // namespace smartpde::pde
