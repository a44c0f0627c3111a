#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smartpde/normalization.hpp"
#include "smartpde/trajectory.hpp"

namespace smartpde::pde {

enum class Sampling { kUniformRandom, kGridSubsample };

// Supervised pairs (coordinates -> target values) drawn from a reference
// trajectory. Coordinates and targets are stored in physical units; stats
// carry the min/max ranges for mapping either side into [0, 1].
struct Dataset {
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  std::vector<double> coords;   // row-major (n, input_dim)
  std::vector<double> targets;  // row-major (n, output_dim)
  model::NormStats stats;
  std::string task;
  std::uint64_t seed = 0;
  double domain_measure = 0.0;  // product of physical coordinate ranges
  double dx_norm = 0.0;         // grid spacing in normalized spatial units

  std::size_t size() const { return input_dim ? coords.size() / input_dim : 0; }
};

Dataset generate_dataset(const Trajectory1D& traj, std::size_t n_points,
                         Sampling sampling, std::uint64_t seed);
Dataset generate_dataset(const Trajectory2D& traj, std::size_t n_points,
                         Sampling sampling, std::uint64_t seed);

// Stats over the full trajectory: coordinate ranges from the grid and time
// axis, target ranges from the stored field. Degenerate value ranges are
// widened symmetrically so normalization stays defined on constant fields.
model::NormStats trajectory_stats(const Trajectory1D& traj);
model::NormStats trajectory_stats(const Trajectory2D& traj);

// Every grid sample of the trajectory as one dataset (the evaluation set).
Dataset full_grid_dataset(const Trajectory1D& traj);
Dataset full_grid_dataset(const Trajectory2D& traj);

}  // namespace smartpde::pde
