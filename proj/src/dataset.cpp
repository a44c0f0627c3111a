#include "smartpde/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "smartpde/rng.hpp"

namespace smartpde::model {

double normalize_value(double q, const Range& r) {
  if (!(r.max > r.min)) throw DegenerateRange("normalize: max <= min");
  return (q - r.min) / (r.max - r.min);
}

double denormalize_value(double q, const Range& r) {
  if (!(r.max > r.min)) throw DegenerateRange("denormalize: max <= min");
  return r.min + q * (r.max - r.min);
}

std::vector<double> normalize_batch(const std::vector<double>& q,
                                    const std::vector<Range>& ranges) {
  const std::size_t dim = ranges.size();
  if (dim == 0 || q.size() % dim != 0) throw ShapeMismatch("normalize_batch dims");
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = normalize_value(q[i], ranges[i % dim]);
  return out;
}

std::vector<double> denormalize_batch(const std::vector<double>& q,
                                      const std::vector<Range>& ranges) {
  const std::size_t dim = ranges.size();
  if (dim == 0 || q.size() % dim != 0) throw ShapeMismatch("denormalize_batch dims");
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = denormalize_value(q[i], ranges[i % dim]);
  return out;
}

}  // namespace smartpde::model

namespace smartpde::pde {

namespace {

model::Range field_range(const std::vector<double>& field) {
  double lo = field[0], hi = field[0];
  for (double v : field) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) {  // constant field: widen so the range stays usable
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi};
}

std::vector<std::size_t> pick_indices(std::size_t total, std::size_t n_points,
                                      Sampling sampling, std::uint64_t seed) {
  if (n_points == 0 || n_points > total) {
    throw InsufficientData("requested " + std::to_string(n_points) + " of " +
                           std::to_string(total) + " available samples");
  }
  std::vector<std::size_t> idx;
  if (sampling == Sampling::kUniformRandom) {
    Rng rng(seed);
    idx = rng.sample_without_replacement(total, n_points);
    std::sort(idx.begin(), idx.end());
  } else {
    const std::size_t stride = std::max<std::size_t>(1, total / n_points);
    idx.reserve(n_points);
    for (std::size_t i = 0; idx.size() < n_points; i += stride) idx.push_back(i);
  }
  return idx;
}

}  // namespace

model::NormStats trajectory_stats(const Trajectory1D& traj) {
  model::NormStats stats;
  stats.coord = {{traj.grid.x_min, traj.grid.x_max}, {0.0, traj.times.t_end}};
  stats.target = {field_range(traj.u)};
  return stats;
}

model::NormStats trajectory_stats(const Trajectory2D& traj) {
  model::NormStats stats;
  stats.coord = {{traj.grid.x_min, traj.grid.x_max},
                 {traj.grid.x_min, traj.grid.x_max},
                 {0.0, traj.times.t_end}};
  stats.target = {field_range(traj.u), field_range(traj.v), field_range(traj.p)};
  return stats;
}

Dataset generate_dataset(const Trajectory1D& traj, std::size_t n_points,
                         Sampling sampling, std::uint64_t seed) {
  const std::size_t nx = traj.nx();
  const std::size_t total = traj.nt() * nx;
  const auto idx = pick_indices(total, n_points, sampling, seed);

  Dataset ds;
  ds.input_dim = 2;
  ds.output_dim = 1;
  ds.task = traj.tag.equation;
  ds.seed = seed;
  ds.stats = trajectory_stats(traj);
  ds.domain_measure = traj.grid.length() * traj.times.t_end;
  ds.dx_norm = traj.grid.dx() / traj.grid.length();
  ds.coords.reserve(2 * idx.size());
  ds.targets.reserve(idx.size());
  for (std::size_t flat : idx) {
    const std::size_t j = flat / nx;
    const std::size_t i = flat % nx;
    ds.coords.push_back(traj.grid.x(i));
    ds.coords.push_back(traj.times.t(j));
    ds.targets.push_back(traj.at(j, i));
  }
  return ds;
}

Dataset generate_dataset(const Trajectory2D& traj, std::size_t n_points,
                         Sampling sampling, std::uint64_t seed) {
  const std::size_t n = traj.grid.n;
  const std::size_t total = traj.times.nt * n * n;
  const auto idx = pick_indices(total, n_points, sampling, seed);

  Dataset ds;
  ds.input_dim = 3;
  ds.output_dim = 3;
  ds.task = traj.tag.equation;
  ds.seed = seed;
  ds.stats = trajectory_stats(traj);
  ds.domain_measure =
      traj.grid.length() * traj.grid.length() * traj.times.t_end;
  ds.dx_norm = traj.grid.dx() / traj.grid.length();
  ds.coords.reserve(3 * idx.size());
  ds.targets.reserve(3 * idx.size());
  for (std::size_t flat : idx) {
    const std::size_t j = flat / (n * n);
    const std::size_t rem = flat % (n * n);
    const std::size_t iy = rem / n;
    const std::size_t ix = rem % n;
    ds.coords.push_back(traj.grid.x(ix));
    ds.coords.push_back(traj.grid.x(iy));
    ds.coords.push_back(traj.times.t(j));
    ds.targets.push_back(traj.u_at(j, iy, ix));
    ds.targets.push_back(traj.v_at(j, iy, ix));
    ds.targets.push_back(traj.p_at(j, iy, ix));
  }
  return ds;
}

Dataset full_grid_dataset(const Trajectory1D& traj) {
  return generate_dataset(traj, traj.nt() * traj.nx(), Sampling::kGridSubsample, 0);
}

Dataset full_grid_dataset(const Trajectory2D& traj) {
  return generate_dataset(traj, traj.times.nt * traj.grid.n * traj.grid.n,
                          Sampling::kGridSubsample, 0);
}

}  // namespace smartpde::pde
