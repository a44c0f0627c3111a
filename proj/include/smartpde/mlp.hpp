#pragma once

#include <cstdint>
#include <vector>

#include "smartpde/normalization.hpp"
#include "smartpde/tensor.hpp"

namespace smartpde::model {

// Coordinate-input surrogate: a tanh MLP mapping normalized (x, t) or
// (x, y, t) to the normalized solution value(s).
struct MlpConfig {
  std::size_t input_dim = 2;
  std::vector<std::size_t> hidden = {64, 64, 64, 64};
  std::size_t output_dim = 1;

  void validate() const;
};

struct ModelParams {
  MlpConfig config;
  std::vector<ad::Tensor> weights;  // per layer, (fan_in, fan_out)
  std::vector<ad::Tensor> biases;   // per layer, (1, fan_out)

  std::size_t layer_count() const { return weights.size(); }
  std::vector<double> flatten() const;
  static ModelParams unflatten(const MlpConfig& config, const std::vector<double>& flat);
};

// Glorot-uniform weights, zero biases, deterministic per seed.
ModelParams init_params(const MlpConfig& config, std::uint64_t seed);

// Forward pass without a tape. coords is row-major (batch, input_dim) in
// normalized units; returns (batch, output_dim).
std::vector<double> predict(const ModelParams& params, const std::vector<double>& coords);

// Handles to the recorded forward pass so callers can pull gradients with
// respect to either the inputs or the parameters.
struct TapedForward {
  ad::Var coords;
  std::vector<ad::Var> weights;
  std::vector<ad::Var> biases;
  ad::Var output;
};

TapedForward predict_taped(ad::Tape& tape, const ModelParams& params,
                           const std::vector<double>& coords, std::size_t batch,
                           bool grad_inputs, bool grad_params);

// Batch-mean squared error norm: (1/B) * sum over batch and channels of the
// squared difference. For one output channel this is plain MSE.
double loss_scalar(const std::vector<double>& pred, const std::vector<double>& target,
                   std::size_t output_dim);

// Velocity + pressure loss for (u, v, p) outputs. Identical reduction to
// loss_scalar on three channels; kept as its own entry point so 2D callers
// state their intent and get the last-dim check.
double loss_ns(const std::vector<double>& pred, const std::vector<double>& target);

// Taped variants used inside training/attack loops.
ad::Var loss_scalar_taped(ad::Tape& tape, ad::Var pred, ad::Var target, std::size_t batch);

// Per-sample squared error norms (length batch).
std::vector<double> per_sample_sq_error(const std::vector<double>& pred,
                                        const std::vector<double>& target,
                                        std::size_t output_dim);

}  // namespace smartpde::model
