// Copyright 2026 The pathfollow Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pathfollow/augmentation.hpp"
#include "pathfollow/geometry.hpp"

namespace pathfollow {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Trainable two-layer head, stored as one flat buffer so the optimizer can
/// treat it as a single parameter vector. Layout: w1 (hidden x input,
/// row-major), b1 (hidden), w2 (hidden), b2 (1). The buffer is aligned so
/// Eigen's vectorized loops split the same way on every allocation, which
/// keeps results bit-reproducible.
class HeadParameters {
 public:
  HeadParameters() = default;
  HeadParameters(std::size_t hidden, std::size_t input);

  std::size_t hidden() const noexcept { return hidden_; }
  std::size_t input() const noexcept { return input_; }

  Eigen::Map<RowMatrix> w1();
  Eigen::Map<const RowMatrix> w1() const;
  Eigen::Map<Eigen::VectorXd> b1();
  Eigen::Map<const Eigen::VectorXd> b1() const;
  Eigen::Map<Eigen::VectorXd> w2();
  Eigen::Map<const Eigen::VectorXd> w2() const;
  double& b2() { return data_.back(); }
  double b2() const { return data_.back(); }

  std::span<double> flat() noexcept { return data_; }
  std::span<const double> flat() const noexcept { return data_; }

  friend bool operator==(const HeadParameters&, const HeadParameters&) = default;

 private:
  std::size_t hidden_ = 0;
  std::size_t input_ = 0;
  std::vector<double, Eigen::aligned_allocator<double>> data_;
};

struct TrainConfig {
  double lr0 = 1e-4;
  std::size_t batch_size = 64;
  std::size_t epochs = 100;
  std::size_t lr_halving_period = 25;
  std::uint64_t shuffle_seed = 0;
  std::size_t projection_dim = 128;  // F
  std::size_t hidden_units = 512;    // H

  void validate() const;
};

/// Frozen random projection (D -> F) feeding a trainable head
/// F -> H (rectifier) -> 1. Inputs are normalized with the stats captured
/// from the training dataset.
struct RegressorModel {
  RowMatrix projection;  // F x D, never updated by training
  HeadParameters head;
  std::vector<double> feature_mean;
  std::vector<double> feature_std;
  std::uint64_t init_seed = 0;
  TrainConfig train_config;

  std::size_t input_dim() const noexcept {
    return static_cast<std::size_t>(projection.cols());
  }
};

/// Scaled-uniform init, bound sqrt(6 / (fan_in + fan_out)) per layer, zero
/// biases. Normalization stats default to identity (mean 0, std 1).
RegressorModel init_model(std::uint64_t seed, std::size_t input_dim,
                          std::size_t projection_dim,
                          std::size_t hidden_units = 512);

/// Head output before wrapping, for already-normalized features.
double forward_raw(const RegressorModel& model,
                   std::span<const double> normalized_features);

/// Predicted yaw delta, wrapped to (-pi, pi].
Angle forward(const RegressorModel& model,
              std::span<const double> normalized_features);

/// Normalizes a raw observation with the model's stats, then predicts.
Angle predict(const RegressorModel& model, const Observation& observation);

struct LossAndGradient {
  double mse = 0.0;
  HeadParameters grad;
};

/// MSE of the unwrapped prediction over a batch (rows of `features` are
/// normalized inputs) and its gradient with respect to the head.
LossAndGradient loss_and_gradient(const RegressorModel& model,
                                  const RowMatrix& features,
                                  std::span<const double> targets);

/// Same, on inputs that have already been passed through the projection.
LossAndGradient loss_and_gradient_projected(const HeadParameters& head,
                                            const RowMatrix& projected,
                                            std::span<const double> targets);

struct AdamHyper {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;
};

/// One bias-corrected Adam update. Lazily sizes `state` on first use.
/// Throws Error(kDiverged) on a non-finite gradient.
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state, double lr, const AdamHyper& hyper = {});

/// lr0 / 2^floor(epoch / lr_halving_period).
double lr_at(std::size_t epoch, const TrainConfig& config);

struct TrainResult {
  RegressorModel model;
  /// Mean per-sample training MSE of each epoch, measured before each update.
  std::vector<double> loss_history;
};

TrainResult train(const Dataset& dataset, const TrainConfig& config,
                  std::uint64_t init_seed);

/// Normalized features of every sample, one row per sample.
RowMatrix normalized_matrix(const Dataset& dataset,
                            std::span<const double> mean,
                            std::span<const double> stddev);

}  // namespace pathfollow
