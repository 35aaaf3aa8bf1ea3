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

#include "pathfollow/learner.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pathfollow/error.hpp"
#include "pathfollow/rng.hpp"

namespace pathfollow {

HeadParameters::HeadParameters(std::size_t hidden, std::size_t input)
    : hidden_(hidden), input_(input), data_(hidden * input + 2 * hidden + 1, 0.0) {}

Eigen::Map<RowMatrix> HeadParameters::w1() {
  return {data_.data(), static_cast<Eigen::Index>(hidden_),
          static_cast<Eigen::Index>(input_)};
}
Eigen::Map<const RowMatrix> HeadParameters::w1() const {
  return {data_.data(), static_cast<Eigen::Index>(hidden_),
          static_cast<Eigen::Index>(input_)};
}
Eigen::Map<Eigen::VectorXd> HeadParameters::b1() {
  return {data_.data() + hidden_ * input_, static_cast<Eigen::Index>(hidden_)};
}
Eigen::Map<const Eigen::VectorXd> HeadParameters::b1() const {
  return {data_.data() + hidden_ * input_, static_cast<Eigen::Index>(hidden_)};
}
Eigen::Map<Eigen::VectorXd> HeadParameters::w2() {
  return {data_.data() + hidden_ * input_ + hidden_,
          static_cast<Eigen::Index>(hidden_)};
}
Eigen::Map<const Eigen::VectorXd> HeadParameters::w2() const {
  return {data_.data() + hidden_ * input_ + hidden_,
          static_cast<Eigen::Index>(hidden_)};
}

void TrainConfig::validate() const {
  if (!(lr0 > 0.0) || batch_size == 0 || epochs == 0 || lr_halving_period == 0 ||
      projection_dim == 0 || hidden_units == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "train config values must all be positive");
  }
}

namespace {

void fill_uniform(Rng& rng, std::span<double> values, double bound) {
  for (double& x : values) x = rng.symmetric(bound);
}

double glorot_bound(std::size_t fan_in, std::size_t fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

void check_dimension(const RegressorModel& model, std::size_t n) {
  if (n != model.input_dim()) {
    throw Error(ErrorKind::kInvalidArgument,
                "input dimension " + std::to_string(n) +
                    " does not match model dimension " +
                    std::to_string(model.input_dim()));
  }
}

}  // namespace

RegressorModel init_model(std::uint64_t seed, std::size_t input_dim,
                          std::size_t projection_dim, std::size_t hidden_units) {
  if (input_dim == 0 || projection_dim == 0 || hidden_units == 0) {
    throw Error(ErrorKind::kInvalidArgument, "model dimensions must be >= 1");
  }
  Rng rng(derive_seed(seed, "init"));
  RegressorModel model;
  model.init_seed = seed;
  model.train_config.projection_dim = projection_dim;
  model.train_config.hidden_units = hidden_units;
  model.projection.resize(static_cast<Eigen::Index>(projection_dim),
                          static_cast<Eigen::Index>(input_dim));
  fill_uniform(rng, {model.projection.data(), projection_dim * input_dim},
               glorot_bound(input_dim, projection_dim));
  model.head = HeadParameters(hidden_units, projection_dim);
  auto w1 = model.head.w1();
  fill_uniform(rng, {w1.data(), hidden_units * projection_dim},
               glorot_bound(projection_dim, hidden_units));
  auto w2 = model.head.w2();
  fill_uniform(rng, {w2.data(), hidden_units}, glorot_bound(hidden_units, 1));
  model.feature_mean.assign(input_dim, 0.0);
  model.feature_std.assign(input_dim, 1.0);
  return model;
}

double forward_raw(const RegressorModel& model,
                   std::span<const double> normalized_features) {
  check_dimension(model, normalized_features.size());
  // Copied into aligned storage; see HeadParameters.
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(
      normalized_features.data(),
      static_cast<Eigen::Index>(normalized_features.size()));
  const Eigen::VectorXd z = model.projection * x;
  const Eigen::VectorXd h =
      (model.head.w1() * z + model.head.b1()).cwiseMax(0.0);
  return model.head.w2().dot(h) + model.head.b2();
}

Angle forward(const RegressorModel& model,
              std::span<const double> normalized_features) {
  const double raw = forward_raw(model, normalized_features);
  if (!std::isfinite(raw)) {
    throw Error(ErrorKind::kDiverged, "model produced a non-finite output");
  }
  return Angle::wrap(raw);
}

Angle predict(const RegressorModel& model, const Observation& observation) {
  return forward(model, normalize(model.feature_mean, model.feature_std,
                                  observation.features));
}

LossAndGradient loss_and_gradient_projected(const HeadParameters& head,
                                            const RowMatrix& projected,
                                            std::span<const double> targets) {
  const auto n = projected.rows();
  if (n == 0 || static_cast<std::size_t>(n) != targets.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "batch must be non-empty with one target per row");
  }
  if (static_cast<std::size_t>(projected.cols()) != head.input()) {
    throw Error(ErrorKind::kInvalidArgument, "projected width mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> t(targets.data(), n);

  RowMatrix pre = projected * head.w1().transpose();
  pre.rowwise() += head.b1().transpose();
  const RowMatrix act = pre.cwiseMax(0.0);
  const Eigen::VectorXd pred =
      (act * head.w2()).array() + head.b2();
  const Eigen::VectorXd resid = pred - t;

  LossAndGradient out;
  out.mse = resid.squaredNorm() / static_cast<double>(n);
  out.grad = HeadParameters(head.hidden(), head.input());

  const Eigen::VectorXd g = resid * (2.0 / static_cast<double>(n));
  out.grad.w2().noalias() = act.transpose() * g;
  out.grad.b2() = g.sum();
  RowMatrix d_pre = g * head.w2().transpose();
  d_pre.array() *= (pre.array() > 0.0).cast<double>();
  out.grad.w1().noalias() = d_pre.transpose() * projected;
  out.grad.b1().noalias() = d_pre.colwise().sum().transpose();
  return out;
}

LossAndGradient loss_and_gradient(const RegressorModel& model,
                                  const RowMatrix& features,
                                  std::span<const double> targets) {
  check_dimension(model, static_cast<std::size_t>(features.cols()));
  const RowMatrix projected = features * model.projection.transpose();
  return loss_and_gradient_projected(model.head, projected, targets);
}

void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state, double lr, const AdamHyper& hyper) {
  if (params.size() != grads.size()) {
    throw Error(ErrorKind::kInvalidArgument, "parameter/gradient size mismatch");
  }
  if (!(lr > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "learning rate must be > 0");
  }
  for (double g : grads) {
    if (!std::isfinite(g)) throw Error(ErrorKind::kDiverged, "diverged");
  }
  if (state.m.empty() && state.v.empty()) {
    state.m.assign(params.size(), 0.0);
    state.v.assign(params.size(), 0.0);
  }
  if (state.m.size() != params.size() || state.v.size() != params.size()) {
    throw Error(ErrorKind::kInvalidArgument, "optimizer state size mismatch");
  }
  state.t += 1;
  const double t = static_cast<double>(state.t);
  const double c1 = 1.0 - std::pow(hyper.beta1, t);
  const double c2 = 1.0 - std::pow(hyper.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.m[i] = hyper.beta1 * state.m[i] + (1.0 - hyper.beta1) * g;
    state.v[i] = hyper.beta2 * state.v[i] + (1.0 - hyper.beta2) * g * g;
    const double m_hat = state.m[i] / c1;
    const double v_hat = state.v[i] / c2;
    params[i] -= lr * m_hat / (std::sqrt(v_hat) + hyper.epsilon);
  }
}

double lr_at(std::size_t epoch, const TrainConfig& config) {
  const auto halvings = static_cast<int>(epoch / config.lr_halving_period);
  return std::ldexp(config.lr0, -halvings);
}

RowMatrix normalized_matrix(const Dataset& dataset,
                            std::span<const double> mean,
                            std::span<const double> stddev) {
  const auto n = static_cast<Eigen::Index>(dataset.samples.size());
  const auto d = static_cast<Eigen::Index>(mean.size());
  RowMatrix x(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = normalize(mean, stddev,
                               dataset.samples[static_cast<std::size_t>(i)]
                                   .observation.features);
    x.row(i) = Eigen::Map<const Eigen::RowVectorXd>(row.data(), d);
  }
  return x;
}

TrainResult train(const Dataset& dataset, const TrainConfig& config,
                  std::uint64_t init_seed) {
  config.validate();
  if (dataset.samples.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "cannot train on an empty dataset");
  }
  const std::size_t dim = dataset.dimension();
  TrainResult result;
  RegressorModel& model = result.model;
  model = init_model(init_seed, dim, config.projection_dim, config.hidden_units);
  model.train_config = config;
  model.feature_mean = dataset.feature_mean;
  model.feature_std = dataset.feature_std;

  // The projection is frozen, so inputs are projected once up front.
  const RowMatrix projected =
      normalized_matrix(dataset, model.feature_mean, model.feature_std) *
      model.projection.transpose();
  const std::size_t n = dataset.samples.size();
  std::vector<double> targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    targets[i] = dataset.samples[i].target.radians();
  }

  Rng shuffle_rng(derive_seed(config.shuffle_seed, "shuffle"));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  AdamState adam;
  RowMatrix batch;
  std::vector<double> batch_targets;
  result.loss_history.reserve(config.epochs);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = n; i > 1; --i) {
      std::swap(order[i - 1], order[shuffle_rng.index(i)]);
    }
    const double lr = lr_at(epoch, config);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      const std::size_t count = std::min(config.batch_size, n - start);
      batch.resize(static_cast<Eigen::Index>(count), projected.cols());
      batch_targets.resize(count);
      for (std::size_t r = 0; r < count; ++r) {
        const auto src = static_cast<Eigen::Index>(order[start + r]);
        batch.row(static_cast<Eigen::Index>(r)) = projected.row(src);
        batch_targets[r] = targets[order[start + r]];
      }
      const auto lg = loss_and_gradient_projected(model.head, batch, batch_targets);
      if (!std::isfinite(lg.mse)) {
        throw Error(ErrorKind::kDiverged,
                    "training diverged at epoch " + std::to_string(epoch));
      }
      loss_sum += lg.mse * static_cast<double>(count);
      try {
        adam_step(model.head.flat(), lg.grad.flat(), adam, lr);
      } catch (const Error&) {
        throw Error(ErrorKind::kDiverged,
                    "training diverged at epoch " + std::to_string(epoch));
      }
    }
    result.loss_history.push_back(loss_sum / static_cast<double>(n));
  }
  return result;
}

}  // namespace pathfollow
