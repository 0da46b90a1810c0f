// Copyright 2026 The qvc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qvc/gradient.hpp"
#include "qvc/model.hpp"

namespace qvc {

/// A labeled sample set. Labels are class indices; binary tasks use {0, 1}.
struct Dataset {
  std::vector<std::vector<double>> features;
  std::vector<int> labels;
  int n_features = 0;
  int n_classes = 0;

  std::size_t size() const { return features.size(); }
};

struct TrainConfig {
  double learning_rate = 0.05;
  int epochs = 100;
  std::uint64_t seed = 1;
  double momentum = 0.0;
  /// Dropout rotation period in epochs; 0 disables qubit dropout.
  int dropout_interval = 0;
  /// Whether the rotation may also pick "no qubit".
  bool dropout_include_none = true;
  EstimatorMode estimator = EstimatorMode::exact();
  GradientMode gradient = GradientMode::exact_lcu();
  /// Per-epoch multiplicative learning-rate decay in (0, 1]; 1 = constant.
  double lr_decay = 1.0;
  /// Optional L2 penalty weight on theta (off by default).
  double l2_penalty = 0.0;
};

/// Which qubit is currently frozen (if any) and for how many more epochs.
struct DropoutState {
  std::optional<int> dropped;
  int remaining_epochs = 0;
};

/// Seeded parameter initialization: theta i.i.d. uniform in [0, 2pi), bias 0.
std::pair<std::vector<double>, double> init_params(const CircuitSpec &spec,
                                                   std::uint64_t seed);

/// Least-squares cost 1/2 sum |pi(x) - y|^2 (plus the optional L2 term).
double cost(const Classifier &c, const Dataset &data, const EstimatorMode &mode,
            double l2_penalty = 0.0);

/// Velocity buffer for momentum updates.
struct Velocity {
  std::vector<double> theta;
  double bias = 0.0;
};

/// One single-sample update: velocity <- m*velocity + grad,
/// parameter <- parameter - eta*velocity. Parameters of masked slots are
/// left untouched.
void sgd_step(Classifier &c, const std::vector<double> &x, double y,
              const TrainConfig &cfg, double learning_rate, Velocity &velocity,
              const std::vector<bool> *mask = nullptr);

/// Uniformly picks one of the n qubits -- or no qubit when include_none --
/// and resets the freeze counter.
DropoutState rotate_dropout(int n_qubits, int dropout_interval,
                            bool include_none, Rng &rng);

/// Mask of every slot whose target or control is the dropped qubit.
std::vector<bool> dropout_mask(const CircuitSpec &spec, int dropped);

/// Per-epoch training record.
struct EpochRecord {
  int epoch = 0;
  double cost = 0.0;
  double train_error = 0.0;
  int dropped_qubit = -1;  // -1: none
};

struct TrainResult {
  Classifier classifier;
  std::vector<EpochRecord> log;
};

/// Runs epochs x |data| single-sample SGD steps with per-epoch reshuffling
/// and dropout rotation every cfg.dropout_interval epochs. Deterministic
/// for a fixed config seed.
TrainResult train(const CircuitSpec &spec, const Preprocessor &prep,
                  const Dataset &data, const TrainConfig &cfg);

/// Fraction of samples misclassified by the classifier (exact estimator).
double classifier_error(const Classifier &c, const Dataset &data);

}  // namespace qvc
