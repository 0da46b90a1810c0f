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

#include "qvc/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qvc/errors.hpp"

namespace qvc {

std::pair<std::vector<double>, double> init_params(const CircuitSpec &spec,
                                                   std::uint64_t seed) {
  Rng rng(derive_seed(seed, {0x1a17}));
  std::vector<double> theta(spec.param_len);
  for (double &t : theta) t = rng.uniform(0.0, 2.0 * kPi);
  return {std::move(theta), 0.0};
}

double cost(const Classifier &c, const Dataset &data, const EstimatorMode &mode,
            double l2_penalty) {
  if (data.size() == 0) {
    throw ConfigError("cost: empty dataset");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    EstimatorMode m = mode;
    if (!mode.is_exact()) m.seed = derive_seed(mode.seed, {i});
    const double pi = continuous_output(c, data.features[i], m).pi;
    const double diff = pi - static_cast<double>(data.labels[i]);
    total += diff * diff;
  }
  total *= 0.5;
  if (l2_penalty > 0.0) {
    double sq = 0.0;
    for (double t : c.theta) sq += t * t;
    total += 0.5 * l2_penalty * sq;
  }
  return total;
}

void sgd_step(Classifier &c, const std::vector<double> &x, double y,
              const TrainConfig &cfg, double learning_rate, Velocity &velocity,
              const std::vector<bool> *mask) {
  if (velocity.theta.size() != c.theta.size()) {
    velocity.theta.assign(c.theta.size(), 0.0);
    velocity.bias = 0.0;
  }
  const SampleGradient g =
      grad_cost_sample(c, x, y, cfg.gradient, cfg.estimator, mask);

  // Parameters of masked slots keep both value and velocity.
  std::vector<bool> frozen(c.theta.size(), false);
  if (mask != nullptr) {
    for (std::size_t i = 0; i < c.spec.slots.size(); ++i) {
      if (!(*mask)[i]) continue;
      const GateSlot &slot = c.spec.slots[i];
      for (int w = 0; w < slot_param_width(slot.kind); ++w) {
        frozen[slot.param_offset + w] = true;
      }
    }
  }
  for (std::size_t mu = 0; mu < c.theta.size(); ++mu) {
    if (frozen[mu]) continue;
    double grad = g.theta[mu];
    if (cfg.l2_penalty > 0.0) grad += cfg.l2_penalty * c.theta[mu];
    velocity.theta[mu] = cfg.momentum * velocity.theta[mu] + grad;
    c.theta[mu] -= learning_rate * velocity.theta[mu];
  }
  velocity.bias = cfg.momentum * velocity.bias + g.bias;
  c.bias -= learning_rate * velocity.bias;
}

DropoutState rotate_dropout(int n_qubits, int dropout_interval,
                            bool include_none, Rng &rng) {
  DropoutState state;
  state.remaining_epochs = dropout_interval;
  const std::uint64_t choices =
      static_cast<std::uint64_t>(n_qubits) + (include_none ? 1 : 0);
  const std::uint64_t pick = rng.uniform_int(choices);
  if (pick < static_cast<std::uint64_t>(n_qubits)) {
    state.dropped = static_cast<int>(pick);
  }
  return state;
}

std::vector<bool> dropout_mask(const CircuitSpec &spec, int dropped) {
  std::vector<bool> mask(spec.slots.size(), false);
  for (std::size_t i = 0; i < spec.slots.size(); ++i) {
    mask[i] = spec.slots[i].touches(dropped);
  }
  return mask;
}

double classifier_error(const Classifier &c, const Dataset &data) {
  if (data.size() == 0) return 0.0;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Prediction pred =
        continuous_output(c, data.features[i], EstimatorMode::exact());
    if (pred.label != data.labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

TrainResult train(const CircuitSpec &spec, const Preprocessor &prep,
                  const Dataset &data, const TrainConfig &cfg) {
  if (data.size() == 0) {
    throw ConfigError("train: empty dataset");
  }
  for (int label : data.labels) {
    if (label != 0 && label != 1) {
      throw ConfigError("train: labels must be binary (got " +
                        std::to_string(label) + "); apply one_vs_all first");
    }
  }
  if (cfg.epochs < 1 || cfg.learning_rate <= 0.0) {
    throw ConfigError("train: epochs must be >= 1 and learning rate positive");
  }

  TrainResult result;
  result.classifier.spec = spec;
  result.classifier.preprocessor = prep;
  auto [theta, bias] = init_params(spec, cfg.seed);
  result.classifier.theta = std::move(theta);
  result.classifier.bias = bias;

  Velocity velocity;
  velocity.theta.assign(spec.param_len, 0.0);

  Rng shuffle_rng(derive_seed(cfg.seed, {0x5817}));
  Rng dropout_rng(derive_seed(cfg.seed, {0xd807}));
  Rng shot_rng(derive_seed(cfg.seed, {0x9707}));

  DropoutState dropout;
  std::vector<bool> mask;
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  double lr = cfg.learning_rate;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (cfg.dropout_interval > 0) {
      if (dropout.remaining_epochs == 0) {
        dropout = rotate_dropout(spec.n_qubits, cfg.dropout_interval,
                                 cfg.dropout_include_none, dropout_rng);
        mask = dropout.dropped.has_value()
                   ? dropout_mask(spec, *dropout.dropped)
                   : std::vector<bool>(spec.slots.size(), false);
      }
      --dropout.remaining_epochs;
    }
    const std::vector<bool> *mask_ptr =
        (cfg.dropout_interval > 0 && dropout.dropped.has_value()) ? &mask
                                                                  : nullptr;

    // Fisher-Yates reshuffle per epoch; every sample visited exactly once.
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[shuffle_rng.uniform_int(i)]);
    }

    TrainConfig step_cfg = cfg;
    for (std::size_t step = 0; step < order.size(); ++step) {
      if (!cfg.estimator.is_exact()) {
        step_cfg.estimator.seed = shot_rng.next_u64();
      }
      if (cfg.gradient.kind == GradientMode::Kind::HadamardShots) {
        step_cfg.gradient.seed = shot_rng.next_u64();
      }
      const std::size_t idx = order[step];
      sgd_step(result.classifier, data.features[idx],
               static_cast<double>(data.labels[idx]), step_cfg, lr, velocity,
               mask_ptr);
    }

    EpochRecord record;
    record.epoch = epoch;
    record.cost = cost(result.classifier, data, EstimatorMode::exact(),
                       cfg.l2_penalty);
    record.train_error = classifier_error(result.classifier, data);
    record.dropped_qubit =
        (cfg.dropout_interval > 0 && dropout.dropped.has_value())
            ? *dropout.dropped
            : -1;
    result.log.push_back(record);

    lr *= cfg.lr_decay;
  }
  return result;
}

}  // namespace qvc
