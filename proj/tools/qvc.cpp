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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qvc/data.hpp"
#include "qvc/errors.hpp"
#include "qvc/experiments.hpp"
#include "qvc/gradient.hpp"
#include "qvc/kernels.hpp"
#include "qvc/serialize.hpp"

namespace {

using namespace qvc;

struct CommonOpts {
  std::string data_path;
  int label_column = -1;
  std::string delimiter = ",";
  bool header = false;

  std::vector<int> ranges{1};
  bool final_gate = true;
  double pad_value = 0.0;
  int copies = 1;

  double learning_rate = 0.05;
  int epochs = 100;
  double momentum = 0.0;
  int dropout_interval = 0;
  bool dropout_include_none = true;
  double lr_decay = 1.0;

  std::uint64_t seed = 1;
  int threads = 1;
  std::string estimator = "exact";
  std::string gradient = "exact";
  std::string out_dir = ".";
};

EstimatorMode parse_estimator(const std::string &text, std::uint64_t seed) {
  if (text == "exact") return EstimatorMode::exact();
  if (text.rfind("shots:", 0) == 0) {
    const int shots = std::stoi(text.substr(6));
    if (shots < 1) throw ConfigError("estimator shots must be positive");
    return EstimatorMode::with_shots(shots, seed);
  }
  throw ConfigError("estimator must be 'exact' or 'shots:<S>', got '" + text +
                    "'");
}

GradientMode parse_gradient(const std::string &text, std::uint64_t seed) {
  if (text == "exact") return GradientMode::exact_lcu();
  if (text.rfind("shots:", 0) == 0) {
    const int shots = std::stoi(text.substr(6));
    if (shots < 1) throw ConfigError("gradient shots must be positive");
    return GradientMode::hadamard_shots(shots, seed);
  }
  throw ConfigError("gradient must be 'exact' or 'shots:<S>', got '" + text +
                    "'");
}

void add_data_options(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("--data", o.data_path, "input CSV file")->required();
  cmd->add_option("--label-column", o.label_column,
                  "label column index (-1 = last)");
  cmd->add_option("--delimiter", o.delimiter, "field delimiter");
  cmd->add_flag("--header", o.header, "skip the first line");
}

void add_arch_options(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("--ranges", o.ranges,
                  "control ranges of the code blocks, e.g. --ranges 1 3");
  cmd->add_flag("!--no-final-gate", o.final_gate,
                "drop the trailing single gate on qubit 0");
  cmd->add_option("--pad-value", o.pad_value,
                  "padding constant for non-power-of-two inputs");
  cmd->add_option("--copies", o.copies, "tensorial feature-map copies");
}

void add_train_options(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("--learning-rate", o.learning_rate, "SGD learning rate");
  cmd->add_option("--epochs", o.epochs, "training epochs");
  cmd->add_option("--momentum", o.momentum, "momentum coefficient in [0,1)");
  cmd->add_option("--dropout-interval", o.dropout_interval,
                  "epochs between dropout rotations (0 = off)");
  cmd->add_flag("!--no-dropout-none", o.dropout_include_none,
                "dropout rotation must always pick a qubit");
  cmd->add_option("--lr-decay", o.lr_decay,
                  "per-epoch learning-rate decay in (0,1]");
}

void add_global_options(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("--seed", o.seed, "root seed");
  cmd->add_option("--threads", o.threads, "parallel worker cap");
  cmd->add_option("--estimator", o.estimator, "exact | shots:<S>");
  cmd->add_option("--gradient", o.gradient, "exact | shots:<S>");
  cmd->add_option("--out", o.out_dir, "output directory");
}

CsvSchema schema_of(const CommonOpts &o) {
  CsvSchema s;
  s.label_column = o.label_column;
  if (o.delimiter.size() != 1) {
    throw ConfigError("delimiter must be a single character");
  }
  s.delimiter = o.delimiter[0];
  s.header = o.header;
  return s;
}

TrainConfig train_config_of(const CommonOpts &o) {
  TrainConfig cfg;
  cfg.learning_rate = o.learning_rate;
  cfg.epochs = o.epochs;
  cfg.seed = o.seed;
  cfg.momentum = o.momentum;
  cfg.dropout_interval = o.dropout_interval;
  cfg.dropout_include_none = o.dropout_include_none;
  cfg.lr_decay = o.lr_decay;
  cfg.estimator = parse_estimator(o.estimator, derive_seed(o.seed, {0xe5}));
  cfg.gradient = parse_gradient(o.gradient, derive_seed(o.seed, {0x96}));
  return cfg;
}

std::string hash_of(const CommonOpts &o) {
  std::vector<std::pair<std::string, std::string>> kv;
  auto put = [&kv](const std::string &k, const std::string &v) {
    kv.emplace_back(k, v);
  };
  std::ostringstream ranges;
  for (int r : o.ranges) ranges << r << ",";
  put("data", o.data_path);
  put("label-column", std::to_string(o.label_column));
  put("delimiter", o.delimiter);
  put("header", o.header ? "1" : "0");
  put("ranges", ranges.str());
  put("final-gate", o.final_gate ? "1" : "0");
  put("pad-value", std::to_string(o.pad_value));
  put("copies", std::to_string(o.copies));
  put("learning-rate", std::to_string(o.learning_rate));
  put("epochs", std::to_string(o.epochs));
  put("momentum", std::to_string(o.momentum));
  put("dropout-interval", std::to_string(o.dropout_interval));
  put("dropout-include-none", o.dropout_include_none ? "1" : "0");
  put("lr-decay", std::to_string(o.lr_decay));
  put("seed", std::to_string(o.seed));
  put("estimator", o.estimator);
  put("gradient", o.gradient);
  return config_hash_hex(kv);
}

Preprocessor preprocessor_of(const CommonOpts &o, int n_features) {
  Preprocessor prep;
  prep.input_dim = n_features;
  prep.pad_value = o.pad_value;
  prep.copies = o.copies;
  return prep;
}

int cmd_describe(const CommonOpts &o, int explicit_features) {
  int n_features = explicit_features;
  if (n_features <= 0) {
    const CsvLoad load = load_csv(o.data_path, schema_of(o));
    n_features = load.dataset.n_features;
    std::printf("dataset: %zu samples, %d features, %d classes\n",
                load.dataset.size(), load.dataset.n_features,
                load.dataset.n_classes);
  }
  const Preprocessor prep = preprocessor_of(o, n_features);
  const int n = prep.n_qubits();
  const CircuitSpec spec = build_architecture(n, o.ranges, o.final_gate);
  std::printf("encoding: %d features -> %d amplitudes -> %d qubits%s\n",
              n_features, prep.padded_dim(), n,
              prep.copies > 1 ? (" (" + std::to_string(prep.copies) +
                                 " tensorial copies)").c_str()
                              : "");
  for (int r : o.ranges) {
    std::printf("block r=%d: %d single + %d controlled gates\n", r, n,
                n / std::gcd(n, r));
  }
  if (o.final_gate) std::printf("final gate on qubit 0\n");
  const int gates = static_cast<int>(spec.slots.size());
  std::printf("%d gates, %d parameters\n", gates, spec.param_len + 1);
  return 0;
}

int cmd_train(const CommonOpts &o, int positive_class,
              const std::string &model_name) {
  const CsvLoad load = load_csv(o.data_path, schema_of(o));
  if (load.skipped_rows > 0) {
    std::fprintf(stderr, "note: skipped %d rows with missing values\n",
                 load.skipped_rows);
  }
  Dataset data = load.dataset;
  if (data.n_classes > 2) {
    if (positive_class < 0) {
      throw ConfigError(
          "multi-class dataset: pick a one-vs-all task with --positive-class");
    }
    data = one_vs_all(data, positive_class);
  } else if (positive_class >= 0) {
    data = one_vs_all(data, positive_class);
  }

  const Preprocessor prep = preprocessor_of(o, data.n_features);
  const CircuitSpec spec =
      build_architecture(prep.n_qubits(), o.ranges, o.final_gate);
  const TrainConfig cfg = train_config_of(o);

  const TrainResult result = train(spec, prep, data, cfg);

  std::filesystem::create_directories(o.out_dir);
  const std::string model_path = o.out_dir + "/" + model_name;
  save_model(ModelFile::from_classifier(result.classifier, o.ranges,
                                        o.final_gate, o.seed, hash_of(o)),
             model_path);
  const std::string metrics_path = o.out_dir + "/metrics.jsonl";
  std::ofstream metrics(metrics_path);
  if (!metrics) throw ConfigError("cannot write " + metrics_path);
  for (const EpochRecord &rec : result.log) {
    metrics << epoch_record_json(rec) << "\n";
  }
  const EpochRecord &last = result.log.back();
  std::printf("trained %d epochs: cost %.6f, train error %.3f\n", o.epochs,
              last.cost, last.train_error);
  std::printf("model: %s\nmetrics: %s\nconfig hash: %s\n", model_path.c_str(),
              metrics_path.c_str(), hash_of(o).c_str());
  return 0;
}

int cmd_predict(const CommonOpts &o, const std::string &model_path) {
  const ModelFile m = load_model(model_path);
  const Classifier c = m.to_classifier();
  const CsvLoad load = load_csv(o.data_path, schema_of(o));
  const EstimatorMode mode =
      parse_estimator(o.estimator, derive_seed(o.seed, {0xe5}));
  std::vector<int> predictions;
  std::printf("# row p pi label\n");
  for (std::size_t i = 0; i < load.dataset.size(); ++i) {
    EstimatorMode row_mode = mode;
    if (!mode.is_exact()) row_mode.seed = derive_seed(mode.seed, {i});
    const Prediction pred =
        continuous_output(c, load.dataset.features[i], row_mode);
    predictions.push_back(pred.label);
    std::printf("%zu %.10f %.10f %d\n", i, pred.p, pred.pi, pred.label);
  }
  if (load.dataset.n_classes == 2) {
    std::printf("error rate: %.4f\n",
                misclassification_rate(predictions, load.dataset.labels));
  }
  return 0;
}

int cmd_crossval(const CommonOpts &o, int folds, int repetitions) {
  const CsvLoad load = load_csv(o.data_path, schema_of(o));
  const Dataset &data = load.dataset;
  const Preprocessor prep = preprocessor_of(o, data.n_features);
  const CircuitSpec spec =
      build_architecture(prep.n_qubits(), o.ranges, o.final_gate);
  const TrainConfig cfg = train_config_of(o);
  const FoldPlan plan = make_folds(data, folds, repetitions, o.seed);

  const Metrics metrics = crossval_run(data, spec, prep, cfg, plan, o.threads);

  std::filesystem::create_directories(o.out_dir);
  const std::string cells_path = o.out_dir + "/crossval_cells.jsonl";
  std::ofstream cells(cells_path);
  for (std::size_t i = 0; i < metrics.test_errors.size(); ++i) {
    cells << "{\"cell\":" << i << ",\"train_error\":" << metrics.train_errors[i]
          << ",\"test_error\":" << metrics.test_errors[i]
          << ",\"ensemble_test_error\":" << metrics.ensemble_test_errors[i]
          << "}\n";
  }
  std::printf("%d-fold crossvalidation, %d repetitions (config hash %s)\n",
              folds, repetitions, hash_of(o).c_str());
  std::printf("train/test: %.3f/%.3f (std %.3f/%.3f)\n", metrics.train_mean,
              metrics.test_mean, metrics.train_std, metrics.test_std);
  if (data.n_classes > 2) {
    std::printf("ensemble argmax test error: %.3f\n",
                metrics.ensemble_test_mean);
  }
  std::printf("cells: %s\n", cells_path.c_str());
  return 0;
}

int cmd_gradcheck(const CommonOpts &o, int instances, double tolerance) {
  Rng rng(o.seed);
  double max_rel = 0.0;
  int failures = 0;
  int checked = 0;
  for (int inst = 0; inst < instances; ++inst) {
    const int n = 2 + static_cast<int>(rng.uniform_int(5));  // 2..6
    const int blocks = 1 + static_cast<int>(rng.uniform_int(2));
    std::vector<int> ranges;
    for (int b = 0; b < blocks; ++b) {
      ranges.push_back(1 + static_cast<int>(rng.uniform_int(n - 1)));
    }
    Classifier c;
    c.spec = build_architecture(n, ranges, true);
    c.preprocessor.input_dim = 1 << n;
    c.theta.resize(c.spec.param_len);
    for (double &t : c.theta) t = rng.uniform(0.0, 2.0 * kPi);
    c.bias = rng.uniform(-0.2, 0.2);
    std::vector<double> x(c.preprocessor.input_dim);
    for (double &v : x) v = rng.uniform(-1.0, 1.0);

    for (int mu = 0; mu < c.spec.param_len; ++mu) {
      const double lcu = grad_pi(c, x, mu, GradientMode::exact_lcu());
      const double fd = finite_difference_pi(c, x, mu, 1e-5);
      const double err = std::abs(lcu - fd);
      const double rel = err / std::max(1.0, std::abs(fd));
      max_rel = std::max(max_rel, rel);
      if (err > std::max(tolerance * std::max(1.0, std::abs(fd)), 1e-8)) {
        ++failures;
      }
      ++checked;
    }
  }
  std::printf("gradcheck: %d instances, %d parameters checked\n", instances,
              checked);
  std::printf("max relative deviation: %.3e (tolerance %.1e)\n", max_rel,
              tolerance);
  if (failures > 0) {
    std::fprintf(stderr, "gradcheck FAILED: %d parameters out of tolerance\n",
                 failures);
    return 1;
  }
  std::printf("gradcheck passed\n");
  return 0;
}

int cmd_noise(const CommonOpts &o, const std::string &model_path,
              std::vector<double> levels, int trials,
              const std::string &target, double bound_delta,
              int bound_trials) {
  const ModelFile m = load_model(model_path);
  const Classifier c = m.to_classifier();
  const CsvLoad load = load_csv(o.data_path, schema_of(o));
  Dataset data = load.dataset;
  if (data.n_classes > 2) {
    throw ConfigError("noise sweeps need a binary (or one-vs-all) dataset");
  }

  NoiseSpec spec;
  spec.trials = trials;
  spec.seed = o.seed;
  spec.target = target == "inputs" ? NoiseSpec::Target::Inputs
                                   : NoiseSpec::Target::Parameters;
  std::printf("# level mean std max min%s\n",
              classifier_error(c, data) <= 0.0 ? "   (absolute fallback)" : "");
  for (double level : levels) {
    spec.level = level;
    const NoiseReport report = spec.target == NoiseSpec::Target::Inputs
                                   ? input_noise_sweep(c, data, spec)
                                   : noise_sweep(c, data, spec);
    std::printf("%.4g %.4f %.4f %.4f %.4f\n", level, report.mean,
                report.stddev, report.max, report.min);
  }
  if (bound_delta > 0.0) {
    const PropagationReport prop = propagation_bound_check(
        c.spec, c.theta, bound_delta, bound_trials, o.seed);
    std::printf(
        "propagation bound: delta %.2e, bound %.4e, max deviation %.4e "
        "(ratio %.3f)%s\n",
        prop.delta, prop.bound, prop.max_deviation, prop.max_ratio,
        prop.violated ? " VIOLATED" : "");
    if (prop.violated) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"circuit-centric quantum classifier toolkit"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  CommonOpts o;

  CLI::App *train_cmd = app.add_subcommand("train", "train a classifier");
  int positive_class = -1;
  std::string model_name = "model.json";
  add_data_options(train_cmd, o);
  add_arch_options(train_cmd, o);
  add_train_options(train_cmd, o);
  add_global_options(train_cmd, o);
  train_cmd->add_option("--positive-class", positive_class,
                        "one-vs-all positive class for multi-class data");
  train_cmd->add_option("--model-name", model_name, "model file name");

  CLI::App *predict_cmd = app.add_subcommand("predict", "run inference");
  std::string model_path = "model.json";
  add_data_options(predict_cmd, o);
  add_global_options(predict_cmd, o);
  predict_cmd->add_option("--model", model_path, "trained model file")
      ->required();

  CLI::App *crossval_cmd =
      app.add_subcommand("crossval", "k-fold cross-validation benchmark");
  int folds = 5;
  int repetitions = 10;
  add_data_options(crossval_cmd, o);
  add_arch_options(crossval_cmd, o);
  add_train_options(crossval_cmd, o);
  add_global_options(crossval_cmd, o);
  crossval_cmd->add_option("--folds", folds, "fold count");
  crossval_cmd->add_option("--repetitions", repetitions, "plan repetitions");

  CLI::App *gradcheck_cmd =
      app.add_subcommand("gradcheck", "analytic-vs-numeric gradient parity");
  int instances = 20;
  double tolerance = 1e-6;
  add_global_options(gradcheck_cmd, o);
  gradcheck_cmd->add_option("--instances", instances, "random circuits");
  gradcheck_cmd->add_option("--tolerance", tolerance, "relative tolerance");

  CLI::App *noise_cmd =
      app.add_subcommand("noise", "parameter / input noise sweeps");
  std::vector<double> levels{0.001, 0.01, 0.1};
  int trials = 20;
  std::string target = "parameters";
  double bound_delta = 1e-4;
  int bound_trials = 100;
  add_data_options(noise_cmd, o);
  add_global_options(noise_cmd, o);
  noise_cmd->add_option("--model", model_path, "trained model file")
      ->required();
  noise_cmd->add_option("--levels", levels, "relative noise levels");
  noise_cmd->add_option("--trials", trials, "perturbation trials per level");
  noise_cmd->add_option("--target", target, "parameters | inputs");
  noise_cmd->add_option("--bound-delta", bound_delta,
                        "absolute delta for the propagation bound check "
                        "(0 disables)");
  noise_cmd->add_option("--bound-trials", bound_trials,
                        "propagation bound trials");

  CLI::App *describe_cmd =
      app.add_subcommand("describe", "architecture accounting");
  int explicit_features = -1;
  add_arch_options(describe_cmd, o);
  add_global_options(describe_cmd, o);
  describe_cmd->add_option("--data", o.data_path, "input CSV file");
  describe_cmd->add_option("--label-column", o.label_column,
                           "label column index (-1 = last)");
  describe_cmd->add_option("--delimiter", o.delimiter, "field delimiter");
  describe_cmd->add_flag("--header", o.header, "skip the first line");
  describe_cmd->add_option("--features", explicit_features,
                           "feature count (instead of --data)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return cmd_train(o, positive_class, model_name);
    if (predict_cmd->parsed()) return cmd_predict(o, model_path);
    if (crossval_cmd->parsed()) return cmd_crossval(o, folds, repetitions);
    if (gradcheck_cmd->parsed()) return cmd_gradcheck(o, instances, tolerance);
    if (noise_cmd->parsed()) {
      return cmd_noise(o, model_path, levels, trials, target, bound_delta,
                       bound_trials);
    }
    if (describe_cmd->parsed()) return cmd_describe(o, explicit_features);
  } catch (const ConfigError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ParseError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
