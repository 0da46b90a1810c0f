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

#include "qvc/data.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "qvc/errors.hpp"

namespace qvc {

namespace {

std::vector<std::string> split_line(const std::string &line, char delim) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, delim)) fields.push_back(field);
  if (!line.empty() && line.back() == delim) fields.push_back("");
  return fields;
}

std::string trim(const std::string &s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

CsvLoad load_csv(const std::string &path, const CsvSchema &schema) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  CsvLoad out;
  std::map<std::string, std::vector<std::size_t>> by_label;
  std::vector<std::string> row_labels;

  std::string line;
  int line_no = 0;
  int width = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (schema.header && line_no == 1) continue;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_line(line, schema.delimiter);
    if (width == -1) {
      width = static_cast<int>(fields.size());
      if (width < 2) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": need at least one feature and a label column");
      }
    } else if (static_cast<int>(fields.size()) != width) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": row has " + std::to_string(fields.size()) +
                       " fields, expected " + std::to_string(width));
    }
    const int label_col =
        schema.label_column < 0 ? width - 1 : schema.label_column;
    if (label_col >= width) {
      throw ConfigError("label column " + std::to_string(label_col) +
                        " out of range for " + std::to_string(width) +
                        " columns");
    }
    bool missing = false;
    std::vector<double> features;
    features.reserve(width - 1);
    std::string label;
    for (int col = 0; col < width; ++col) {
      const std::string value = trim(fields[col]);
      if (value.empty() || value == "?") {
        missing = true;
        break;
      }
      if (col == label_col) {
        label = value;
        continue;
      }
      try {
        std::size_t pos = 0;
        features.push_back(std::stod(value, &pos));
        if (pos != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception &) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": cannot parse numeric field '" + value + "'");
      }
    }
    if (missing) {
      ++out.skipped_rows;
      continue;
    }
    by_label[label].push_back(out.dataset.features.size());
    row_labels.push_back(label);
    out.dataset.features.push_back(std::move(features));
  }
  if (out.dataset.features.empty()) {
    throw ParseError(path + ": no usable rows");
  }

  // Sorted distinct labels -> contiguous class indices (numeric sort when
  // every label parses as a number, lexicographic otherwise).
  std::vector<std::string> names;
  for (const auto &[name, rows] : by_label) names.push_back(name);
  const bool all_numeric = std::all_of(names.begin(), names.end(), [](const std::string &s) {
    try {
      std::size_t pos = 0;
      (void)std::stod(s, &pos);
      return pos == s.size();
    } catch (const std::exception &) {
      return false;
    }
  });
  if (all_numeric) {
    std::sort(names.begin(), names.end(), [](const std::string &a, const std::string &b) {
      return std::stod(a) < std::stod(b);
    });
  } else {
    std::sort(names.begin(), names.end());
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<int>(i);
  }
  out.label_names = std::move(names);
  out.dataset.labels.reserve(row_labels.size());
  for (const std::string &label : row_labels) {
    out.dataset.labels.push_back(index[label]);
  }
  out.dataset.n_features = static_cast<int>(out.dataset.features[0].size());
  out.dataset.n_classes = static_cast<int>(out.label_names.size());
  return out;
}

Dataset one_vs_all(const Dataset &d, int positive_class) {
  if (positive_class < 0 || positive_class >= d.n_classes) {
    throw ConfigError("one_vs_all: class " + std::to_string(positive_class) +
                      " out of range");
  }
  Dataset out = d;
  out.n_classes = 2;
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    out.labels[i] = d.labels[i] == positive_class ? 1 : 0;
  }
  return out;
}

FoldPlan make_folds(const Dataset &d, int k, int repetitions,
                    std::uint64_t seed) {
  if (k < 2) {
    throw ConfigError("make_folds: k must be >= 2");
  }
  std::vector<std::vector<std::size_t>> by_class(d.n_classes);
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    by_class[d.labels[i]].push_back(i);
  }
  for (int c = 0; c < d.n_classes; ++c) {
    if (static_cast<int>(by_class[c].size()) < k) {
      throw ConfigError("make_folds: class " + std::to_string(c) + " has " +
                        std::to_string(by_class[c].size()) +
                        " samples, fewer than k=" + std::to_string(k));
    }
  }
  FoldPlan plan;
  plan.k = k;
  plan.repetitions = repetitions;
  plan.seed = seed;
  plan.assignments.assign(repetitions, std::vector<int>(d.size(), 0));
  for (int rep = 0; rep < repetitions; ++rep) {
    Rng rng(derive_seed(seed, {0xf01d, static_cast<std::uint64_t>(rep)}));
    int start = 0;  // rotates so remainder folds differ between classes
    for (int c = 0; c < d.n_classes; ++c) {
      std::vector<std::size_t> rows = by_class[c];
      for (std::size_t i = rows.size(); i > 1; --i) {
        std::swap(rows[i - 1], rows[rng.uniform_int(i)]);
      }
      // Round-robin dealing keeps per-fold class counts within one sample
      // of proportional.
      for (std::size_t pos = 0; pos < rows.size(); ++pos) {
        plan.assignments[rep][rows[pos]] =
            static_cast<int>((pos + start) % static_cast<std::size_t>(k));
      }
      start = static_cast<int>((start + rows.size()) % static_cast<std::size_t>(k));
    }
  }
  return plan;
}

double misclassification_rate(const std::vector<int> &predictions,
                              const std::vector<int> &labels) {
  if (predictions.size() != labels.size()) {
    throw DimensionError("misclassification_rate: length mismatch");
  }
  if (predictions.empty()) return 0.0;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] != labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(predictions.size());
}

namespace {

double mean_of(const std::vector<double> &v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double std_of(const std::vector<double> &v, double mean) {
  if (v.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size()));
}

Dataset subset(const Dataset &d, const std::vector<std::size_t> &rows) {
  Dataset out;
  out.n_features = d.n_features;
  out.n_classes = d.n_classes;
  out.features.reserve(rows.size());
  out.labels.reserve(rows.size());
  for (std::size_t r : rows) {
    out.features.push_back(d.features[r]);
    out.labels.push_back(d.labels[r]);
  }
  return out;
}

}  // namespace

void Metrics::finalize() {
  train_mean = mean_of(train_errors);
  train_std = std_of(train_errors, train_mean);
  test_mean = mean_of(test_errors);
  test_std = std_of(test_errors, test_mean);
  ensemble_test_mean = mean_of(ensemble_test_errors);
}

Metrics crossval_run(const Dataset &data, const CircuitSpec &spec,
                     const Preprocessor &prep, const TrainConfig &cfg,
                     const FoldPlan &plan, int threads) {
  if (plan.assignments.empty() ||
      plan.assignments[0].size() != data.size()) {
    throw ConfigError("crossval_run: fold plan does not match the dataset");
  }
  const std::vector<int> tasks = [&] {
    std::vector<int> t;
    if (data.n_classes > 2) {
      for (int c = 0; c < data.n_classes; ++c) t.push_back(c);
    } else {
      t.push_back(1);
    }
    return t;
  }();

  const int n_cells = plan.repetitions * plan.k;
  struct Cell {
    double train_error = 0.0;
    double test_error = 0.0;
    double ensemble_test_error = 0.0;
  };
  std::vector<Cell> cells(n_cells);

  std::atomic<int> next_cell{0};
  auto worker = [&]() {
    for (;;) {
      const int cell = next_cell.fetch_add(1);
      if (cell >= n_cells) return;
      const int rep = cell / plan.k;
      const int fold = cell % plan.k;

      std::vector<std::size_t> train_rows, test_rows;
      for (std::size_t i = 0; i < data.size(); ++i) {
        (plan.assignments[rep][i] == fold ? test_rows : train_rows).push_back(i);
      }
      const Dataset train_set = subset(data, train_rows);
      const Dataset test_set = subset(data, test_rows);

      std::vector<Classifier> ensemble;
      double train_sum = 0.0, test_sum = 0.0;
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        TrainConfig task_cfg = cfg;
        task_cfg.seed = derive_seed(
            cfg.seed, {static_cast<std::uint64_t>(rep),
                       static_cast<std::uint64_t>(fold),
                       static_cast<std::uint64_t>(t)});
        const Dataset train_bin = one_vs_all(train_set, tasks[t]);
        const Dataset test_bin = one_vs_all(test_set, tasks[t]);
        TrainResult trained = train(spec, prep, train_bin, task_cfg);
        train_sum += classifier_error(trained.classifier, train_bin);
        test_sum += classifier_error(trained.classifier, test_bin);
        ensemble.push_back(std::move(trained.classifier));
      }
      Cell result;
      result.train_error = train_sum / static_cast<double>(tasks.size());
      result.test_error = test_sum / static_cast<double>(tasks.size());
      if (tasks.size() > 1) {
        std::vector<int> predictions;
        predictions.reserve(test_set.size());
        for (const auto &x : test_set.features) {
          predictions.push_back(predict_multiclass(ensemble, x));
        }
        result.ensemble_test_error =
            misclassification_rate(predictions, test_set.labels);
      } else {
        result.ensemble_test_error = result.test_error;
      }
      cells[cell] = result;
    }
  };

  const int n_threads = std::max(1, std::min(threads, n_cells));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }

  Metrics metrics;
  for (const Cell &cell : cells) {
    metrics.train_errors.push_back(cell.train_error);
    metrics.test_errors.push_back(cell.test_error);
    metrics.ensemble_test_errors.push_back(cell.ensemble_test_error);
  }
  metrics.finalize();
  return metrics;
}

}  // namespace qvc
