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

#include <string>
#include <vector>

#include "qvc/training.hpp"

namespace qvc {

struct CsvSchema {
  int label_column = -1;  // -1 means the last column
  char delimiter = ',';
  bool header = false;
};

struct CsvLoad {
  Dataset dataset;
  int skipped_rows = 0;                  // rows with missing values
  std::vector<std::string> label_names;  // class index -> original label
};

/// Loads a delimited numeric file. Label values (numeric or symbolic) are
/// mapped to contiguous class indices in sorted order. Rows with missing
/// fields are rejected and counted; malformed numerics raise ParseError
/// with the offending line number.
CsvLoad load_csv(const std::string &path, const CsvSchema &schema);

/// Binary relabeling: 1 for the positive class, 0 for the rest.
Dataset one_vs_all(const Dataset &d, int positive_class);

/// Stratified k-fold assignments for several repetitions.
struct FoldPlan {
  int k = 5;
  int repetitions = 1;
  std::uint64_t seed = 0;
  /// assignments[rep][sample] = fold index in [0, k).
  std::vector<std::vector<int>> assignments;
};

/// Builds a seeded stratified plan; every class must have at least k samples.
FoldPlan make_folds(const Dataset &d, int k, int repetitions,
                    std::uint64_t seed);

double misclassification_rate(const std::vector<int> &predictions,
                              const std::vector<int> &labels);

/// Cross-validation outcome. Cells are (repetition, fold) pairs; the
/// per-cell errors average the one-vs-all binary tasks (the headline
/// number), while ensemble_test_errors holds the argmax multiclass error
/// of the per-class ensemble on the same cells.
struct Metrics {
  std::vector<double> train_errors;
  std::vector<double> test_errors;
  std::vector<double> ensemble_test_errors;
  double train_mean = 0.0, train_std = 0.0;
  double test_mean = 0.0, test_std = 0.0;
  double ensemble_test_mean = 0.0;

  void finalize();
};

/// Trains one model per (repetition, fold, one-vs-all task) and aggregates
/// errors. Binary datasets run a single task (positive class 1). Cells run
/// in parallel up to `threads`, each on its own derived seed; aggregation
/// order is fixed, so results do not depend on the thread count.
Metrics crossval_run(const Dataset &data, const CircuitSpec &spec,
                     const Preprocessor &prep, const TrainConfig &cfg,
                     const FoldPlan &plan, int threads = 1);

}  // namespace qvc
