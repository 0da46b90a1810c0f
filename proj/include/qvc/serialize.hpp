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
#include <string>
#include <vector>

#include "qvc/model.hpp"
#include "qvc/training.hpp"

namespace qvc {

/// Everything needed to reload a trained model: the architecture recipe,
/// parameters, bias, preprocessing settings and training provenance.
/// Serialized as versioned JSON with round-trip-exact floating point, so a
/// reloaded model predicts bit-identically in Exact mode.
struct ModelFile {
  int format_version = 1;
  int n_qubits = 0;
  std::vector<int> ranges;
  bool final_gate = true;
  std::vector<double> theta;
  double bias = 0.0;
  Preprocessor preprocessor;
  std::uint64_t seed = 0;
  std::string config_hash;

  Classifier to_classifier() const;
  static ModelFile from_classifier(const Classifier &c,
                                   const std::vector<int> &ranges,
                                   bool final_gate, std::uint64_t seed,
                                   const std::string &config_hash);
};

std::string to_json(const ModelFile &m);
ModelFile model_from_json(const std::string &text);

void save_model(const ModelFile &m, const std::string &path);
ModelFile load_model(const std::string &path);

/// One line-delimited JSON record per epoch.
std::string epoch_record_json(const EpochRecord &rec);

/// FNV-1a hash of the canonical key=value listing, hex-encoded. Identical
/// configs hash identically, and the hash is recorded in every output.
std::string config_hash_hex(const std::vector<std::pair<std::string, std::string>> &kv);

}  // namespace qvc
