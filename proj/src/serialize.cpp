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

#include "qvc/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qvc/errors.hpp"

namespace qvc {

using nlohmann::json;

Classifier ModelFile::to_classifier() const {
  Classifier c;
  c.spec = build_architecture(n_qubits, ranges, final_gate);
  if (static_cast<int>(theta.size()) != c.spec.param_len) {
    throw ConfigError("model file: theta length " +
                      std::to_string(theta.size()) +
                      " does not match the architecture (" +
                      std::to_string(c.spec.param_len) + ")");
  }
  c.theta = theta;
  c.bias = bias;
  c.preprocessor = preprocessor;
  return c;
}

ModelFile ModelFile::from_classifier(const Classifier &c,
                                     const std::vector<int> &ranges,
                                     bool final_gate, std::uint64_t seed,
                                     const std::string &config_hash) {
  ModelFile m;
  m.n_qubits = c.spec.n_qubits;
  m.ranges = ranges;
  m.final_gate = final_gate;
  m.theta = c.theta;
  m.bias = c.bias;
  m.preprocessor = c.preprocessor;
  m.seed = seed;
  m.config_hash = config_hash;
  return m;
}

std::string to_json(const ModelFile &m) {
  json j;
  j["format_version"] = m.format_version;
  j["architecture"] = {{"n_qubits", m.n_qubits},
                       {"ranges", m.ranges},
                       {"final_gate", m.final_gate}};
  j["theta"] = m.theta;
  j["bias"] = m.bias;
  j["preprocessor"] = {{"input_dim", m.preprocessor.input_dim},
                       {"pad_value", m.preprocessor.pad_value},
                       {"copies", m.preprocessor.copies}};
  j["provenance"] = {{"seed", m.seed}, {"config_hash", m.config_hash}};
  return j.dump(2) + "\n";
}

ModelFile model_from_json(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  ModelFile m;
  try {
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != 1) {
      throw ConfigError("model file: unsupported format version " +
                        std::to_string(m.format_version));
    }
    const json &arch = j.at("architecture");
    m.n_qubits = arch.at("n_qubits").get<int>();
    m.ranges = arch.at("ranges").get<std::vector<int>>();
    m.final_gate = arch.at("final_gate").get<bool>();
    m.theta = j.at("theta").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    const json &prep = j.at("preprocessor");
    m.preprocessor.input_dim = prep.at("input_dim").get<int>();
    m.preprocessor.pad_value = prep.at("pad_value").get<double>();
    m.preprocessor.copies = prep.at("copies").get<int>();
    const json &prov = j.at("provenance");
    m.seed = prov.at("seed").get<std::uint64_t>();
    m.config_hash = prov.at("config_hash").get<std::string>();
  } catch (const json::exception &e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  return m;
}

void save_model(const ModelFile &m, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write model file '" + path + "'");
  }
  out << to_json(m);
}

ModelFile load_model(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read model file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

std::string epoch_record_json(const EpochRecord &rec) {
  json j;
  j["epoch"] = rec.epoch;
  j["cost"] = rec.cost;
  j["train_error"] = rec.train_error;
  j["dropped_qubit"] = rec.dropped_qubit;
  return j.dump();
}

std::string config_hash_hex(
    const std::vector<std::pair<std::string, std::string>> &kv) {
  std::vector<std::pair<std::string, std::string>> sorted = kv;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::string &s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto &[key, value] : sorted) {
    mix(key);
    mix("=");
    mix(value);
    mix("\n");
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace qvc
