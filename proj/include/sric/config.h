// sric/config.h

// Copyright 2026  The SRIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SRIC_CONFIG_H_
#define SRIC_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sric/corpus.h"
#include "sric/logistic.h"
#include "sric/toy_encoder.h"
#include "sric/train.h"

namespace sric {

inline constexpr int kFormatVersion = 1;

/// Experiment modes.
enum class Variant {
  NoHashtag,
  RawHashtag,
  SegmentedHashtag,
  Sric,
  SricAugmented,
  LrBaseline,
};

inline constexpr std::array<Variant, 6> kAllVariants = {
    Variant::NoHashtag, Variant::RawHashtag, Variant::SegmentedHashtag,
    Variant::Sric,      Variant::SricAugmented, Variant::LrBaseline};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
/// Classifier input mode of a variant.
HashtagMode variant_mode(Variant v);
/// Whether the variant trains with content/hashtag pairs.
bool variant_uses_pairs(Variant v);

/// Flat run configuration. Keys of the JSON form match the member names.
struct RunConfig {
  std::string corpus;
  std::string corpus_format = "auto";  // auto | jsonl | csv
  std::string lexicon;
  std::string frequency_table;  // empty: the bundled table
  std::string out = "out";
  std::string checkpoint;
  std::string teacher_checkpoint;

  std::string backend = "toy";
  int dim = 64;
  int max_len = 64;

  double learning_rate = 1e-3;
  double weight_decay = 0.01;
  int batch_size = 8;
  int max_epochs = 50;
  int patience = 5;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  // Loss weights for the SRIC variants are searched over {1..weight_grid}^3
  // on validation weighted F1; 0 uses alpha, beta and gamma as given.
  int weight_grid = 5;
  double dropout = 0.2;
  double l2_weight = 1e-3;

  std::string variant = "sric";  // a variant name, or "all" for crossval
  int k = 5;
  double val_fraction = 0.2;
  std::uint64_t seed = 7;
  int jobs = 1;

  int n_per_class = 100;
  double hashtag_rate = 0.5;

  nlohmann::json to_json() const;
  /// Unknown keys and mistyped values raise ConfigError naming the key.
  static RunConfig from_json(const nlohmann::json& j);
  /// Range checks. Throws ConfigError.
  void validate() const;

  TrainConfig train_config() const;
  ToyEncoderConfig encoder_config() const;
  LogisticConfig logistic_config() const;
  Variant parsed_variant() const;
  CorpusFormat parsed_corpus_format() const;
  std::string frequency_table_path() const;

  /// FNV-1a of the canonical JSON without `out` and `jobs`, as 16 hex
  /// digits.
  std::string hash() const;
  /// Fields a trained checkpoint depends on for inference, and their hash.
  nlohmann::json compatibility_fields() const;
  std::string compatibility_hash() const;
};

/// Reads a JSON object file. Throws ConfigError (field "config") when the
/// file is missing or malformed.
nlohmann::json read_config_file(const std::string& path);

/// Throws ConfigError(field) when `path` is empty or does not exist.
void require_path(const std::string& field, const std::string& path);

std::string fnv1a_hex(std::string_view data);

/// {config_hash, compatibility_hash, compatibility, seed, format_version}.
nlohmann::json artifact_meta(const RunConfig& config);

}  // namespace sric

#endif  // SRIC_CONFIG_H_
