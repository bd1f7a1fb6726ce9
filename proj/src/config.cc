// config.cc

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

#include "sric/config.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

namespace sric {

namespace {

using Json = nlohmann::json;

template <typename T>
T get_field(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
    return v.get<std::string>();
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ConfigError(key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
    return v.get<T>();
  } else {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<T>();
  }
}

using Setter = std::function<void(RunConfig&, const Json&, const std::string&)>;

template <typename T>
Setter setter(T RunConfig::*member) {
  return [member](RunConfig& c, const Json& j, const std::string& key) {
    c.*member = get_field<T>(j, key);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"corpus", setter(&RunConfig::corpus)},
      {"corpus_format", setter(&RunConfig::corpus_format)},
      {"lexicon", setter(&RunConfig::lexicon)},
      {"frequency_table", setter(&RunConfig::frequency_table)},
      {"out", setter(&RunConfig::out)},
      {"checkpoint", setter(&RunConfig::checkpoint)},
      {"teacher_checkpoint", setter(&RunConfig::teacher_checkpoint)},
      {"backend", setter(&RunConfig::backend)},
      {"dim", setter(&RunConfig::dim)},
      {"max_len", setter(&RunConfig::max_len)},
      {"learning_rate", setter(&RunConfig::learning_rate)},
      {"weight_decay", setter(&RunConfig::weight_decay)},
      {"batch_size", setter(&RunConfig::batch_size)},
      {"max_epochs", setter(&RunConfig::max_epochs)},
      {"patience", setter(&RunConfig::patience)},
      {"alpha", setter(&RunConfig::alpha)},
      {"beta", setter(&RunConfig::beta)},
      {"gamma", setter(&RunConfig::gamma)},
      {"weight_grid", setter(&RunConfig::weight_grid)},
      {"dropout", setter(&RunConfig::dropout)},
      {"l2_weight", setter(&RunConfig::l2_weight)},
      {"variant", setter(&RunConfig::variant)},
      {"k", setter(&RunConfig::k)},
      {"val_fraction", setter(&RunConfig::val_fraction)},
      {"seed", setter(&RunConfig::seed)},
      {"jobs", setter(&RunConfig::jobs)},
      {"n_per_class", setter(&RunConfig::n_per_class)},
      {"hashtag_rate", setter(&RunConfig::hashtag_rate)},
  };
  return table;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::NoHashtag: return "no_hashtag";
    case Variant::RawHashtag: return "raw_hashtag";
    case Variant::SegmentedHashtag: return "segmented_hashtag";
    case Variant::Sric: return "sric";
    case Variant::SricAugmented: return "sric_augmented";
    case Variant::LrBaseline: return "lr_baseline";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (auto v : kAllVariants)
    if (to_string(v) == name) return v;
  return std::nullopt;
}

HashtagMode variant_mode(Variant v) {
  switch (v) {
    case Variant::NoHashtag: return HashtagMode::Strip;
    case Variant::RawHashtag: return HashtagMode::Raw;
    default: return HashtagMode::Segmented;
  }
}

bool variant_uses_pairs(Variant v) { return v == Variant::Sric || v == Variant::SricAugmented; }

Json RunConfig::to_json() const {
  return {{"corpus", corpus},
          {"corpus_format", corpus_format},
          {"lexicon", lexicon},
          {"frequency_table", frequency_table},
          {"out", out},
          {"checkpoint", checkpoint},
          {"teacher_checkpoint", teacher_checkpoint},
          {"backend", backend},
          {"dim", dim},
          {"max_len", max_len},
          {"learning_rate", learning_rate},
          {"weight_decay", weight_decay},
          {"batch_size", batch_size},
          {"max_epochs", max_epochs},
          {"patience", patience},
          {"alpha", alpha},
          {"beta", beta},
          {"gamma", gamma},
          {"weight_grid", weight_grid},
          {"dropout", dropout},
          {"l2_weight", l2_weight},
          {"variant", variant},
          {"k", k},
          {"val_fraction", val_fraction},
          {"seed", seed},
          {"jobs", jobs},
          {"n_per_class", n_per_class},
          {"hashtag_rate", hashtag_rate}};
}

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  RunConfig c;
  const auto& table = setters();
  for (const auto& [key, value] : j.items()) {
    auto it = table.find(key);
    if (it == table.end()) throw ConfigError(key, "unknown configuration key");
    it->second(c, j, key);
  }
  return c;
}

void RunConfig::validate() const {
  if (corpus_format != "auto" && corpus_format != "jsonl" && corpus_format != "csv")
    throw ConfigError("corpus_format", "must be auto, jsonl or csv");
  if (backend != "toy") throw ConfigError("backend", "unknown encoder backend '" + backend + "'");
  if (dim < 1) throw ConfigError("dim", "must be positive");
  if (max_len < 3) throw ConfigError("max_len", "must be at least 3");
  if (!(dropout >= 0.0 && dropout < 1.0)) throw ConfigError("dropout", "must lie in [0, 1)");
  if (weight_grid < 0) throw ConfigError("weight_grid", "must be non-negative");
  if (!(l2_weight >= 0.0)) throw ConfigError("l2_weight", "must be non-negative");
  if (variant != "all" && !parse_variant(variant))
    throw ConfigError("variant", "unknown variant '" + variant + "'");
  if (k < 2) throw ConfigError("k", "must be at least 2");
  if (!(val_fraction > 0.0 && val_fraction < 1.0))
    throw ConfigError("val_fraction", "must lie in (0, 1)");
  if (jobs < 1) throw ConfigError("jobs", "must be positive");
  if (n_per_class < 1) throw ConfigError("n_per_class", "must be positive");
  if (!(hashtag_rate >= 0.0 && hashtag_rate <= 1.0))
    throw ConfigError("hashtag_rate", "must lie in [0, 1]");
  train_config().validate();
}

TrainConfig RunConfig::train_config() const {
  TrainConfig t;
  t.learning_rate = learning_rate;
  t.weight_decay = weight_decay;
  t.batch_size = batch_size;
  t.max_epochs = max_epochs;
  t.patience = patience;
  t.seed = seed;
  t.weights = {alpha, beta, gamma};
  return t;
}

ToyEncoderConfig RunConfig::encoder_config() const {
  ToyEncoderConfig e;
  e.dim = dim;
  e.max_len = static_cast<std::size_t>(max_len);
  return e;
}

LogisticConfig RunConfig::logistic_config() const {
  LogisticConfig l;
  l.l2_weight = l2_weight;
  return l;
}

Variant RunConfig::parsed_variant() const {
  auto v = parse_variant(variant);
  if (!v) throw ConfigError("variant", "expected a single variant, got '" + variant + "'");
  return *v;
}

CorpusFormat RunConfig::parsed_corpus_format() const {
  if (corpus_format == "csv") return CorpusFormat::Csv;
  if (corpus_format == "jsonl") return CorpusFormat::Jsonl;
  return format_from_path(corpus);
}

std::string RunConfig::frequency_table_path() const {
  return frequency_table.empty() ? std::string(SRIC_DATA_DIR) + "/word_freq_en_50k.tsv"
                                 : frequency_table;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Output location and worker count do not change any result.
std::string RunConfig::hash() const {
  Json j = to_json();
  j.erase("out");
  j.erase("jobs");
  return fnv1a_hex(j.dump());
}

Json RunConfig::compatibility_fields() const {
  return {{"backend", backend}, {"dim", dim}, {"max_len", max_len}, {"variant", variant}};
}

std::string RunConfig::compatibility_hash() const {
  return fnv1a_hex(compatibility_fields().dump());
}

Json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open config file '" + path + "'");
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw ConfigError("config", "config file must hold a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
}

void require_path(const std::string& field, const std::string& path) {
  if (path.empty()) throw ConfigError(field, "path is required");
  if (!std::filesystem::exists(path)) throw ConfigError(field, "path does not exist: " + path);
}

Json artifact_meta(const RunConfig& config) {
  return {{"config_hash", config.hash()},
          {"compatibility_hash", config.compatibility_hash()},
          {"compatibility", config.compatibility_fields()},
          {"seed", config.seed},
          {"format_version", kFormatVersion}};
}

}  // namespace sric
