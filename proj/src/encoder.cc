// encoder.cc

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

#include "sric/encoder.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "sric/corpus.h"
#include "sric/toy_encoder.h"

namespace sric {

Vocabulary::Vocabulary() : Vocabulary(std::vector<std::string>{"[CLS]", "[SEP]", "[UNK]"}) {}

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  if (words_.size() < 3 || words_[kCls] != "[CLS]" || words_[kSep] != "[SEP]" ||
      words_[kUnk] != "[UNK]")
    throw Error("vocabulary must start with [CLS] [SEP] [UNK]");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (!ids_.emplace(words_[i], static_cast<int>(i)).second)
      throw Error("duplicate vocabulary word \"" + words_[i] + "\"");
}

Vocabulary Vocabulary::build(std::span<const std::string> texts) {
  std::set<std::string> distinct;
  for (const auto& text : texts)
    for (auto& token : split_tokens(text)) distinct.insert(std::move(token));
  std::vector<std::string> words = {"[CLS]", "[SEP]", "[UNK]"};
  for (const auto& w : distinct)
    if (w != "[CLS]" && w != "[SEP]" && w != "[UNK]") words.push_back(w);
  return Vocabulary(std::move(words));
}

int Vocabulary::id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnk : it->second;
}

TokenSequence tokenize(const Vocabulary& vocab, std::string_view text, std::size_t max_len) {
  TokenSequence seq;
  seq.tokens.push_back(Vocabulary::kCls);
  for (const auto& word : split_tokens(text)) {
    if (seq.tokens.size() >= max_len) break;
    seq.tokens.push_back(vocab.id(word));
  }
  seq.segment_ids.assign(seq.tokens.size(), 0);
  return seq;
}

TokenSequence tokenize_pair(const Vocabulary& vocab, std::string_view t_c,
                            std::string_view t_h, std::size_t max_len) {
  if (max_len < 3) throw Error("max_len must be at least 3 for pair inputs");
  auto content = split_tokens(t_c);
  auto hashtag = split_tokens(t_h);
  const std::size_t budget = max_len - 2;
  if (hashtag.size() > budget) hashtag.resize(budget);
  if (content.size() > budget - hashtag.size()) content.resize(budget - hashtag.size());

  TokenSequence seq;
  seq.tokens.push_back(Vocabulary::kCls);
  for (const auto& w : content) seq.tokens.push_back(vocab.id(w));
  seq.sep_index = seq.tokens.size();
  seq.tokens.push_back(Vocabulary::kSep);
  seq.segment_ids.assign(seq.tokens.size(), 0);
  for (const auto& w : hashtag) {
    seq.tokens.push_back(vocab.id(w));
    seq.segment_ids.push_back(1);
  }
  return seq;
}

GradList zeros_like(const ParamList& params) {
  GradList grads;
  grads.reserve(params.size());
  for (const auto& p : params) grads.push_back(Matrix::Zero(p.value.rows(), p.value.cols()));
  return grads;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  auto rows = j.at("rows").get<Eigen::Index>();
  auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw Error("matrix payload has wrong size");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[k++].get<double>();
  return m;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, BackendFactory>& registry() {
  static std::map<std::string, BackendFactory> r = {
      {ToyEncoder::kName,
       [](const nlohmann::json& j) -> std::unique_ptr<EncoderBackend> {
         return ToyEncoder::from_json(j);
       }}};
  return r;
}

}  // namespace

void register_backend(const std::string& name, BackendFactory factory) {
  std::lock_guard lock(registry_mutex());
  registry()[name] = std::move(factory);
}

std::unique_ptr<EncoderBackend> backend_from_json(const nlohmann::json& j) {
  std::string name = j.at("backend").get<std::string>();
  BackendFactory factory;
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown encoder backend \"" + name + "\"");
    factory = it->second;
  }
  return factory(j);
}

}  // namespace sric
