// sric/encoder.h

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

#ifndef SRIC_ENCODER_H_
#define SRIC_ENCODER_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "sric/common.h"

namespace sric {

/// Token ids of one encoder input. tokens[0] is always [CLS]; a pair input
/// holds exactly one [SEP], and segment ids switch from 0 to 1 after it.
struct TokenSequence {
  std::vector<int> tokens;
  std::vector<int> segment_ids;
  std::optional<std::size_t> sep_index;

  std::size_t size() const { return tokens.size(); }
};

/// Whitespace-token vocabulary with the specials [CLS], [SEP], [UNK] at
/// ids 0, 1, 2.
class Vocabulary {
 public:
  static constexpr int kCls = 0;
  static constexpr int kSep = 1;
  static constexpr int kUnk = 2;

  Vocabulary();
  /// `words` in id order, specials included (checkpoint restore).
  explicit Vocabulary(std::vector<std::string> words);
  /// Every distinct whitespace token of `texts`, sorted.
  static Vocabulary build(std::span<const std::string> texts);

  int id(std::string_view word) const;
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> ids_;
};

/// [CLS] t, truncated to max_len with [CLS] kept.
TokenSequence tokenize(const Vocabulary& vocab, std::string_view text, std::size_t max_len);
/// [CLS] t_c [SEP] t_h. Truncation trims t_c first and touches t_h only
/// when t_h alone does not fit.
TokenSequence tokenize_pair(const Vocabulary& vocab, std::string_view t_c,
                            std::string_view t_h, std::size_t max_len);

struct Param {
  std::string name;
  Matrix value;
};
using ParamList = std::vector<Param>;
/// Gradients aligned index-by-index with a ParamList.
using GradList = std::vector<Matrix>;

GradList zeros_like(const ParamList& params);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// A text encoder producing one d-dimensional pooled vector per input.
/// Implementations must be deterministic for fixed parameters.
class EncoderBackend {
 public:
  virtual ~EncoderBackend() = default;

  virtual std::string backend_name() const = 0;
  virtual Eigen::Index dim() const = 0;
  virtual std::size_t max_len() const = 0;

  virtual TokenSequence tokenize(std::string_view text) const = 0;
  virtual TokenSequence tokenize_pair(std::string_view t_c, std::string_view t_h) const = 0;

  virtual Vector forward(const TokenSequence& seq) const = 0;
  /// Adds d(loss)/d(params) to `grads` given d(loss)/d(forward(seq)).
  virtual void backward(const TokenSequence& seq, const Vector& grad_output,
                        GradList& grads) const = 0;

  virtual ParamList& params() = 0;
  virtual const ParamList& params() const = 0;

  virtual std::unique_ptr<EncoderBackend> clone() const = 0;
  /// Everything needed to rebuild the backend, parameters included.
  virtual nlohmann::json to_json() const = 0;
  /// Whether forward() parallelises internally. Callers must not assume
  /// it does.
  virtual bool parallel_forward() const { return false; }

  Vector encode(std::string_view text) const { return forward(tokenize(text)); }
  Vector encode_pair(std::string_view t_c, std::string_view t_h) const {
    return forward(tokenize_pair(t_c, t_h));
  }
};

using BackendFactory = std::function<std::unique_ptr<EncoderBackend>(const nlohmann::json&)>;

/// Backends restore from checkpoints through this registry, keyed by
/// backend_name(). The toy backend is registered by default.
void register_backend(const std::string& name, BackendFactory factory);
std::unique_ptr<EncoderBackend> backend_from_json(const nlohmann::json& j);

}  // namespace sric

#endif  // SRIC_ENCODER_H_
