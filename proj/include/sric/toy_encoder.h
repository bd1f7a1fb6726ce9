// sric/toy_encoder.h

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

#ifndef SRIC_TOY_ENCODER_H_
#define SRIC_TOY_ENCODER_H_

#include <cstdint>

#include "sric/encoder.h"

namespace sric {

struct ToyEncoderConfig {
  int dim = 64;
  int max_len = 64;
  double embed_range = 0.1;   // embeddings ~ U(-r, r)
  double init_noise = 0.01;   // projections = I + U(-noise, noise)
};

/// Desk-scale stand-in for a pretrained transformer: summed token, position
/// and segment embeddings, one single-head self-attention layer with a
/// residual connection, and a tanh pooler on the [CLS] position.
///
/// Only the [CLS] row of the attention output is ever pooled, so the layer
/// computes that row alone:
///
///   h   = e_0 + sum_j softmax_j(q . k_j / sqrt(d)) v_j
///   out = tanh(W_pool h + b_pool)
///
/// with q = W_q e_0, k_j = W_k e_j, v_j = W_v e_j.
class ToyEncoder final : public EncoderBackend {
 public:
  enum ParamIndex : std::size_t {
    kToken = 0,   // d x V, one column per vocabulary id
    kPosition,    // d x max_len
    kSegment,     // d x 2
    kQuery,       // d x d
    kKey,
    kValue,
    kPool,
    kPoolBias,    // d x 1
    kNumParams
  };

  static constexpr const char* kName = "toy";

  ToyEncoder(Vocabulary vocab, const ToyEncoderConfig& config, std::uint64_t seed);
  static std::unique_ptr<ToyEncoder> from_json(const nlohmann::json& j);

  std::string backend_name() const override { return kName; }
  Eigen::Index dim() const override { return config_.dim; }
  std::size_t max_len() const override { return static_cast<std::size_t>(config_.max_len); }
  const Vocabulary& vocabulary() const { return vocab_; }
  const ToyEncoderConfig& config() const { return config_; }

  TokenSequence tokenize(std::string_view text) const override;
  TokenSequence tokenize_pair(std::string_view t_c, std::string_view t_h) const override;

  Vector forward(const TokenSequence& seq) const override;
  void backward(const TokenSequence& seq, const Vector& grad_output,
                GradList& grads) const override;

  ParamList& params() override { return params_; }
  const ParamList& params() const override { return params_; }

  std::unique_ptr<EncoderBackend> clone() const override;
  nlohmann::json to_json() const override;

 private:
  // Only the [CLS] row of the attention is ever needed, so the key and
  // value projections are applied to d-vectors instead of d x n matrices:
  // scores = X^T (Wk^T q) and Wv X a = Wv (X a).
  struct Activations {
    Matrix inputs;  // d x n summed embeddings
    Vector query;
    Vector key_probe;  // Wk^T q
    Vector attention;
    Vector context;  // inputs * attention
    Vector hidden;
    Vector output;
  };

  ToyEncoder(Vocabulary vocab, const ToyEncoderConfig& config);
  Activations run(const TokenSequence& seq) const;

  Vocabulary vocab_;
  ToyEncoderConfig config_;
  ParamList params_;
};

}  // namespace sric

#endif  // SRIC_TOY_ENCODER_H_
