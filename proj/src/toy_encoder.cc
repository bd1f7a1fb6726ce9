// toy_encoder.cc

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

#include "sric/toy_encoder.h"

#include <cmath>

#include "sric/rng.h"

namespace sric {

namespace {

Matrix uniform_matrix(Eigen::Index rows, Eigen::Index cols, double range, Rng& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.uniform(-range, range);
  return m;
}

Matrix near_identity(Eigen::Index d, double noise, Rng& rng) {
  return Matrix::Identity(d, d) + uniform_matrix(d, d, noise, rng);
}

}  // namespace

ToyEncoder::ToyEncoder(Vocabulary vocab, const ToyEncoderConfig& config)
    : vocab_(std::move(vocab)), config_(config) {
  if (config_.dim < 1) throw Error("toy encoder dim must be positive");
  if (config_.max_len < 3) throw Error("toy encoder max_len must be at least 3");
}

ToyEncoder::ToyEncoder(Vocabulary vocab, const ToyEncoderConfig& config, std::uint64_t seed)
    : ToyEncoder(std::move(vocab), config) {
  Rng rng(seed);
  const Eigen::Index d = config_.dim;
  const auto v = static_cast<Eigen::Index>(vocab_.size());
  params_.resize(kNumParams);
  params_[kToken] = {"token_embedding", uniform_matrix(d, v, config_.embed_range, rng)};
  params_[kPosition] = {"position_embedding",
                        uniform_matrix(d, config_.max_len, config_.embed_range, rng)};
  params_[kSegment] = {"segment_embedding", uniform_matrix(d, 2, config_.embed_range, rng)};
  params_[kQuery] = {"attention_query", near_identity(d, config_.init_noise, rng)};
  params_[kKey] = {"attention_key", near_identity(d, config_.init_noise, rng)};
  params_[kValue] = {"attention_value", near_identity(d, config_.init_noise, rng)};
  params_[kPool] = {"pool_weight", near_identity(d, config_.init_noise, rng)};
  params_[kPoolBias] = {"pool_bias", Matrix::Zero(d, 1)};
}

TokenSequence ToyEncoder::tokenize(std::string_view text) const {
  return sric::tokenize(vocab_, text, max_len());
}

TokenSequence ToyEncoder::tokenize_pair(std::string_view t_c, std::string_view t_h) const {
  return sric::tokenize_pair(vocab_, t_c, t_h, max_len());
}

ToyEncoder::Activations ToyEncoder::run(const TokenSequence& seq) const {
  const auto n = static_cast<Eigen::Index>(seq.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(config_.dim));
  const Matrix& tok = params_[kToken].value;
  const Matrix& pos = params_[kPosition].value;
  const Matrix& seg = params_[kSegment].value;

  Activations a;
  a.inputs.resize(config_.dim, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    int id = seq.tokens[j];
    if (id < 0 || id >= tok.cols()) id = Vocabulary::kUnk;
    a.inputs.col(j) = tok.col(id) + pos.col(j) + seg.col(seq.segment_ids[j]);
  }
  a.query = params_[kQuery].value * a.inputs.col(0);
  a.key_probe = params_[kKey].value.transpose() * a.query;

  Vector scores = (a.inputs.transpose() * a.key_probe) * scale;
  scores.array() -= scores.maxCoeff();
  a.attention = scores.array().exp();
  a.attention /= a.attention.sum();
  a.context = a.inputs * a.attention;

  a.hidden = a.inputs.col(0) + params_[kValue].value * a.context;
  a.output = (params_[kPool].value * a.hidden + params_[kPoolBias].value.col(0))
                 .array()
                 .tanh();
  return a;
}

Vector ToyEncoder::forward(const TokenSequence& seq) const { return run(seq).output; }

void ToyEncoder::backward(const TokenSequence& seq, const Vector& grad_output,
                          GradList& grads) const {
  const Activations a = run(seq);
  const auto n = static_cast<Eigen::Index>(seq.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(config_.dim));
  const Matrix& w_query = params_[kQuery].value;
  const Matrix& w_key = params_[kKey].value;
  const Matrix& w_value = params_[kValue].value;
  const Matrix& w_pool = params_[kPool].value;

  // Pooler.
  Vector d_pre = grad_output.array() * (1.0 - a.output.array().square());
  grads[kPool].noalias() += d_pre * a.hidden.transpose();
  grads[kPoolBias].col(0) += d_pre;
  Vector d_hidden = w_pool.transpose() * d_pre;

  // Residual and attention-weighted values.
  Matrix d_inputs = Matrix::Zero(config_.dim, n);
  d_inputs.col(0) += d_hidden;
  grads[kValue].noalias() += d_hidden * a.context.transpose();
  Vector d_context = w_value.transpose() * d_hidden;
  d_inputs.noalias() += d_context * a.attention.transpose();

  // Softmax over the [CLS] query's scores.
  Vector d_attention = a.inputs.transpose() * d_context;
  double mean = a.attention.dot(d_attention);
  Vector d_scores = (a.attention.array() * (d_attention.array() - mean)).matrix() * scale;

  // scores = X^T Wk^T q
  d_inputs.noalias() += a.key_probe * d_scores.transpose();
  Vector weighted_inputs = a.inputs * d_scores;
  grads[kKey].noalias() += a.query * weighted_inputs.transpose();
  Vector d_query = w_key * weighted_inputs;
  grads[kQuery].noalias() += d_query * a.inputs.col(0).transpose();
  d_inputs.col(0) += w_query.transpose() * d_query;

  // Scatter into the embedding tables.
  for (Eigen::Index j = 0; j < n; ++j) {
    int id = seq.tokens[j];
    if (id < 0 || id >= params_[kToken].value.cols()) id = Vocabulary::kUnk;
    grads[kToken].col(id) += d_inputs.col(j);
    grads[kPosition].col(j) += d_inputs.col(j);
    grads[kSegment].col(seq.segment_ids[j]) += d_inputs.col(j);
  }
}

std::unique_ptr<EncoderBackend> ToyEncoder::clone() const {
  return std::make_unique<ToyEncoder>(*this);
}

nlohmann::json ToyEncoder::to_json() const {
  nlohmann::json tensors = nlohmann::json::array();
  for (const auto& p : params_) {
    auto t = matrix_to_json(p.value);
    t["name"] = p.name;
    tensors.push_back(std::move(t));
  }
  return {{"backend", kName},
          {"dim", config_.dim},
          {"max_len", config_.max_len},
          {"embed_range", config_.embed_range},
          {"init_noise", config_.init_noise},
          {"vocabulary", vocab_.words()},
          {"params", std::move(tensors)}};
}

std::unique_ptr<ToyEncoder> ToyEncoder::from_json(const nlohmann::json& j) {
  if (j.at("backend").get<std::string>() != kName) throw Error("not a toy encoder payload");
  ToyEncoderConfig cfg;
  cfg.dim = j.at("dim").get<int>();
  cfg.max_len = j.at("max_len").get<int>();
  cfg.embed_range = j.value("embed_range", cfg.embed_range);
  cfg.init_noise = j.value("init_noise", cfg.init_noise);
  Vocabulary vocab(j.at("vocabulary").get<std::vector<std::string>>());
  std::unique_ptr<ToyEncoder> enc(new ToyEncoder(std::move(vocab), cfg));
  const auto& tensors = j.at("params");
  if (tensors.size() != kNumParams) throw Error("toy encoder checkpoint has wrong tensor count");
  enc->params_.resize(kNumParams);
  for (std::size_t i = 0; i < kNumParams; ++i)
    enc->params_[i] = {tensors[i].at("name").get<std::string>(), matrix_from_json(tensors[i])};
  const auto d = static_cast<Eigen::Index>(cfg.dim);
  auto expect = [&](std::size_t i, Eigen::Index r, Eigen::Index c) {
    if (enc->params_[i].value.rows() != r || enc->params_[i].value.cols() != c)
      throw Error("toy encoder tensor " + enc->params_[i].name + " has wrong shape");
  };
  expect(kToken, d, static_cast<Eigen::Index>(enc->vocab_.size()));
  expect(kPosition, d, cfg.max_len);
  expect(kSegment, d, 2);
  for (auto i : {kQuery, kKey, kValue, kPool}) expect(i, d, d);
  expect(kPoolBias, d, 1);
  return enc;
}

}  // namespace sric
