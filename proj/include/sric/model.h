// sric/model.h

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

#ifndef SRIC_MODEL_H_
#define SRIC_MODEL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "sric/corpus.h"
#include "sric/encoder.h"
#include "sric/labels.h"
#include "sric/rng.h"
#include "sric/toy_encoder.h"

namespace sric {

/// Weights of the sentiment, inference and distance losses.
struct LossWeights {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

/// Shared encoder plus the sentiment head (M x d) and relation head (J x d).
/// Copies are deep.
struct ModelState {
  std::unique_ptr<EncoderBackend> backend;
  Matrix sentiment_head;
  Matrix relation_head;
  double dropout_rate = 0.2;
  HashtagMode text_mode = HashtagMode::Segmented;

  ModelState() = default;
  ModelState(std::unique_ptr<EncoderBackend> encoder, std::uint64_t seed,
             double dropout = 0.2, HashtagMode mode = HashtagMode::Segmented);
  ModelState(const ModelState& other);
  ModelState& operator=(const ModelState& other);
  ModelState(ModelState&&) noexcept = default;
  ModelState& operator=(ModelState&&) noexcept = default;
};

/// Gradient of the joint objective, laid out like ModelState.
struct ModelGrads {
  GradList backend;
  Matrix sentiment_head;
  Matrix relation_head;

  static ModelGrads zeros(const ModelState& state);
};

/// One training sample: classifier input text plus the content/hashtag pair
/// when the post has one.
struct Example {
  std::string id;
  std::string text;
  SentimentLabel label = SentimentLabel::Neutral;
  std::optional<PairSample> pair;
};

/// Max-subtracted softmax. Throws Error on non-finite logits.
Vector softmax(const Vector& logits);
Vector sentiment_probs(const ModelState& state, const Vector& z_c);
Vector relation_probs(const ModelState& state, const Vector& z_r);

/// Lowest index among the maximal entries.
int argmax(const Vector& v);

double cosine_similarity(const Vector& a, const Vector& b);
/// 1 - cos(a, b), in [0, 2]. Throws Error("degenerate embedding") on a
/// zero vector.
double cosine_distance(const Vector& a, const Vector& b);

double cross_entropy(const Vector& probs, int target);
/// Mean of indicator(r) * distance over (relation, distance) terms.
double mean_distance_loss(std::span<const std::pair<RelationLabel, double>> terms);

double loss_sentiment(const ModelState& state, std::span<const Example> batch);
double loss_inference(const ModelState& state, std::span<const PairSample> batch);
double loss_distance(const ModelState& state, std::span<const PairSample> batch);
double total_loss(double l_sent, double l_infer, double l_dist, const LossWeights& w);

struct ObjectiveValue {
  double sentiment = 0.0;
  double inference = 0.0;
  double distance = 0.0;
  double total = 0.0;
};

/// Joint objective over a batch. Inference and distance terms average over
/// the examples that carry a pair; a term whose weight is zero is skipped
/// and reported as 0. With `grads` the gradient of `total` is accumulated
/// into it. A non-null `dropout` enables training-mode dropout on the
/// pooled vectors feeding the two heads.
ObjectiveValue compute_objective(const ModelState& state, std::span<const Example> batch,
                                 const LossWeights& weights, ModelGrads* grads = nullptr,
                                 Rng* dropout = nullptr);

SentimentLabel predict_text(const ModelState& state, std::string_view text);
/// Renders the post under the model's hashtag mode, then predicts.
SentimentLabel predict(const ModelState& state, const Post& post, const Lexicon& lexicon);

/// Examples for a set of posts. With `with_pairs`, posts holding a lexicon
/// hashtag get their PairSample.
std::vector<Example> make_examples(std::span<const Post> posts, const Lexicon& lexicon,
                                   HashtagMode mode, bool with_pairs);

/// Fresh toy-backed model whose vocabulary covers every text, t_c and t_h
/// of `train`.
ModelState build_toy_model(std::span<const Example> train, const ToyEncoderConfig& config,
                           std::uint64_t seed, double dropout, HashtagMode mode);

nlohmann::json loss_weights_to_json(const LossWeights& w);
LossWeights loss_weights_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const ModelState& state);
ModelState model_from_json(const nlohmann::json& j);

}  // namespace sric

#endif  // SRIC_MODEL_H_
