// model.cc

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

#include "sric/model.h"

#include <algorithm>
#include <cmath>

#include "sric/relation.h"

namespace sric {

namespace {

// Glorot-uniform head initialization.
Matrix glorot_uniform(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  const double range = std::sqrt(6.0 / static_cast<double>(rows + cols));
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.uniform(-range, range);
  return m;
}

// Inverted dropout mask; all ones in eval mode.
Vector dropout_mask(Eigen::Index d, double rate, Rng* rng) {
  Vector mask = Vector::Ones(d);
  if (rng == nullptr || rate <= 0.0) return mask;
  const double keep = 1.0 - rate;
  for (Eigen::Index i = 0; i < d; ++i) mask[i] = rng->bernoulli(keep) ? 1.0 / keep : 0.0;
  return mask;
}

double norm_or_throw(const Vector& v) {
  double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error("degenerate embedding");
  return n;
}

// Adds d(scale * distance(z, psi))/d(z, psi) into the backend gradients.
void distance_backward(const EncoderBackend& enc, const TokenSequence& seq_z,
                       const TokenSequence& seq_psi, const Vector& z, const Vector& psi,
                       double scale, GradList& grads) {
  const double nz = norm_or_throw(z);
  const double np = norm_or_throw(psi);
  const double cos = z.dot(psi) / (nz * np);
  Vector dz = -scale * (psi / (nz * np) - cos * z / (nz * nz));
  Vector dpsi = -scale * (z / (nz * np) - cos * psi / (np * np));
  enc.backward(seq_z, dz, grads);
  enc.backward(seq_psi, dpsi, grads);
}

}  // namespace

ModelState::ModelState(std::unique_ptr<EncoderBackend> encoder, std::uint64_t seed,
                       double dropout, HashtagMode mode)
    : backend(std::move(encoder)), dropout_rate(dropout), text_mode(mode) {
  if (!backend) throw Error("model needs an encoder backend");
  if (dropout < 0.0 || dropout >= 1.0) throw Error("dropout rate must lie in [0, 1)");
  Rng rng(seed ^ 0x5EEDF00DULL);
  sentiment_head = glorot_uniform(kNumSentiments, backend->dim(), rng);
  relation_head = glorot_uniform(kNumRelations, backend->dim(), rng);
}

ModelState::ModelState(const ModelState& other)
    : backend(other.backend ? other.backend->clone() : nullptr),
      sentiment_head(other.sentiment_head),
      relation_head(other.relation_head),
      dropout_rate(other.dropout_rate),
      text_mode(other.text_mode) {}

ModelState& ModelState::operator=(const ModelState& other) {
  if (this != &other) {
    ModelState copy(other);
    *this = std::move(copy);
  }
  return *this;
}

ModelGrads ModelGrads::zeros(const ModelState& state) {
  return {zeros_like(state.backend->params()),
          Matrix::Zero(state.sentiment_head.rows(), state.sentiment_head.cols()),
          Matrix::Zero(state.relation_head.rows(), state.relation_head.cols())};
}

Vector softmax(const Vector& logits) {
  if (!logits.allFinite()) throw Error("non-finite logits");
  Vector p = (logits.array() - logits.maxCoeff()).exp();
  return p / p.sum();
}

Vector sentiment_probs(const ModelState& state, const Vector& z_c) {
  return softmax(state.sentiment_head * z_c);
}

Vector relation_probs(const ModelState& state, const Vector& z_r) {
  return softmax(state.relation_head * z_r);
}

int argmax(const Vector& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

double cosine_similarity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("cosine of vectors with different sizes");
  double c = a.dot(b) / (norm_or_throw(a) * norm_or_throw(b));
  return std::clamp(c, -1.0, 1.0);
}

double cosine_distance(const Vector& a, const Vector& b) { return 1.0 - cosine_similarity(a, b); }

double cross_entropy(const Vector& probs, int target) { return -std::log(probs[target]); }

double mean_distance_loss(std::span<const std::pair<RelationLabel, double>> terms) {
  if (terms.empty()) throw Error("distance loss over an empty batch");
  double sum = 0.0;
  for (const auto& [relation, distance] : terms) sum += relation_indicator(relation) * distance;
  return sum / static_cast<double>(terms.size());
}

double loss_sentiment(const ModelState& state, std::span<const Example> batch) {
  if (batch.empty()) throw Error("sentiment loss over an empty batch");
  double sum = 0.0;
  for (const auto& ex : batch)
    sum += cross_entropy(sentiment_probs(state, state.backend->encode(ex.text)), index_of(ex.label));
  return sum / static_cast<double>(batch.size());
}

double loss_inference(const ModelState& state, std::span<const PairSample> batch) {
  if (batch.empty()) throw Error("inference loss over an empty batch");
  double sum = 0.0;
  for (const auto& pair : batch)
    sum += cross_entropy(relation_probs(state, state.backend->encode_pair(pair.t_c, pair.t_h)),
                         index_of(pair.relation));
  return sum / static_cast<double>(batch.size());
}

double loss_distance(const ModelState& state, std::span<const PairSample> batch) {
  std::vector<std::pair<RelationLabel, double>> terms;
  terms.reserve(batch.size());
  for (const auto& pair : batch) {
    double distance = 0.0;
    if (relation_indicator(pair.relation) != 0)
      distance = cosine_distance(state.backend->encode(pair.t_c), state.backend->encode(pair.t_h));
    terms.emplace_back(pair.relation, distance);
  }
  return mean_distance_loss(terms);
}

double total_loss(double l_sent, double l_infer, double l_dist, const LossWeights& w) {
  return w.alpha * l_sent + w.beta * l_infer + w.gamma * l_dist;
}

ObjectiveValue compute_objective(const ModelState& state, std::span<const Example> batch,
                                 const LossWeights& weights, ModelGrads* grads, Rng* dropout) {
  if (batch.empty()) throw Error("objective over an empty batch");
  const EncoderBackend& enc = *state.backend;
  const Eigen::Index d = enc.dim();
  const auto n_posts = static_cast<double>(batch.size());
  const auto n_pairs = static_cast<double>(
      std::count_if(batch.begin(), batch.end(), [](const Example& e) { return e.pair.has_value(); }));

  ObjectiveValue value;
  for (const auto& ex : batch) {
    if (weights.alpha != 0.0) {
      TokenSequence seq = enc.tokenize(ex.text);
      Vector mask = dropout_mask(d, state.dropout_rate, dropout);
      Vector z = enc.forward(seq).cwiseProduct(mask);
      Vector p = sentiment_probs(state, z);
      const int target = index_of(ex.label);
      value.sentiment += cross_entropy(p, target) / n_posts;
      if (grads) {
        Vector d_logits = p;
        d_logits[target] -= 1.0;
        d_logits *= weights.alpha / n_posts;
        grads->sentiment_head.noalias() += d_logits * z.transpose();
        Vector dz = (state.sentiment_head.transpose() * d_logits).cwiseProduct(mask);
        enc.backward(seq, dz, grads->backend);
      }
    }
    if (!ex.pair) continue;
    const PairSample& pair = *ex.pair;

    if (weights.beta != 0.0) {
      TokenSequence seq = enc.tokenize_pair(pair.t_c, pair.t_h);
      Vector mask = dropout_mask(d, state.dropout_rate, dropout);
      Vector z = enc.forward(seq).cwiseProduct(mask);
      Vector p = relation_probs(state, z);
      const int target = index_of(pair.relation);
      value.inference += cross_entropy(p, target) / n_pairs;
      if (grads) {
        Vector d_logits = p;
        d_logits[target] -= 1.0;
        d_logits *= weights.beta / n_pairs;
        grads->relation_head.noalias() += d_logits * z.transpose();
        Vector dz = (state.relation_head.transpose() * d_logits).cwiseProduct(mask);
        enc.backward(seq, dz, grads->backend);
      }
    }

    const int indicator = relation_indicator(pair.relation);
    if (weights.gamma != 0.0 && indicator != 0) {
      TokenSequence seq_c = enc.tokenize(pair.t_c);
      TokenSequence seq_h = enc.tokenize(pair.t_h);
      Vector z = enc.forward(seq_c);
      Vector psi = enc.forward(seq_h);
      value.distance += indicator * cosine_distance(z, psi) / n_pairs;
      if (grads)
        distance_backward(enc, seq_c, seq_h, z, psi, weights.gamma * indicator / n_pairs,
                          grads->backend);
    }
  }
  value.total = total_loss(value.sentiment, value.inference, value.distance, weights);
  return value;
}

SentimentLabel predict_text(const ModelState& state, std::string_view text) {
  return kAllSentiments[argmax(sentiment_probs(state, state.backend->encode(text)))];
}

SentimentLabel predict(const ModelState& state, const Post& post, const Lexicon& lexicon) {
  return predict_text(state, render_text(post, lexicon, state.text_mode));
}

std::vector<Example> make_examples(std::span<const Post> posts, const Lexicon& lexicon,
                                   HashtagMode mode, bool with_pairs) {
  std::vector<Example> out;
  out.reserve(posts.size());
  for (const auto& post : posts) {
    Example ex{post.id, render_text(post, lexicon, mode), post.label, std::nullopt};
    if (with_pairs) ex.pair = split_post(post, lexicon);
    out.push_back(std::move(ex));
  }
  return out;
}

ModelState build_toy_model(std::span<const Example> train, const ToyEncoderConfig& config,
                           std::uint64_t seed, double dropout, HashtagMode mode) {
  std::vector<std::string> texts;
  for (const auto& ex : train) {
    texts.push_back(ex.text);
    if (ex.pair) {
      texts.push_back(ex.pair->t_c);
      texts.push_back(ex.pair->t_h);
    }
  }
  auto encoder = std::make_unique<ToyEncoder>(Vocabulary::build(texts), config, seed);
  return ModelState(std::move(encoder), seed, dropout, mode);
}

nlohmann::json loss_weights_to_json(const LossWeights& w) {
  return {{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}};
}

LossWeights loss_weights_from_json(const nlohmann::json& j) {
  return {j.at("alpha").get<double>(), j.at("beta").get<double>(), j.at("gamma").get<double>()};
}

nlohmann::json model_to_json(const ModelState& state) {
  return {{"encoder", state.backend->to_json()},
          {"sentiment_head", matrix_to_json(state.sentiment_head)},
          {"relation_head", matrix_to_json(state.relation_head)},
          {"dropout_rate", state.dropout_rate},
          {"text_mode", std::string(to_string(state.text_mode))}};
}

ModelState model_from_json(const nlohmann::json& j) {
  ModelState state;
  state.backend = backend_from_json(j.at("encoder"));
  state.sentiment_head = matrix_from_json(j.at("sentiment_head"));
  state.relation_head = matrix_from_json(j.at("relation_head"));
  state.dropout_rate = j.at("dropout_rate").get<double>();
  auto mode = parse_hashtag_mode(j.at("text_mode").get<std::string>());
  if (!mode) throw Error("unknown text_mode in checkpoint");
  state.text_mode = *mode;
  const auto d = state.backend->dim();
  if (state.sentiment_head.rows() != kNumSentiments || state.sentiment_head.cols() != d ||
      state.relation_head.rows() != kNumRelations || state.relation_head.cols() != d)
    throw Error("checkpoint heads do not match the encoder dimension");
  return state;
}

}  // namespace sric
