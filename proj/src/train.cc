// train.cc

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

#include "sric/train.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

namespace sric {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate", "must be positive");
  if (weight_decay < 0.0) throw ConfigError("weight_decay", "must be non-negative");
  if (batch_size < 1) throw ConfigError("batch_size", "must be at least 1");
  if (max_epochs < 1) throw ConfigError("max_epochs", "must be at least 1");
  if (patience < 1) throw ConfigError("patience", "must be at least 1");
  if (weights.alpha < 0 || weights.beta < 0 || weights.gamma < 0)
    throw ConfigError("loss_weights", "must be non-negative");
  if (weights.alpha == 0 && weights.beta == 0 && weights.gamma == 0)
    throw ConfigError("loss_weights", "at least one weight must be positive");
}

void AdamW::update(Matrix& param, const Matrix& grad, std::size_t slot) {
  if (slot >= m_.size()) {
    m_.resize(slot + 1);
    v_.resize(slot + 1);
  }
  if (m_[slot].size() == 0) {
    m_[slot] = Matrix::Zero(param.rows(), param.cols());
    v_[slot] = Matrix::Zero(param.rows(), param.cols());
  }
  const double b1 = config_.beta1, b2 = config_.beta2;
  m_[slot] = b1 * m_[slot] + (1.0 - b1) * grad;
  v_[slot] = b2 * v_[slot] + (1.0 - b2) * grad.cwiseProduct(grad);
  const double c1 = 1.0 - std::pow(b1, t_);
  const double c2 = 1.0 - std::pow(b2, t_);
  param *= 1.0 - config_.learning_rate * config_.weight_decay;
  param.array() -= config_.learning_rate * (m_[slot].array() / c1) /
                   ((v_[slot].array() / c2).sqrt() + config_.epsilon);
}

void AdamW::step(ModelState& state, const ModelGrads& grads) {
  ++t_;
  auto& params = state.backend->params();
  for (std::size_t i = 0; i < params.size(); ++i) update(params[i].value, grads.backend[i], i);
  update(state.sentiment_head, grads.sentiment_head, params.size());
  update(state.relation_head, grads.relation_head, params.size() + 1);
}

EarlyStopping::EarlyStopping(int patience)
    : patience_(patience), best_loss_(std::numeric_limits<double>::infinity()) {
  if (patience < 1) throw Error("patience must be at least 1");
}

bool EarlyStopping::observe(double validation_loss) {
  ++epoch_;
  last_improved_ = validation_loss < best_loss_;
  if (last_improved_) {
    best_loss_ = validation_loss;
    best_epoch_ = epoch_;
    stale_ = 0;
  } else {
    ++stale_;
  }
  return stale_ >= patience_;
}

void TrainHistory::write_jsonl(std::ostream& out) const {
  for (const auto& e : epochs) {
    nlohmann::json line = {{"epoch", e.epoch},
                           {"loss_sentiment", e.sentiment},
                           {"loss_inference", e.inference},
                           {"loss_distance", e.distance},
                           {"loss_total", e.total},
                           {"validation_loss", e.validation},
                           {"validation_sentiment", e.validation_parts.sentiment},
                           {"validation_inference", e.validation_parts.inference},
                           {"validation_distance", e.validation_parts.distance},
                           {"best_epoch", best_epoch},
                           {"stopped_epoch", stopped_epoch}};
    out << line.dump() << '\n';
  }
}

TrainResult train(ModelState initial, std::span<const Example> train_set,
                  std::span<const Example> validation, const TrainConfig& config) {
  config.validate();
  if (train_set.empty()) throw Error("empty training set");
  if (validation.empty()) throw Error("empty validation set");

  Rng order_rng(config.seed);
  Rng dropout_rng(config.seed ^ 0xD509A7E5ULL);
  AdamW optimizer(config);
  EarlyStopping stopper(config.patience);

  ModelState state = std::move(initial);
  ModelState best = state;
  TrainResult result;
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Example> batch;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    order_rng.shuffle(order);
    EpochRecord record;
    record.epoch = epoch;
    double seen = 0.0;
    int step = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      ++step;
      batch.clear();
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      for (std::size_t i = start; i < stop; ++i) batch.push_back(train_set[order[i]]);

      ModelGrads grads = ModelGrads::zeros(state);
      ObjectiveValue value;
      try {
        value = compute_objective(state, batch, config.weights, &grads, &dropout_rng);
      } catch (const Error& e) {
        throw TrainingDiverged(epoch, step, e.what());
      }
      if (!std::isfinite(value.total)) throw TrainingDiverged(epoch, step, "non-finite loss");
      optimizer.step(state, grads);

      const double w = static_cast<double>(batch.size());
      record.sentiment += w * value.sentiment;
      record.inference += w * value.inference;
      record.distance += w * value.distance;
      record.total += w * value.total;
      seen += w;
    }
    record.sentiment /= seen;
    record.inference /= seen;
    record.distance /= seen;
    record.total /= seen;

    try {
      record.validation_parts = compute_objective(state, validation, config.weights);
      record.validation = record.validation_parts.total;
    } catch (const Error& e) {
      throw TrainingDiverged(epoch, step, e.what());
    }
    if (!std::isfinite(record.validation))
      throw TrainingDiverged(epoch, step, "non-finite validation loss");
    result.history.epochs.push_back(record);

    if (config.on_epoch) config.on_epoch(epoch, state);
    bool stop = stopper.observe(record.validation);
    if (stopper.last_improved()) best = state;
    spdlog::debug("epoch {} train {:.4f} val {:.4f}{}", epoch, record.total, record.validation,
                  stopper.last_improved() ? " *" : "");
    if (stop) {
      result.history.early_stopped = true;
      break;
    }
  }

  result.history.best_epoch = stopper.best_epoch();
  result.history.stopped_epoch = static_cast<int>(result.history.epochs.size());
  result.state = std::move(best);
  result.weights = config.weights;
  return result;
}

double accuracy(const ModelState& state, std::span<const Example> examples) {
  if (examples.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& ex : examples)
    if (predict_text(state, ex.text) == ex.label) ++correct;
  return static_cast<double>(correct) / static_cast<double>(examples.size());
}

}  // namespace sric
