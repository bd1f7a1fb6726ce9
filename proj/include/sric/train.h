// sric/train.h

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

#ifndef SRIC_TRAIN_H_
#define SRIC_TRAIN_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sric/model.h"

namespace sric {

struct TrainConfig {
  double learning_rate = 1e-3;
  double weight_decay = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 8;
  int max_epochs = 50;
  int patience = 5;
  std::uint64_t seed = 7;
  LossWeights weights;
  /// Called after every epoch with the current (not the best) state.
  std::function<void(int epoch, const ModelState& state)> on_epoch;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Adam with decoupled weight decay over every tensor of a ModelState.
class AdamW {
 public:
  explicit AdamW(const TrainConfig& config) : config_(config) {}
  void step(ModelState& state, const ModelGrads& grads);
  int steps() const { return t_; }

 private:
  void update(Matrix& param, const Matrix& grad, std::size_t slot);

  TrainConfig config_;
  int t_ = 0;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
};

/// Stops once the validation loss has failed to improve on its best value
/// for `patience` consecutive epochs.
class EarlyStopping {
 public:
  explicit EarlyStopping(int patience);
  /// Records one epoch; returns true when training should stop.
  bool observe(double validation_loss);
  /// 1-based epoch of the best loss seen so far (0 before any).
  int best_epoch() const { return best_epoch_; }
  double best_loss() const { return best_loss_; }
  bool last_improved() const { return last_improved_; }

 private:
  int patience_;
  int epoch_ = 0;
  int best_epoch_ = 0;
  int stale_ = 0;
  double best_loss_;
  bool last_improved_ = false;
};

struct EpochRecord {
  int epoch = 0;
  double sentiment = 0.0;
  double inference = 0.0;
  double distance = 0.0;
  double total = 0.0;
  double validation = 0.0;  // total
  ObjectiveValue validation_parts;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;
  int stopped_epoch = 0;
  bool early_stopped = false;

  /// One JSON object per epoch.
  void write_jsonl(std::ostream& out) const;
};

struct TrainResult {
  ModelState state;
  TrainHistory history;
  LossWeights weights;
};

/// Non-finite loss during training.
class TrainingDiverged : public Error {
 public:
  TrainingDiverged(int epoch, int step, const std::string& what)
      : Error("training diverged at epoch " + std::to_string(epoch) + ", step " +
              std::to_string(step) + ": " + what),
        epoch_(epoch),
        step_(step) {}
  int epoch() const { return epoch_; }
  int step() const { return step_; }

 private:
  int epoch_;
  int step_;
};

/// Mini-batch training of the joint objective with early stopping on the
/// validation total loss. Returns the parameters of the best validation
/// epoch. Deterministic in config.seed.
TrainResult train(ModelState initial, std::span<const Example> train_set,
                  std::span<const Example> validation, const TrainConfig& config);

/// Fraction of examples whose predicted label matches.
double accuracy(const ModelState& state, std::span<const Example> examples);

}  // namespace sric

#endif  // SRIC_TRAIN_H_
