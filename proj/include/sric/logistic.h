// sric/logistic.h

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

#ifndef SRIC_LOGISTIC_H_
#define SRIC_LOGISTIC_H_

#include <span>

#include <nlohmann/json.hpp>

#include "sric/tfidf.h"

namespace sric {

struct LogisticConfig {
  double l2_weight = 1e-3;
  int max_epochs = 1000;
  double tolerance = 1e-5;
};

/// Multinomial logistic regression: scores = W x + b.
struct LogisticModel {
  Matrix weights;  // classes x features
  Vector bias;
  int epochs_run = 0;
  double final_grad_norm = 0.0;

  Matrix predict_proba(const SparseMatrix& x) const;
  std::vector<int> predict(const SparseMatrix& x) const;

  nlohmann::json to_json() const;
  static LogisticModel from_json(const nlohmann::json& j);
};

/// Mean cross-entropy plus (l2 / 2) ||W||^2. The bias is not penalized.
double logistic_objective(const LogisticModel& model, const SparseMatrix& x,
                          std::span<const int> y, double l2_weight);
/// Gradient of logistic_objective with respect to W and b.
void logistic_gradient(const LogisticModel& model, const SparseMatrix& x,
                       std::span<const int> y, double l2_weight, Matrix& grad_w,
                       Vector& grad_b);

/// Full-batch gradient descent from zero, alternating a W step of size
/// 1 / (max||x||^2 / 2 + l2) and a b step of size 2, until the gradient norm
/// drops below the tolerance or max_epochs is reached. Throws Error on a
/// non-finite objective.
LogisticModel train_logistic(const SparseMatrix& x, std::span<const int> y, int num_classes,
                             const LogisticConfig& config = {});

}  // namespace sric

#endif  // SRIC_LOGISTIC_H_
