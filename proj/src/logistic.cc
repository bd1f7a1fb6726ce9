// logistic.cc

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

#include "sric/logistic.h"

#include <algorithm>
#include <cmath>

#include "sric/encoder.h"

namespace sric {

namespace {

// Row-wise softmax of the scores, one column per sample.
Matrix probabilities(const LogisticModel& model, const SparseMatrix& x) {
  Matrix scores = model.weights * x.transpose();
  scores.colwise() += model.bias;
  for (Eigen::Index i = 0; i < scores.cols(); ++i) {
    auto col = scores.col(i);
    col.array() -= col.maxCoeff();
    col = col.array().exp().matrix();
    col /= col.sum();
  }
  return scores;
}

void check_inputs(const LogisticModel& model, const SparseMatrix& x, std::span<const int> y) {
  if (static_cast<std::size_t>(x.rows()) != y.size()) throw Error("feature/label count mismatch");
  if (x.cols() != model.weights.cols()) throw Error("feature dimension mismatch");
  for (int label : y)
    if (label < 0 || label >= model.weights.rows()) throw Error("label out of range");
}

}  // namespace

Matrix LogisticModel::predict_proba(const SparseMatrix& x) const {
  if (x.cols() != weights.cols()) throw Error("feature dimension mismatch");
  return probabilities(*this, x).transpose();
}

std::vector<int> LogisticModel::predict(const SparseMatrix& x) const {
  Matrix p = probabilities(*this, x);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.cols()));
  for (Eigen::Index i = 0; i < p.cols(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < p.rows(); ++c)
      if (p(c, i) > p(best, i)) best = c;
    out.push_back(static_cast<int>(best));
  }
  return out;
}

nlohmann::json LogisticModel::to_json() const {
  return {{"weights", matrix_to_json(weights)},
          {"bias", matrix_to_json(bias)},
          {"epochs_run", epochs_run}};
}

LogisticModel LogisticModel::from_json(const nlohmann::json& j) {
  LogisticModel m;
  m.weights = matrix_from_json(j.at("weights"));
  Matrix b = matrix_from_json(j.at("bias"));
  if (b.cols() != 1 || b.rows() != m.weights.rows()) throw Error("bias shape mismatch");
  m.bias = b.col(0);
  m.epochs_run = j.value("epochs_run", 0);
  return m;
}

double logistic_objective(const LogisticModel& model, const SparseMatrix& x,
                          std::span<const int> y, double l2_weight) {
  check_inputs(model, x, y);
  Matrix p = probabilities(model, x);
  double loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    loss -= std::log(std::max(p(y[i], static_cast<Eigen::Index>(i)), 1e-300));
  loss /= static_cast<double>(y.size());
  return loss + 0.5 * l2_weight * model.weights.squaredNorm();
}

void logistic_gradient(const LogisticModel& model, const SparseMatrix& x,
                       std::span<const int> y, double l2_weight, Matrix& grad_w,
                       Vector& grad_b) {
  check_inputs(model, x, y);
  Matrix residual = probabilities(model, x);  // classes x samples
  for (std::size_t i = 0; i < y.size(); ++i) residual(y[i], static_cast<Eigen::Index>(i)) -= 1.0;
  const double inv_n = 1.0 / static_cast<double>(y.size());
  grad_w = (residual * x) * inv_n + l2_weight * model.weights;
  grad_b = residual.rowwise().sum() * inv_n;
}

LogisticModel train_logistic(const SparseMatrix& x, std::span<const int> y, int num_classes,
                             const LogisticConfig& config) {
  if (num_classes < 2) throw Error("need at least two classes");
  if (y.empty()) throw Error("no training samples");
  if (config.l2_weight < 0.0) throw Error("l2_weight must be non-negative");
  LogisticModel model;
  model.weights = Matrix::Zero(num_classes, x.cols());
  model.bias = Vector::Zero(num_classes);

  double max_sq = 0.0;
  for (Eigen::Index row = 0; row < x.outerSize(); ++row) {
    double sq = 0.0;
    for (SparseMatrix::InnerIterator it(x, row); it; ++it) sq += it.value() * it.value();
    max_sq = std::max(max_sq, sq);
  }
  const double step_w = 1.0 / (0.5 * max_sq + config.l2_weight + 1e-12);
  const double step_b = 2.0;

  Matrix gw;
  Vector gb;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    logistic_gradient(model, x, y, config.l2_weight, gw, gb);
    double norm = std::sqrt(gw.squaredNorm() + gb.squaredNorm());
    model.final_grad_norm = norm;
    if (!std::isfinite(norm)) throw Error("logistic regression diverged at epoch " + std::to_string(epoch));
    if (norm < config.tolerance) break;
    model.weights -= step_w * gw;
    logistic_gradient(model, x, y, config.l2_weight, gw, gb);
    model.bias -= step_b * gb;
    model.epochs_run = epoch;
    if (!std::isfinite(model.weights.sum()) || !std::isfinite(model.bias.sum()))
      throw Error("logistic regression diverged at epoch " + std::to_string(epoch));
  }
  return model;
}

}  // namespace sric
