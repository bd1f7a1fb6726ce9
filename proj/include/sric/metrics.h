// sric/metrics.h

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

#ifndef SRIC_METRICS_H_
#define SRIC_METRICS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sric/common.h"
#include "sric/corpus.h"
#include "sric/encoder.h"

namespace sric {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Entry (i, j) counts samples of true class i predicted as j. Labels must
/// lie in [0, num_classes).
CountMatrix confusion_matrix(std::span<const int> y_true, std::span<const int> y_pred,
                             int num_classes);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct MetricsReport {
  double accuracy = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  std::vector<ClassMetrics> per_class;
  int fold_id = -1;

  /// Values rounded to 4 decimals.
  nlohmann::json to_json() const;
};

/// Support-weighted precision, recall and F1. A zero denominator gives 0.
MetricsReport weighted_metrics(std::span<const int> y_true, std::span<const int> y_pred,
                               int num_classes = kNumSentiments);
MetricsReport weighted_metrics(std::span<const SentimentLabel> y_true,
                               std::span<const SentimentLabel> y_pred);

struct Fold {
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
};

struct FoldPlan {
  int k = 5;
  double val_fraction = 0.2;
  std::uint64_t seed = 0;
  std::vector<Fold> folds;

  nlohmann::json to_json() const;
};

struct Holdout {
  std::vector<std::string> train;
  std::vector<std::string> validation;
};

/// Holds out round(fraction * n) ids, stratified by label: members of each
/// class are shuffled and ranked by (r + 0.5) / n_class, and the lowest
/// ranks over all classes are taken.
Holdout stratified_holdout(std::span<const std::string> ids,
                           std::span<const SentimentLabel> labels, double fraction,
                           std::uint64_t seed);

/// Label-stratified k folds. Each class is shuffled and dealt round-robin
/// over the folds; a class with fewer than k samples is dealt from a
/// shared unstratified pool instead. Within a fold's training portion a
/// stratified `val_fraction` is held out for validation.
FoldPlan kfold_split(std::span<const std::string> ids, std::span<const SentimentLabel> labels,
                     int k, double val_fraction, std::uint64_t seed);
FoldPlan kfold_split(std::span<const Post> corpus, int k, double val_fraction,
                     std::uint64_t seed);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population
};

MeanStd mean_std(std::span<const double> values);
/// "0.7120 (0.024)".
std::string format_mean_std(const MeanStd& v);

struct AggregateReport {
  MeanStd accuracy;
  MeanStd weighted_precision;
  MeanStd weighted_recall;
  MeanStd weighted_f1;
  std::vector<MetricsReport> folds;

  nlohmann::json to_json() const;
};

/// Folds are ordered by fold_id before aggregation.
AggregateReport aggregate(std::vector<MetricsReport> folds);

/// Pairwise cosine similarity of the lexicon's hashtag embeddings.
Matrix hashtag_similarity_matrix(const EncoderBackend& backend, const Lexicon& lexicon);
/// Header row and first column hold the hashtag surfaces.
void write_similarity_csv(std::ostream& out, const Lexicon& lexicon, const Matrix& sim);

/// Rounds half away from zero to `decimals` places.
double round_decimals(double x, int decimals);

}  // namespace sric

#endif  // SRIC_METRICS_H_
