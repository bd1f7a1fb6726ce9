// sric/crossval.h

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

#ifndef SRIC_CROSSVAL_H_
#define SRIC_CROSSVAL_H_

#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "sric/config.h"
#include "sric/metrics.h"
#include "sric/model.h"
#include "sric/tfidf.h"
#include "sric/train.h"

namespace sric {

/// TF-IDF features of the segmented text fed to logistic regression.
struct LrBaseline {
  HashtagMode mode = HashtagMode::Segmented;
  TfidfVectorizer vectorizer;
  LogisticModel model;

  static LrBaseline fit(std::span<const Post> posts, const Lexicon& lexicon,
                        const LogisticConfig& config);
  std::vector<SentimentLabel> predict(std::span<const Post> posts, const Lexicon& lexicon) const;

  nlohmann::json to_json() const;
  static LrBaseline from_json(const nlohmann::json& j);
};

/// Loss weights a variant trains with: the configured (alpha, beta, gamma)
/// for the joint variants, (alpha, 0, 0) for the plain classifiers.
LossWeights variant_weights(Variant v, const RunConfig& config);

/// Weight settings tried when training a variant, in search order. The
/// joint variants enumerate {1..weight_grid}^3 unless weight_grid is 0.
std::vector<LossWeights> weight_candidates(Variant v, const RunConfig& config);

/// Weighted F1 of the model's predictions on `posts`.
double weighted_f1(const ModelState& state, std::span<const Post> posts, const Lexicon& lexicon);

/// Seed of fold `fold` derived from the run seed.
std::uint64_t fold_seed(std::uint64_t seed, int fold);

/// Trains the neural model of a variant (not LrBaseline), one run per
/// weight candidate, and keeps the run with the best validation weighted
/// F1 (the first on ties). SricAugmented trains the Sric teacher first and
/// returns the student, which reuses the teacher's weights; the teacher is
/// stored in `teacher` when given. `augment_pool` holds the posts without
/// sentiment hashtags.
TrainResult train_variant(Variant v, std::span<const Post> train_posts,
                          std::span<const Post> validation_posts,
                          std::span<const Post> augment_pool, const Lexicon& lexicon,
                          const RunConfig& config, std::uint64_t seed,
                          TrainResult* teacher = nullptr);

struct CrossvalResult {
  Variant variant = Variant::Sric;
  AggregateReport report;
  /// From the fold-0 model (the teacher for SricAugmented); absent for the
  /// LR baseline.
  std::optional<Matrix> similarity;
};

/// Folds are drawn over the posts carrying a lexicon hashtag; test sets come
/// from those posts only. The remaining posts serve as the augmentation
/// pool. Up to config.jobs folds train concurrently; results do not depend
/// on the worker count.
CrossvalResult run_crossval(std::span<const Post> corpus, const Lexicon& lexicon,
                            const RunConfig& config, Variant variant);

/// Report document with artifact metadata, fold settings and metrics.
nlohmann::json crossval_json(const CrossvalResult& result, const RunConfig& config);

}  // namespace sric

#endif  // SRIC_CROSSVAL_H_
