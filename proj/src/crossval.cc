// crossval.cc

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

#include "sric/crossval.h"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "sric/augmentation.h"

namespace sric {

namespace {

std::vector<std::string> rendered(std::span<const Post> posts, const Lexicon& lexicon,
                                  HashtagMode mode) {
  std::vector<std::string> out;
  out.reserve(posts.size());
  for (const auto& p : posts) out.push_back(render_text(p, lexicon, mode));
  return out;
}

std::vector<Post> select(const std::unordered_map<std::string, const Post*>& by_id,
                         const std::vector<std::string>& ids) {
  std::vector<Post> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(*by_id.at(id));
  return out;
}

}  // namespace

LrBaseline LrBaseline::fit(std::span<const Post> posts, const Lexicon& lexicon,
                           const LogisticConfig& config) {
  LrBaseline b;
  auto docs = rendered(posts, lexicon, b.mode);
  SparseMatrix x = b.vectorizer.fit_transform(docs);
  std::vector<int> y;
  for (const auto& p : posts) y.push_back(index_of(p.label));
  b.model = train_logistic(x, y, kNumSentiments, config);
  return b;
}

std::vector<SentimentLabel> LrBaseline::predict(std::span<const Post> posts,
                                                const Lexicon& lexicon) const {
  auto docs = rendered(posts, lexicon, mode);
  std::vector<SentimentLabel> out;
  for (int c : model.predict(vectorizer.transform(docs))) out.push_back(kAllSentiments[c]);
  return out;
}

nlohmann::json LrBaseline::to_json() const {
  return {{"mode", std::string(to_string(mode))},
          {"tfidf", vectorizer.to_json()},
          {"logistic", model.to_json()}};
}

LrBaseline LrBaseline::from_json(const nlohmann::json& j) {
  LrBaseline b;
  auto mode = parse_hashtag_mode(j.at("mode").get<std::string>());
  if (!mode) throw Error("unknown hashtag mode in checkpoint");
  b.mode = *mode;
  b.vectorizer = TfidfVectorizer::from_json(j.at("tfidf"));
  b.model = LogisticModel::from_json(j.at("logistic"));
  if (b.model.weights.cols() != static_cast<Eigen::Index>(b.vectorizer.vocabulary().size()))
    throw Error("tf-idf vocabulary does not match the logistic model");
  return b;
}

LossWeights variant_weights(Variant v, const RunConfig& config) {
  if (variant_uses_pairs(v)) return {config.alpha, config.beta, config.gamma};
  return {config.alpha, 0.0, 0.0};
}

std::vector<LossWeights> weight_candidates(Variant v, const RunConfig& config) {
  if (!variant_uses_pairs(v) || config.weight_grid == 0) return {variant_weights(v, config)};
  std::vector<LossWeights> out;
  const int n = config.weight_grid;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) out.push_back({double(a), double(b), double(c)});
  return out;
}

double weighted_f1(const ModelState& state, std::span<const Post> posts, const Lexicon& lexicon) {
  std::vector<SentimentLabel> truth, pred;
  for (const auto& p : posts) {
    truth.push_back(p.label);
    pred.push_back(predict(state, p, lexicon));
  }
  return weighted_metrics(truth, pred).weighted_f1;
}

std::uint64_t fold_seed(std::uint64_t seed, int fold) {
  return seed ^ (static_cast<std::uint64_t>(fold + 1) * 0x9E3779B97F4A7C15ULL);
}

TrainResult train_variant(Variant v, std::span<const Post> train_posts,
                          std::span<const Post> validation_posts,
                          std::span<const Post> augment_pool, const Lexicon& lexicon,
                          const RunConfig& config, std::uint64_t seed, TrainResult* teacher) {
  if (v == Variant::LrBaseline) throw Error("the LR baseline has no neural model");
  const HashtagMode mode = variant_mode(v);
  const bool pairs = variant_uses_pairs(v);
  auto train_ex = make_examples(train_posts, lexicon, mode, pairs);
  auto val_ex = make_examples(validation_posts, lexicon, mode, pairs);
  TrainConfig tc = config.train_config();
  tc.seed = seed;

  const auto candidates = weight_candidates(v, config);
  TrainResult first;
  double best_f1 = -1.0;
  for (const LossWeights& w : candidates) {
    tc.weights = w;
    ModelState init =
        build_toy_model(train_ex, config.encoder_config(), seed, config.dropout, mode);
    TrainResult run = train(std::move(init), train_ex, val_ex, tc);
    if (candidates.size() == 1) {
      first = std::move(run);
      break;
    }
    const double f1 = weighted_f1(run.state, validation_posts, lexicon);
    if (f1 > best_f1) {
      best_f1 = f1;
      first = std::move(run);
    }
  }
  if (candidates.size() > 1)
    spdlog::debug("selected loss weights ({}, {}, {}) with validation F1 {:.4f}",
                  first.weights.alpha, first.weights.beta, first.weights.gamma, best_f1);
  if (v != Variant::SricAugmented) return first;
  tc.weights = first.weights;

  auto samples = augment_dataset(first.state, augment_pool, lexicon);
  auto counts = count_relations(samples);
  spdlog::debug("augmented {} posts: {} entailment, {} contradiction, {} neutral",
                samples.size(), counts[0], counts[1], counts[2]);
  TrainResult student = train_student(train_ex, augment_pool, samples, lexicon, val_ex,
                                      config.encoder_config(), config.dropout, mode, tc);
  if (teacher) *teacher = std::move(first);
  return student;
}

CrossvalResult run_crossval(std::span<const Post> corpus, const Lexicon& lexicon,
                            const RunConfig& config, Variant variant) {
  CorpusPartition parts = partition(corpus, lexicon);
  const auto& labeled = parts.with_hashtags;
  FoldPlan plan = kfold_split(labeled, config.k, config.val_fraction, config.seed);
  std::unordered_map<std::string, const Post*> by_id;
  for (const auto& p : labeled) by_id.emplace(p.id, &p);

  const int k = config.k;
  std::vector<MetricsReport> reports(static_cast<std::size_t>(k));
  std::optional<Matrix> similarity;
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto run_fold = [&](int f) {
    const Fold& fold = plan.folds[static_cast<std::size_t>(f)];
    auto train_posts = select(by_id, fold.train);
    auto val_posts = select(by_id, fold.validation);
    auto test_posts = select(by_id, fold.test);
    std::vector<SentimentLabel> truth, pred;
    for (const auto& p : test_posts) truth.push_back(p.label);

    if (variant == Variant::LrBaseline) {
      auto model = LrBaseline::fit(train_posts, lexicon, config.logistic_config());
      pred = model.predict(test_posts, lexicon);
    } else {
      TrainResult teacher;
      TrainResult result = train_variant(variant, train_posts, val_posts, parts.without_hashtags,
                                         lexicon, config, fold_seed(config.seed, f), &teacher);
      for (const auto& p : test_posts) pred.push_back(predict(result.state, p, lexicon));
      if (f == 0) {
        const ModelState& source =
            variant == Variant::SricAugmented ? teacher.state : result.state;
        similarity = hashtag_similarity_matrix(*source.backend, lexicon);
      }
      spdlog::info("{} fold {}: best epoch {} of {}, loss weights ({}, {}, {})",
                   to_string(variant), f, result.history.best_epoch,
                   result.history.stopped_epoch, result.weights.alpha, result.weights.beta,
                   result.weights.gamma);
    }
    MetricsReport r = weighted_metrics(truth, pred);
    r.fold_id = f;
    reports[static_cast<std::size_t>(f)] = r;
  };

  auto worker = [&] {
    for (int f = next++; f < k; f = next++) {
      try {
        run_fold(f);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const int workers = std::min(config.jobs, k);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  CrossvalResult result;
  result.variant = variant;
  result.report = aggregate(std::move(reports));
  result.similarity = std::move(similarity);
  return result;
}

nlohmann::json crossval_json(const CrossvalResult& result, const RunConfig& config) {
  nlohmann::json j = result.report.to_json();
  j["variant"] = std::string(to_string(result.variant));
  j["meta"] = artifact_meta(config);
  j["folds_config"] = {{"k", config.k},
                       {"val_fraction", config.val_fraction},
                       {"stratified", true},
                       {"test_pool", "posts with lexicon hashtags"}};
  return j;
}

}  // namespace sric
