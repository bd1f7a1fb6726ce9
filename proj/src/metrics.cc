// metrics.cc

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

#include "sric/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <tuple>

#include <spdlog/spdlog.h>

#include "sric/model.h"
#include "sric/rng.h"

namespace sric {

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::vector<int> to_ints(std::span<const SentimentLabel> labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (auto l : labels) out.push_back(index_of(l));
  return out;
}

nlohmann::json mean_std_json(const MeanStd& v) {
  return {{"mean", round_decimals(v.mean, 4)}, {"std", round_decimals(v.std, 4)},
          {"formatted", format_mean_std(v)}};
}

}  // namespace

double round_decimals(double x, int decimals) {
  double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

CountMatrix confusion_matrix(std::span<const int> y_true, std::span<const int> y_pred,
                             int num_classes) {
  if (y_true.size() != y_pred.size())
    throw Error("label length mismatch: " + std::to_string(y_true.size()) + " vs " +
                std::to_string(y_pred.size()));
  if (y_true.empty()) throw Error("no labels");
  if (num_classes < 1) throw Error("num_classes must be positive");
  CountMatrix cm = CountMatrix::Zero(num_classes, num_classes);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 0 || y_true[i] >= num_classes || y_pred[i] < 0 || y_pred[i] >= num_classes)
      throw Error("label out of range at position " + std::to_string(i));
    ++cm(y_true[i], y_pred[i]);
  }
  return cm;
}

MetricsReport weighted_metrics(std::span<const int> y_true, std::span<const int> y_pred,
                               int num_classes) {
  CountMatrix cm = confusion_matrix(y_true, y_pred, num_classes);
  const double n = static_cast<double>(y_true.size());
  MetricsReport r;
  r.per_class.resize(static_cast<std::size_t>(num_classes));
  std::int64_t correct = 0;
  for (int c = 0; c < num_classes; ++c) {
    const double tp = static_cast<double>(cm(c, c));
    const double support = static_cast<double>(cm.row(c).sum());
    const double predicted = static_cast<double>(cm.col(c).sum());
    ClassMetrics& m = r.per_class[static_cast<std::size_t>(c)];
    m.support = cm.row(c).sum();
    m.precision = safe_div(tp, predicted);
    m.recall = safe_div(tp, support);
    m.f1 = safe_div(2.0 * m.precision * m.recall, m.precision + m.recall);
    const double w = support / n;
    r.weighted_precision += w * m.precision;
    r.weighted_recall += w * m.recall;
    r.weighted_f1 += w * m.f1;
    correct += cm(c, c);
  }
  r.accuracy = static_cast<double>(correct) / n;
  return r;
}

MetricsReport weighted_metrics(std::span<const SentimentLabel> y_true,
                               std::span<const SentimentLabel> y_pred) {
  auto t = to_ints(y_true);
  auto p = to_ints(y_pred);
  return weighted_metrics(t, p, kNumSentiments);
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json j = {{"fold_id", fold_id},
                      {"accuracy", round_decimals(accuracy, 4)},
                      {"weighted_precision", round_decimals(weighted_precision, 4)},
                      {"weighted_recall", round_decimals(weighted_recall, 4)},
                      {"weighted_f1", round_decimals(weighted_f1, 4)}};
  j["per_class"] = nlohmann::json::object();
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    std::string name = per_class.size() == static_cast<std::size_t>(kNumSentiments)
                           ? std::string(to_string(kAllSentiments[c]))
                           : std::to_string(c);
    j["per_class"][name] = {{"precision", round_decimals(per_class[c].precision, 4)},
                            {"recall", round_decimals(per_class[c].recall, 4)},
                            {"f1", round_decimals(per_class[c].f1, 4)},
                            {"support", per_class[c].support}};
  }
  return j;
}

Holdout stratified_holdout(std::span<const std::string> ids,
                           std::span<const SentimentLabel> labels, double fraction,
                           std::uint64_t seed) {
  if (ids.size() != labels.size()) throw Error("id/label length mismatch");
  if (!(fraction >= 0.0 && fraction < 1.0)) throw Error("holdout fraction must lie in [0, 1)");
  Rng rng(seed);
  std::array<std::vector<std::size_t>, kNumSentiments> by_class;
  for (std::size_t i = 0; i < ids.size(); ++i) by_class[index_of(labels[i])].push_back(i);
  std::vector<std::tuple<double, int, std::size_t>> keyed;
  for (int c = 0; c < kNumSentiments; ++c) {
    auto& members = by_class[c];
    rng.shuffle(members);
    for (std::size_t r = 0; r < members.size(); ++r)
      keyed.emplace_back((static_cast<double>(r) + 0.5) / static_cast<double>(members.size()),
                         c, members[r]);
  }
  std::sort(keyed.begin(), keyed.end());
  auto n_val = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(ids.size())));
  std::vector<bool> is_val(ids.size(), false);
  for (std::size_t v = 0; v < n_val; ++v) is_val[std::get<2>(keyed[v])] = true;
  Holdout h;
  for (std::size_t i = 0; i < ids.size(); ++i) (is_val[i] ? h.validation : h.train).push_back(ids[i]);
  return h;
}

FoldPlan kfold_split(std::span<const std::string> ids, std::span<const SentimentLabel> labels,
                     int k, double val_fraction, std::uint64_t seed) {
  if (ids.size() != labels.size()) throw Error("id/label length mismatch");
  if (k < 2) throw Error("k must be at least 2");
  if (ids.size() < static_cast<std::size_t>(k))
    throw Error("corpus of " + std::to_string(ids.size()) + " posts is smaller than k=" +
                std::to_string(k));
  if (!(val_fraction >= 0.0 && val_fraction < 1.0))
    throw Error("val_fraction must lie in [0, 1)");

  Rng rng(seed);
  std::array<std::vector<std::size_t>, kNumSentiments> by_class;
  for (std::size_t i = 0; i < ids.size(); ++i) by_class[index_of(labels[i])].push_back(i);

  std::vector<int> fold_of(ids.size(), -1);
  std::size_t dealt = 0;
  std::vector<std::size_t> pool;
  for (int c = 0; c < kNumSentiments; ++c) {
    auto& members = by_class[c];
    if (members.empty()) continue;
    if (members.size() < static_cast<std::size_t>(k)) {
      spdlog::warn("class '{}' has {} samples (< k={}); dealing it unstratified",
                   to_string(kAllSentiments[c]), members.size(), k);
      pool.insert(pool.end(), members.begin(), members.end());
      continue;
    }
    rng.shuffle(members);
    for (std::size_t i : members) fold_of[i] = static_cast<int>(dealt++ % k);
  }
  rng.shuffle(pool);
  for (std::size_t i : pool) fold_of[i] = static_cast<int>(dealt++ % k);

  FoldPlan plan;
  plan.k = k;
  plan.val_fraction = val_fraction;
  plan.seed = seed;
  plan.folds.resize(static_cast<std::size_t>(k));
  for (int f = 0; f < k; ++f) {
    Fold& fold = plan.folds[static_cast<std::size_t>(f)];
    std::vector<std::string> train_ids;
    std::vector<SentimentLabel> train_labels;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (fold_of[i] == f) {
        fold.test.push_back(ids[i]);
      } else {
        train_ids.push_back(ids[i]);
        train_labels.push_back(labels[i]);
      }
    }
    Holdout h = stratified_holdout(train_ids, train_labels, val_fraction,
                                   rng.next() ^ static_cast<std::uint64_t>(f));
    fold.train = std::move(h.train);
    fold.validation = std::move(h.validation);
  }
  return plan;
}

FoldPlan kfold_split(std::span<const Post> corpus, int k, double val_fraction,
                     std::uint64_t seed) {
  std::vector<std::string> ids;
  std::vector<SentimentLabel> labels;
  for (const auto& p : corpus) {
    ids.push_back(p.id);
    labels.push_back(p.label);
  }
  return kfold_split(ids, labels, k, val_fraction, seed);
}

nlohmann::json FoldPlan::to_json() const {
  nlohmann::json j = {{"k", k}, {"val_fraction", val_fraction}, {"seed", seed}};
  j["folds"] = nlohmann::json::array();
  for (const auto& f : folds)
    j["folds"].push_back({{"train", f.train}, {"validation", f.validation}, {"test", f.test}});
  return j;
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  const double n = static_cast<double>(values.size());
  double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

std::string format_mean_std(const MeanStd& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f (%.3f)", v.mean, v.std);
  return buf;
}

AggregateReport aggregate(std::vector<MetricsReport> folds) {
  std::sort(folds.begin(), folds.end(),
            [](const MetricsReport& a, const MetricsReport& b) { return a.fold_id < b.fold_id; });
  auto collect = [&](double MetricsReport::*field) {
    std::vector<double> v;
    for (const auto& f : folds) v.push_back(f.*field);
    return mean_std(v);
  };
  AggregateReport agg;
  agg.accuracy = collect(&MetricsReport::accuracy);
  agg.weighted_precision = collect(&MetricsReport::weighted_precision);
  agg.weighted_recall = collect(&MetricsReport::weighted_recall);
  agg.weighted_f1 = collect(&MetricsReport::weighted_f1);
  agg.folds = std::move(folds);
  return agg;
}

nlohmann::json AggregateReport::to_json() const {
  nlohmann::json j;
  j["aggregate"] = {{"accuracy", mean_std_json(accuracy)},
                    {"weighted_precision", mean_std_json(weighted_precision)},
                    {"weighted_recall", mean_std_json(weighted_recall)},
                    {"weighted_f1", mean_std_json(weighted_f1)}};
  j["folds"] = nlohmann::json::array();
  for (const auto& f : folds) j["folds"].push_back(f.to_json());
  return j;
}

Matrix hashtag_similarity_matrix(const EncoderBackend& backend, const Lexicon& lexicon) {
  if (lexicon.size() < 2) throw Error("similarity matrix needs at least two hashtags");
  std::vector<Vector> z;
  for (const auto& e : lexicon.entries()) z.push_back(backend.encode(e.hashtag_text()));
  const auto k = static_cast<Eigen::Index>(z.size());
  Matrix sim(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    sim(i, i) = 1.0;
    if (z[i].norm() == 0.0) throw Error("degenerate embedding for " + lexicon[i].surface);
    for (Eigen::Index j = i + 1; j < k; ++j) sim(i, j) = sim(j, i) = cosine_similarity(z[i], z[j]);
  }
  return sim;
}

void write_similarity_csv(std::ostream& out, const Lexicon& lexicon, const Matrix& sim) {
  if (sim.rows() != static_cast<Eigen::Index>(lexicon.size()) || sim.cols() != sim.rows())
    throw Error("similarity matrix does not match the lexicon");
  out << "hashtag";
  for (const auto& e : lexicon.entries()) out << ',' << e.surface;
  out << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < sim.rows(); ++i) {
    out << lexicon[static_cast<std::size_t>(i)].surface;
    for (Eigen::Index j = 0; j < sim.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.6f", sim(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace sric
