// acceptance_main.cc

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


// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails. Criterion numbers given as arguments restrict the
// run to those.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "oracles.h"
#include "sric/augmentation.h"
#include "sric/cli.h"
#include "sric/crossval.h"
#include "sric/hashtag_seg.h"
#include "sric/relation.h"

namespace sric {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

fs::path scratch(const std::string& name) {
  fs::path dir = fs::path(SRIC_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

Outcome relation_table() {
  Outcome o;
  struct Cell {
    Polarity p;
    SentimentLabel l;
    RelationLabel r;
    int indicator;
  };
  const Cell cells[] = {
      {Polarity::Hate, SentimentLabel::Hate, RelationLabel::Entailment, 1},
      {Polarity::Hate, SentimentLabel::CounterHate, RelationLabel::Contradiction, -1},
      {Polarity::Hate, SentimentLabel::Neutral, RelationLabel::Neutral, 0},
      {Polarity::CounterHate, SentimentLabel::Hate, RelationLabel::Contradiction, -1},
      {Polarity::CounterHate, SentimentLabel::CounterHate, RelationLabel::Entailment, 1},
      {Polarity::CounterHate, SentimentLabel::Neutral, RelationLabel::Neutral, 0}};
  for (const auto& c : cells) {
    o.require(derive_relation(c.p, c.l) == c.r,
              "cell " + std::string(to_string(c.p)) + "/" + std::string(to_string(c.l)));
    o.require(relation_indicator(c.r) == c.indicator, "indicator");
  }
  o.detail = o.pass ? "6 cells and indicator values" : o.detail;
  return o;
}

Outcome losses() {
  Outcome o;
  const double u = cross_entropy(Vector::Constant(3, 1.0 / 3.0), 0);
  o.require(std::abs(u - std::log(3.0)) <= 1e-9, fmt("uniform CE %.12f", u));

  Rng rng(2024);
  double lo = 3, hi = -1;
  for (int t = 0; t < 100000; ++t) {
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(rng.below(32));
    Vector a = Vector::NullaryExpr(d, [&] { return rng.uniform(-1e3, 1e3); });
    Vector b = rng.bernoulli(0.05) ? Vector(-rng.uniform(0.1, 10) * a)
                                   : Vector::NullaryExpr(d, [&] { return rng.uniform(-1e3, 1e3); });
    const double dist = cosine_distance(a, b);
    lo = std::min(lo, dist);
    hi = std::max(hi, dist);
  }
  o.require(lo >= 0.0 && hi <= 2.0, fmt("cosine distance range [%.17g, %.17g]", lo, hi));

  using Terms = std::vector<std::pair<RelationLabel, double>>;
  auto direct = [](const Terms& terms) {
    double s = 0;
    for (const auto& [r, d] : terms) s += relation_indicator(r) * d;
    return s / static_cast<double>(terms.size());
  };
  const Terms one = {{RelationLabel::Entailment, 0.3}};
  const Terms two = {{RelationLabel::Entailment, 0.3}, {RelationLabel::Contradiction, 0.4}};
  const Terms neutral = {{RelationLabel::Neutral, 0.9}};
  o.require(std::abs(mean_distance_loss(one) - 0.3) <= 1e-12, "distance batch 0.3");
  o.require(std::abs(mean_distance_loss(two) - (-0.05)) <= 1e-12, "distance batch -0.05");
  o.require(mean_distance_loss(neutral) == 0.0, "neutral distance batch");
  for (int t = 0; t < 1000; ++t) {
    Terms terms;
    for (std::size_t i = 0, n = 1 + rng.below(10); i < n; ++i)
      terms.emplace_back(kAllRelations[rng.below(3)], rng.uniform(0, 2));
    o.require(std::abs(mean_distance_loss(terms) - direct(terms)) <= 1e-12, "random batch");
  }
  o.require(std::abs(total_loss(1, 0.5, -0.1, {2, 3, 1}) - 3.4) <= 1e-12, "total 3.4");
  for (int t = 0; t < 1000; ++t) {
    double ls = rng.uniform(0, 3), li = rng.uniform(0, 3), ld = rng.uniform(-2, 2);
    LossWeights w{rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)};
    o.require(std::abs(total_loss(ls, li, ld, w) - (w.alpha * ls + w.beta * li + w.gamma * ld)) <= 1e-12,
              "random total");
  }
  if (o.pass) o.detail = fmt("ln3 err %.1e, cos range [%.3g, %.3g]", std::abs(u - std::log(3.0)), lo, hi);
  return o;
}

Outcome gradients() {
  Outcome o;
  auto syn = generate_synthetic_corpus(7, 30, 0.5);
  std::vector<Example> batch;
  int per_relation[3] = {0, 0, 0};
  for (const auto& ex : make_examples(syn.posts, syn.lexicon, HashtagMode::Segmented, true)) {
    if (!ex.pair) continue;
    const int r = index_of(ex.pair->relation);
    if (per_relation[r] >= (r == 2 ? 2 : 3)) continue;
    ++per_relation[r];
    batch.push_back(ex);
    if (batch.size() == 8) break;
  }
  o.require(batch.size() == 8, "could not assemble 8 samples");
  ModelState state = build_toy_model(batch, ToyEncoderConfig{16, 24}, 13, 0.2, HashtagMode::Segmented);
  Rng rng(4);
  for (auto& p : state.backend->params())
    p.value += Matrix::NullaryExpr(p.value.rows(), p.value.cols(), [&] { return rng.uniform(-0.2, 0.2); });
  const LossWeights w{1.5, 2.0, 0.7};
  auto loss = [&] {
    Rng masks(99);
    return compute_objective(state, batch, w, nullptr, &masks).total;
  };
  ModelGrads grads = ModelGrads::zeros(state);
  Rng masks(99);
  compute_objective(state, batch, w, &grads, &masks);
  auto check = oracle::check_model_gradient(state, grads, loss);
  o.require(check.max_rel_error <= 1e-4, "worst " + check.worst);
  o.detail = fmt("%.0f entries, max relative error %.2e", static_cast<double>(check.checked),
                 check.max_rel_error) +
             (o.pass ? "" : " at " + check.worst);
  return o;
}

Outcome metrics() {
  Outcome o;
  Rng rng(17);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(80);
    std::vector<int> y(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<int>(rng.below(3));
      p[i] = static_cast<int>(rng.below(3));
    }
    auto r = weighted_metrics(y, p);
    auto ref = oracle::weighted_scores(y, p, 3);
    worst = std::max({worst, std::abs(r.weighted_precision - ref.precision),
                      std::abs(r.weighted_recall - ref.recall), std::abs(r.weighted_f1 - ref.f1)});
    o.require(std::abs(r.accuracy - r.weighted_recall) <= 1e-12, "accuracy != weighted recall");
  }
  o.require(worst <= 1e-12, fmt("oracle gap %.3g", worst));
  if (o.pass) o.detail = fmt("1000 cases, max gap %.1e", worst);
  return o;
}

Outcome segmenter() {
  Outcome o;
  FrequencyTable freq = FrequencyTable::load(std::string(SRIC_DATA_DIR) + "/word_freq_en_50k.tsv");
  // Bodies built from table words, lexicon fragments and random letters.
  std::vector<std::string> words;
  {
    std::ifstream in(std::string(SRIC_DATA_DIR) + "/word_freq_en_50k.tsv");
    for (std::string line; std::getline(in, line) && words.size() < 5000;)
      words.push_back(line.substr(0, line.find('\t')));
  }
  std::vector<std::string> bodies;
  Lexicon lexicon = builtin_lexicon();
  for (const auto& e : lexicon.entries()) {
    std::string b(e.body());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t len = 1; len <= 12 && i + len <= b.size(); ++len) bodies.push_back(b.substr(i, len));
  }
  Rng rng(12);
  while (bodies.size() < 6000) {
    std::string b;
    if (rng.bernoulli(0.2)) {
      for (std::size_t i = 0, n = 1 + rng.below(12); i < n; ++i)
        b.push_back(static_cast<char>('a' + rng.below(26)));
    } else {
      while (b.size() < 12 && (b.empty() || rng.bernoulli(0.7))) b += words[rng.below(words.size())];
      b = b.substr(0, 12);
    }
    bodies.push_back(b);
  }
  std::size_t checked = 0;
  for (const auto& b : bodies) {
    const std::string dp = segment_body(b, freq);
    o.require(dp == oracle::exhaustive_segmentation(b, freq), "'" + b + "' -> '" + dp + "'");
    ++checked;
  }
  for (const auto& e : lexicon.entries()) {
    std::string joined = e.segmented;
    std::erase(joined, ' ');
    o.require(joined == e.body(), "override " + e.surface);
    o.require(segment_hashtag(e.surface, freq, {{e.surface, e.segmented}}) == e.segmented,
              "override lookup " + e.surface);
  }
  if (o.pass)
    o.detail = fmt("%.0f bodies of length <= 12, %.0f overrides", static_cast<double>(checked),
                   static_cast<double>(lexicon.size()));
  return o;
}

Outcome experiment() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  RunConfig config;  // defaults: seed 7, 5 folds
  auto syn = generate_synthetic_corpus(config.seed, config.n_per_class, config.hashtag_rate);
  std::map<Variant, double> f1;
  for (Variant v : {Variant::NoHashtag, Variant::SegmentedHashtag, Variant::Sric, Variant::SricAugmented})
    f1[v] = run_crossval(syn.posts, syn.lexicon, config, v).report.weighted_f1.mean;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double none = f1[Variant::NoHashtag], seg = f1[Variant::SegmentedHashtag];
  const double sric = f1[Variant::Sric], aug = f1[Variant::SricAugmented];
  o.require(seg >= none, "segmented_hashtag < no_hashtag");
  o.require(sric >= seg, "sric < segmented_hashtag");
  o.require(aug >= sric - 0.02, "sric_augmented < sric - 0.02");
  o.require(secs < 600, "over 10 minutes");
  o.detail = (o.pass ? std::string() : o.detail + "; ") +
             fmt("no_hashtag %.4f, segmented %.4f, sric %.4f", none, seg, sric) +
             fmt(", sric_augmented %.4f, %.0f s", aug, secs);
  return o;
}

Outcome augmentation() {
  Outcome o;
  auto syn = generate_synthetic_corpus(7, 60, 0.5);
  auto parts = partition(syn.posts, syn.lexicon);
  auto examples = make_examples(parts.with_hashtags, syn.lexicon, HashtagMode::Segmented, true);
  ModelState teacher = build_toy_model(examples, ToyEncoderConfig{32, 48}, 7, 0.2, HashtagMode::Segmented);
  TrainConfig tc;
  tc.max_epochs = 5;
  tc.seed = 7;
  std::vector<Example> fit, held_out;
  for (std::size_t i = 0; i < examples.size(); ++i) (i % 5 == 4 ? held_out : fit).push_back(examples[i]);
  teacher = train(teacher, fit, held_out, tc).state;
  auto samples = augment_dataset(teacher, parts.without_hashtags, syn.lexicon);
  o.require(samples.size() == parts.without_hashtags.size(), "sample count");
  for (const auto& s : samples)
    o.require(s.pseudo_relation == derive_relation(s.matched_hashtag.polarity, s.post_label),
              "relation of " + s.post_id);

  std::vector<HashtagEntry> hate;
  for (const auto& e : syn.lexicon.entries())
    if (e.polarity == Polarity::Hate) hate.push_back(e);
  Lexicon hate_only(hate);
  auto pool = partition(syn.posts, hate_only).without_hashtags;
  auto counts = count_relations(augment_dataset(teacher, pool, hate_only));
  RelationCounts expected{};
  for (const auto& p : pool) ++expected[index_of(derive_relation(Polarity::Hate, p.label))];
  o.require(counts == expected, "hate-only counts differ from the label distribution");

  Rng rng(31);
  for (int t = 0; t < 10000; ++t) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.below(15));
    HashtagVectors hv;
    for (std::size_t k = 0, n = 1 + rng.below(20); k < n; ++k)
      hv.emplace_back(HashtagEntry{"#h", "", kAllPolarities[k % 2]},
                      Vector::NullaryExpr(d, [&] { return rng.uniform(-1, 1); }));
    Vector z = Vector::NullaryExpr(d, [&] { return rng.uniform(-1, 1); });
    std::size_t best = 0;
    double best_sim = -2;
    for (std::size_t k = 0; k < hv.size(); ++k) {
      const double s = z.dot(hv[k].second) / (z.norm() * hv[k].second.norm());
      if (s > best_sim) {
        best_sim = s;
        best = k;
      }
    }
    o.require(match_pseudo_hashtag(z, hv).index == best, "argmax mismatch");
  }
  if (o.pass)
    o.detail = fmt("%.0f samples, hate-only counts %.0f/%.0f", static_cast<double>(samples.size()),
                   static_cast<double>(counts[0]), static_cast<double>(counts[1])) +
               fmt("/%.0f, 10000 argmax cases", static_cast<double>(counts[2]));
  return o;
}

int cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"sric", "--log-level", "off"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = scratch("determinism");
  std::ofstream(dir / "config.json")
      << R"({"n_per_class": 30, "dim": 32, "max_epochs": 10, "weight_grid": 2, "k": 3})";
  const std::string config = (dir / "config.json").string();
  o.require(cli({"--config", config, "--out", (dir / "data").string(), "synth"}) == 0, "synth");
  for (const char* run : {"a", "b"})
    o.require(cli({"--config", config, "--out", (dir / run).string(), "crossval", "--corpus",
                   (dir / "data/corpus.jsonl").string(), "--lexicon",
                   (dir / "data/lexicon.tsv").string(), "--variant", "all"}) == 0,
              "crossval run failed");
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir / "a")) {
    const auto name = entry.path().filename();
    if (entry.path().extension() != ".json") continue;
    o.require(slurp(entry.path()) == slurp(dir / "b" / name), name.string() + " differs");
    ++files;
  }
  o.require(files >= 6, "missing reports");
  if (o.pass) o.detail = fmt("%.0f metrics files byte-identical", static_cast<double>(files));
  return o;
}

}  // namespace
}  // namespace sric

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::off);
  const std::vector<std::pair<const char*, std::function<sric::Outcome()>>> criteria = {
      {"relation table", sric::relation_table},
      {"loss values", sric::losses},
      {"gradient check", sric::gradients},
      {"weighted metrics oracle", sric::metrics},
      {"segmenter oracle", sric::segmenter},
      {"desk-scale mode ordering", sric::experiment},
      {"augmentation contract", sric::augmentation},
      {"crossval determinism", sric::determinism},
  };
  std::set<std::size_t> only;
  for (int a = 1; a < argc; ++a) only.insert(std::strtoul(argv[a], nullptr, 10));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    sric::Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
