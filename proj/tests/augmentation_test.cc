// augmentation_test.cc

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


#include <filesystem>
#include <map>
#include <sstream>
#include <unordered_map>

#include <gtest/gtest.h>

#include "sric/augmentation.h"
#include "sric/crossval.h"
#include "sric/relation.h"

namespace sric {
namespace {

namespace fs = std::filesystem;

ModelState untrained_teacher(const Lexicon& lexicon, std::span<const Post> posts) {
  auto examples = make_examples(posts, lexicon, HashtagMode::Segmented, true);
  return build_toy_model(examples, ToyEncoderConfig{16, 32}, 3, 0.2, HashtagMode::Segmented);
}

HashtagVectors random_hashtags(Rng& rng, std::size_t k, Eigen::Index d) {
  HashtagVectors out;
  for (std::size_t i = 0; i < k; ++i)
    out.emplace_back(HashtagEntry{"#h" + std::to_string(i), "", kAllPolarities[i % 2]},
                     Vector::NullaryExpr(d, [&] { return rng.uniform(-1, 1); }));
  return out;
}

// Trained once and shared by the tests that need a fitted teacher.
struct Fixture {
  SyntheticCorpus syn = generate_synthetic_corpus(7, 100, 0.5);
  CorpusPartition parts = partition(syn.posts, syn.lexicon);
  FoldPlan plan = kfold_split(parts.with_hashtags, 5, 0.2, 7);
  RunConfig config = [] {
    RunConfig c;
    c.weight_grid = 0;
    return c;
  }();

  std::vector<Post> select(const std::vector<std::string>& ids) const {
    std::unordered_map<std::string, const Post*> by_id;
    for (const auto& p : parts.with_hashtags) by_id[p.id] = &p;
    std::vector<Post> out;
    for (const auto& id : ids) out.push_back(*by_id.at(id));
    return out;
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

TEST(Embed, ShapesAndDeterminism) {
  auto syn = generate_synthetic_corpus(1, 10, 0.5);
  ModelState teacher = untrained_teacher(syn.lexicon, syn.posts);
  auto h = embed_hashtags(teacher, syn.lexicon);
  ASSERT_EQ(h.size(), syn.lexicon.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_EQ(h[i].second.size(), 16);
    EXPECT_EQ(h[i].first.surface, syn.lexicon[i].surface);
  }
  auto again = embed_hashtags(teacher, syn.lexicon);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h[i].second, again[i].second);
  auto parts = partition(syn.posts, syn.lexicon);
  EXPECT_EQ(embed_posts(teacher, parts.without_hashtags, syn.lexicon).size(),
            parts.without_hashtags.size());
}

TEST(Embed, PostSpelledLikeHashtagHasSimilarityOne) {
  auto syn = generate_synthetic_corpus(1, 10, 0.5);
  ModelState teacher = untrained_teacher(syn.lexicon, syn.posts);
  std::vector<Post> posts = {make_post("x", "china virus", SentimentLabel::Neutral)};
  auto pv = embed_posts(teacher, posts, syn.lexicon);
  auto hv = embed_hashtags(teacher, syn.lexicon);
  ASSERT_EQ(syn.lexicon[0].segmented, "china virus");
  EXPECT_NEAR(cosine_similarity(pv[0].second, hv[0].second), 1.0, 1e-12);
}

TEST(Match, Examples) {
  Rng rng(1);
  auto hv = random_hashtags(rng, 4, 6);
  auto m = match_pseudo_hashtag(hv[2].second, hv);
  EXPECT_EQ(m.index, 2u);
  EXPECT_NEAR(m.similarity, 1.0, 1e-12);

  // Unit vectors at cosine 0.9 and 0.2 from z.
  Vector z(2), a(2), b(2);
  z << 1, 0;
  a << 0.9, std::sqrt(1 - 0.81);
  b << 0.2, std::sqrt(1 - 0.04);
  HashtagVectors two = {{HashtagEntry{"#a", "", Polarity::Hate}, a},
                        {HashtagEntry{"#b", "", Polarity::Hate}, b}};
  EXPECT_EQ(match_pseudo_hashtag(z, two).index, 0u);
  EXPECT_NEAR(match_pseudo_hashtag(z, two).similarity, 0.9, 1e-12);

  HashtagVectors tie = {{HashtagEntry{"#a", "", Polarity::Hate}, a},
                        {HashtagEntry{"#b", "", Polarity::CounterHate}, a * 3.0}};
  EXPECT_EQ(match_pseudo_hashtag(z, tie).index, 0u);
  EXPECT_THROW(match_pseudo_hashtag(z, {}), Error);
}

TEST(Match, AgreesWithBruteForceAndIgnoresScale) {
  Rng rng(2);
  for (int t = 0; t < 10000; ++t) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.below(8));
    auto hv = random_hashtags(rng, 1 + rng.below(16), d);
    Vector z = Vector::NullaryExpr(d, [&] { return rng.uniform(-1, 1); });
    std::size_t best = 0;
    double best_sim = -2;
    for (std::size_t k = 0; k < hv.size(); ++k) {
      const Vector& h = hv[k].second;
      double s = z.dot(h) / std::sqrt(z.squaredNorm() * h.squaredNorm());
      if (s > best_sim + 1e-12) {
        best_sim = s;
        best = k;
      }
    }
    auto m = match_pseudo_hashtag(z, hv);
    ASSERT_EQ(m.index, best);
    ASSERT_NEAR(m.similarity, best_sim, 1e-12);
    auto scaled = hv;
    for (auto& [e, v] : scaled) v *= rng.uniform(0.01, 100);
    ASSERT_EQ(match_pseudo_hashtag(z * rng.uniform(0.01, 100), scaled).index, m.index);
  }
}

TEST(Augment, EmptyPoolGivesNothing) {
  auto syn = generate_synthetic_corpus(1, 10, 0.5);
  ModelState teacher = untrained_teacher(syn.lexicon, syn.posts);
  EXPECT_TRUE(augment_dataset(teacher, {}, syn.lexicon).empty());
}

TEST(Augment, SamplesFollowRelationTable) {
  auto syn = generate_synthetic_corpus(4, 40, 0.5);
  auto parts = partition(syn.posts, syn.lexicon);
  ModelState teacher = untrained_teacher(syn.lexicon, parts.with_hashtags);
  auto samples = augment_dataset(teacher, parts.without_hashtags, syn.lexicon);
  ASSERT_EQ(samples.size(), parts.without_hashtags.size());
  auto pv = embed_posts(teacher, parts.without_hashtags, syn.lexicon);
  auto hv = embed_hashtags(teacher, syn.lexicon);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const Post& post = parts.without_hashtags[i];
    EXPECT_EQ(s.post_id, post.id);
    EXPECT_EQ(s.post_label, post.label);
    EXPECT_EQ(s.pseudo_relation, derive_relation(s.matched_hashtag.polarity, post.label));
    auto idx = syn.lexicon.find(s.matched_hashtag.surface);
    ASSERT_TRUE(idx);
    EXPECT_NEAR(s.similarity, cosine_similarity(pv[i].second, hv[*idx].second), 1e-12);
  }
}

TEST(Augment, HateOnlyLexiconMirrorsLabelDistribution) {
  auto syn = generate_synthetic_corpus(5, 40, 0.5);
  std::vector<HashtagEntry> hate;
  for (const auto& e : syn.lexicon.entries())
    if (e.polarity == Polarity::Hate) hate.push_back(e);
  Lexicon lexicon(hate);
  auto parts = partition(syn.posts, lexicon);
  ModelState teacher = untrained_teacher(lexicon, parts.with_hashtags);
  auto counts = count_relations(augment_dataset(teacher, parts.without_hashtags, lexicon));
  std::map<SentimentLabel, std::size_t> labels;
  for (const auto& p : parts.without_hashtags) ++labels[p.label];
  EXPECT_EQ(counts[index_of(RelationLabel::Entailment)], labels[SentimentLabel::Hate]);
  EXPECT_EQ(counts[index_of(RelationLabel::Contradiction)], labels[SentimentLabel::CounterHate]);
  EXPECT_EQ(counts[index_of(RelationLabel::Neutral)], labels[SentimentLabel::Neutral]);
}

TEST(Augment, ExampleKeepsTextAndLabel) {
  Lexicon lex = builtin_lexicon();
  Post post = make_post("p", "Wash your hands #news", SentimentLabel::Neutral);
  AugmentedSample s{"p", lex[12], 0.5, RelationLabel::Neutral, SentimentLabel::Neutral};
  Example ex = augmented_example(post, s, lex, HashtagMode::Segmented);
  EXPECT_EQ(ex.text, render_text(post, lex, HashtagMode::Segmented));
  EXPECT_EQ(ex.label, SentimentLabel::Neutral);
  ASSERT_TRUE(ex.pair);
  EXPECT_EQ(ex.pair->t_c, "wash your hands #news");
  EXPECT_EQ(ex.pair->t_h, lex[12].segmented);
  EXPECT_EQ(ex.pair->relation, RelationLabel::Neutral);
}

TEST(Augment, JsonlAndSummary) {
  Lexicon lex = builtin_lexicon();
  std::vector<AugmentedSample> samples = {
      {"a", lex[0], 0.123456789, RelationLabel::Entailment, SentimentLabel::Hate},
      {"b", lex[12], -0.5, RelationLabel::Contradiction, SentimentLabel::Hate},
      {"c", lex[1], 0.9999999, RelationLabel::Neutral, SentimentLabel::Neutral}};
  std::ostringstream os;
  write_augmented_jsonl(os, samples);
  std::istringstream in(os.str());
  std::string line;
  std::vector<nlohmann::json> lines;
  while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["post_id"], "a");
  EXPECT_EQ(lines[0]["hashtag_surface"], "#chinavirus");
  EXPECT_EQ(lines[0]["similarity"].get<double>(), 0.123457);
  EXPECT_EQ(lines[2]["similarity"].get<double>(), 1.0);
  EXPECT_EQ(lines[1]["pseudo_relation"], "contradiction");

  std::ostringstream ss;
  write_augmentation_summary(ss, samples, {{"seed", 7}});
  auto summary = nlohmann::json::parse(ss.str());
  EXPECT_EQ(summary["total"], 3);
  EXPECT_EQ(summary["seed"], 7);
  EXPECT_EQ(summary["counts"]["entailment"], 1);
  EXPECT_EQ(summary["counts"]["contradiction"], 1);
  EXPECT_EQ(summary["counts"]["neutral"], 1);
}

TEST(Cache, ReusedWhenValidAndRebuiltOtherwise) {
  auto syn = generate_synthetic_corpus(6, 10, 0.5);
  auto parts = partition(syn.posts, syn.lexicon);
  ModelState teacher = untrained_teacher(syn.lexicon, parts.with_hashtags);
  const fs::path dir = fs::temp_directory_path() / "sric_cache_test";
  fs::remove_all(dir);
  auto first = cached_embeddings(dir.string(), "abc", teacher, parts.without_hashtags, syn.lexicon);
  EXPECT_TRUE(fs::exists(dir / "abc.json"));
  // A different teacher under the same hash reads the stored vectors back.
  ModelState other = teacher;
  other.backend->params()[0].value.setConstant(0.5);
  auto second = cached_embeddings(dir.string(), "abc", other, parts.without_hashtags, syn.lexicon);
  ASSERT_EQ(second.posts.size(), first.posts.size());
  for (std::size_t i = 0; i < first.posts.size(); ++i)
    EXPECT_EQ(second.posts[i].second, first.posts[i].second);
  // A different pool invalidates the entry.
  std::vector<Post> fewer(parts.without_hashtags.begin(), parts.without_hashtags.end() - 1);
  auto third = cached_embeddings(dir.string(), "abc", other, fewer, syn.lexicon);
  EXPECT_EQ(third.posts.size(), fewer.size());
  EXPECT_NE(third.posts[0].second, first.posts[0].second);
  fs::remove_all(dir);
}

TEST(Teacher, HashtagGroupsSeparate) {
  const Fixture& f = fixture();
  const Fold& fold = f.plan.folds[0];
  TrainResult teacher = train_variant(Variant::Sric, f.select(fold.train),
                                      f.select(fold.validation), {}, f.syn.lexicon, f.config, 7);
  auto hv = embed_hashtags(teacher.state, f.syn.lexicon);
  double within = 0, across = 0;
  int n_within = 0, n_across = 0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    for (std::size_t j = i + 1; j < hv.size(); ++j) {
      double s = cosine_similarity(hv[i].second, hv[j].second);
      if (hv[i].first.polarity == hv[j].first.polarity) {
        within += s;
        ++n_within;
      } else {
        across += s;
        ++n_across;
      }
    }
  }
  EXPECT_GT(within / n_within, across / n_across);
}

TEST(Student, ReproducibleAndNotWorseThanTeacher) {
  const Fixture& f = fixture();
  const Fold& fold = f.plan.folds[0];
  auto train_posts = f.select(fold.train);
  auto val_posts = f.select(fold.validation);
  auto test_posts = f.select(fold.test);
  TrainResult teacher;
  TrainResult student = train_variant(Variant::SricAugmented, train_posts, val_posts,
                                      f.parts.without_hashtags, f.syn.lexicon, f.config, 7, &teacher);
  TrainResult again = train_variant(Variant::SricAugmented, train_posts, val_posts,
                                    f.parts.without_hashtags, f.syn.lexicon, f.config, 7);
  EXPECT_EQ(model_to_json(student.state).dump(), model_to_json(again.state).dump());
  const double t = weighted_f1(teacher.state, test_posts, f.syn.lexicon);
  const double s = weighted_f1(student.state, test_posts, f.syn.lexicon);
  EXPECT_GE(s, t - 0.02) << "teacher " << t << " student " << s;
}

}  // namespace
}  // namespace sric
