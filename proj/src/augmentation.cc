// augmentation.cc

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

#include "sric/augmentation.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <spdlog/spdlog.h>

#include "sric/relation.h"

namespace sric {

namespace {

double round_to(double x, double scale) { return std::round(x * scale) / scale; }

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Vector from_std(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

HashtagVectors embed_hashtags(const ModelState& teacher, const Lexicon& lexicon) {
  if (lexicon.empty()) throw Error("cannot embed an empty lexicon");
  HashtagVectors out;
  out.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries())
    out.emplace_back(entry, teacher.backend->encode(entry.hashtag_text()));
  return out;
}

PostVectors embed_posts(const ModelState& teacher, std::span<const Post> posts,
                        const Lexicon& lexicon) {
  PostVectors out;
  out.reserve(posts.size());
  for (const auto& post : posts)
    out.emplace_back(post.id,
                     teacher.backend->encode(render_text(post, lexicon, teacher.text_mode)));
  return out;
}

HashtagMatch match_pseudo_hashtag(const Vector& z, const HashtagVectors& hashtags) {
  if (hashtags.empty()) throw Error("no hashtag vectors to match against");
  HashtagMatch best{0, cosine_similarity(z, hashtags[0].second)};
  for (std::size_t k = 1; k < hashtags.size(); ++k) {
    double s = cosine_similarity(z, hashtags[k].second);
    if (s > best.similarity) best = {k, s};
  }
  return best;
}

std::vector<AugmentedSample> augment_from_vectors(std::span<const Post> posts,
                                                  const PostVectors& post_vectors,
                                                  const HashtagVectors& hashtag_vectors) {
  if (posts.size() != post_vectors.size()) throw Error("post/vector count mismatch");
  std::vector<AugmentedSample> out;
  out.reserve(posts.size());
  for (std::size_t i = 0; i < posts.size(); ++i) {
    if (post_vectors[i].first != posts[i].id) throw Error("post/vector order mismatch");
    HashtagMatch m = match_pseudo_hashtag(post_vectors[i].second, hashtag_vectors);
    const HashtagEntry& entry = hashtag_vectors[m.index].first;
    out.push_back({posts[i].id, entry, m.similarity,
                   derive_relation(entry.polarity, posts[i].label), posts[i].label});
  }
  return out;
}

std::vector<AugmentedSample> augment_dataset(const ModelState& teacher,
                                             std::span<const Post> posts,
                                             const Lexicon& lexicon) {
  if (posts.empty()) return {};
  return augment_from_vectors(posts, embed_posts(teacher, posts, lexicon),
                              embed_hashtags(teacher, lexicon));
}

RelationCounts count_relations(std::span<const AugmentedSample> samples) {
  RelationCounts counts{};
  for (const auto& s : samples) ++counts[index_of(s.pseudo_relation)];
  return counts;
}

Example augmented_example(const Post& post, const AugmentedSample& sample,
                          const Lexicon& lexicon, HashtagMode mode) {
  PairSample pair;
  pair.post_id = post.id;
  std::vector<std::string> content;
  for (auto& token : split_tokens(post.clean_text))
    if (!lexicon.contains(token)) content.push_back(std::move(token));
  pair.t_c = join_tokens(content);
  pair.t_h = sample.matched_hashtag.hashtag_text();
  pair.hashtag_polarity = sample.matched_hashtag.polarity;
  pair.relation = sample.pseudo_relation;
  pair.post_label = post.label;
  return {post.id, render_text(post, lexicon, mode), post.label, std::move(pair)};
}

void write_augmented_jsonl(std::ostream& out, std::span<const AugmentedSample> samples) {
  for (const auto& s : samples) {
    nlohmann::json line = {{"post_id", s.post_id},
                           {"hashtag_surface", s.matched_hashtag.surface},
                           {"similarity", round_to(s.similarity, 1e6)},
                           {"pseudo_relation", std::string(to_string(s.pseudo_relation))}};
    out << line.dump() << '\n';
  }
}

void write_augmentation_summary(std::ostream& out, std::span<const AugmentedSample> samples,
                                const nlohmann::json& metadata) {
  RelationCounts counts = count_relations(samples);
  nlohmann::json summary = metadata;
  summary["total"] = samples.size();
  for (auto r : kAllRelations) summary["counts"][std::string(to_string(r))] = counts[index_of(r)];
  out << summary.dump(2) << '\n';
}

nlohmann::json EmbeddingCache::to_json() const {
  nlohmann::json j = {{"checkpoint_hash", checkpoint_hash}};
  j["hashtags"] = nlohmann::json::array();
  for (const auto& [entry, v] : hashtags)
    j["hashtags"].push_back({{"surface", entry.surface}, {"vector", to_std(v)}});
  j["posts"] = nlohmann::json::array();
  for (const auto& [id, v] : posts) j["posts"].push_back({{"id", id}, {"vector", to_std(v)}});
  return j;
}

EmbeddingCache EmbeddingCache::from_json(const nlohmann::json& j, const Lexicon& lexicon) {
  EmbeddingCache cache;
  cache.checkpoint_hash = j.at("checkpoint_hash").get<std::string>();
  for (const auto& h : j.at("hashtags")) {
    auto idx = lexicon.find(h.at("surface").get<std::string>());
    if (!idx) throw Error("cached hashtag not in lexicon");
    cache.hashtags.emplace_back(lexicon[*idx], from_std(h.at("vector").get<std::vector<double>>()));
  }
  for (const auto& p : j.at("posts"))
    cache.posts.emplace_back(p.at("id").get<std::string>(),
                             from_std(p.at("vector").get<std::vector<double>>()));
  return cache;
}

EmbeddingCache cached_embeddings(const std::string& dir, const std::string& checkpoint_hash,
                                 const ModelState& teacher, std::span<const Post> posts,
                                 const Lexicon& lexicon) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / (checkpoint_hash + ".json");
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      EmbeddingCache cache = EmbeddingCache::from_json(nlohmann::json::parse(in), lexicon);
      bool same = cache.checkpoint_hash == checkpoint_hash &&
                  cache.hashtags.size() == lexicon.size() && cache.posts.size() == posts.size();
      for (std::size_t i = 0; same && i < posts.size(); ++i) same = cache.posts[i].first == posts[i].id;
      if (same) {
        spdlog::info("using cached teacher embeddings {}", path.string());
        return cache;
      }
    } catch (const std::exception& e) {
      spdlog::warn("ignoring unreadable embedding cache {}: {}", path.string(), e.what());
    }
  }
  EmbeddingCache cache{checkpoint_hash, embed_hashtags(teacher, lexicon),
                       embed_posts(teacher, posts, lexicon)};
  fs::create_directories(dir);
  std::ofstream out(path);
  out << cache.to_json().dump() << '\n';
  return cache;
}

std::vector<Example> student_examples(std::span<const Example> teacher_examples,
                                      std::span<const Post> augmented_posts,
                                      std::span<const AugmentedSample> samples,
                                      const Lexicon& lexicon, HashtagMode mode) {
  if (augmented_posts.size() != samples.size()) throw Error("post/sample count mismatch");
  std::vector<Example> out(teacher_examples.begin(), teacher_examples.end());
  for (std::size_t i = 0; i < samples.size(); ++i)
    out.push_back(augmented_example(augmented_posts[i], samples[i], lexicon, mode));
  return out;
}

TrainResult train_student(std::span<const Example> teacher_examples,
                          std::span<const Post> augmented_posts,
                          std::span<const AugmentedSample> samples, const Lexicon& lexicon,
                          std::span<const Example> validation, const ToyEncoderConfig& encoder,
                          double dropout, HashtagMode mode, const TrainConfig& config) {
  auto examples = student_examples(teacher_examples, augmented_posts, samples, lexicon, mode);
  ModelState fresh = build_toy_model(examples, encoder, config.seed, dropout, mode);
  return train(std::move(fresh), examples, validation, config);
}

}  // namespace sric
