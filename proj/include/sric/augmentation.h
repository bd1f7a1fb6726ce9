// sric/augmentation.h

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

#ifndef SRIC_AUGMENTATION_H_
#define SRIC_AUGMENTATION_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sric/model.h"
#include "sric/train.h"

namespace sric {

/// Pseudo-hashtag assigned to a post that has none.
struct AugmentedSample {
  std::string post_id;
  HashtagEntry matched_hashtag;
  double similarity = 0.0;
  RelationLabel pseudo_relation = RelationLabel::Neutral;
  SentimentLabel post_label = SentimentLabel::Neutral;
};

using HashtagVectors = std::vector<std::pair<HashtagEntry, Vector>>;
using PostVectors = std::vector<std::pair<std::string, Vector>>;

/// Teacher embedding of every lexicon entry's segmented text.
HashtagVectors embed_hashtags(const ModelState& teacher, const Lexicon& lexicon);
/// Teacher embedding of each post's text under the teacher's hashtag mode.
PostVectors embed_posts(const ModelState& teacher, std::span<const Post> posts,
                        const Lexicon& lexicon);

struct HashtagMatch {
  std::size_t index = 0;
  double similarity = 0.0;
};

/// Entry with the largest cosine similarity to `z`; ties go to the lowest
/// lexicon index.
HashtagMatch match_pseudo_hashtag(const Vector& z, const HashtagVectors& hashtags);

/// Relation counts indexed by RelationLabel.
using RelationCounts = std::array<std::size_t, kNumRelations>;

/// One sample per post (posts without sentiment hashtags), in input order.
std::vector<AugmentedSample> augment_dataset(const ModelState& teacher,
                                             std::span<const Post> posts,
                                             const Lexicon& lexicon);
/// Same, from precomputed embeddings.
std::vector<AugmentedSample> augment_from_vectors(std::span<const Post> posts,
                                                  const PostVectors& post_vectors,
                                                  const HashtagVectors& hashtag_vectors);

RelationCounts count_relations(std::span<const AugmentedSample> samples);

/// Training example for an augmented post: the post text with the
/// pseudo-hashtag as t_h.
Example augmented_example(const Post& post, const AugmentedSample& sample,
                          const Lexicon& lexicon, HashtagMode mode);

/// `post_id`, `hashtag_surface`, `similarity` (6 decimals), `pseudo_relation`.
void write_augmented_jsonl(std::ostream& out, std::span<const AugmentedSample> samples);
void write_augmentation_summary(std::ostream& out, std::span<const AugmentedSample> samples,
                                const nlohmann::json& metadata);

/// Disk cache of teacher embeddings keyed by the checkpoint hash.
struct EmbeddingCache {
  std::string checkpoint_hash;
  HashtagVectors hashtags;
  PostVectors posts;

  nlohmann::json to_json() const;
  static EmbeddingCache from_json(const nlohmann::json& j, const Lexicon& lexicon);
};

/// Loads `dir/<hash>.json` when present, otherwise computes the teacher
/// embeddings and writes them there.
EmbeddingCache cached_embeddings(const std::string& dir, const std::string& checkpoint_hash,
                                 const ModelState& teacher, std::span<const Post> posts,
                                 const Lexicon& lexicon);

/// Student training set: the teacher's examples plus one example per
/// augmented post.
std::vector<Example> student_examples(std::span<const Example> teacher_examples,
                                      std::span<const Post> augmented_posts,
                                      std::span<const AugmentedSample> samples,
                                      const Lexicon& lexicon, HashtagMode mode);

/// Trains a fresh student on T_O plus the augmented posts.
TrainResult train_student(std::span<const Example> teacher_examples,
                          std::span<const Post> augmented_posts,
                          std::span<const AugmentedSample> samples, const Lexicon& lexicon,
                          std::span<const Example> validation, const ToyEncoderConfig& encoder,
                          double dropout, HashtagMode mode, const TrainConfig& config);

}  // namespace sric

#endif  // SRIC_AUGMENTATION_H_
