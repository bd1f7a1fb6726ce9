// sric/corpus.h

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

#ifndef SRIC_CORPUS_H_
#define SRIC_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sric/common.h"
#include "sric/labels.h"

namespace sric {

/// One labeled post. `clean_text` is derived from `raw_text` by clean_text();
/// `hashtags` lists the `#` tokens of the cleaned text in order.
struct Post {
  std::string id;
  std::string raw_text;
  std::string clean_text;
  SentimentLabel label = SentimentLabel::Neutral;
  std::vector<std::string> hashtags;
};

/// Builds a Post, filling clean_text and hashtags from raw_text.
Post make_post(std::string id, std::string raw_text, SentimentLabel label);

/// A sentiment hashtag. `segmented` is the space-separated word sequence;
/// it may be empty until a segmenter fills it (see hashtag_seg.h).
struct HashtagEntry {
  std::string surface;  // "#racismisavirus"
  std::string segmented;  // "racism is a virus"
  Polarity polarity = Polarity::Hate;

  std::string_view body() const { return std::string_view(surface).substr(1); }
  /// Segmented text, or the bare body when no segmentation is known yet.
  std::string hashtag_text() const;
};

/// Ordered set of sentiment hashtags with unique surfaces.
class Lexicon {
 public:
  Lexicon() = default;
  /// Throws Error on duplicate surfaces or malformed entries.
  explicit Lexicon(std::vector<HashtagEntry> entries);

  const std::vector<HashtagEntry>& entries() const { return entries_; }
  std::vector<HashtagEntry>& mutable_entries() { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const HashtagEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Index of the entry with this surface, if any. Case-insensitive.
  std::optional<std::size_t> find(std::string_view surface) const;
  bool contains(std::string_view surface) const { return find(surface).has_value(); }

 private:
  std::vector<HashtagEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Tab-separated `surface<TAB>polarity[<TAB>segmentation]` lines. Blank
/// lines and lines starting with "//" are skipped.
Lexicon parse_lexicon(std::istream& in);
Lexicon load_lexicon(const std::string& path);
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

enum class CorpusFormat { Jsonl, Csv };

/// Reads posts with `id`, `text`, `label` fields. Throws ParseError naming
/// the line for malformed records, duplicate ids and unknown labels.
std::vector<Post> parse_corpus(std::istream& in, CorpusFormat format);
std::vector<Post> ingest_corpus(const std::string& path, CorpusFormat format);
/// Format from the file extension (.csv or anything else = jsonl).
CorpusFormat format_from_path(std::string_view path);
void write_corpus_jsonl(std::ostream& out, std::span<const Post> posts);

/// Removes, in order: URLs, @-mentions, standalone numbers, emoji and
/// punctuation other than '#'; then lowercases and collapses whitespace.
/// Idempotent.
std::string clean_text(std::string_view raw);

/// Whitespace tokens of `text`.
std::vector<std::string> split_tokens(std::string_view text);
std::string join_tokens(std::span<const std::string> tokens);

/// Lexicon entries occurring in the post's clean text as whole tokens, in
/// order of first occurrence.
std::vector<HashtagEntry> extract_sentiment_hashtags(const Post& post,
                                                     const Lexicon& lexicon);

/// Content/hashtag pair built from a post carrying a sentiment hashtag.
struct PairSample {
  std::string post_id;
  std::string t_c;  // content without any lexicon hashtag
  std::string t_h;  // segmented hashtag text
  Polarity hashtag_polarity = Polarity::Hate;
  RelationLabel relation = RelationLabel::Neutral;
  SentimentLabel post_label = SentimentLabel::Neutral;
};

/// Uses the first-occurring lexicon hashtag as t_h and strips every lexicon
/// hashtag from t_c. Returns nullopt when the post has none.
std::optional<PairSample> split_post(const Post& post, const Lexicon& lexicon);

/// T_O (posts with at least one lexicon hashtag) and T_O' (the rest).
struct CorpusPartition {
  std::vector<Post> with_hashtags;
  std::vector<Post> without_hashtags;
};

CorpusPartition partition(std::span<const Post> corpus, const Lexicon& lexicon);

/// How hashtags appear in the text fed to a classifier.
enum class HashtagMode {
  Strip,      // every hashtag token removed
  Raw,        // hashtags kept as single tokens ("#chinavirus")
  Segmented,  // lexicon hashtags replaced by their word sequence
};

std::string_view to_string(HashtagMode mode);
std::optional<HashtagMode> parse_hashtag_mode(std::string_view name);

/// Classifier input text for a post under the given hashtag mode.
/// Non-lexicon hashtags lose their '#' in Segmented mode.
std::string render_text(const Post& post, const Lexicon& lexicon, HashtagMode mode);

struct SyntheticCorpus {
  std::vector<Post> posts;
  Lexicon lexicon;
};

/// Template-generated corpus with class-indicative vocabulary. A fraction
/// `hashtag_rate` of each class carries a lexicon hashtag; with at least two
/// hashtagged posts per class every (polarity, label) cell occurs.
/// Deterministic in `seed`.
SyntheticCorpus generate_synthetic_corpus(std::uint64_t seed, int n_per_class,
                                          double hashtag_rate);

/// The sentiment hashtags used by the synthetic generator, with curated
/// segmentations.
Lexicon builtin_lexicon();

}  // namespace sric

#endif  // SRIC_CORPUS_H_
