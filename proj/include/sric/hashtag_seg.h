// sric/hashtag_seg.h

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

#ifndef SRIC_HASHTAG_SEG_H_
#define SRIC_HASHTAG_SEG_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sric/corpus.h"

namespace sric {

/// Unigram word counts. Immutable after loading.
class FrequencyTable {
 public:
  FrequencyTable() = default;

  /// `word<TAB>count` lines; duplicate words sum. Throws ParseError on a
  /// non-positive or unparsable count and on an empty table.
  static FrequencyTable parse(std::istream& in);
  static FrequencyTable load(const std::string& path);

  std::int64_t count(std::string_view word) const;
  std::int64_t total_count() const { return total_; }
  std::size_t size() const { return counts_.size(); }

  /// ln P(word): count/total for known words, 1/(total * 10^len) otherwise.
  double log_prob(std::string_view word) const;

 private:
  std::unordered_map<std::string, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

inline constexpr std::size_t kMaxWordLength = 24;

/// Maximum-likelihood split of an alphanumeric body under the unigram model.
/// Ties prefer fewer words, then the lexicographically smallest result.
std::string segment_body(std::string_view body, const FrequencyTable& freq);

/// Segments a `#surface`. An override for the surface wins over the model.
std::string segment_hashtag(
    std::string_view surface, const FrequencyTable& freq,
    const std::unordered_map<std::string, std::string>& overrides = {});

/// Fills every empty `segmented` field of the lexicon. Existing values are
/// treated as overrides and kept.
void fill_segmentations(Lexicon& lexicon, const FrequencyTable& freq);

}  // namespace sric

#endif  // SRIC_HASHTAG_SEG_H_
