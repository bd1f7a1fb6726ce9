// sric/labels.h

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

#ifndef SRIC_LABELS_H_
#define SRIC_LABELS_H_

#include <array>
#include <optional>
#include <string_view>

namespace sric {

// Closed label sets. The integer values are the class indices used by the
// output heads and the metrics, so do not reorder.

enum class SentimentLabel : int { Hate = 0, CounterHate = 1, Neutral = 2 };
inline constexpr int kNumSentiments = 3;
inline constexpr std::array<SentimentLabel, kNumSentiments> kAllSentiments = {
    SentimentLabel::Hate, SentimentLabel::CounterHate, SentimentLabel::Neutral};

/// Polarity of a sentiment hashtag.
enum class Polarity : int { Hate = 0, CounterHate = 1 };
inline constexpr std::array<Polarity, 2> kAllPolarities = {
    Polarity::Hate, Polarity::CounterHate};

enum class RelationLabel : int { Entailment = 0, Contradiction = 1, Neutral = 2 };
inline constexpr int kNumRelations = 3;
inline constexpr std::array<RelationLabel, kNumRelations> kAllRelations = {
    RelationLabel::Entailment, RelationLabel::Contradiction,
    RelationLabel::Neutral};

inline constexpr int index_of(SentimentLabel l) { return static_cast<int>(l); }
inline constexpr int index_of(RelationLabel r) { return static_cast<int>(r); }

// Wire names: hate|counterhate|neutral, entailment|contradiction|neutral.
std::string_view to_string(SentimentLabel label);
std::string_view to_string(Polarity polarity);
std::string_view to_string(RelationLabel relation);

std::optional<SentimentLabel> parse_sentiment(std::string_view name);
std::optional<Polarity> parse_polarity(std::string_view name);
std::optional<RelationLabel> parse_relation(std::string_view name);

}  // namespace sric

#endif  // SRIC_LABELS_H_
