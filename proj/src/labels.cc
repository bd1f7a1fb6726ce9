// labels.cc

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

#include "sric/labels.h"

namespace sric {

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Hate: return "hate";
    case SentimentLabel::CounterHate: return "counterhate";
    case SentimentLabel::Neutral: return "neutral";
  }
  return "?";
}

std::string_view to_string(Polarity polarity) {
  switch (polarity) {
    case Polarity::Hate: return "hate";
    case Polarity::CounterHate: return "counterhate";
  }
  return "?";
}

std::string_view to_string(RelationLabel relation) {
  switch (relation) {
    case RelationLabel::Entailment: return "entailment";
    case RelationLabel::Contradiction: return "contradiction";
    case RelationLabel::Neutral: return "neutral";
  }
  return "?";
}

std::optional<SentimentLabel> parse_sentiment(std::string_view name) {
  for (auto l : kAllSentiments)
    if (to_string(l) == name) return l;
  return std::nullopt;
}

std::optional<Polarity> parse_polarity(std::string_view name) {
  for (auto p : kAllPolarities)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

std::optional<RelationLabel> parse_relation(std::string_view name) {
  for (auto r : kAllRelations)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

}  // namespace sric
