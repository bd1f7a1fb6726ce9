// relation.cc

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

#include "sric/relation.h"

namespace sric {

RelationLabel derive_relation(Polarity hashtag_polarity, SentimentLabel post_label) {
  switch (post_label) {
    case SentimentLabel::Neutral:
      return RelationLabel::Neutral;
    case SentimentLabel::Hate:
      return hashtag_polarity == Polarity::Hate ? RelationLabel::Entailment
                                                : RelationLabel::Contradiction;
    case SentimentLabel::CounterHate:
      return hashtag_polarity == Polarity::CounterHate ? RelationLabel::Entailment
                                                       : RelationLabel::Contradiction;
  }
  return RelationLabel::Neutral;
}

int relation_indicator(RelationLabel relation) {
  switch (relation) {
    case RelationLabel::Entailment: return 1;
    case RelationLabel::Contradiction: return -1;
    case RelationLabel::Neutral: return 0;
  }
  return 0;
}

}  // namespace sric
