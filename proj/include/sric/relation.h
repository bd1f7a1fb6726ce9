// sric/relation.h

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

#ifndef SRIC_RELATION_H_
#define SRIC_RELATION_H_

#include "sric/labels.h"

namespace sric {

/// Relation between a post and one of its sentiment hashtags: same polarity
/// entails, opposite polarity contradicts, and a neutral post is neutral to
/// any hashtag.
RelationLabel derive_relation(Polarity hashtag_polarity, SentimentLabel post_label);

/// Signed weight of a pair in the distance loss: entailment +1,
/// contradiction -1, neutral 0.
int relation_indicator(RelationLabel relation);

}  // namespace sric

#endif  // SRIC_RELATION_H_
