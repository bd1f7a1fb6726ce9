// relation_test.cc

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


#include <gtest/gtest.h>

#include "sric/relation.h"

namespace sric {
namespace {

Polarity flip(Polarity p) {
  return p == Polarity::Hate ? Polarity::CounterHate : Polarity::Hate;
}

TEST(Relation, FullTable) {
  using P = Polarity;
  using S = SentimentLabel;
  using R = RelationLabel;
  EXPECT_EQ(derive_relation(P::Hate, S::Hate), R::Entailment);
  EXPECT_EQ(derive_relation(P::Hate, S::CounterHate), R::Contradiction);
  EXPECT_EQ(derive_relation(P::Hate, S::Neutral), R::Neutral);
  EXPECT_EQ(derive_relation(P::CounterHate, S::Hate), R::Contradiction);
  EXPECT_EQ(derive_relation(P::CounterHate, S::CounterHate), R::Entailment);
  EXPECT_EQ(derive_relation(P::CounterHate, S::Neutral), R::Neutral);
}

TEST(Relation, Indicator) {
  EXPECT_EQ(relation_indicator(RelationLabel::Entailment), 1);
  EXPECT_EQ(relation_indicator(RelationLabel::Contradiction), -1);
  EXPECT_EQ(relation_indicator(RelationLabel::Neutral), 0);
}

TEST(Relation, FlippingPolaritySwapsEntailmentAndContradiction) {
  for (auto p : kAllPolarities) {
    for (auto s : kAllSentiments) {
      RelationLabel r = derive_relation(p, s);
      RelationLabel f = derive_relation(flip(p), s);
      EXPECT_EQ(relation_indicator(f), -relation_indicator(r));
      if (r == RelationLabel::Neutral) EXPECT_EQ(f, RelationLabel::Neutral);
    }
  }
}

TEST(Labels, NamesRoundTrip) {
  for (auto s : kAllSentiments) EXPECT_EQ(parse_sentiment(to_string(s)), s);
  for (auto p : kAllPolarities) EXPECT_EQ(parse_polarity(to_string(p)), p);
  for (auto r : kAllRelations) EXPECT_EQ(parse_relation(to_string(r)), r);
  EXPECT_FALSE(parse_sentiment("angry"));
  EXPECT_EQ(to_string(RelationLabel::Contradiction), "contradiction");
}

}  // namespace
}  // namespace sric
