// encoder_test.cc

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

#include "oracles.h"
#include "sric/rng.h"
#include "sric/toy_encoder.h"

namespace sric {
namespace {

Vocabulary abc_vocab() {
  std::vector<std::string> texts = {"a b c china virus"};
  return Vocabulary::build(texts);
}

ToyEncoder small_encoder(int dim = 16, int max_len = 16, std::uint64_t seed = 3) {
  ToyEncoderConfig cfg;
  cfg.dim = dim;
  cfg.max_len = max_len;
  return ToyEncoder(abc_vocab(), cfg, seed);
}

// Plain single-layer forward with full d x n key and value matrices.
Vector reference_forward(const ToyEncoder& enc, const TokenSequence& seq) {
  const auto& p = enc.params();
  const Eigen::Index d = enc.dim();
  const auto n = static_cast<Eigen::Index>(seq.size());
  Matrix x(d, n);
  for (Eigen::Index j = 0; j < n; ++j)
    x.col(j) = p[ToyEncoder::kToken].value.col(seq.tokens[j]) +
               p[ToyEncoder::kPosition].value.col(j) +
               p[ToyEncoder::kSegment].value.col(seq.segment_ids[j]);
  Matrix keys = p[ToyEncoder::kKey].value * x;
  Matrix values = p[ToyEncoder::kValue].value * x;
  Vector q = p[ToyEncoder::kQuery].value * x.col(0);
  Vector w(n);
  for (Eigen::Index j = 0; j < n; ++j) w(j) = std::exp(q.dot(keys.col(j)) / std::sqrt(double(d)));
  w /= w.sum();
  Vector h = x.col(0) + values * w;
  Vector out(d);
  for (Eigen::Index i = 0; i < d; ++i)
    out(i) = std::tanh(p[ToyEncoder::kPool].value.row(i).dot(h) + p[ToyEncoder::kPoolBias].value(i, 0));
  return out;
}

TEST(Tokenize, Single) {
  Vocabulary v = abc_vocab();
  auto seq = tokenize(v, "china virus", 64);
  EXPECT_EQ(seq.tokens, (std::vector<int>{Vocabulary::kCls, v.id("china"), v.id("virus")}));
  EXPECT_EQ(seq.segment_ids, (std::vector<int>{0, 0, 0}));
  EXPECT_FALSE(seq.sep_index);
  EXPECT_EQ(tokenize(v, "", 64).tokens, (std::vector<int>{Vocabulary::kCls}));
  EXPECT_EQ(tokenize(v, "zebra", 64).tokens[1], Vocabulary::kUnk);
  std::string long_text;
  for (int i = 0; i < 600; ++i) long_text += "a ";
  EXPECT_EQ(tokenize(v, long_text, 128).size(), 128u);
}

TEST(Tokenize, Pair) {
  Vocabulary v = abc_vocab();
  auto seq = tokenize_pair(v, "a b", "c", 64);
  EXPECT_EQ(seq.tokens, (std::vector<int>{Vocabulary::kCls, v.id("a"), v.id("b"),
                                          Vocabulary::kSep, v.id("c")}));
  EXPECT_EQ(seq.segment_ids, (std::vector<int>{0, 0, 0, 0, 1}));
  EXPECT_EQ(seq.sep_index, 3u);
  auto empty = tokenize_pair(v, "", "c", 64);
  EXPECT_EQ(empty.tokens, (std::vector<int>{Vocabulary::kCls, Vocabulary::kSep, v.id("c")}));
}

TEST(Tokenize, PairTruncationKeepsHashtag) {
  Vocabulary v = abc_vocab();
  std::string content;
  for (int i = 0; i < 100; ++i) content += "a ";
  auto seq = tokenize_pair(v, content, "china virus", 10);
  ASSERT_EQ(seq.size(), 10u);
  EXPECT_EQ(seq.tokens[8], v.id("china"));
  EXPECT_EQ(seq.tokens[9], v.id("virus"));
  EXPECT_EQ(std::count(seq.tokens.begin(), seq.tokens.end(), Vocabulary::kSep), 1);
  EXPECT_EQ(seq.tokens.size(), seq.segment_ids.size());
}

TEST(ToyEncoder, ShapesAndDeterminism) {
  ToyEncoder enc = small_encoder();
  for (std::string text : {"", "a", "a b c", "zebra zebra"}) {
    Vector z = enc.encode(text);
    EXPECT_EQ(z.size(), 16);
    EXPECT_EQ(z, enc.encode(text));
    EXPECT_EQ(enc.encode_pair(text, "c").size(), 16);
  }
  ToyEncoder same = small_encoder();
  EXPECT_EQ(enc.encode("a b"), same.encode("a b"));
  ToyEncoder other = small_encoder(16, 16, 4);
  EXPECT_NE(enc.encode("a b"), other.encode("a b"));
}

TEST(ToyEncoder, SingleTokenHandComputed) {
  ToyEncoder enc = small_encoder(8, 8);
  auto& p = enc.params();
  for (auto i : {ToyEncoder::kQuery, ToyEncoder::kKey, ToyEncoder::kValue, ToyEncoder::kPool})
    p[i].value = Matrix::Identity(8, 8);
  // Attention over one position is 1, so the hidden state is x + I x and
  // the pooler gives tanh(2 x + b).
  Vector x = p[ToyEncoder::kToken].value.col(Vocabulary::kCls) +
             p[ToyEncoder::kPosition].value.col(0) + p[ToyEncoder::kSegment].value.col(0);
  Vector expected = (2.0 * x).array().tanh();
  EXPECT_LT((enc.encode("") - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ToyEncoder, MatchesFullAttentionReference) {
  ToyEncoder enc = small_encoder(12, 16, 9);
  Rng rng(1);
  for (auto& param : enc.params())
    param.value += Matrix::NullaryExpr(param.value.rows(), param.value.cols(),
                                       [&] { return rng.uniform(-0.3, 0.3); });
  for (auto seq : {enc.tokenize("a b c"), enc.tokenize_pair("a b", "china virus"),
                   enc.tokenize(""), enc.tokenize("c c c c c c")}) {
    EXPECT_LT((enc.forward(seq) - reference_forward(enc, seq)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ToyEncoder, PairDiffersFromConcatenation) {
  ToyEncoder enc = small_encoder();
  EXPECT_GT((enc.encode_pair("a", "b") - enc.encode("a b")).norm(), 1e-6);
}

TEST(ToyEncoder, GradientMatchesFiniteDifferences) {
  ToyEncoder enc = small_encoder(16, 16, 5);
  Rng rng(2);
  Vector probe = Vector::NullaryExpr(16, [&] { return rng.uniform(-1, 1); });
  for (auto seq : {enc.tokenize("a b c virus"), enc.tokenize_pair("a c", "china virus")}) {
    GradList grads = zeros_like(enc.params());
    enc.backward(seq, probe, grads);
    double worst = 0;
    for (std::size_t p = 0; p < enc.params().size(); ++p) {
      Matrix& value = enc.params()[p].value;
      for (Eigen::Index i = 0; i < value.size(); ++i) {
        const double saved = value.data()[i];
        const double numeric = oracle::central_difference(
            [&](double x) {
              value.data()[i] = x;
              return probe.dot(enc.forward(seq));
            },
            saved);
        value.data()[i] = saved;
        worst = std::max(worst, oracle::relative_error(grads[p].data()[i], numeric));
      }
    }
    EXPECT_LT(worst, 1e-4);
  }
}

TEST(ToyEncoder, JsonRoundTripAndClone) {
  ToyEncoder enc = small_encoder();
  auto restored = backend_from_json(nlohmann::json::parse(enc.to_json().dump()));
  EXPECT_EQ(restored->backend_name(), "toy");
  EXPECT_EQ(restored->encode_pair("a b", "c"), enc.encode_pair("a b", "c"));
  auto copy = enc.clone();
  copy->params()[ToyEncoder::kToken].value.setZero();
  EXPECT_NE(copy->encode("a"), enc.encode("a"));
  nlohmann::json bad = enc.to_json();
  bad["backend"] = "bert";
  EXPECT_THROW(backend_from_json(bad), Error);
}

TEST(Vocabulary, BuildIsSortedWithSpecialsFirst) {
  std::vector<std::string> texts = {"b a", "c a"};
  Vocabulary v = Vocabulary::build(texts);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"[CLS]", "[SEP]", "[UNK]", "a", "b", "c"}));
  EXPECT_THROW(Vocabulary(std::vector<std::string>{"a", "b", "c"}), Error);
}

}  // namespace
}  // namespace sric
