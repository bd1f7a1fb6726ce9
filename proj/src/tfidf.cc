// tfidf.cc

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

#include "sric/tfidf.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sric/corpus.h"

namespace sric {

void TfidfVectorizer::fit(std::span<const std::string> docs) {
  std::map<std::string, int> df;
  for (const auto& doc : docs) {
    auto tokens = split_tokens(doc);
    std::set<std::string> distinct(tokens.begin(), tokens.end());
    for (const auto& t : distinct) ++df[t];
  }
  if (df.empty()) throw Error("empty vocabulary");
  vocab_.clear();
  columns_.clear();
  idf_.resize(static_cast<Eigen::Index>(df.size()));
  const double n = static_cast<double>(docs.size());
  for (const auto& [term, count] : df) {
    int col = static_cast<int>(vocab_.size());
    vocab_.push_back(term);
    columns_.emplace(term, col);
    idf_(col) = std::log((1.0 + n) / (1.0 + count)) + 1.0;
  }
}

int TfidfVectorizer::column(const std::string& term) const {
  auto it = columns_.find(term);
  return it == columns_.end() ? -1 : it->second;
}

SparseMatrix TfidfVectorizer::counts(std::span<const std::string> docs) const {
  if (vocab_.empty()) throw Error("vectorizer is not fitted");
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t row = 0; row < docs.size(); ++row)
    for (const auto& token : split_tokens(docs[row]))
      if (int col = column(token); col >= 0)
        triplets.emplace_back(static_cast<int>(row), col, 1.0);
  SparseMatrix m(static_cast<Eigen::Index>(docs.size()),
                 static_cast<Eigen::Index>(vocab_.size()));
  m.setFromTriplets(triplets.begin(), triplets.end());  // duplicates summed
  return m;
}

SparseMatrix TfidfVectorizer::transform(std::span<const std::string> docs) const {
  SparseMatrix m = counts(docs);
  for (Eigen::Index row = 0; row < m.outerSize(); ++row) {
    double norm2 = 0.0;
    for (SparseMatrix::InnerIterator it(m, row); it; ++it) {
      it.valueRef() *= idf_(it.col());
      norm2 += it.value() * it.value();
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (SparseMatrix::InnerIterator it(m, row); it; ++it) it.valueRef() *= inv;
    }
  }
  return m;
}

SparseMatrix TfidfVectorizer::fit_transform(std::span<const std::string> docs) {
  fit(docs);
  return transform(docs);
}

nlohmann::json TfidfVectorizer::to_json() const {
  return {{"vocabulary", vocab_}, {"idf", std::vector<double>(idf_.data(), idf_.data() + idf_.size())}};
}

TfidfVectorizer TfidfVectorizer::from_json(const nlohmann::json& j) {
  TfidfVectorizer v;
  v.vocab_ = j.at("vocabulary").get<std::vector<std::string>>();
  auto idf = j.at("idf").get<std::vector<double>>();
  if (idf.size() != v.vocab_.size() || v.vocab_.empty()) throw Error("malformed tf-idf state");
  v.idf_ = Eigen::Map<const Vector>(idf.data(), static_cast<Eigen::Index>(idf.size()));
  for (std::size_t i = 0; i < v.vocab_.size(); ++i) v.columns_.emplace(v.vocab_[i], static_cast<int>(i));
  return v;
}

}  // namespace sric
